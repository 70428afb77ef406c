"""Brute-force reference implementations.

Everything here recomputes results straight from definitions, within small
size guards, and deliberately shares no logic with the main modules.  The
test suite and the CLI `verify` command compare the two sides; users can
re-derive any published number the same way.
"""

from __future__ import annotations

from .words import AB, ABC, Word

SP_GUARD = 20
SQUARE_GUARD = 1000


def _subsequence_strings(text: str) -> set[str]:
    subs = {""}
    for ch in text:
        subs |= {t + ch for t in subs}
    return subs


def brute_sp_count(w: Word) -> int:
    """Distinct nonempty palindromic subsequences, by subset enumeration."""
    if len(w) > SP_GUARD:
        raise ValueError(f"brute enumeration is limited to |w| <= {SP_GUARD}")
    return sum(1 for t in _subsequence_strings(w.text) if t and t == t[::-1])


def brute_sp_enumerate(w: Word) -> set[Word]:
    """The set of distinct nonempty palindromic subsequences of w."""
    if len(w) > SP_GUARD:
        raise ValueError(f"brute enumeration is limited to |w| <= {SP_GUARD}")
    return {
        Word(w.alphabet, t)
        for t in _subsequence_strings(w.text)
        if t and t == t[::-1]
    }


def brute_count(pattern: Word, text: Word) -> int:
    """Occurrences of pattern in text by scanning every window."""
    p, t = pattern.text, text.text
    if not p:
        raise ValueError("pattern must be nonempty")
    return sum(1 for i in range(len(t) - len(p) + 1) if t[i : i + len(p)] == p)


def brute_square_scan(w: Word) -> bool:
    """True iff w contains a factor xx, by trying every start and length."""
    s = w.text
    if len(s) > SQUARE_GUARD:
        raise ValueError(f"brute scan is limited to |w| <= {SQUARE_GUARD}")
    n = len(s)
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if s[i : i + half] == s[i + half : i + 2 * half]:
                return True
    return False


def brute_overlap_scan(w: Word) -> bool:
    """True iff w contains a factor a·x·a·x·a, by trying every start and
    period."""
    s = w.text
    n = len(s)
    for i in range(n):
        for p in range(1, (n - i - 1) // 2 + 1):
            if all(s[i + j] == s[i + j + p] for j in range(p + 1)):
                return True
    return False


def brute_factor_set(w: Word, k: int) -> set[Word]:
    """All distinct length-k factors, by slicing every window."""
    if k < 0:
        raise ValueError("factor length must be nonnegative")
    text = w.text
    return {Word(w.alphabet, text[i : i + k]) for i in range(len(text) - k + 1)}


def brute_pal_factor_set(w: Word) -> set[Word]:
    """All distinct nonempty palindromic factors, by checking every factor."""
    text = w.text
    found = set()
    for i in range(len(text)):
        for j in range(i + 1, len(text) + 1):
            t = text[i:j]
            if t == t[::-1]:
                found.add(t)
    return {Word(w.alphabet, t) for t in found}


def brute_square_free_words(alphabet_size: int, n: int) -> list[Word]:
    """Square-free words of length n by recursive extension, re-scanning
    each candidate with the all-pairs square scan."""
    alphabet = {2: AB, 3: ABC}.get(alphabet_size)
    if alphabet is None:
        raise ValueError("alphabet size must be 2 or 3")
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > 15:
        raise ValueError("brute enumeration is limited to n <= 15")
    out: list[str] = []

    def extend(prefix: str) -> None:
        if brute_square_scan(Word(alphabet, prefix)):
            return
        if len(prefix) == n:
            out.append(prefix)
            return
        for c in alphabet.symbols:
            extend(prefix + c)

    extend("")
    return [Word(alphabet, t) for t in out]


def delta_factorizations(x: Word) -> list[Word]:
    """Every ternary word whose image under a -> abb, b -> ab, c -> a is x,
    found by full backtracking (used to confirm the factorization is
    unique)."""
    s = x.text
    results: list[str] = []
    acc: list[str] = []

    def rec(pos: int) -> None:
        if pos == len(s):
            results.append("".join(acc))
            return
        for image, letter in (("abb", "a"), ("ab", "b"), ("a", "c")):
            if s.startswith(image, pos):
                acc.append(letter)
                rec(pos + len(image))
                acc.pop()

    rec(0)
    return [Word(ABC, t) for t in results]
