"""Fuzzy Fibonacci words: symbols paired with membership degrees.

Degrees attach per letter (a and b each get one grade in [0, 1]) and the
degree of a multi-symbol word is the minimum over its symbols, so
membership distributes over concatenation as a min.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import AB, Word

FUZZY_GUARD = 30


@dataclass(frozen=True)
class FuzzyWord:
    """A word whose symbols carry membership degrees in [0, 1]."""

    word: Word
    memberships: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.memberships) != len(self.word):
            raise ValueError("one membership degree per symbol is required")
        if any(not 0.0 <= m <= 1.0 for m in self.memberships):
            raise ValueError("membership degrees must lie in [0, 1]")

    def __len__(self) -> int:
        return len(self.word)


def fuzzy_fib_word(n: int, mu_a: float, mu_b: float) -> FuzzyWord:
    """Fuzzy word of the recursion F(0) = b, F(1) = a,
    F(n) = F(n-1) F(n-2), each symbol carrying its letter's degree."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > FUZZY_GUARD:
        raise ValueError(f"generation is limited to n <= {FUZZY_GUARD}")
    if not (0.0 <= mu_a <= 1.0 and 0.0 <= mu_b <= 1.0):
        raise ValueError("membership degrees must lie in [0, 1]")
    prev, cur = "b", "a"  # F(0), F(1)
    if n == 0:
        text = prev
    else:
        for _ in range(n - 1):
            prev, cur = cur, cur + prev
        text = cur
    degrees = tuple(mu_a if c == "a" else mu_b for c in text)
    return FuzzyWord(Word(AB, text), degrees)


def word_membership(fw: FuzzyWord) -> float:
    """Degree of the whole word: the minimum over its symbols."""
    if len(fw) == 0:
        raise ValueError("the empty fuzzy word has no membership degree")
    return min(fw.memberships)


def fuzzy_concat(u: FuzzyWord, v: FuzzyWord) -> FuzzyWord:
    """Concatenation, keeping each symbol's degree."""
    return FuzzyWord(u.word + v.word, u.memberships + v.memberships)


def fuzzy_to_json(fw: FuzzyWord) -> str:
    """JSON array of {symbol, membership} pairs."""
    payload = [
        {"symbol": s, "membership": m} for s, m in zip(fw.word.text, fw.memberships)
    ]
    return json.dumps(payload, indent=2) + "\n"
