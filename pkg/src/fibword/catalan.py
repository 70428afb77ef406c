"""Catalan numbers and Catalan-indexed Fibonacci quantities.

Everything here is exact integer/rational arithmetic; the gamma-function
re-expressions of these quantities are algebraically identical to the
integer forms used, so they are not evaluated separately.  Note the two
limits exposed side by side: the consecutive-Fibonacci ratio at Catalan
indices converges to phi (as any consecutive ratio does), while the
normalized form g(n) converges to 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .fibonacci import fib, fib_word
from .words import Word


def catalan(n: int) -> int:
    """Exact Catalan number binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def table_expr(n: int) -> int:
    """The tabulated expression binom(2n, n)/(n+1) - 1, exactly.

    Evaluates to 0, 1, 4, 13, ... for n = 1, 2, 3, 4.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return catalan(n) - 1


def limit_function_g(n: int) -> Fraction:
    """g(n) = ((n+1)*(n!)**2 + (2n)!) / (2n)!, exactly.

    Equals 1 + (n+1)/binom(2n, n) and decreases to 1.
    """
    if not 1 <= n <= 200:
        raise ValueError("n must be between 1 and 200 (factorials kept exact)")
    fact_n = math.factorial(n)
    fact_2n = math.factorial(2 * n)
    return Fraction((n + 1) * fact_n * fact_n + fact_2n, fact_2n)


@dataclass(frozen=True)
class CatalanRecord:
    """One exact row: n, C_n, C_n - 1, and g(n)."""

    n: int
    c_n: int
    table_expr: int
    g_n: Fraction


def catalan_record(n: int) -> CatalanRecord:
    return CatalanRecord(n, catalan(n), table_expr(n), limit_function_g(n))


def catalan_table(n_max: int) -> list[CatalanRecord]:
    """Records for n = 1..n_max."""
    if not 1 <= n_max <= 200:
        raise ValueError("n_max must be between 1 and 200")
    return [catalan_record(n) for n in range(1, n_max + 1)]


def records_to_csv(records: list[CatalanRecord]) -> str:
    """CSV with header `n,c_n,table_expr,g_n` (g_n as an exact fraction)."""
    lines = ["n,c_n,table_expr,g_n"]
    for r in records:
        lines.append(f"{r.n},{r.c_n},{r.table_expr},{r.g_n}")
    return "\n".join(lines) + "\n"


def records_to_json(records: list[CatalanRecord]) -> str:
    payload = [
        {
            "n": r.n,
            "c_n": r.c_n,
            "table_expr": r.table_expr,
            "g_numerator": r.g_n.numerator,
            "g_denominator": r.g_n.denominator,
            "g": float(r.g_n),
        }
        for r in records
    ]
    return json.dumps(payload, indent=2) + "\n"


def fib_word_at_catalan(n: int) -> Word:
    """The Fibonacci word whose index is the n-th Catalan number.

    Defined for n >= 3; refused once C_n would make the word longer than
    the generation guard allows (C_n <= 30).
    """
    if n < 3:
        raise ValueError("defined for n >= 3")
    c = catalan(n)
    if c > 30:
        raise ValueError(f"C_{n} = {c} exceeds the word-size guard (C_n <= 30)")
    return fib_word(c)


def catalan_fib_ratio(n: int) -> float:
    """F(C_n + 1) / F(C_n): the consecutive-Fibonacci ratio evaluated at a
    Catalan index.  Converges to phi, like every consecutive ratio."""
    if not 3 <= n <= 12:
        raise ValueError("n must be between 3 and 12 (index growth)")
    c = catalan(n)
    return fib(c + 1) / fib(c)
