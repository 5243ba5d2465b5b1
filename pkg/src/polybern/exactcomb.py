"""Exact arbitrary-precision combinatorics.

Stirling numbers of the second kind, factorials, poly-Bernoulli numbers
B(n,k), and the relatives C(n,k) and D(n,k) = ML(n,k), all as exact
integers, plus a lossless conversion of huge counts to natural logs.
"""

from __future__ import annotations

import math
import os

# Counts are plain Python ints: arbitrary precision, nonnegative, and they
# round-trip exactly through str()/int().
Count = int

# Log-space estimates are plain floats holding the natural log of a
# positive quantity.
LogEstimate = float

DEFAULT_MAX_N = 512
_ENV_MAX_N = "POLYBERN_MAX_N"


class GuardError(ValueError):
    """A size guard was exceeded (table bound or enumeration bound)."""


class StirlingTable:
    """Triangle of Stirling numbers of the second kind up to max_n.

    Built once by the two-term recurrence and never mutated afterwards;
    safe for concurrent reads. Factorials up to max_n are cached alongside.
    """

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        self.max_n = max_n
        rows = [[1]]
        for n in range(1, max_n + 1):
            prev = rows[n - 1]
            row = [0] * (n + 1)
            for m in range(1, n):
                row[m] = m * prev[m] + prev[m - 1]
            row[n] = 1
            rows.append(row)
        self._rows = rows
        fact = [1] * (max_n + 1)
        for i in range(1, max_n + 1):
            fact[i] = fact[i - 1] * i
        self._fact = fact

    def entry(self, n: int, m: int) -> Count:
        if n < 0 or m < 0:
            raise ValueError("indices must be nonnegative")
        if n > self.max_n:
            raise GuardError(f"n={n} exceeds table bound {self.max_n}")
        if m > n:
            return 0
        return self._rows[n][m]

    def factorial(self, n: int) -> Count:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n > self.max_n:
            raise GuardError(f"n={n} exceeds table bound {self.max_n}")
        return self._fact[n]


def table_bound() -> int:
    """Hard cap on table growth, overridable via POLYBERN_MAX_N."""
    raw = os.environ.get(_ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        bound = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_MAX_N} must be an integer, got {raw!r}") from exc
    if bound < 0:
        raise ValueError(f"{_ENV_MAX_N} must be nonnegative, got {bound}")
    return bound


_table: StirlingTable = StirlingTable(64)


def _ensure(n: int) -> StirlingTable:
    # Swap in a larger table instead of mutating the current one, so
    # concurrent readers of the old table stay valid.
    global _table
    if n > _table.max_n:
        cap = table_bound()
        if n > cap:
            raise GuardError(f"n={n} exceeds table bound {cap} (set {_ENV_MAX_N} to raise it)")
        _table = StirlingTable(min(cap, max(n, 2 * _table.max_n)))
    return _table


def stirling2(n: int, m: int) -> Count:
    """Stirling number of the second kind: partitions of an n-set into m blocks."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return 0
    return _ensure(n).entry(n, m)


def stirling2_explicit(n: int, m: int) -> Count:
    """Independent evaluation of stirling2 by the alternating-sum formula.

    Uses m! * S(n,m) = sum_j (-1)^j binom(m,j) (m-j)^n and divides out m!.
    Exists as a cross-check oracle for the recurrence table; never used by
    the other formulas.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        raise ValueError("explicit form requires m <= n")
    total = 0
    for j in range(m + 1):
        term = math.comb(m, j) * (m - j) ** n
        total += -term if j % 2 else term
    if total < 0:
        raise ArithmeticError(f"alternating sum for S({n},{m}) came out negative")
    q, r = divmod(total, math.factorial(m))
    if r:
        raise ArithmeticError(f"alternating sum for S({n},{m}) not divisible by {m}!")
    return q


def factorial(n: int) -> Count:
    """n!, served from the shared table."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _ensure(n).factorial(n)


def poly_bernoulli(n: int, k: int) -> Count:
    """Number of n x k lonesum 0-1 matrices, B(n,k).

    B(n,k) = sum_m (m!)^2 S(n+1,m+1) S(k+1,m+1); symmetric in (n,k).
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    t = _ensure(max(n, k) + 1)
    total = 0
    for m in range(min(n, k) + 1):
        total += t.factorial(m) ** 2 * t.entry(n + 1, m + 1) * t.entry(k + 1, m + 1)
    return total


def ml_degree(n: int, k: int) -> Count:
    """D(n,k): lonesum n x k matrices with no all-zero row and no all-zero column.

    Equals the maximum likelihood degree of the n x k missing-data
    multinomial model; D(n,k) = sum_m (m!)^2 S(n,m) S(k,m), symmetric.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    t = _ensure(max(n, k))
    total = 0
    for m in range(min(n, k) + 1):
        total += t.factorial(m) ** 2 * t.entry(n, m) * t.entry(k, m)
    return total


def ml_degree_inclusion_exclusion(n: int, k: int) -> Count:
    """D(n,k) by double inclusion-exclusion over rows and columns of B.

    Independent of ml_degree's direct sum; the signed intermediate is
    asserted nonnegative to catch index-shift bugs.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = 0
    for m in range(n + 1):
        for ell in range(k + 1):
            term = math.comb(n, m) * math.comb(k, ell) * poly_bernoulli(n - m, k - ell)
            total += -term if (m + ell) % 2 else term
    if total < 0:
        raise ArithmeticError(f"inclusion-exclusion for D({n},{k}) came out negative")
    return total


def c_relative(n: int, k: int) -> Count:
    """C(n,k): lonesum n x k matrices with no all-zero column.

    Computed by column inclusion-exclusion over B; not symmetric in general.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = 0
    for j in range(k + 1):
        term = math.comb(k, j) * poly_bernoulli(n, k - j)
        total += -term if j % 2 else term
    if total < 0:
        raise ArithmeticError(f"column inclusion-exclusion for C({n},{k}) came out negative")
    return total


def log_of_count(c: Count) -> LogEstimate:
    """Natural log of a positive count, relative error below 1e-12.

    Large counts are reduced by bit shift to a 53-bit head before the float
    log, so the value never goes through a lossy full-width conversion.
    """
    if c <= 0:
        raise ValueError("count must be positive to take its log")
    nb = c.bit_length()
    if nb <= 53:
        return math.log(c)
    shift = nb - 53
    return math.log(c >> shift) + shift * math.log(2.0)
