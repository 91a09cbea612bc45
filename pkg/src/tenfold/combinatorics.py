"""Exact counts of equivalence and permutation-similarity classes."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import mpmath

from .errors import DomainError

# binary precision used for the asymptotic formulas
ASYMPTOTIC_PREC = 192

_partitions = [1]
_partitions_lock = threading.Lock()


def comb_with_repetition(n: int, r: int) -> int:
    """``H_n^r = C(n + r - 1, n)``: nonnegative solutions of ``x_1 + ... + x_r = n``."""
    if r < 1:
        raise DomainError(f"need at least one variable, got r={r}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return math.comb(n + r - 1, n)


def class_count_formula(size: int, num_primes: int) -> int:
    """Number of equivalence classes of ``size x size`` matrices over ``num_primes`` primes.

    Counts local exponent patterns with maximal exponent at most ``size``,
    one independent factor per prime.
    """
    if size < 1 or num_primes < 0:
        raise DomainError(f"need size >= 1 and num_primes >= 0, got {size}, {num_primes}")
    per_prime = sum(comb_with_repetition(size - 1, k + 1) for k in range(size + 1))
    return per_prime**num_primes


def partition_number(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence, memoized."""
    if n < 0:
        return 0
    with _partitions_lock:
        table = _partitions
        for m in range(len(table), n + 1):
            total, k = 0, 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * table[m - g1]
                g2 = g1 + k
                if g2 <= m:
                    total += sign * table[m - g2]
                k += 1
            table.append(total)
        return table[n]


def _context():
    ctx = mpmath.MPContext()
    ctx.prec = ASYMPTOTIC_PREC
    return ctx


def partition_asymptotic(n: int):
    """``exp(sqrt(2 pi^2 n / 3)) / (4 sqrt(3) n)`` as a high-precision mpf."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    ctx = _context()
    n = ctx.mpf(n)
    return ctx.exp(ctx.sqrt(2 * ctx.pi**2 * n / 3)) / (4 * ctx.sqrt(3) * n)


def partition_squared_asymptotic(n: int):
    """``exp(2 sqrt(2 pi^2 n / 3)) / (48 n^2)``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    ctx = _context()
    n = ctx.mpf(n)
    return ctx.exp(2 * ctx.sqrt(2 * ctx.pi**2 * n / 3)) / (48 * n**2)


def format_decimal(x, digits: int = 40) -> str:
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


@dataclass(frozen=True)
class PermutationClassCounts:
    size: int
    same_map_exact: int
    same_map_asymptotic: object
    diff_map_exact: int
    diff_map_asymptotic: object

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "same_map_exact": str(self.same_map_exact),
            "same_map_asymptotic": format_decimal(self.same_map_asymptotic),
            "diff_map_exact": str(self.diff_map_exact),
            "diff_map_asymptotic": format_decimal(self.diff_map_asymptotic),
        }


def permutation_class_counts(size: int) -> PermutationClassCounts:
    """Permutation-similarity class counts for one (``P``) and two (``Q``, ``P``) permutations."""
    if size < 1:
        raise DomainError(f"size must be positive, got {size}")
    p = partition_number(size)
    return PermutationClassCounts(
        size=size,
        same_map_exact=p,
        same_map_asymptotic=partition_asymptotic(size),
        diff_map_exact=p * p,
        diff_map_asymptotic=partition_squared_asymptotic(size),
    )
