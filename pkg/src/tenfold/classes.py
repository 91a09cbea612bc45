"""Equivalence classes as a semiring: direct sum, Kronecker product and fingerprints.

The fingerprint of a class at a prime ``p`` is the polynomial
``sum_k n_k x**k`` where ``n_k`` counts invariant factors of p-valuation
``k``.  Direct sums add fingerprints and Kronecker products multiply them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .matrix import Matrix, shape
from .smith import SmithDecomposition, local_smith_form, prime_support, smith_normal_form


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    _, na = shape(a)
    _, nb = shape(b)
    top = [list(row) + [0] * nb for row in a]
    bottom = [[0] * na + list(row) for row in b]
    return top + bottom


def kronecker_product(a: Matrix, b: Matrix) -> Matrix:
    shape(a)
    shape(b)
    return [[x * y for x in row_a for y in row_b] for row_a in a for row_b in b]


def poly_add(f, g) -> tuple[int, ...]:
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return _trim(out)


def poly_mul(f, g) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, c in enumerate(f):
        for j, d in enumerate(g):
            out[i + j] += c * d
    return _trim(out)


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fingerprint_p(a, p) -> tuple[int, ...]:
    """Coefficients ``(n_0, n_1, ...)`` of the local fingerprint polynomial at ``p``."""
    counts = Counter(local_smith_form(a, p).exponents)
    if not counts:
        return ()
    return _trim(counts.get(k, 0) for k in range(max(counts) + 1))


@dataclass(frozen=True)
class ClassFingerprint:
    size: tuple[int, int]
    rank: int
    components: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        comps = {int(p): tuple(c) for p, c in sorted(self.components.items())}
        for p, c in comps.items():
            if (c and c[-1] <= 0) or any(x < 0 for x in c) or sum(c) != self.rank:
                raise ValueError(f"invalid fingerprint component at {p}: {c}")
        # primes whose polynomial is the constant rank are implicit
        comps = {p: c for p, c in comps.items() if len(c) > 1}
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "size", tuple(self.size))

    def at(self, p) -> tuple[int, ...]:
        return self.components.get(int(p), (self.rank,) if self.rank else ())

    def to_json(self) -> dict:
        m, n = self.size
        return {
            "size": m if m == n else [m, n],
            "rank": self.rank,
            "components": {str(p): list(c) for p, c in self.components.items()},
        }


def fingerprint(a) -> ClassFingerprint:
    snf = a if isinstance(a, SmithDecomposition) else smith_normal_form(a)
    comps = {p: fingerprint_p(snf, p) for p in prime_support(snf)}
    return ClassFingerprint(size=snf.shape, rank=snf.rank, components=comps)


def enumerate_local_classes(n: int, cap: int):
    """Yield every nondecreasing exponent sequence of length ``n`` over ``0..cap``.

    Each sequence is the local Smith form of one full-rank class of size ``n``.
    """
    if n < 1 or cap < 0:
        raise ValueError(f"need n >= 1 and cap >= 0, got n={n}, cap={cap}")
    yield from itertools.combinations_with_replacement(range(cap + 1), n)
