"""Smith normal form over the integers, local forms at a prime, and equivalence tests.

The elimination only talks to its coefficient ring through the
:class:`~tenfold.ring.BezoutRing` operations, so another Bezout ring could be
plugged in; the integers are the only ring shipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, DuplicatePrimeError, ShapeError
from .matrix import Matrix, det, identity, matmul, rank as field_rank, shape, to_integer_matrix, zeros
from .ring import ZZ, BezoutRing, Prime, ord_p


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` in Smith form."""

    S: Matrix
    U: Matrix
    V: Matrix
    invariant_factors: tuple[int, ...]
    rank: int
    source: Matrix = field(repr=False)

    def __post_init__(self):
        if matmul(matmul(self.U, self.source), self.V) != self.S:
            raise ArithmeticError("Smith decomposition does not reproduce S")

    @property
    def shape(self) -> tuple[int, int]:
        return shape(self.source)


@dataclass(frozen=True)
class LocalSmithForm:
    """Exponents ``a_1 <= ... <= a_r`` of ``diag(p**a_1, ..., p**a_r, 0, ...)``."""

    prime: int
    exponents: tuple[int, ...]
    rank: int
    shape: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "prime", Prime(self.prime))
        exps = tuple(self.exponents)
        if len(exps) != self.rank or self.rank > min(self.shape):
            raise ShapeError(f"{len(exps)} exponents for rank {self.rank} and shape {self.shape}")
        if any(e < 0 for e in exps) or list(exps) != sorted(exps):
            raise DomainError(f"exponents must be nondecreasing and nonnegative: {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "shape", tuple(self.shape))

    def diagonal(self) -> list[int]:
        m, n = self.shape
        return [self.prime**e for e in self.exponents] + [0] * (min(m, n) - self.rank)


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _combine_rows(a, i, j, x, y, z, w):
    """Replace rows (i, j) by (x*ri + y*rj, z*ri + w*rj)."""
    ri, rj = a[i], a[j]
    a[i] = [x * s + y * t for s, t in zip(ri, rj)]
    a[j] = [z * s + w * t for s, t in zip(ri, rj)]


def _combine_cols(a, i, j, x, y, z, w):
    for row in a:
        s, t = row[i], row[j]
        row[i] = x * s + y * t
        row[j] = z * s + w * t


def smith_normal_form(a: Matrix, ring: BezoutRing = ZZ) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots are the entries of least magnitude in the trailing submatrix;
    non-divisible entries are merged into the pivot with 2x2 Bezout blocks.

    >>> smith_normal_form([[2, 4], [6, 8]]).invariant_factors
    (2, 4)
    """
    source = to_integer_matrix(a)
    m, n = shape(source)
    s = [list(row) for row in source]
    u, v = identity(m), identity(n)

    t = 0
    while t < min(m, n):
        nonzero = [(ring.size(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j] != ring.zero]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        if pi != t:
            _swap_rows(s, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(s, t, pj)
            _swap_cols(v, t, pj)

        while True:
            for i in range(t + 1, m):
                b = s[i][t]
                if b == ring.zero:
                    continue
                p = s[t][t]
                if ring.divides(p, b):
                    q = ring.exact_div(b, p)
                    _combine_rows(s, t, i, 1, 0, -q, 1)
                    _combine_rows(u, t, i, 1, 0, -q, 1)
                else:
                    g, x, y = ring.bezout(p, b)
                    z, w = -ring.exact_div(b, g), ring.exact_div(p, g)
                    _combine_rows(s, t, i, x, y, z, w)
                    _combine_rows(u, t, i, x, y, z, w)
            for j in range(t + 1, n):
                b = s[t][j]
                if b == ring.zero:
                    continue
                p = s[t][t]
                if ring.divides(p, b):
                    q = ring.exact_div(b, p)
                    _combine_cols(s, t, j, 1, 0, -q, 1)
                    _combine_cols(v, t, j, 1, 0, -q, 1)
                else:
                    g, x, y = ring.bezout(p, b)
                    z, w = -ring.exact_div(b, g), ring.exact_div(p, g)
                    _combine_cols(s, t, j, x, y, z, w)
                    _combine_cols(v, t, j, x, y, z, w)
            if any(s[i][t] != ring.zero for i in range(t + 1, m)):
                continue
            p = s[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if not ring.divides(p, s[i][j])),
                None,
            )
            if bad is None:
                break
            _combine_rows(s, t, bad, 1, 1, 0, 1)
            _combine_rows(u, t, bad, 1, 1, 0, 1)

        unit, _ = ring.normalize(s[t][t])
        if unit != ring.one:
            s[t] = [unit * x for x in s[t]]
            u[t] = [unit * x for x in u[t]]
        t += 1

    factors = tuple(s[i][i] for i in range(t))
    return SmithDecomposition(S=s, U=u, V=v, invariant_factors=factors, rank=t, source=source)


def invariant_factors(a: Matrix) -> tuple[int, ...]:
    return smith_normal_form(a).invariant_factors


def _decomposition(a) -> SmithDecomposition:
    return a if isinstance(a, SmithDecomposition) else smith_normal_form(a)


def local_smith_form(a, p) -> LocalSmithForm:
    """Smith form over the localization at ``p``: the p-valuations of the invariant factors."""
    p = Prime(p)
    snf = _decomposition(a)
    exps = tuple(sorted(ord_p(d, p) for d in snf.invariant_factors))
    return LocalSmithForm(prime=p, exponents=exps, rank=snf.rank, shape=snf.shape)


def prime_support(a, ring: BezoutRing = ZZ) -> tuple[int, ...]:
    """Primes dividing some invariant factor (equivalently the last one)."""
    snf = _decomposition(a)
    if not snf.invariant_factors:
        return ()
    return tuple(sorted(ring.factor(snf.invariant_factors[-1])))


def local_global_reconstruct(locals_, rank: int, size) -> Matrix:
    """Multiply local Smith forms back into the global Smith form."""
    m, n = (size, size) if isinstance(size, int) else tuple(size)
    if rank > min(m, n):
        raise ShapeError(f"rank {rank} exceeds matrix size {m}x{n}")
    seen = set()
    diag_entries = [1] * rank
    for loc in locals_:
        if loc.rank != rank or loc.shape != (m, n):
            raise ShapeError(
                f"local form at {int(loc.prime)} has rank {loc.rank}, shape {loc.shape}; expected {rank}, {(m, n)}"
            )
        if loc.prime in seen:
            raise DuplicatePrimeError(f"prime {int(loc.prime)} appears twice")
        seen.add(loc.prime)
        for i, e in enumerate(loc.exponents):
            diag_entries[i] *= int(loc.prime) ** e
    out = zeros(m, n)
    for i, d in enumerate(diag_entries):
        out[i][i] = d
    return out


def _check_same_shape(a: SmithDecomposition, b: SmithDecomposition) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"matrices have different shapes {a.shape} and {b.shape}")


def equivalent(a, b) -> bool:
    """Whether ``B = Q^{-1} A P`` for some unimodular integer ``Q``, ``P``."""
    sa, sb = _decomposition(a), _decomposition(b)
    _check_same_shape(sa, sb)
    return sa.rank == sb.rank and sa.invariant_factors == sb.invariant_factors


def equivalent_local(a, b, p) -> bool:
    """Equivalence over the localization at ``p``."""
    sa, sb = _decomposition(a), _decomposition(b)
    _check_same_shape(sa, sb)
    la, lb = local_smith_form(sa, p), local_smith_form(sb, p)
    return la.rank == lb.rank and la.exponents == lb.exponents


def rank_over_field(a: Matrix) -> int:
    """Rank over the rationals; over a field this alone classifies equivalence."""
    return field_rank(a)


def is_unimodular(m: Matrix) -> bool:
    return abs(det(m)) == 1
