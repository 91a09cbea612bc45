"""Exact characteristic polynomials and spectrum checks across unfoldings.

The polynomial is computed exactly over the rationals; only root extraction
and eigen-residuals drop to double precision.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, NumericFailureError, ShapeError
from .matrix import Matrix, matmul, square_size, to_fraction_matrix, transpose
from .permutation import PermutationMatrix, conjugate, equivalence_transform
from .ring import format_scalar

ROOT_STEP_TOL = 1e-12
ROOT_MAX_ITER = 10_000
ROOT_RESIDUAL_TOL = 1e-9
# fixed irrational offset (golden angle) for the starting circle
_START_ANGLE = math.pi * (3 - math.sqrt(5))


@dataclass(frozen=True)
class CharPoly:
    """Monic ``det(xI - A)``; ``coefficients`` run from ``x**n`` down to the constant."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs or coeffs[0] != 1:
            raise DomainError("characteristic polynomial must be monic")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coefficients]


def char_poly(a: Matrix) -> CharPoly:
    """Faddeev-LeVerrier recursion over the rationals."""
    n = square_size(a)
    a = to_fraction_matrix(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
        m = matmul(a, m) if k > 1 else m
        for i in range(n):
            m[i][i] += coeffs[-1]
        am = matmul(a, m)
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return CharPoly(tuple(coeffs))


def _eval_with_bound(coeffs, z):
    acc, bound = 0j, 0.0
    az = abs(z)
    for c in coeffs:
        acc = acc * z + c
        bound = bound * az + abs(c)
    return acc, bound


def poly_roots(p: CharPoly) -> list[complex]:
    """All roots by Durand-Kerner (Weierstrass) simultaneous iteration."""
    n = p.degree
    if n < 1:
        raise DomainError("cannot extract roots of a constant polynomial")
    coeffs = [complex(c) for c in p.coefficients]
    scale = max(abs(c) for c in coeffs)
    radius = 1 + max(abs(c) for c in coeffs[1:])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + _START_ANGLE)) for k in range(n)]
    eps = sys.float_info.epsilon

    for _ in range(ROOT_MAX_ITER):
        max_step, settled = 0.0, True
        for i in range(n):
            val, bound = _eval_with_bound(coeffs, z[i])
            if abs(val) > 4 * n * eps * bound:
                settled = False
            denom = 1 + 0j
            for j in range(n):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = complex(eps, eps)
            step = val / denom
            z[i] -= step
            max_step = max(max_step, abs(step) / (1 + abs(z[i])))
        if not all(math.isfinite(w.real) and math.isfinite(w.imag) for w in z):
            raise NumericFailureError("Durand-Kerner iteration diverged")
        if max_step <= ROOT_STEP_TOL or settled:
            break
    else:
        raise NumericFailureError(f"Durand-Kerner did not converge in {ROOT_MAX_ITER} iterations")

    for w in z:
        if abs(_eval_with_bound(coeffs, w)[0]) >= ROOT_RESIDUAL_TOL * (1 + scale):
            raise NumericFailureError(f"root {w} has residual above tolerance")
    # real coefficients: drop rounding-level imaginary parts of real roots
    z = [complex(w.real, 0.0) if abs(w.imag) <= 1e-12 * (1 + abs(w.real)) else w for w in z]
    return sorted(z, key=lambda w: (-w.real, -w.imag))


def eigen_residual(a: Matrix, lam: complex, v) -> float:
    """``||A v - lam v|| / ||v||`` in double precision."""
    n = square_size(a)
    if len(v) != n:
        raise ShapeError(f"vector of length {len(v)} for a {n}x{n} matrix")
    v = [complex(x) for x in v]
    norm_v = math.sqrt(sum(abs(x) ** 2 for x in v))
    if norm_v == 0:
        raise DomainError("eigenvector must be nonzero")
    lam = complex(lam)
    res = 0.0
    for row, vi in zip(a, v):
        r = sum(complex(x) * y for x, y in zip(row, v)) - lam * vi
        res += abs(r) ** 2
    return math.sqrt(res) / norm_v


@dataclass
class SpectrumReport:
    char_poly: CharPoly
    roots: list[complex]
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self) -> dict:
        return {
            "char_poly": self.char_poly.to_json(),
            "roots": [{"re": w.real, "im": w.imag} for w in self.roots],
            "checks": [{"name": name, "pass": ok} for name, ok in self.checks],
            "pass": self.passed,
        }


def verify_spectrum_relations(
    a: Matrix, p: PermutationMatrix, q: PermutationMatrix | None = None
) -> SpectrumReport:
    """Check that relabelled unfoldings keep the characteristic polynomial.

    Without ``q``: compares ``A`` with ``P^{-1} A P``.  With ``q``: forms
    ``B = Q^{-1} A P`` and compares ``A`` with ``B P^{-1} Q``, which equals
    ``Q^{-1} A Q``.
    """
    n = square_size(a)
    if p.size != n or (q is not None and q.size != n):
        raise ShapeError(f"permutation sizes do not match the {n}x{n} matrix")
    base = char_poly(a)
    checks = []
    if q is None:
        checks.append(("char_poly_conjugation_invariant", char_poly(conjugate(a, p)) == base))
    else:
        b = equivalence_transform(a, q, p)
        shifted = matmul(matmul(b, transpose(p.to_matrix())), q.to_matrix())
        checks.append(("shifted_equals_q_conjugate", shifted == conjugate(a, q)))
        checks.append(("char_poly_shifted_invariant", char_poly(shifted) == base))
    return SpectrumReport(char_poly=base, roots=poly_roots(base) if n else [], checks=checks)


def transfer_eigenvector(p: PermutationMatrix, v) -> list:
    """Eigenvector of ``P^{-1} B P`` obtained from an eigenvector ``v`` of ``B``."""
    return p.apply_inverse(v)

