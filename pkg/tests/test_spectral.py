import random
from fractions import Fraction

import pytest

from tenfold.errors import DomainError, ShapeError
from tenfold.matrix import det, diag, identity, matmul, trace
from tenfold.permutation import PermutationMatrix, conjugate
from tenfold.spectral import (
    CharPoly,
    char_poly,
    eigen_residual,
    poly_roots,
    transfer_eigenvector,
    verify_spectrum_relations,
)

from conftest import EXAMPLE_B, EXAMPLE_B_PRIME, EXAMPLE_P
from oracles import char_poly_cofactor
from helpers import random_unimodular

REF_EIGENVALUES = [18.57, 3.12, complex(-0.39, 1.22), complex(-0.39, -1.22)]
ROUNDED_V = [-0.37, -0.23, -0.39, -0.81]
ROUNDED_V_PRIME = [-0.81, -0.37, -0.39, -0.23]


def _random_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return PermutationMatrix(tuple(images))


def test_char_poly_examples():
    assert char_poly(diag([2, 3])).coefficients == (1, -5, 6)
    assert char_poly(identity(2)).coefficients == (1, -2, 1)
    assert char_poly(EXAMPLE_B) == char_poly(EXAMPLE_B_PRIME)
    assert char_poly(EXAMPLE_B).coefficients == char_poly_cofactor(EXAMPLE_B)
    with pytest.raises(ShapeError):
        char_poly([[1, 2, 3], [4, 5, 6]])


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(19)
    for _ in range(100):
        a = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)] for _ in range(3)]
        cp = char_poly(a)
        assert cp.coefficients == char_poly_cofactor(a)
        assert cp.coefficients[-1] == -det(a)
        assert cp.coefficients[1] == -trace(a)


def test_char_poly_unimodular_similarity_invariant():
    rng = random.Random(21)
    for _ in range(50):
        n = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        m = random_unimodular(rng, n)
        m_inv = [[Fraction(x) for x in row] for row in _inverse(m)]
        assert char_poly(matmul(matmul(m_inv, a), m)) == char_poly(a)


def _inverse(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        aug[c] = [x / aug[c][c] for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def test_roots_examples():
    roots = poly_roots(CharPoly((1, 0, 1)))
    assert sorted((round(w.imag, 12) for w in roots)) == [-1.0, 1.0]
    assert all(abs(w.real) < 1e-12 for w in roots)
    roots = poly_roots(CharPoly((1, -2, 1)))
    assert all(abs(w - 1) < 1e-6 for w in roots)
    roots = poly_roots(char_poly(EXAMPLE_B))
    for got, want in zip(roots, REF_EIGENVALUES):
        assert abs(got.real - complex(want).real) < 0.01
        assert abs(got.imag - complex(want).imag) < 0.01
    with pytest.raises(DomainError):
        poly_roots(CharPoly((1,)))


def test_roots_residual_and_vieta():
    rng = random.Random(27)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        cp = char_poly(a)
        roots = poly_roots(cp)
        scale = 1 + max(abs(float(c)) for c in cp.coefficients)
        for w in roots:
            assert abs(cp(w)) < 1e-9 * scale
        tr = float(trace(a))
        assert abs(sum(roots) - tr) <= 1e-6 * (1 + abs(tr))
        prod = 1
        for w in roots:
            prod *= w
        const = float(cp.coefficients[-1]) * (-1) ** n
        assert abs(prod - const) <= 1e-6 * (1 + abs(const))


def test_eigen_residual_exact_pair():
    assert eigen_residual(diag([2, 3]), 3, [0, 1]) == 0
    with pytest.raises(DomainError):
        eigen_residual(diag([2, 3]), 3, [0, 0])
    with pytest.raises(ShapeError):
        eigen_residual(diag([2, 3]), 3, [0, 0, 1])


def test_eigen_residual_of_two_decimal_vectors():
    # the reference eigenvectors carry two decimals; the residual of the
    # rounded vectors is fixed by that data
    r = eigen_residual(EXAMPLE_B, 18.57, ROUNDED_V)
    r2 = eigen_residual(EXAMPLE_B_PRIME, 18.57, ROUNDED_V_PRIME)
    assert r == pytest.approx(0.0903977, abs=1e-6)
    assert r2 == pytest.approx(r, rel=1e-12)


def test_eigenvector_transfer_is_norm_preserving():
    rng = random.Random(33)
    p = PermutationMatrix.from_matrix(EXAMPLE_P)
    assert transfer_eigenvector(p, ROUNDED_V) == ROUNDED_V_PRIME
    for _ in range(50):
        n = rng.randint(2, 6)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        v = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        lam = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        q = _random_perm(rng, n)
        eps = eigen_residual(a, lam, v)
        assert eigen_residual(conjugate(a, q), lam, transfer_eigenvector(q, v)) == pytest.approx(eps, rel=1e-12)


def test_verify_spectrum_relations():
    p = PermutationMatrix.from_matrix(EXAMPLE_P)
    report = verify_spectrum_relations(EXAMPLE_B, p)
    assert report.passed and report.char_poly == char_poly(EXAMPLE_B)
    assert verify_spectrum_relations(EXAMPLE_B, PermutationMatrix.identity(4), PermutationMatrix.identity(4)).passed
    rng = random.Random(35)
    for _ in range(30):
        a = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        report = verify_spectrum_relations(a, _random_perm(rng, 4), _random_perm(rng, 4))
        assert report.passed
    with pytest.raises(ShapeError):
        verify_spectrum_relations(EXAMPLE_B, PermutationMatrix.identity(3))
    js = report.to_json()
    assert set(js) == {"char_poly", "roots", "checks", "pass"}
