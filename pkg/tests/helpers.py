"""Random generators shared by the test modules."""

from tenfold.matrix import identity


def random_matrix(rng, m, n, lo=-20, hi=20):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def random_unimodular(rng, n, steps=8):
    u = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            u = [[-x for x in row] for row in u]
            continue
        k = rng.randint(-3, 3)
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
    return u
