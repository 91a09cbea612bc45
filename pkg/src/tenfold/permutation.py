"""Permutation matrices relating two unfoldings of the same tensor."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BijectionError, ShapeError
from .matrix import Matrix, square_size
from .tensor import UnfoldingIndexMap


@dataclass(frozen=True)
class PermutationMatrix:
    """Stored as ``images`` where column ``j`` holds its single 1 in row ``images[j-1]``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        if n == 0:
            raise BijectionError("permutation must have positive size")
        if any(isinstance(i, bool) or not isinstance(i, int) for i in images) or sorted(images) != list(range(1, n + 1)):
            raise BijectionError(f"{images} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", images)

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "PermutationMatrix":
        return cls(tuple(range(1, n + 1)))

    def inverse(self) -> "PermutationMatrix":
        inv = [0] * self.size
        for j, i in enumerate(self.images, start=1):
            inv[i - 1] = j
        return PermutationMatrix(tuple(inv))

    def __matmul__(self, other: "PermutationMatrix") -> "PermutationMatrix":
        if self.size != other.size:
            raise ShapeError(f"cannot multiply permutations of sizes {self.size} and {other.size}")
        return PermutationMatrix(tuple(self.images[j - 1] for j in other.images))

    def to_matrix(self) -> Matrix:
        n = self.size
        out = [[0] * n for _ in range(n)]
        for j, i in enumerate(self.images):
            out[i - 1][j] = 1
        return out

    @classmethod
    def from_matrix(cls, m: Matrix) -> "PermutationMatrix":
        n = square_size(m)
        images = []
        for j in range(n):
            col = [m[i][j] for i in range(n)]
            if sorted(col) != [0] * (n - 1) + [1]:
                raise BijectionError(f"column {j + 1} is not a unit vector")
            images.append(col.index(1) + 1)
        return cls(tuple(images))

    def apply(self, v) -> list:
        """``P @ v``."""
        out = [None] * self.size
        for j, i in enumerate(self.images):
            out[i - 1] = v[j]
        return out

    def apply_inverse(self, v) -> list:
        """``P^{-1} @ v``; entry ``a`` of the result is ``v[images[a]]``."""
        return [v[i - 1] for i in self.images]


def permutation_between(from_map: UnfoldingIndexMap, to_map: UnfoldingIndexMap) -> PermutationMatrix:
    """``P`` with ``unfold(t, to, to) == P^{-1} unfold(t, from, from) P`` for every tensor ``t``."""
    if from_map.shape != to_map.shape:
        raise ShapeError(
            f"index maps have different shapes {from_map.shape.half_dims} and {to_map.shape.half_dims}"
        )
    to_inv = to_map.inverse_table()
    return PermutationMatrix(tuple(from_map.images[k - 1] for k in to_inv))


def conjugate(b: Matrix, p: PermutationMatrix) -> Matrix:
    """``P^{-1} B P`` by reindexing: entry ``(a, c)`` is ``B[pi(a), pi(c)]``."""
    n = square_size(b)
    if n != p.size:
        raise ShapeError(f"matrix of size {n} cannot be conjugated by a permutation of size {p.size}")
    idx = [i - 1 for i in p.images]
    return [[b[r][c] for c in idx] for r in idx]


def equivalence_transform(a: Matrix, q: PermutationMatrix, p: PermutationMatrix) -> Matrix:
    """``Q^{-1} A P`` for permutations ``Q`` and ``P``."""
    n = square_size(a)
    if n != p.size or n != q.size:
        raise ShapeError("permutation sizes do not match the matrix")
    rows = [i - 1 for i in q.images]
    cols = [i - 1 for i in p.images]
    return [[a[r][c] for c in cols] for r in rows]
