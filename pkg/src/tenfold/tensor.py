"""Even-order tensors and their unfoldings into square matrices.

A tensor of shape ``(I_1, ..., I_M, I_1, ..., I_M)`` is addressed by a row
multi-index ``i`` and a column multi-index ``j``.  An unfolding places entry
``b[i, j]`` at matrix position ``(row_map(i), col_map(j))``.  All indices are
1-based at the API boundary.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BijectionError, IndexRangeError, ShapeError
from .matrix import Matrix, shape as matrix_shape


@dataclass(frozen=True)
class Shape:
    half_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.half_dims)
        if not dims:
            raise ShapeError("a shape needs at least one half dimension")
        for d in dims:
            if isinstance(d, bool) or not isinstance(d, int) or d < 1:
                raise ShapeError(f"half dimensions must be positive integers, got {d!r}")
        object.__setattr__(self, "half_dims", dims)

    @property
    def order(self) -> int:
        return len(self.half_dims)

    @property
    def flat_size(self) -> int:
        return math.prod(self.half_dims)

    def multi_indices(self):
        """All multi-indices in canonical order (first axis varies fastest)."""
        for rev in itertools.product(*(range(1, d + 1) for d in reversed(self.half_dims))):
            yield tuple(reversed(rev))


def _as_shape(s) -> Shape:
    return s if isinstance(s, Shape) else Shape(tuple(s))


def canonical_index(multi_index, shape) -> int:
    """``i_1 + sum_k (i_k - 1) * I_1 * ... * I_{k-1}``, the column-major stride map."""
    shape = _as_shape(shape)
    multi_index = tuple(multi_index)
    if len(multi_index) != shape.order:
        raise ShapeError(f"multi-index {multi_index} has {len(multi_index)} components, shape has {shape.order}")
    flat, stride = 1, 1
    for axis, (i, dim) in enumerate(zip(multi_index, shape.half_dims), start=1):
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= dim:
            raise IndexRangeError(f"axis {axis}: index {i!r} outside 1..{dim}")
        flat += (i - 1) * stride
        stride *= dim
    return flat


def canonical_position(flat: int, shape) -> tuple[int, ...]:
    """Inverse of :func:`canonical_index`."""
    shape = _as_shape(shape)
    if not 1 <= flat <= shape.flat_size:
        raise IndexRangeError(f"flat index {flat} outside 1..{shape.flat_size}")
    rest, out = flat - 1, []
    for dim in shape.half_dims:
        rest, r = divmod(rest, dim)
        out.append(r + 1)
    return tuple(out)


@dataclass(frozen=True)
class UnfoldingIndexMap:
    """Bijection from multi-indices to ``1..flat_size``.

    ``images[k]`` is the image of the multi-index whose canonical flat index
    is ``k + 1``.
    """

    shape: Shape
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_shape(self.shape))
        images = tuple(self.images)
        n = self.shape.flat_size
        if len(images) != n:
            raise BijectionError(f"index map needs {n} images, got {len(images)}")
        seen = set()
        for k, img in enumerate(images, start=1):
            if isinstance(img, bool) or not isinstance(img, int) or not 1 <= img <= n:
                raise BijectionError(f"image {img!r} of position {k} outside 1..{n}")
            if img in seen:
                raise BijectionError(f"image {img} is used twice")
            seen.add(img)
        object.__setattr__(self, "images", images)

    def __call__(self, multi_index) -> int:
        return self.images[canonical_index(multi_index, self.shape) - 1]

    def preimage(self, flat: int) -> tuple[int, ...]:
        return canonical_position(self.inverse_table()[flat - 1], self.shape)

    def inverse_table(self) -> tuple[int, ...]:
        """Canonical flat index of the multi-index sent to each image."""
        inv = [0] * len(self.images)
        for k, img in enumerate(self.images, start=1):
            inv[img - 1] = k
        return tuple(inv)


def index_map_from_table(shape, images) -> UnfoldingIndexMap:
    return UnfoldingIndexMap(_as_shape(shape), tuple(images))


def canonical_map(shape) -> UnfoldingIndexMap:
    shape = _as_shape(shape)
    return UnfoldingIndexMap(shape, tuple(range(1, shape.flat_size + 1)))


def strided_map(shape, axis_order) -> UnfoldingIndexMap:
    """Stride map that lets the axes in ``axis_order`` (0-based) vary fastest-first."""
    shape = _as_shape(shape)
    axis_order = tuple(axis_order)
    if sorted(axis_order) != list(range(shape.order)):
        raise BijectionError(f"axis order {axis_order} is not a permutation of 0..{shape.order - 1}")
    permuted = Shape(tuple(shape.half_dims[a] for a in axis_order))
    images = tuple(
        canonical_index(tuple(idx[a] for a in axis_order), permuted) for idx in shape.multi_indices()
    )
    return UnfoldingIndexMap(shape, images)


@dataclass(frozen=True)
class Tensor:
    """Dense tensor; ``entries`` is row-major over (canonical row, canonical column)."""

    shape: Shape
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_shape(self.shape))
        entries = tuple(Fraction(x) for x in self.entries)
        n = self.shape.flat_size
        if len(entries) != n * n:
            raise ShapeError(f"tensor of half dims {self.shape.half_dims} needs {n * n} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, key) -> Fraction:
        row, col = key
        n = self.shape.flat_size
        r = canonical_index(row, self.shape)
        c = canonical_index(col, self.shape)
        return self.entries[(r - 1) * n + (c - 1)]

    @classmethod
    def from_function(cls, shape, fn) -> "Tensor":
        """Build from ``fn(row_multi_index, col_multi_index)``."""
        shape = _as_shape(shape)
        idx = list(shape.multi_indices())
        return cls(shape, tuple(fn(i, j) for i in idx for j in idx))


def _check_maps(t_shape: Shape, row_map: UnfoldingIndexMap, col_map: UnfoldingIndexMap) -> None:
    if row_map.shape != t_shape or col_map.shape != t_shape:
        raise ShapeError(
            f"index maps of shapes {row_map.shape.half_dims}/{col_map.shape.half_dims} "
            f"do not match tensor shape {t_shape.half_dims}"
        )


def unfold(t: Tensor, row_map: UnfoldingIndexMap, col_map: UnfoldingIndexMap | None = None) -> Matrix:
    """Matrix ``B`` with ``B[row_map(i), col_map(j)] = t[i, j]``."""
    col_map = row_map if col_map is None else col_map
    _check_maps(t.shape, row_map, col_map)
    n = t.shape.flat_size
    out = [[Fraction(0)] * n for _ in range(n)]
    for r, ri in enumerate(row_map.images):
        base = r * n
        row = out[ri - 1]
        for c, ci in enumerate(col_map.images):
            row[ci - 1] = t.entries[base + c]
    return out


def refold(m: Matrix, row_map: UnfoldingIndexMap, col_map: UnfoldingIndexMap | None = None) -> Tensor:
    col_map = row_map if col_map is None else col_map
    if row_map.shape != col_map.shape:
        raise ShapeError("row and column maps have different shapes")
    n = row_map.shape.flat_size
    if matrix_shape(m) != (n, n):
        raise ShapeError(f"expected a {n}x{n} matrix, got {matrix_shape(m)}")
    entries = [m[ri - 1][ci - 1] for ri in row_map.images for ci in col_map.images]
    return Tensor(row_map.shape, tuple(entries))
