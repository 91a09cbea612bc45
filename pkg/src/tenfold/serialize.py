"""JSON readers and writers for tensors, index maps, matrices and permutations.

Scalars travel as strings (``"3"``, ``"1/10"``, ``"0.1"``) so nothing is
rounded on the way in or out.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .matrix import Matrix, shape
from .permutation import PermutationMatrix
from .ring import format_scalar, parse_scalar
from .smith import LocalSmithForm, SmithDecomposition
from .tensor import Shape, Tensor, UnfoldingIndexMap


def load_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top-level JSON value must be an object")
    return data


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=True)


def _field(data: dict, key: str, kind=list):
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} must be a {kind.__name__}")
    return value


def _int_list(values, what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise ParseError(f"{what}: expected integers, got {v!r}")
        if isinstance(v, str):
            try:
                v = int(v.strip())
            except ValueError as exc:
                raise ParseError(f"{what}: cannot parse integer {v!r}") from exc
        out.append(v)
    return tuple(out)


def _shape(data: dict) -> Shape:
    return Shape(_int_list(_field(data, "half_dims"), "half_dims"))


def tensor_from_json(data: dict) -> Tensor:
    entries = [parse_scalar(x) for x in _field(data, "entries")]
    return Tensor(_shape(data), tuple(entries))


def tensor_to_json(t: Tensor) -> dict:
    return {"half_dims": list(t.shape.half_dims), "entries": [format_scalar(x) for x in t.entries]}


def index_map_from_json(data: dict) -> UnfoldingIndexMap:
    return UnfoldingIndexMap(_shape(data), _int_list(_field(data, "images"), "images"))


def index_map_to_json(m: UnfoldingIndexMap) -> dict:
    return {"half_dims": list(m.shape.half_dims), "images": list(m.images)}


def matrix_from_json(data: dict) -> Matrix:
    rows = _field(data, "rows")
    if not all(isinstance(r, list) for r in rows):
        raise ParseError("field 'rows' must be a list of lists")
    m = [[parse_scalar(x) for x in r] for r in rows]
    shape(m)
    return m


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m]


def permutation_from_json(data: dict) -> PermutationMatrix:
    return PermutationMatrix(_int_list(_field(data, "images"), "images"))


def permutation_to_json(p: PermutationMatrix) -> dict:
    return {"images": list(p.images), "matrix": p.to_matrix()}


def smith_to_json(d: SmithDecomposition) -> dict:
    return {
        "S": matrix_to_json(d.S),
        "U": matrix_to_json(d.U),
        "V": matrix_to_json(d.V),
        "invariant_factors": [str(x) for x in d.invariant_factors],
        "rank": d.rank,
    }


def local_form_to_json(loc: LocalSmithForm) -> dict:
    return {"prime": str(int(loc.prime)), "exponents": list(loc.exponents), "rank": loc.rank}
