"""Command-line front end.

Every subcommand reads JSON files, prints one JSON object on stdout and exits
0.  Domain and input errors print ``{"error": code, "detail": message}`` and
exit 1; usage errors print the same shape and exit 2.
"""

from __future__ import annotations

import argparse
import sys

from .classes import fingerprint
from .combinatorics import class_count_formula, partition_number, permutation_class_counts
from .errors import ParseError, TenfoldError
from .permutation import conjugate, permutation_between
from .ring import Prime
from .serialize import (
    dumps,
    index_map_from_json,
    load_json,
    local_form_to_json,
    matrix_from_json,
    matrix_to_json,
    permutation_from_json,
    permutation_to_json,
    smith_to_json,
    tensor_from_json,
)
from .smith import local_global_reconstruct, local_smith_form, smith_normal_form
from .spectral import verify_spectrum_relations
from .tensor import unfold

MAX_COUNT_SIZE = 5000
MAX_PARTITION = 20000
MAX_PRIMES = 1000


class UsageError(Exception):
    pass


class LimitError(TenfoldError):
    code = "limit_exceeded"


class InputFileError(TenfoldError):
    code = "file_not_found"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> dict:
    try:
        return load_json(path)
    except FileNotFoundError as exc:
        raise InputFileError(f"{path}: no such file") from exc
    except IsADirectoryError as exc:
        raise InputFileError(f"{path}: is a directory") from exc
    except RecursionError as exc:
        raise ParseError(f"{path}: JSON nested too deeply") from exc
    except OSError as exc:
        raise InputFileError(f"{path}: {exc.strerror}") from exc


def _in_context(path: str, loader, data):
    try:
        return loader(data)
    except TenfoldError as exc:
        exc.args = (f"{path}: {exc}",)
        raise


def _load(path: str, loader):
    return _in_context(path, loader, _read(path))


def _primes(text: str) -> list[Prime]:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            value = int(part)
        except ValueError as exc:
            raise ParseError(f"cannot parse prime {part!r}") from exc
        out.append(Prime(value))
    if len(out) > MAX_PRIMES:
        raise LimitError(f"at most {MAX_PRIMES} primes")
    return out


def cmd_unfold(args) -> dict:
    tensor = _load(args.tensor, tensor_from_json)
    row_map = _load(args.rowmap, index_map_from_json)
    col_map = _load(args.colmap, index_map_from_json) if args.colmap else row_map
    return {"rows": matrix_to_json(unfold(tensor, row_map, col_map))}


def cmd_perm(args) -> dict:
    src = _load(getattr(args, "from"), index_map_from_json)
    dst = _load(args.to, index_map_from_json)
    return permutation_to_json(permutation_between(src, dst))


def cmd_snf(args) -> dict:
    matrix = _load(args.matrix, matrix_from_json)
    prime = _primes(args.local)[0] if args.local is not None else None
    snf = smith_normal_form(matrix)
    out = smith_to_json(snf)
    if prime is not None:
        out["local"] = local_form_to_json(local_smith_form(snf, prime))
    return out


def cmd_localize(args) -> dict:
    matrix = _load(args.matrix, matrix_from_json)
    primes = _primes(args.primes)
    snf = smith_normal_form(matrix)
    locs = [local_smith_form(snf, p) for p in primes]
    return {
        "rank": snf.rank,
        "locals": [local_form_to_json(loc) for loc in locs],
        "reconstructed": matrix_to_json(local_global_reconstruct(locs, snf.rank, snf.shape)),
    }


def cmd_fingerprint(args) -> dict:
    return fingerprint(_load(args.matrix, matrix_from_json)).to_json()


def cmd_count(args) -> dict:
    if not 1 <= args.size <= MAX_COUNT_SIZE:
        raise LimitError(f"--size must be in 1..{MAX_COUNT_SIZE}")
    if not 0 <= args.primes <= MAX_PRIMES:
        raise LimitError(f"--primes must be in 0..{MAX_PRIMES}")
    if args.partition is not None and not 0 <= args.partition <= MAX_PARTITION:
        raise LimitError(f"--partition must be in 0..{MAX_PARTITION}")
    out = {
        "size": args.size,
        "primes": args.primes,
        "class_count": str(class_count_formula(args.size, args.primes)),
    }
    if args.partition is not None:
        out["partition_number"] = str(partition_number(args.partition))
    if args.asymptotic:
        if args.size > MAX_PARTITION:
            raise LimitError(f"--asymptotic needs --size <= {MAX_PARTITION}")
        out["permutation_classes"] = permutation_class_counts(args.size).to_json()
    return out


def cmd_spectra(args) -> dict:
    if args.tensor:
        if not (args.rowmap and args.rowmap2) or args.matrix or args.perm or args.perm2:
            raise UsageError("--tensor needs --rowmap and --rowmap2 (and no --matrix/--perm)")
        tensor = _load(args.tensor, tensor_from_json)
        first = _load(args.rowmap, index_map_from_json)
        second = _load(args.rowmap2, index_map_from_json)
        b = unfold(tensor, first, first)
        b2 = unfold(tensor, second, second)
        p = permutation_between(first, second)
        report = verify_spectrum_relations(b, p)
        report.checks.append(("second_unfolding_is_conjugate", conjugate(b, p) == b2))
        out = report.to_json()
        out["perm"] = list(p.images)
        return out
    if not (args.matrix and args.perm) or args.rowmap or args.rowmap2:
        raise UsageError("spectra needs either --tensor/--rowmap/--rowmap2 or --matrix/--perm")
    matrix = _load(args.matrix, matrix_from_json)
    p = _load(args.perm, permutation_from_json)
    q = _load(args.perm2, permutation_from_json) if args.perm2 else None
    return verify_spectrum_relations(matrix, p, q).to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tenfold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("unfold", help="unfold a tensor into a matrix")
    p.add_argument("--tensor", required=True)
    p.add_argument("--rowmap", required=True)
    p.add_argument("--colmap")
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("perm", help="permutation matrix between two index maps")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("snf", help="Smith normal form with transforms")
    p.add_argument("--matrix", required=True)
    p.add_argument("--local", metavar="P")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("localize", help="local Smith forms and their product")
    p.add_argument("--matrix", required=True)
    p.add_argument("--primes", required=True, help="comma-separated primes")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("fingerprint", help="equivalence-class fingerprint")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("count", help="class counts")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--primes", type=int, required=True)
    p.add_argument("--partition", type=int)
    p.add_argument("--asymptotic", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("spectra", help="spectrum relations between unfoldings")
    p.add_argument("--tensor")
    p.add_argument("--rowmap")
    p.add_argument("--rowmap2")
    p.add_argument("--matrix")
    p.add_argument("--perm")
    p.add_argument("--perm2")
    p.set_defaults(func=cmd_spectra)
    return parser


def _emit(obj, stream) -> None:
    stream.write(dumps(obj) + "\n")


def main(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        _emit({"error": "usage", "detail": str(exc)}, stdout)
        return 2
    except TenfoldError as exc:
        _emit({"error": exc.code, "detail": str(exc)}, stdout)
        return 1
    except (RecursionError, MemoryError) as exc:
        _emit({"error": "resource_exhausted", "detail": type(exc).__name__}, stdout)
        return 1
    _emit(result, stdout)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
