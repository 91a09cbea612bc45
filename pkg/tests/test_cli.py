import io
import json
import random
import subprocess
import sys

import pytest

from tenfold.cli import main


def run(argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], stdout=out)
    return code, out.getvalue()


def test_snf_example(fixtures_dir):
    code, out = run(["snf", "--matrix", fixtures_dir / "snf_2x2.json"])
    assert code == 0
    assert json.loads(out)["invariant_factors"] == ["2", "4"]


def test_snf_local(fixtures_dir):
    code, out = run(["snf", "--matrix", fixtures_dir / "snf_2x2.json", "--local", "2"])
    assert json.loads(out)["local"] == {"prime": "2", "exponents": [1, 2], "rank": 2}


def test_count_example():
    code, out = run(["count", "--size", "2", "--primes", "1"])
    assert code == 0
    assert out == '{"class_count": "6", "primes": 1, "size": 2}\n'


def test_count_with_partitions():
    code, out = run(["count", "--size", "4", "--primes", "2", "--partition", "100", "--asymptotic"])
    data = json.loads(out)
    assert data["class_count"] == "4900"
    assert data["partition_number"] == "190569292"
    assert data["permutation_classes"]["same_map_exact"] == "5"
    assert data["permutation_classes"]["diff_map_exact"] == "25"


def test_unfold_and_perm(fixtures_dir):
    code, out = run(
        ["unfold", "--tensor", fixtures_dir / "example1_tensor.json", "--rowmap", fixtures_dir / "example1_psi_prime.json"]
    )
    assert json.loads(out)["rows"][0] == ["99/10", "7", "9", "4"]
    code, out = run(
        ["perm", "--from", fixtures_dir / "example1_psi.json", "--to", fixtures_dir / "example1_psi_prime.json"]
    )
    assert json.loads(out)["images"] == [4, 1, 3, 2]


def test_localize_and_fingerprint(fixtures_dir):
    code, out = run(["localize", "--matrix", fixtures_dir / "snf_2x2.json", "--primes", "2,3"])
    data = json.loads(out)
    assert data["reconstructed"] == [["2", "0"], ["0", "4"]]
    code, out = run(["fingerprint", "--matrix", fixtures_dir / "snf_2x2.json"])
    assert json.loads(out) == {"size": 2, "rank": 2, "components": {"2": [0, 1, 1]}}


def test_spectra_tensor_mode(fixtures_dir):
    code, out = run(
        [
            "spectra",
            "--tensor", fixtures_dir / "example1_tensor.json",
            "--rowmap", fixtures_dir / "example1_psi.json",
            "--rowmap2", fixtures_dir / "example1_psi_prime.json",
        ]
    )
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    roots = [complex(r["re"], r["im"]) for r in data["roots"]]
    for got, want in zip(roots, [18.57, 3.12, complex(-0.39, 1.22), complex(-0.39, -1.22)]):
        assert abs(got.real - want.real) < 0.01 and abs(got.imag - want.imag) < 0.01


def test_spectra_matrix_mode(fixtures_dir):
    code, out = run(
        [
            "spectra",
            "--matrix", fixtures_dir / "example1_B.json",
            "--perm", fixtures_dir / "example1_perm.json",
            "--perm2", fixtures_dir / "example1_perm.json",
        ]
    )
    assert code == 0 and json.loads(out)["pass"] is True


@pytest.mark.parametrize(
    "argv, code, error",
    [
        (["snf", "--matrix", "missing.json"], 1, "file_not_found"),
        (["count", "--size", "x", "--primes", "1"], 2, "usage"),
        (["frobnicate"], 2, "usage"),
        ([], 2, "usage"),
        (["count", "--size", "0", "--primes", "1"], 1, "limit_exceeded"),
        (["spectra", "--matrix", "a.json"], 2, "usage"),
    ],
)
def test_errors(argv, code, error):
    got, out = run(argv)
    assert got == code
    assert json.loads(out)["error"] == error


def test_domain_errors(tmp_path, fixtures_dir):
    bad = tmp_path / "frac.json"
    bad.write_text('{"rows": [["1/2", "1"], ["0", "1"]]}')
    assert json.loads(run(["snf", "--matrix", bad])[1])["error"] == "domain_error"
    assert json.loads(run(["localize", "--matrix", fixtures_dir / "snf_2x2.json", "--primes", "4"])[1])["error"] == "invalid_prime"
    dup = tmp_path / "dup.json"
    dup.write_text('{"half_dims": [2, 2], "images": [1, 1, 3, 4]}')
    code, out = run(["perm", "--from", dup, "--to", fixtures_dir / "example1_psi.json"])
    assert code == 1 and json.loads(out)["error"] == "bijection_violation"


def test_output_is_deterministic(fixtures_dir):
    argv = [
        "spectra",
        "--tensor", fixtures_dir / "example1_tensor.json",
        "--rowmap", fixtures_dir / "example1_psi.json",
        "--rowmap2", fixtures_dir / "example1_psi_prime.json",
    ]
    assert len({run(argv)[1] for _ in range(5)}) == 1


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "tenfold", "count", "--size", "2", "--primes", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["class_count"] == "6"


# -- malformed-input fuzzing -------------------------------------------------

_VALID = {
    "tensor": {"half_dims": [2, 2], "entries": ["3", "1", "4", "5", "1", "3", "8", "0.1", "2", "2", "5", "5", "7", "4", "9", "9.9"]},
    "map": {"half_dims": [2, 2], "images": [2, 4, 3, 1]},
    "matrix": {"rows": [["2", "4"], ["6", "8"]]},
    "perm": {"images": [4, 1, 3, 2]},
}


def _break_document(doc, rng):
    """Return JSON text that no loader accepts."""
    doc = json.loads(json.dumps(doc))
    key = rng.choice(sorted(doc))
    kind = rng.randrange(7)
    if kind == 0:
        text = json.dumps(doc)
        return text[: rng.randrange(len(text) - 1)]
    if kind == 1:
        del doc[key]
    elif kind == 2:
        doc[key] = rng.choice([None, 3, "abc", {"k": 1}, True])
    elif kind == 3:
        seq = doc[key] if key != "rows" else rng.choice(doc[key])
        seq.pop(rng.randrange(len(seq)))
    elif kind == 4:
        seq = doc[key]
        junk = [None, True, 1.5, "x", "1/0", {}, [], "1e99999"]
        if key in ("half_dims", "images"):
            junk += [0, -1, 99]
        seq[rng.randrange(len(seq))] = rng.choice(junk)
    elif kind == 5:
        return rng.choice(["", "[]", "null", "42", "\"text\"", "{", "}", "{\"rows\": [[1, 2], [3]]}"])
    else:
        return "".join(chr(rng.randrange(1, 0x2FF)) for _ in range(rng.randrange(1, 40))) + "}{"
    return json.dumps(doc)


def _malformed_case(rng, tmp_path, i):
    valid = {}
    for name, doc in _VALID.items():
        path = tmp_path / f"ok_{name}.json"
        if not path.exists():
            path.write_text(json.dumps(doc))
        valid[name] = path
    bad = tmp_path / f"bad_{i}.json"
    kind = rng.randrange(10)
    if kind == 0:
        argv = rng.choice(
            [
                ["snf"], ["unfold", "--tensor"], ["count", "--size", "2"], ["perm", "--to", valid["map"]],
                ["count", "--size", "two", "--primes", "1"], ["--bogus"], ["localize", "--matrix", valid["matrix"]],
                ["spectra"], ["spectra", "--tensor", valid["tensor"]], ["spectra", "--matrix", valid["matrix"], "--rowmap", valid["map"]],
                ["fingerprint", "--matrix", valid["matrix"], "--extra", "1"], [rng.choice(["", "SNF", "unfold2"])],
            ]
        )
        return [str(a) for a in argv]
    if kind == 1:
        return ["snf", "--matrix", str(tmp_path / f"missing_{i}.json")]
    if kind == 2:
        return ["localize", "--matrix", str(valid["matrix"]), "--primes", rng.choice(["1", "4", "2,9", "x", "2,,3", "-7", ""])]
    if kind == 3:
        return ["count", "--size", str(rng.choice([0, -3, 10**6])), "--primes", "1"]
    target = rng.choice(["tensor", "map", "matrix", "perm"])
    bad.write_text(_break_document(_VALID[target], rng), encoding="utf-8")
    if target == "tensor":
        argv = ["unfold", "--tensor", bad, "--rowmap", valid["map"]]
    elif target == "map":
        argv = rng.choice([["unfold", "--tensor", valid["tensor"], "--rowmap", bad], ["perm", "--from", valid["map"], "--to", bad]])
    elif target == "matrix":
        argv = [rng.choice(["snf", "fingerprint"]), "--matrix", bad]
    else:
        argv = ["spectra", "--matrix", valid["matrix"], "--perm", bad]
    return [str(a) for a in argv]


def fuzz_cli(tmp_path, cases=1000, seed=2024):
    """Run malformed invocations; return (counts by exit code, list of problems)."""
    rng = random.Random(seed)
    codes, problems = {}, []
    for i in range(cases):
        argv = _malformed_case(rng, tmp_path, i)
        try:
            code, out = run(argv)
        except BaseException as exc:  # noqa: BLE001 - a crash is what we are looking for
            problems.append((argv, repr(exc)))
            continue
        codes[code] = codes.get(code, 0) + 1
        try:
            data = json.loads(out)
        except ValueError:
            problems.append((argv, f"unstructured output {out!r}"))
            continue
        if code not in (1, 2) or set(data) != {"error", "detail"}:
            problems.append((argv, f"exit {code}: {out.strip()}"))
    return codes, problems


def test_fuzz_small(tmp_path):
    codes, problems = fuzz_cli(tmp_path, cases=300, seed=7)
    assert problems == [], problems[:3]
