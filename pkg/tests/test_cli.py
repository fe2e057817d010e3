import json
import os
import subprocess
import sys

import pytest

from incidence.cli import main
from incidence.fixtures import CATALOG, fixture
from incidence.iso import is_isomorphic
from incidence.textformat import load_category


@pytest.fixture
def cat_files(tmp_path):
    paths = {}
    for name in CATALOG:
        path = tmp_path / f"{name}.cat"
        assert main(["fixture", name, "-o", str(path)]) == 0
        paths[name] = str(path)
    tri = tmp_path / "triangle.cat"
    assert main(["fixture", "ngon", "--param", "k=3", "-o", str(tri)]) == 0
    paths["triangle"] = str(tri)
    return paths


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fixture_round_trip(cat_files):
    for name in CATALOG:
        assert is_isomorphic(load_category(cat_files[name]), fixture(name).build(), ranks=True)


def test_fixture_list(capsys):
    code, out, _ = run(["fixture", "--list"], capsys)
    assert code == 0 and out.split() == list(CATALOG)


def test_validate_torus(cat_files, capsys):
    code, out, _ = run(["validate", cat_files["torus"], "--signs", "--check", "diamond", "--check", "cw"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_check_cw_annulus(cat_files, capsys):
    code, out, _ = run(["check-cw", cat_files["annulus"]], capsys)
    assert code == 1
    assert "null -> F" in out and "initial morphism" in out


def test_upper_cube_is_triangle(cat_files, tmp_path, capsys):
    vf = tmp_path / "vf.cat"
    assert main(["upper", cat_files["cube"], "--object", "c000", "-o", str(vf)]) == 0
    code, out, _ = run(["iso", str(vf), cat_files["triangle"]], capsys)
    assert code == 0 and out.startswith("isomorphic")
    code, out, _ = run(["validate", str(vf), "--signs", "--check", "cw"], capsys)
    assert code == 0


def test_derived_outputs_reparse(cat_files, tmp_path, capsys):
    for verb, extra in (("upper", ["--object", "P"]), ("lower", ["--object", "Q"]),
                        ("section", ["--morphism", "P->universe"])):
        out = tmp_path / f"{verb}.cat"
        assert main([verb, cat_files["torus"], *extra, "-o", str(out)]) == 0
        code, text, _ = run(["validate", str(out), "--check", "diamond"], capsys)
        assert code == 0, text


def test_not_isomorphic(cat_files, capsys):
    code, out, _ = run(["iso", cat_files["segment"], cat_files["circle_point"]], capsys)
    assert code == 1 and out == "not isomorphic\n"


def test_hasse_dot(cat_files, capsys):
    code, out, _ = run(["hasse", cat_files["circle_point"]], capsys)
    assert code == 0
    assert out.startswith('digraph "circle_point"')
    assert '"P" -> "C" [label="cw +"];' in out
    assert '"P" -> "C" [label="ccw -"];' in out
    assert "rank=same" in out


def test_nerve_and_realize_json(cat_files, capsys):
    code, out, _ = run(["nerve", cat_files["torus"]], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "nerve" and doc["version"] == 1
    code, out, _ = run(["realize", cat_files["torus"]], capsys)
    doc = json.loads(out)
    assert [len(d["simplices"]) for d in doc["dimensions"]] == [1, 4, 12, 8]
    assert doc["euler"] == 0


def test_decompose_split(cat_files, tmp_path, capsys):
    up = tmp_path / "upcres.cat"
    assert main(["upper", cat_files["crescent"], "--object", "P", "-o", str(up)]) == 0
    parts = tmp_path / "parts"
    code, out, _ = run(["decompose", str(up), "--split-dir", str(parts)], capsys)
    assert code == 0 and out.startswith("2 linked cluster(s)")
    files = sorted(os.listdir(parts))
    assert len(files) == 2
    a, b = (load_category(str(parts / f)) for f in files)
    assert is_isomorphic(a, b)


def test_exit_codes(cat_files, tmp_path, capsys):
    bad = tmp_path / "bad.cat"
    bad.write_text("object A rank zero\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 2 and "line 1" in err
    code, _, err = run(["upper", cat_files["torus"], "--object", "nowhere"], capsys)
    assert code == 3
    unsigned = tmp_path / "unsigned.cat"
    unsigned.write_text("object A rank 0\nobject L rank 1\narrow l : A -> L\n")
    code, _, err = run(["validate", str(unsigned), "--signs"], capsys)
    assert code == 3 and "unsigned" in err
    code, _, _ = run(["fixture", "ngon", "--param", "k=1"], capsys)
    assert code == 3
    code, _, _ = run(["nerve", cat_files["segment"], "--max-level", "1"], capsys)
    assert code == 3
    code, _, _ = run(["validate", str(tmp_path / "missing.cat")], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_violation_exit_code(cat_files, capsys):
    code, out, _ = run(["validate", cat_files["ray"], "--check", "diamond", "--scope", "all"], capsys)
    assert code == 1


def test_json_report(cat_files, capsys):
    code, out, _ = run(["validate", cat_files["two_cubes_shared_edge"], "--check", "strongly_unsplittable",
                        "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["kind"] == "validation"
    failing = [r for r in doc["reports"] if r["verdict"] == "fail"]
    assert [r["property"] for r in failing] == ["strongly_unsplittable"]


def _subprocess(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    return subprocess.run([sys.executable, "-m", "incidence", *args], capture_output=True, env=env).stdout


@pytest.mark.parametrize("verb", ["hasse", "nerve", "realize", "upper"])
def test_outputs_are_byte_identical_across_processes(cat_files, verb):
    args = [verb, cat_files["torus"]] + (["--object", "P"] if verb == "upper" else [])
    outs = {_subprocess(args, seed) for seed in (0, 1, 12345)}
    assert len(outs) == 1 and outs.pop()
