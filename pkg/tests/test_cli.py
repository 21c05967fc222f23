from __future__ import annotations

import json
import subprocess
import sys

import pytest

from slopekit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cf_eval(capsys):
    assert run(capsys, "cf", "eval", "[3,5]")[:2] == (0, "5/16\n")


def test_cf_eval_zero_denominator(capsys):
    code, _, err = run(capsys, "cf", "eval", "[2,1,-1]")
    assert code == 2 and "division by zero" in err


def test_cf_tools(capsys):
    assert run(capsys, "cf", "simplify", "[4,-1,-4]")[1] == "[3,5]\n"
    assert run(capsys, "cf", "ht-slopes", "2/5")[1] == "-4, 0, 4\n"
    assert run(capsys, "cf", "lk", "[3,-3]")[1] == "0\n"
    assert run(capsys, "cf", "equiv", "[2,3,4]", "[4,3,2]")[1].startswith("equivalent")


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "pretzel:-2,3,7")
    assert code == 0
    assert "conj2 Holds case 1 (16, 20)" in out


def test_census_transform(capsys):
    code, out, _ = run(capsys, "census", "transform", "v0319", "--pairs", "(-2,-62);(0,-64)")
    assert (code, out) == (0, "std = -snappy - 64\n")
    code, out, _ = run(capsys, "census", "transform", "v1359", "--apply=-2/3")
    assert out.splitlines() == ["std = -snappy + 58", "-2/3 -> 176/3"]
    code, _, err = run(capsys, "census", "transform", "s682")
    assert code == 2 and "duplicate" in err
    code, _, err = run(capsys, "census", "transform", "v0319", "--pairs", "(1,5)")
    assert code == 2 and "underdetermined" in err


def test_verify_exit_codes(tmp_path, capsys):
    failing = {"name": "k", "exceptional": ["1", "2"], "boundary": [["3/2", "M"]], "boundary_complete": True}
    p = tmp_path / "d.json"
    p.write_text(json.dumps([failing]))
    assert run(capsys, "verify", str(p))[0] == 1
    p.write_text(json.dumps({"name": "v0319", "row": "[(-2, 'T'), -1, 0, (2/3, 'C'), 1, (14/3, 'C')]"}))
    code, out, _ = run(capsys, "verify", str(p))
    assert code == 0 and "conj1 Holds (-2, 14/3); conj2 Holds case 2 (-2, 2/3)" in out
    p.write_text("{not json")
    assert run(capsys, "verify", str(p))[0] == 2


def test_census_ingest(tmp_path, capsys):
    p = tmp_path / "c.csv"
    p.write_text("v0001,\"[(1, 'T')]\",\"[(1, 'T')]\",\nv0002,\"[(1, 'Z')]\",\"[]\",\n")
    code, out, err = run(capsys, "census", "ingest", str(p), "--kind", "toronly")
    assert code == 2 and "v0001" in out and "row 2" in err


def test_census_report_json(capsys):
    code, out, _ = run(capsys, "census", "report", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["tally"]["conj2"]["Holds"] == data["tally"]["records"]


def test_norm(capsys):
    code, out, _ = run(capsys, "norm", "--s", "4", "--m", "4", "--t", "12", "--rM", "0", "--n", "3")
    assert code == 0 and out.splitlines()[:2] == ["w(1) = 2", "lattice contradiction: yes"]
    code, _, _ = run(capsys, "norm", "--s", "3", "--m", "4", "--t", "4", "--rM", "0", "--n", "3")
    assert code == 2


def test_families_formats(capsys):
    code, out, _ = run(capsys, "families", "pretzel:-2,3,9", "--format", "csv")
    assert out.splitlines() == ["slope,tag", "22,S", "67/3,NI", "23,S", "24,T"]
    code, out, _ = run(capsys, "families", "nonsense:1")
    assert code == 2


def test_mirror_flag(capsys):
    plain = run(capsys, "families", "pretzel:-2,3,7")[1]
    twice = run(capsys, "--mirror", "families", "pretzel:-2,3,7", "--mirror")[1]
    once = run(capsys, "families", "pretzel:-2,3,7", "--mirror")[1]
    assert twice == plain
    assert once.startswith("P(-2,3,7)*: -20(T), -19(S), -37/2(T)")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["cf", "eval"])
    assert info.value.code == 2


def test_deterministic_output():
    cmd = [sys.executable, "-m", "slopekit", "census", "report", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a
