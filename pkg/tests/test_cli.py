"""Command line behavior: reports, exit codes, emit formats."""

import json
import subprocess
import sys

import pytest

from qbichromate.cli import run
from conftest import fixture_path


def invoke(argv):
    return subprocess.run([sys.executable, "-m", "qbichromate.cli"] + argv,
                          capture_output=True, text=True)


def test_qchrom_report(capsys):
    code, report = run(["qchrom", "--graph", fixture_path("k2.g"), "--n", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "result: 2*q" in out
    assert "sha256=" in out
    assert out.endswith("checked: 1 failed: 0\n")


def test_exit_code_on_bad_input(capsys):
    code, _ = run(["qchrom", "--graph", "/no/such/file.g", "--n", "2"])
    err = capsys.readouterr().err
    assert code == 2
    assert err.startswith("error: ")


def test_exit_code_on_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("vertices 2\n1 5\n")
    code, _ = run(["qchrom", "--graph", str(bad), "--n", "2"])
    err = capsys.readouterr().err
    assert code == 2
    assert "line 2" in err


def test_json_emit(capsys):
    code, _ = run(["identities", "--suite", "qbinom", "--emit", "json"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "identities --suite qbinom"
    assert all(v["status"] == "PASS" for v in payload["verdicts"])
    for v in payload["verdicts"]:
        assert v["lhs"] == v["rhs"]
    # serialized with sorted keys for stable bytes
    assert out == json.dumps(payload, sort_keys=True) + "\n"


def test_chordal_check_yes_no(capsys):
    code, _ = run(["chordal-check", "--graph", fixture_path("tri.g")])
    out = capsys.readouterr().out
    assert code == 0
    assert "chordal: yes" in out
    code, _ = run(["chordal-check", "--graph", fixture_path("c4.g")])
    out = capsys.readouterr().out
    assert code == 0
    assert "chordal: no" in out
    assert "chordless cycle" in out


def test_median_without_face_lists_faces(capsys):
    code, _ = run(["median", "--pd", fixture_path("trefoil.pd")])
    out = capsys.readouterr().out
    assert code == 0
    assert "face 0:" in out
    code, _ = run(["median", "--pd", fixture_path("trefoil.pd"),
                   "--outer-face", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert "eta" in out


def test_timing_goes_to_stderr():
    plain = invoke(["jones", "--pd", fixture_path("trefoil.pd")])
    timed = invoke(["jones", "--pd", fixture_path("trefoil.pd"), "--timing"])
    assert plain.returncode == timed.returncode == 0
    assert plain.stdout == timed.stdout
    assert plain.stderr == ""
    assert timed.stderr.startswith("time: ")


def test_byte_stability_spot():
    argv = ["identities", "--suite", "potts",
            "--graph", fixture_path("tri.g"),
            "--couplings", fixture_path("v.c"), "--seed", "3"]
    first = invoke(argv)
    second = invoke(argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.encode() == second.stdout.encode()


def test_missing_required_input():
    result = invoke(["jones", "--form", "t"])
    assert result.returncode == 2
    assert "required" in result.stderr


def test_missing_suite_input():
    result = invoke(["identities", "--suite", "potts",
                     "--graph", fixture_path("tri.g")])
    assert result.returncode == 2
    assert result.stderr.startswith("error: ")


def test_colored_jones_routes_agree(capsys):
    outs = []
    for route in ("main", "catmm", "ma2"):
        code, _ = run(["colored-jones", "--arc", fixture_path("trefoil.arc"),
                       "--n", "1", "--route", route])
        assert code == 0
        out = capsys.readouterr().out
        outs.append([line for line in out.splitlines()
                     if line.startswith("result:")])
    assert outs[0] == outs[1] == outs[2]
