import io
import json
import subprocess
import sys

import pytest

from newtmod.bundled import BUNDLED, bundled_algebra
from newtmod.cli import CommandSpec, run_command
from newtmod.io import module_from_json, polytope_from_json, polytope_to_json, module_to_json

from conftest import DATA, GOLDEN

P1 = str(DATA / "p1_pi_a2.json")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def dims_arg(name):
    return ",".join(map(str, BUNDLED[name]))


@pytest.mark.parametrize("kind", ["verify", "pairs"])
def test_golden_reports(bundled_name, kind):
    argv = ["verify", bundled_name] if kind == "verify" else ["enumerate", bundled_name, "--kind", "pairs"]
    code, out, _ = run(*argv, "--max-dim", dims_arg(bundled_name))
    assert code == 0
    assert out == (GOLDEN / f"{bundled_name}_{kind}.json").read_text()


def test_verify_report_all_pass():
    code, out, _ = run("verify", "pi_a2.json", "--max-dim", "2,2", "--suite", "all")
    assert code == 0
    records = json.loads(out)
    assert records and all(r["status"] == "pass" for r in records)
    assert all(set(r) == {"check", "ref", "status", "witnesses"} for r in records)


def test_newton_command():
    code, out, _ = run("module", "newton", "pi_a2.json", P1)
    assert code == 0
    assert json.loads(out) == {"ambient": 2, "extremes": [[0, 0], [1, 0], [1, 1]]}
    assert polytope_to_json(polytope_from_json(out)) == out


def test_tau_command_round_trips(tmp_path):
    alg = bundled_algebra("pi_a2")
    s1 = tmp_path / "s1.json"
    s1.write_text('{"dims": [1, 0], "arrows": {"a": [], "b": []}}')
    target = tmp_path / "tau.json"
    code, out, _ = run("module", "tau", "pi_a2", str(s1), "--output", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    m = module_from_json(text, alg)
    assert m.dims == (0, 1)
    assert module_to_json(m) == text


def test_info_command():
    code, out, _ = run("module", "info", "pi_a2", P1)
    assert code == 0
    info = json.loads(out)
    assert info == {
        "brick": True,
        "delta": [1, 0],
        "dims": [1, 1],
        "indecomposable": True,
        "tau_dims": [0, 0],
        "tau_rigid": True,
    }


def test_algebra_check():
    code, out, _ = run("algebra", "check", "pi_a2")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 4 and data["basis"] == ["e1", "e2", "a", "b"]


def test_table_format():
    code, out, _ = run("verify", "a2", "--max-dim", "1,1", "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["check", "ref", "status", "witnesses"]
    assert all(" pass " in line for line in lines[1:])
    for argv in (["algebra", "check", "a2"], ["module", "info", "pi_a2", P1], ["enumerate", "a2", "--max-dim", "1,1"]):
        assert run(*argv, "--format", "table")[0] == 0


@pytest.mark.parametrize("kind", ["indec", "bricks", "taurigid", "pairs"])
def test_enumerate_kinds(kind):
    code, out, _ = run("enumerate", "loop_x2", "--max-dim", "2", "--kind", kind)
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == {"indec": 2, "bricks": 1, "taurigid": 1, "pairs": 2}[kind]


def test_json_output_is_byte_stable():
    a = run("verify", "a3", "--max-dim", "1,1,1")[1]
    b = run("verify", "a3", "--max-dim", "1,1,1", "--workers", "2")[1]
    assert a == b


@pytest.mark.parametrize(
    "argv, pattern",
    [
        (["bogus"], "invalid choice"),
        (["verify", "a2"], "--max-dim"),
        (["verify", "a2", "--max-dim", "1,1", "--frobnicate"], "unrecognized"),
        (["verify", "a2", "--max-dim", "1,x"], "comma-separated"),
        (["verify", "a2", "--max-dim", "1,-1"], "non-negative"),
        (["verify", "a2", "--max-dim", "1,1,1"], "needs 2 entries"),
        (["verify", "a2", "--max-dim", "1,1", "--format", "xml"], "invalid choice"),
        (["algebra", "check", str(DATA / "malformed.json")], "line 2 column"),
        (["algebra", "check", "no_such_file.json"], "no such"),
        (["module", "info", "a2", str(DATA / "malformed.json")], "line 2 column"),
        (["module", "info", "a2", P1], r"\$\.arrows\.b"),
    ],
)
def test_input_errors_exit_2(argv, pattern):
    import re

    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert re.search(pattern, err), err


def test_relation_violation_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dims": [1, 1], "arrows": {"a": [[1]], "b": [[1]]}}')
    code, _, err = run("module", "info", "pi_a2", str(bad))
    assert code == 2 and "relation" in err


def test_guard_exit_3():
    code, _, err = run("algebra", "check", str(DATA / "free_loop.json"))
    assert code == 3 and "NotFiniteDimensional" in err
    code, _, err = run("enumerate", "loop_x2", "--max-dim", "13")
    assert code == 3 and "SearchSpaceTooLarge" in err


def test_guard_exit_3_on_large_module(tmp_path):
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"dims": [13, 0], "arrows": {"a": [], "b": []}}))
    code, _, err = run("module", "newton", "pi_a2", str(big))
    assert code == 3 and "TooLarge" in err


def test_help_lists_every_flag():
    code, out, _ = run("--help")
    assert code == 0
    for argv in (["verify", "--help"], ["enumerate", "--help"]):
        proc = subprocess.run([sys.executable, "-m", "newtmod", *argv], capture_output=True, text=True)
        assert proc.returncode == 0
        for flag in ("--format", "--output", "--max-dim", "--workers"):
            assert flag in proc.stdout
    assert "--suite" in subprocess.run([sys.executable, "-m", "newtmod", "verify", "--help"], capture_output=True, text=True).stdout
    assert "--kind" in subprocess.run([sys.executable, "-m", "newtmod", "enumerate", "--help"], capture_output=True, text=True).stdout


def test_subprocess_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "newtmod", "module", "newton", "pi_a2.json", P1], capture_output=True, text=True)
    assert ok.returncode == 0 and json.loads(ok.stdout)["extremes"] == [[0, 0], [1, 0], [1, 1]]
    bad = subprocess.run([sys.executable, "-m", "newtmod", "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 2 and "usage" in bad.stderr
    guard = subprocess.run(
        [sys.executable, "-m", "newtmod", "algebra", "check", str(DATA / "free_loop.json")], capture_output=True, text=True
    )
    assert guard.returncode == 3


def test_verification_failure_exit_1(monkeypatch):
    from newtmod import enumerate as en

    monkeypatch.setattr(en, "semistable_membership", lambda delta, x: True)
    code, out, _ = run("verify", "pi_a2", "--max-dim", "2,2", "--suite", "semistable")
    assert code == 1
    assert any(r["status"] == "fail" for r in json.loads(out))


def test_command_spec_validation():
    with pytest.raises(ValueError):
        CommandSpec("verify", "a2", format="xml")
    with pytest.raises(ValueError):
        CommandSpec("verify", "a2", max_dim=(1, -1))
