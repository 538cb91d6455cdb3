import json
import subprocess
import sys

import pytest

from thomplink.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_element_mul_identity(capsys):
    code, out, _ = run(capsys, "element", "mul", "x0", "x0^-1")
    assert code == 0
    assert "leaves: 1" in out
    assert "(identity)" in out


def test_element_word_and_json(capsys):
    code, out, _ = run(capsys, "element", "word", "x0 x0 x0 x2^-1 x0^-1 x0^-1 x0^-1")
    assert code == 0
    assert out.strip() == "x0^2 x1^-1 x0^-2"
    code, out, _ = run(capsys, "element", "parse", "x1", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["leaves"] == 4


def test_element_accepts_pair_json(capsys):
    code, out, _ = run(capsys, "element", "reduce", '{"source": "100", "target": "100"}')
    assert code == 0
    assert "leaves: 1" in out


def test_conjugate_verdicts(capsys):
    code, out, _ = run(capsys, "conjugate", "x0", "x1")
    assert code == 0 and out.strip() == "not conjugate"
    code, out, _ = run(capsys, "conjugate", "x1", "x2")
    assert code == 0 and out.strip() == "conjugate"


def test_link_formats(capsys):
    code, out, _ = run(capsys, "link", "x0", "--format", "pd")
    assert code == 0
    assert out.strip().splitlines()[-1] == "O 0"
    code, out, _ = run(capsys, "link", "x0", "--simplify", "--format", "json")
    data = json.loads(out)
    assert data["crossings"] == [] and data["free_loops"] == 1
    code, out, _ = run(capsys, "link", "x0", "--format", "svg")
    assert out.startswith("<svg")
    code, out, _ = run(capsys, "link", "x0", "--route", "tait", "--format", "svg")
    assert out.startswith("<svg")


def test_bracket_command(capsys):
    code, out, _ = run(capsys, "bracket", "x0")
    assert code == 0 and out.strip() == "1*A^0"
    code, out, _ = run(capsys, "bracket", "x0", "--route", "tait", "--format", "json")
    assert json.loads(out)["bracket"] == "1*A^0"


def test_experiments(capsys):
    code, out, _ = run(capsys, "experiment", "thm1", "--n", "3")
    assert code == 0
    assert "brackets all equivalent to h1: yes" in out
    assert "annular codes pairwise distinct: yes" in out
    code, out, _ = run(capsys, "experiment", "thm2", "--gen", "x0", "--n", "2")
    assert code == 0
    assert "n=2: conjugate to x0: yes; link matches C(1,1,1,1): yes" in out
    code, out, _ = run(capsys, "experiment", "thm2", "--gen", "x1", "--n", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    assert all(r["conjugate_to_generator"] and r["link_matches"] for r in rows)


def test_oracle_two_bridge(capsys):
    code, out, _ = run(capsys, "oracle", "two-bridge", "1,1", "--format", "json")
    data = json.loads(out)
    assert data["fraction"] == [2, 1]
    assert data["components"] == 2
    assert data["bracket"] == "-1*A^4 + -1*A^-4"


def test_domain_errors_exit_1(capsys):
    assert run(capsys, "element", "parse", "xq")[0] == 1
    assert run(capsys, "bracket", "x0 x1 x2 x3 x4 x5 x6 x7 x8 x9 x10 x11 x12", "--no-simplify", "--max-crossings", "8")[0] == 1
    assert run(capsys, "oracle", "two-bridge", "0,1")[0] == 1


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["nosuchverb"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["element", "mul", "x0"])
    assert exc.value.code == 2


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "thomplink", "experiment", "thm2", "--gen", "x0", "--n", "2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, cwd="/", check=True)
    b = subprocess.run(cmd, capture_output=True, cwd="/", check=True)
    assert a.stdout == b.stdout and a.stdout
