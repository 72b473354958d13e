import json
import subprocess
import sys

import pytest

from bergeknots.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", "--max-p", "20")
    assert code == 0
    assert out == "p,sign,m,n,g\n7,+,1,2,1\n11,-,1,2,3\n13,+,1,3,3\n19,+,2,3,5\n19,-,1,3,6\n"


def test_table_empty_and_formats(capsys):
    assert run(capsys, "table", "--max-p", "2")[1] == "p,sign,m,n,g\n"
    code, out, _ = run(capsys, "table", "--max-p", "100", "--format", "json")
    assert code == 0 and json.loads(out)[0] == {"p": 7, "sign": "+", "m": 1, "n": 2, "g": 1}
    assert run(capsys, "table", "--max-p", "20", "--format", "md")[1].startswith("| p |")


def test_table_is_deterministic(capsys):
    first = run(capsys, "table", "--max-p", "500")[1]
    second = run(capsys, "table", "--max-p", "500")[1]
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--max-p", "1"],
        ["table", "--max-p", "x"],
        ["table", "--max-p", "20", "--format", "xml"],
        ["table"],
        ["identify", "--p", "19"],
        ["identify", "--p", "19", "--g", "5", "--q", "7"],
        ["identify", "--p", "19", "--q", "19"],
        ["identify", "--p", "1", "--g", "0"],
        ["identify", "--p", "19", "--g", "-1"],
        ["verify", "--max-p", "0"],
        ["verify", "--max-p", "20", "--jobs", "0"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_identify_by_genus(capsys):
    code, out, _ = run(capsys, "identify", "--p", "19", "--g", "5")
    assert code == 0
    assert out.startswith("(+, 2, 3)") and "hyperbolic" in out and "not" not in out


def test_identify_by_lens_torus_knot(capsys):
    code, out, _ = run(capsys, "identify", "--p", "19", "--q", "13")
    assert code == 0
    assert out.startswith("(-, 1, 3)")
    assert "torus knot T(4,5)" in out and "not hyperbolic" in out


def test_identify_none(capsys):
    code, out, _ = run(capsys, "identify", "--p", "23", "--g", "5")
    assert (code, out) == (1, "none\n")
    assert run(capsys, "identify", "--p", "23", "--q", "7")[:2] == (1, "none\n")


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-p", "6")
    assert code == 0 and "nothing to verify" in out
    code, out, _ = run(capsys, "verify", "--max-p", "100")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("(+, 2, 3) p=19 [torsion] ok")
    assert "T(4,5)" in first and "T(2,9)" in first
    assert out.splitlines()[-1].startswith("verified")


def test_verify_parallel_output_identical(capsys):
    serial = run(capsys, "verify", "--max-p", "400")[1]
    parallel = run(capsys, "verify", "--max-p", "400", "--jobs", "2")[1]
    assert serial == parallel


def test_verify_reports_failure(capsys, monkeypatch):
    import bergeknots.cli as cli

    real = cli._verify_one

    def broken(par):
        ok, lines = real(par)
        return (False, lines) if (par.m, par.n) == (2, 3) else (ok, lines)

    monkeypatch.setattr(cli, "_verify_one", broken)
    code, out, err = run(capsys, "verify", "--max-p", "100")
    assert code == 1
    assert "FAILED" in out and "(+, 2, 3)" in out.split("FAILED")[1]
    assert "verification failed" in err


def test_genus_collisions_cli(capsys):
    code, out, _ = run(capsys, "genus-collisions", "--max-p", "50")
    assert (code, out) == (0, "group,p,sign,m,n,g\n")
    out = run(capsys, "genus-collisions", "--max-p", "100")[1]
    assert out.splitlines()[1:] == ["1,89,-,1,8,36", "1,91,+,1,9,36", "1,93,+,4,7,36"]


def test_alexander_collisions_cli(capsys):
    code, out, _ = run(capsys, "alexander-collisions", "--max-p", "20")
    assert code == 0
    assert out.splitlines()[0] == "parameters: 1; pairs compared: 0; collisions: 0"
    out = run(capsys, "alexander-collisions", "--max-p", "6")[1]
    assert "nothing to compare" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bergeknots", "identify", "--p", "23", "--g", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and proc.stdout == "none\n"
    proc = subprocess.run([sys.executable, "-m", "bergeknots", "table"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""
