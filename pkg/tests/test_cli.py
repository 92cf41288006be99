import csv
import io
import subprocess
import sys
from fractions import Fraction

import pytest

from cflp import FracPoly, cflp
from cflp.cli import main

from conftest import PROBLEMS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# ---- eval ------------------------------------------------------------------------


def test_eval(capsys):
    assert run(capsys, "eval", 2, 1, 1) == (0, "1\n", "")
    assert run(capsys, "eval", 2, 1, 0.5)[1] == "-0.125\n"


def test_eval_shifted_root(capsys):
    code, out, _ = run(capsys, "eval", "--shifted", 1, "1/2", 0.25)
    assert code == 0 and float(out) == 0.0 and out == "0\n"


def test_eval_rejects_bad_alpha(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "2", "3/2", "0.5"])
    assert exc.value.code == 2
    assert "alpha" in capsys.readouterr().err


# ---- table -----------------------------------------------------------------------


def read_table(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "exponent", "coeff_num", "coeff_den"]
    return [tuple(r) for r in rows[1:]]


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", 1, "1/3")
    assert code == 0
    assert read_table(out) == [("0", "0", "1", "1"), ("1", "1/3", "1", "1")]


def test_table_rows_for_two_and_three(capsys):
    rows = read_table(run(capsys, "table", 3, "1/2")[1])
    assert ("2", "1", "3", "2") in rows and ("2", "0", "-1", "2") in rows
    assert ("3", "3/2", "5", "2") in rows and ("3", "1/2", "-3", "2") in rows


def test_table_roundtrip_and_file(tmp_path, capsys):
    out = tmp_path / "t.csv"
    a = Fraction(2, 3)
    assert run(capsys, "table", 9, "2/3", "-o", out)[0] == 0
    text = out.read_bytes().decode()
    assert "\r" not in text
    polys = {}
    for n, e, num, den in read_table(text):
        polys.setdefault(int(n), []).append((Fraction(e), Fraction(int(num), int(den))))
    for n in range(10):
        assert FracPoly(polys[n]) == cflp(n, a)


def test_table_limit(capsys):
    assert run(capsys, "table", 65, 1)[0] == 2


# ---- roots -----------------------------------------------------------------------


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", 2, 1)
    assert code == 0
    lo, hi = map(float, out.split())
    assert lo == pytest.approx(0.2113248654, abs=1e-10) and hi == pytest.approx(0.7886751346, abs=1e-10)
    assert run(capsys, "roots", 1, "1/2")[1] == "0.25\n"


def test_roots_bad_k(capsys):
    assert run(capsys, "roots", 0, 1)[0] == 2


def test_roots_unreachable_tolerance(capsys):
    code, _, err = run(capsys, "roots", 4, 1, "--tol", "1e-300")
    assert code == 3 and "Newton" in err


# ---- solve -----------------------------------------------------------------------


def sections(text):
    out, name = {}, None
    for line in text.splitlines():
        if line.startswith("# "):
            name = line[2:]
            out[name] = []
        elif line and name:
            out[name].append(line.split(","))
    return out


def test_solve_bagley_torvik(capsys):
    code, out, _ = run(capsys, "solve", PROBLEMS / "bagley_torvik.problem")
    assert code == 0
    s = sections(out)
    coeffs = [float(r[1]) for r in s["coefficients"][1:]]
    assert coeffs == pytest.approx([1.5, 0.5, 0.0], abs=1e-9)
    assert s["collocation_points"][1] == ["1", "0.5"]
    assert s["diagnostics"][1][0] == "matrix_condition_estimate"


def test_solve_fractional_alpha(capsys):
    s = sections(run(capsys, "solve", PROBLEMS / "fractional_alpha.problem")[1])
    assert [float(r[1]) for r in s["coefficients"][1:]] == pytest.approx([1, 1], abs=1e-12)
    assert s["solution"][1:] == [["1/2", "2"]]


def test_solve_variable_coefficients(capsys):
    s = sections(run(capsys, "solve", PROBLEMS / "variable_coeff.problem")[1])
    assert [float(r[1]) for r in s["coefficients"][1:]] == pytest.approx([1 / 3, 1 / 2, 1 / 6], abs=1e-9)
    assert max(abs(float(r[1])) for r in s["residuals"][1:]) < 1e-9


def test_solve_output_file_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run(capsys, "solve", PROBLEMS / "variable_coeff.problem", "-o", path)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_solve_parse_error_names_alpha(tmp_path, capsys):
    bad = tmp_path / "bad.problem"
    bad.write_text((PROBLEMS / "bagley_torvik.problem").read_text().replace('alpha: "1"', 'alpha: "2/0"'))
    code, _, err = run(capsys, "solve", bad)
    assert code == 2 and "alpha" in err


def test_solve_missing_file(tmp_path, capsys):
    assert run(capsys, "solve", tmp_path / "nope.problem")[0] == 2


def test_solve_solver_error(tmp_path, capsys):
    bad = tmp_path / "fic.problem"
    bad.write_text(
        'alpha: "1/2"\ngamma: "2"\nrhs: exp\ninitial_conditions: [0, 0]\nm: 3\n'
    )
    code, _, err = run(capsys, "solve", bad)
    assert code == 3 and "FractionalIC" in err


# ---- verify ----------------------------------------------------------------------


@pytest.mark.parametrize("alpha", ["1", "1/3"])
def test_verify_all_pass(capsys, alpha):
    code, out, _ = run(capsys, "verify", 5, "--alpha", alpha)
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith(" 0 failed")
    if alpha == "1/3":
        assert any(line.startswith("PASS parity") for line in lines)


def test_verify_degree_zero(capsys):
    code, out, _ = run(capsys, "verify", 0)
    assert code == 0 and "FAIL" not in out


def test_verify_limit(capsys):
    assert run(capsys, "verify", 21)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cflp", "eval", "3", "1", "0.5"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "-0.4375\n"
