import io
import json
import math
import subprocess
import sys

import pytest

from symspace.cli import run


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _json(*argv):
    code, out, err = _run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_info():
    data = _json("info", "--space", "sl:3")
    assert (data["dim_g"], data["dim_M"], data["rank"]) == (8, 5, 2)
    assert data["metric"] == "killing"


def test_sl2_invariants():
    data = _json("invariants", "--space", "sl:2")
    assert data["isoperimetric"] == data["entropy"] == 0.707106781187
    assert data["lambda0"] == 0.125
    assert data["max_sectional_curvature"] == -0.5


def test_rank_two_has_no_max_curvature_field_value():
    assert _json("invariants", "--space", "sl:3")["max_sectional_curvature"] is None


def test_normalized_hyperbolic_four_space():
    data = _json("invariants", "--space", "hyperbolic:4", "--normalize-curvature", "-1")
    assert data["metric"] == "curvature-normalized"
    assert data["isoperimetric"] == pytest.approx(3.0, abs=1e-9)
    assert data["lambda0"] == pytest.approx(2.25, abs=1e-9)


@pytest.mark.parametrize("argv", [
    ("invariants", "--space", "sl:3", "--normalize-curvature", "-1"),
    ("invariants", "--space", "sl:2", "--normalize-curvature", "1"),
    ("info", "--space", "so:4,0"),
    ("info", "--space", "g2:1"),
    ("info",),
    ("verify", "busemann", "--space", "so:3,1"),
    ("verify", "entropy", "--space", "sl:2", "--r1", "3"),
    ("verify", "entropy", "--space", "sl:2", "--samples", "500"),
    ("verify", "cheeger", "--space", "sl:2", "--tol", "-1"),
    ("verify", "nonsense", "--space", "sl:2"),
    ("info", "--space", "sl:2", "--seed", "-1"),
])
def test_usage_errors_exit_2(argv):
    code, out, _ = _run(*argv)
    assert code == 2 and out == ""


def test_help_exits_0():
    assert _run("--help")[0] == 0


def test_complex_hyperbolic_roots():
    data = _json("roots", "--space", "su:2,1")
    assert data["positive_multiplicities"] == {"α": 2, "2α": 1}
    assert data["norm_H"] == pytest.approx(2 / math.sqrt(3), abs=1e-11)


def test_roots_table():
    code, out, _ = _run("roots", "--space", "sl:3")
    assert code == 0 and "|H| = 1.15470053838" in out


def test_verify_cheeger_sl3():
    data = _json("verify", "cheeger", "--space", "sl:3")
    lam = next(c for c in data["checks"] if c["name"] == "cheeger.lambda0_vs_literature")
    assert lam["measured"] == pytest.approx(1 / 3, abs=1e-12)
    assert all(c["passed"] for c in data["checks"])
    assert list(data) == ["space", "seed", "checks", "wall_time_ms", "metric"]


def test_verify_table_exit_0():
    code, out, _ = _run("verify", "sup", "--space", "sl:2")
    assert code == 0
    assert "FAIL" not in out and "checks passed" in out


def test_zero_tolerance_turns_into_failure():
    # floating-point residuals are never exactly zero, so tol 0 must fail some check
    code, out, _ = _run("verify", "curvature", "--space", "sl:3", "--tol", "0", "--json")
    assert code == 1
    assert any(not c["passed"] for c in json.loads(out)["checks"])


def test_verify_is_deterministic():
    def strip(text):
        data = json.loads(text)
        data.pop("wall_time_ms")
        return data
    a = _run("verify", "curvature", "--space", "su:2,1", "--seed", "5", "--json")[1]
    b = _run("verify", "curvature", "--space", "su:2,1", "--seed", "5", "--json")[1]
    assert strip(a) == strip(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symspace", "info", "--space", "sl:2", "--json"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim_g"] == 3
    bad = subprocess.run([sys.executable, "-m", "symspace", "info", "--space", "so:3,0"],
                         capture_output=True, text=True, timeout=120)
    assert bad.returncode == 2 and "compact" in bad.stderr
