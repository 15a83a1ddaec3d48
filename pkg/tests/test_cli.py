import csv
import io
import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import agree_to, exact_riemann
from volkenborn.cli import run
from volkenborn.padic import PadicNumber

GOLDEN = Path(__file__).parent / "golden"
MAXIMAL_ARGS = ["maximal", "-p", "3", "-q", "1+3^4", "-w", "1+3^4", "-f", "poly:0,1", "--a", "1", "--n-range", "0,2"]


def call(*argv):
    out, code = run(list(argv))
    return out, code


def test_integrate_json():
    out, code = call("integrate", "-p", "3", "-q", "4", "-f", "poly:1")
    assert code == 0
    d = json.loads(out)
    assert d["status"] == "Exact" and d["residual"] == "0"
    assert PadicNumber.from_json(d["value"]) == 1


def test_integrate_max_level_exit_code():
    out, code = call("integrate", "-p", "3", "-q", "4", "-f", "poly:0,1", "--tol-exp", "20", "--m-max", "4")
    assert code == 2 and json.loads(out)["status"] == "MaxLevel"


def test_integrate_csv_columns():
    out, code = call("integrate", "-p", "3", "-q", "4", "-f", "poly:0,1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "value_digest", "residual_exp"]
    assert rows[1][2] == ""
    exps = [int(r[2]) for r in rows[2:]]
    assert exps == sorted(exps) and exps[-1] >= 6
    assert code == 0


def test_measure_matches_exact_sum():
    out, code = call("measure", "-p", "3", "-q", "10", "-w", "10", "--ball", "1,1", "--level", "6")
    assert code == 0
    v = PadicNumber.from_json(json.loads(out)["value"])
    want = exact_riemann(lambda x: 1, 10, 6, 3, weight=10, a=1, n=1)
    assert agree_to(v, want, 3) >= 31


def test_maximal_golden():
    out, code = call(*MAXIMAL_ARGS)
    assert code == 0
    got = json.loads(out)
    assert got == json.loads((GOLDEN / "maximal_p3.json").read_text())


def test_maximal_golden_level_zero_oracle():
    # at n = 0 with omega = q the denominator is 2/(1+q)
    got = json.loads((GOLDEN / "maximal_p3.json").read_text())
    lvl = next(e for e in got["levels"] if e["n"] == 0)
    q = Fraction(82)
    want = exact_riemann(lambda x: x, q, 6, 3, weight=1) * (1 + q) / 2
    assert agree_to(PadicNumber.from_json(lvl["value"]), want, 3) >= 30


def test_maximal_deterministic():
    assert call(*MAXIMAL_ARGS) == call(*MAXIMAL_ARGS)


def test_maximal_depth_error():
    out, code = call("maximal", "-p", "3", "-q", "1+3^2", "--n-range", "0,2")
    d = json.loads(out)
    assert code == 1 and d["error"] == "DomainError"
    assert "v_p(q−1) ≥ n+1" in d["message"]


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["verify", "bogus"], "UnknownSuite"),
        (["integrate", "-f", "poly:"], "ParseError"),
        (["integrate", "-p", "4"], "ValueError"),
        (["integrate", "-q", "2"], "DomainError"),
        (["integrate", "--nope"], "UsageError"),
        (["measure", "--ball", "5,1"], "DomainError"),
    ],
)
def test_error_json(argv, kind):
    out, code = call(*argv)
    d = json.loads(out)
    assert code == 1 and d["error"] == kind and d["message"]


def test_verify_exit_and_determinism():
    a = call("verify", "prop1", "-p", "3", "--cases", "3", "--seed", "7")
    b = call("verify", "prop1", "-p", "3", "--cases", "3", "--seed", "7")
    assert a == b and a[1] == 0
    assert json.loads(a[0])["cases"] == 3


def test_verify_csv():
    out, code = call("verify", "dist", "-p", "5", "--cases", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "identity" and rows[1][0] == "dist" and code == 0


def test_digits_env(monkeypatch):
    monkeypatch.setenv("VOLKENBORN_DIGITS", "12")
    out, _ = call("integrate", "-p", "3", "-q", "4", "-f", "poly:1")
    assert PadicNumber.from_json(json.loads(out)["value"]).prec <= 12 + 8


def test_module_entry_point_utf8():
    env = dict(os.environ, PYTHONIOENCODING="ascii")
    r = subprocess.run(
        [sys.executable, "-m", "volkenborn", "maximal", "-q", "1+3^2", "--n-range", "0,2"],
        capture_output=True,
        env=env,
    )
    assert r.returncode == 1
    assert "≥" in r.stdout.decode("utf-8")
