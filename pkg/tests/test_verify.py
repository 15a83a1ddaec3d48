import json
import random

import pytest

from conftest import vp
from volkenborn.verify import SUITES, UnknownSuite, rand_one_unit, run_suite

PASSING = ["prop1", "thm1-1", "thm1-2", "thm2-1", "dist", "explog"]


@pytest.mark.parametrize("name", PASSING)
@pytest.mark.parametrize("p", [3, 5])
def test_small_runs_pass(name, p):
    rep = run_suite(name, p, cases=4, seed=1)
    assert rep.ok, rep.failures
    assert rep.cases == 4 and rep.identity == name
    assert rep.max_residual_exp is not None


def test_report_json_is_stable():
    a = json.dumps(run_suite("thm1-1", 3, 5, seed=3).to_json(), sort_keys=True)
    b = json.dumps(run_suite("thm1-1", 3, 5, seed=3).to_json(), sort_keys=True)
    assert a == b


def test_bound_failures_carry_a_report():
    rep = run_suite("thm2-2", 3, cases=10, seed=0)
    for fl in rep.failures:
        r = fl["params"]["report"]
        assert r["holds"] is False
        assert set(r) >= {"left", "right", "K", "f_norm", "weight_norm", "argmax_point"}


def test_level_override():
    assert run_suite("thm1-2", 3, 2, m=5).m == 5


def test_unknown():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_suite_table():
    assert set(SUITES) == set(PASSING) | {"thm2-2"}


def test_one_unit_sampler():
    rng = random.Random(0)
    for _ in range(200):
        x = rand_one_unit(rng, 5, 3)
        assert 3 <= vp(x - 1, 5) <= 5
