import random

import pytest

from lemodules.cyclotomic import CyclotomicMultiset
from lemodules.scenario import LinkModel, ScenarioFlag, a1_cone_scenario, build_scenario, smooth_line_scenario
from lemodules.traces import (
    TraceVector,
    alternating_trace_sum,
    bounds_report,
    check_lci_signs,
    check_telescoping,
    lambda_lower_bounds,
    lefschetz_number,
    lm_traces,
    smooth_exclusions,
    smooth_traces,
    telescoping_summary,
    traces_mod_p,
)


@pytest.mark.parametrize("n, expected", [(3, (0, -1)), (4, (0, 1))])
def test_smooth_line_traces(n, expected):
    assert tuple(lm_traces(smooth_line_scenario(n))) == expected


@pytest.mark.parametrize("n, expected", [(3, (1, 2, 2)), (4, (-1, -2, -2))])
def test_a1_cone_traces(n, expected):
    assert tuple(lm_traces(a1_cone_scenario(n))) == expected


def test_branch_curve_traces():
    scenario = build_scenario(2, 1, LinkModel.branch_curve(3))
    # chi(L^0) = 3 points, chi(L^1) = 1
    assert tuple(lm_traces(scenario)) == (2, 3)


def test_telescoping_random_scenarios():
    rng = random.Random(0)
    for _ in range(1000):
        s = rng.randint(0, 5)
        n = rng.randint(s, s + 4)
        chis = [rng.randint(-20, 20) for _ in range(s)] + [1]
        scenario = build_scenario(n, s, LinkModel.explicit(chis))
        traces = lm_traces(scenario)
        assert alternating_trace_sum(traces, n) == -1
        assert check_telescoping(traces, n)
        assert lefschetz_number(traces, n) == (-1) ** (n + 1)


def test_telescoping_detects_inconsistent_traces():
    assert not check_telescoping(TraceVector((1, 1)), 3)


@pytest.mark.parametrize("n, s", [(s + k, s) for s in range(0, 5) for k in range(0, 3)])
def test_smooth_closed_form(n, s):
    scenario = build_scenario(n, s, LinkModel.smooth())
    assert lm_traces(scenario) == smooth_traces(n, s)
    assert check_lci_signs(lm_traces(scenario), n, s)


def test_lci_signs_can_fail():
    # n - s - 1 even: every trace must be >= 0
    assert not check_lci_signs(TraceVector((-1, 0, 1)), 3, 2)


def test_lower_bounds_a1_cone():
    report = lambda_lower_bounds(lm_traces(a1_cone_scenario(3)))
    assert report.lower_bounds == (1, 2, 2)


def test_bounds_report_extremal_level():
    report = bounds_report(a1_cone_scenario(3, normal_milnor=1, lambda1=2))
    level = report.levels[1]
    assert level.extremal
    assert level.forced_charpoly == CyclotomicMultiset.from_dict({1: 2})
    assert level.feasible
    assert report.levels[0].le_number is None
    assert report.violations == []


def test_bounds_report_negative_extremal_level():
    report = bounds_report(a1_cone_scenario(4, normal_milnor=1, lambda1=2))
    assert report.levels[2].forced_charpoly == CyclotomicMultiset.from_dict({2: 2})


def test_bounds_report_flags_trace_zero_degree_one():
    scenario = smooth_line_scenario(3, 1).with_le_number(0, 1)
    report = bounds_report(scenario)
    assert [level.level for level in report.violations] == [0]
    assert report.as_dict()["levels"][0]["feasible"] is False


def test_smooth_exclusions():
    assert smooth_exclusions(build_scenario(3, 2, LinkModel.smooth())) == [0, 1]
    assert smooth_exclusions(build_scenario(3, 0, LinkModel.smooth())) == []


def test_traces_mod_p():
    assert traces_mod_p(TraceVector((0, -1, 5)), 2) == (0, 1, 1)
    assert traces_mod_p(TraceVector((0, -1, 5)), 3) == (0, 2, 2)


def test_telescoping_summary():
    scenario = build_scenario(3, 1, LinkModel.smooth(), flags=[ScenarioFlag.SIGMA_LCI])
    summary = telescoping_summary(scenario)
    assert summary == {"alternating_sum": -1, "holds": True, "lefschetz_number": 1, "lci_signs": True}
    assert "lci_signs" not in telescoping_summary(smooth_line_scenario(3))
