import random

import pytest

from lemodules.cases import enumerate_cases
from lemodules.modp import (
    TorsionProfile,
    forced_modp_ranks,
    modp_traces,
    random_complex,
    rank_mod_p,
    reduce_and_rank,
    torsion_bounds,
    torsion_upper_bounds,
    uct_dimension,
)
from lemodules.realization import ComplexRealization, int_matrix, rational_rank, realize, verify
from lemodules.scenario import LinkModel, ScenarioFlag, a1_cone_scenario, build_scenario, smooth_line_scenario
from lemodules.traces import lm_traces, traces_mod_p


PRIMES = [2, 3, 5, 7]


def test_uct_dimension():
    assert uct_dimension({3: 3}, TorsionProfile.from_dict(2, {3: 1}), 3) == 4
    assert uct_dimension({2: 0, 3: 5}, TorsionProfile.from_dict(3, {}), 3) == 5
    assert uct_dimension({2: 0}, TorsionProfile.from_dict(2, {2: 0, 3: 2}), 2) == 2


def test_torsion_profile_rejects_negative_counts():
    with pytest.raises(ValueError):
        TorsionProfile.from_dict(2, {1: -1})


def test_torsion_bounds_two_levels():
    inequalities = torsion_bounds([3, 1], {3: 1, 2: 0}, 2, 3)
    assert [i.render(3) for i in inequalities] == ["t_n <= 2", "t_(n-1) + t_n <= 1"]
    assert [i.degrees for i in inequalities] == [(3,), (2, 3)]
    assert torsion_upper_bounds(inequalities) == {2: 1, 3: 1}


def test_torsion_bounds_isolated():
    inequalities = torsion_bounds([7], {2: 4}, 5, 2)
    assert len(inequalities) == 1
    assert inequalities[0].bound == 3
    assert inequalities[0].render() == "t_2 <= 3"


def test_torsion_bounds_swing_case():
    # lambda^0 = 0 and b_(n-1) = 1: t_n = 0 and t_(n-1) <= lambda^1 - 1
    inequalities = torsion_bounds([0, 4], {2: 1, 3: 0}, 3, 3)
    assert torsion_upper_bounds(inequalities) == {2: 3, 3: 0}


def test_torsion_bounds_need_concrete_numbers():
    with pytest.raises(ValueError):
        torsion_bounds([None, 2], {}, 2, 3)
    with pytest.raises(ValueError):
        torsion_bounds([1], {}, 4, 3)


@pytest.mark.parametrize("p, expected", [(2, {1: 1, 0: 1}), (3, {1: 0, 0: 0})])
def test_reduction_of_multiplication_by_two(p, expected):
    r = ComplexRealization(1, (1, 1), (int_matrix(1, 1, [[1]]),) * 2, (int_matrix(1, 1, [[2]]),))
    assert reduce_and_rank(r, p) == expected
    report = verify(r)
    assert report.betti == {0: 0, 1: 0}
    torsion = TorsionProfile.from_report(report, p)
    assert torsion.t(1) == (1 if p == 2 else 0)


def test_torsion_free_witnesses():
    scenario = a1_cone_scenario(3, normal_milnor=1, lambda1=3)
    for case in enumerate_cases(scenario):
        r = realize(case)
        betti = verify(r, scenario, case).betti
        for p in PRIMES:
            assert reduce_and_rank(r, p) == betti
            assert modp_traces(r, p) == traces_mod_p(lm_traces(scenario), p)


def test_modp_traces_of_smooth_line():
    scenario = smooth_line_scenario(4, 2)
    r = realize(enumerate_cases(scenario)[0])
    assert modp_traces(r, 2) == (0, 1)
    assert modp_traces(r, 3) == (0, 1)


def test_random_complexes_satisfy_uct():
    rng = random.Random(11)
    for _ in range(200):
        ranks = [rng.randint(0, 4) for _ in range(rng.randint(2, 4))]
        r = random_complex(rng, ranks)
        report = verify(r)
        assert report.passed, report.failures
        for p in PRIMES:
            torsion = TorsionProfile.from_report(report, p)
            dimensions = reduce_and_rank(r, p)
            assert dimensions == {k: uct_dimension(report.betti, torsion, k) for k in dimensions}
            for j in range(1, r.s + 1):
                assert rank_mod_p(r.differential(j), p) <= rational_rank(r.differential(j))
            inequalities = torsion_bounds(r.ranks, report.betti, p, r.n)
            for inequality in inequalities:
                total = sum(torsion.t(k) for k in inequality.degrees)
                assert total <= inequality.bound


def test_random_complex_shapes():
    r = random_complex(random.Random(1), [2, 0, 3], n=5)
    assert r.n == 5
    assert [d.shape for d in r.differentials] == [(2, 0), (0, 3)]


def test_random_complex_entries_stay_in_range():
    rng = random.Random(5)
    for _ in range(100):
        ranks = [rng.randint(1, 4) for _ in range(rng.randint(3, 5))]
        r = random_complex(rng, ranks)
        assert verify(r).passed
        for d in r.differentials:
            assert all(-5 <= entry <= 5 for entry in d)


def test_forced_modp_ranks():
    assert forced_modp_ranks(smooth_line_scenario(3, 1), 3) == {1: 1}
    assert forced_modp_ranks(smooth_line_scenario(3, 1).with_le_number(0, 2)) == {1: 1}
    assert forced_modp_ranks(smooth_line_scenario(3, 1), 0) == {}
    assert forced_modp_ranks(smooth_line_scenario(3, 1)) == {}
    assert forced_modp_ranks(smooth_line_scenario(3, 1, swing=False), 3) == {}
    flagged = build_scenario(3, 2, LinkModel.smooth(), [2, 2, 1], [ScenarioFlag.SWING])
    assert forced_modp_ranks(flagged) == {}


def test_swing_makes_top_degree_torsion_free():
    # lambda^1 = 1 and d_1 != 0 mod p: H^n is free of rank lambda^0 - 1, H^(n-1) = 0
    inequalities = torsion_bounds([3, 1], {3: 2, 2: 0}, 2, 3, {1: 1})
    assert [i.forced_rank for i in inequalities] == [1, 1]
    assert [i.render(3) for i in inequalities] == ["t_n = 0", "t_(n-1) + t_n = 0"]
    assert torsion_upper_bounds(inequalities) == {2: 0, 3: 0}
    # lambda^0 = 0 needs no forcing: the cohomology is Z in degree n - 1
    inequalities = torsion_bounds([0, 1], {3: 0, 2: 1}, 2, 3)
    assert torsion_upper_bounds(inequalities) == {2: 0, 3: 0}


def test_swing_cases_of_the_smooth_line():
    scenario = smooth_line_scenario(3, 1)
    first, second = enumerate_cases(scenario)
    for case, lambda0 in [(first, 2), (first, 5), (second, 0)]:
        r = realize(case, lambda0)
        report = verify(r, scenario, case)
        for p in PRIMES:
            inequalities = torsion_bounds(r.ranks, report.betti, p, r.n, forced_modp_ranks(scenario, lambda0))
            assert torsion_upper_bounds(inequalities) == {2: 0, 3: 0}


def test_exact_modp_ranks_turn_the_bounds_into_equalities():
    rng = random.Random(13)
    for _ in range(100):
        ranks = [rng.randint(0, 4) for _ in range(rng.randint(2, 4))]
        r = random_complex(rng, ranks)
        report = verify(r)
        for p in PRIMES:
            torsion = TorsionProfile.from_report(report, p)
            exact = {j: rank_mod_p(r.differential(j), p) for j in range(1, r.s + 1)}
            for inequality in torsion_bounds(r.ranks, report.betti, p, r.n, exact):
                assert sum(torsion.t(k) for k in inequality.degrees) == inequality.bound
