from itertools import combinations_with_replacement

import pytest

from lemodules.cyclotomic import (
    CyclotomicMultiset,
    DegreeConstraint,
    IntPolynomial,
    canonical_charpoly,
    cyclotomic_part,
    cyclotomic_poly,
    enumerate_charpolys,
    euler_phi,
    expand,
    feasible_degree_trace,
    moebius_mu,
    search_bound,
)


def ms(**kwargs):
    return CyclotomicMultiset.from_dict({int(k[1:]): v for k, v in kwargs.items()})


@pytest.mark.parametrize(
    "d, coefficients",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_small_cyclotomic_polynomials(d, coefficients):
    assert cyclotomic_poly(d).coefficients == coefficients


def test_cyclotomic_degree_and_trace():
    for d in range(1, 201):
        poly = cyclotomic_poly(d)
        assert poly.monic
        assert poly.degree == euler_phi(d)
        assert poly.trace == moebius_mu(d)


def test_search_bound_covers_small_totients():
    for d in range(1, 400):
        phi = euler_phi(d)
        if phi <= 12:
            assert d <= search_bound(phi)


def test_polynomial_rendering():
    assert expand(ms(d1=2)).render() == "t^2 - 2t + 1"
    assert cyclotomic_poly(6).render() == "t^2 - t + 1"
    assert cyclotomic_poly(3).render() == "t^2 + t + 1"
    assert IntPolynomial((0, 0)).render() == "0"
    assert IntPolynomial((-2, 0, 1)).render() == "t^2 - 2"


def test_multiset_rendering_and_arithmetic():
    assert ms(d1=2, d6=1).render() == "Φ1^2·Φ6"
    assert CyclotomicMultiset().render() == "1"
    total = ms(d1=1) + ms(d1=1, d4=1)
    assert total == ms(d1=2, d4=1)
    assert total.degree == 4
    assert total.trace == 2


def test_multiset_rejects_bad_entries():
    with pytest.raises(ValueError):
        CyclotomicMultiset(((0, 1),))
    with pytest.raises(ValueError):
        CyclotomicMultiset(((3, -1),))


def test_degree_one_trace_zero_is_impossible():
    assert enumerate_charpolys(1, 0) == frozenset()


def test_degree_zero():
    assert enumerate_charpolys(0, 0) == {CyclotomicMultiset()}
    assert enumerate_charpolys(0, 1) == frozenset()


def test_negative_degree():
    with pytest.raises(ValueError):
        enumerate_charpolys(-1, 0)


@pytest.mark.parametrize("degree", range(1, 11))
def test_extreme_traces(degree):
    assert enumerate_charpolys(degree, degree) == {ms(d1=degree)}
    assert enumerate_charpolys(degree, -degree) == {ms(d2=degree)}
    assert enumerate_charpolys(degree, degree + 1) == frozenset()
    assert enumerate_charpolys(degree, -degree - 1) == frozenset()


def test_degree_two():
    assert enumerate_charpolys(2, 0) == {ms(d1=1, d2=1), ms(d4=1)}
    assert enumerate_charpolys(2, 1) == {ms(d6=1)}
    assert enumerate_charpolys(2, -1) == {ms(d3=1)}


def _brute_force(max_degree):
    indices = [d for d in range(1, 19) if euler_phi(d) <= max_degree]
    found = {}
    for size in range(0, max_degree + 1):
        for combination in combinations_with_replacement(indices, size):
            multiset = CyclotomicMultiset(tuple((d, 1) for d in combination))
            if multiset.degree <= max_degree:
                found.setdefault((multiset.degree, multiset.trace), set()).add(multiset)
    return found


def test_enumeration_matches_brute_force():
    oracle = _brute_force(6)
    for degree in range(0, 7):
        for trace in range(-degree - 1, degree + 2):
            assert enumerate_charpolys(degree, trace) == oracle.get((degree, trace), set()), (degree, trace)


def test_degree_constraint_rendering():
    assert feasible_degree_trace(None, 0).render() == "D = 0 or D >= 2"
    assert feasible_degree_trace(None, -3).render() == "D >= 3"
    assert feasible_degree_trace(2, 0).is_exact
    assert feasible_degree_trace(1, 0).render() == "infeasible"
    assert DegreeConstraint(2, (5,), 9).render("x") == "x >= 2, x <= 9, x != 5"


def test_degree_constraint_operations():
    constraint = feasible_degree_trace(None, 0).shift(2)
    assert constraint == DegreeConstraint(2, (3,))
    assert constraint.admits(2)
    assert not constraint.admits(3)
    assert constraint.admits(10)
    assert constraint.pin(3) == DegreeConstraint.infeasible()
    assert constraint.pin(4) == DegreeConstraint.exactly(4)
    assert DegreeConstraint.infeasible().shift(3) == DegreeConstraint.infeasible()


def test_feasible_degree_trace_agrees_with_enumeration():
    for trace in range(-13, 14):
        constraint = feasible_degree_trace(None, trace)
        for degree in range(0, 13):
            expected = bool(enumerate_charpolys(degree, trace))
            assert constraint.admits(degree) == expected, (degree, trace)
            assert feasible_degree_trace(degree, trace).admits(degree) == expected, (degree, trace)


def test_canonical_charpoly():
    for degree in range(0, 13):
        for trace in range(-degree - 1, degree + 2):
            chosen = canonical_charpoly(degree, trace)
            if enumerate_charpolys(degree, trace):
                assert chosen in enumerate_charpolys(degree, trace), (degree, trace)
            else:
                assert chosen is None


def test_cyclotomic_part():
    product = ms(d1=1, d3=2, d10=1)
    found, leftover = cyclotomic_part(expand(product))
    assert found == product
    assert leftover == IntPolynomial((1,))

    found, leftover = cyclotomic_part(IntPolynomial((-2, 0, 1)))
    assert found == CyclotomicMultiset()
    assert leftover.degree == 2

    # (t - 1)(t^2 - 3t + 1)
    found, leftover = cyclotomic_part(IntPolynomial((-1, 4, -4, 1)))
    assert found == ms(d1=1)
    assert leftover == IntPolynomial((1, -3, 1))


def test_polynomial_division_needs_monic_divisor():
    with pytest.raises(ValueError):
        divmod(IntPolynomial((1, 1)), IntPolynomial((1, 2)))
