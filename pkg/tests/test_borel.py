import itertools

import pytest
from conftest import borel_type_ideals, ideals, strongly_stable_ideals
from hypothesis import given
from hypothesis import strategies as st

from monideal.borel import (
    NotBorelTypeError,
    is_borel_type,
    is_sbt,
    is_stable,
    is_strongly_stable,
    min_exchange_power,
    q_bound,
    regularity_min_stable,
    regularity_via_chain,
    sequential_chain,
)
from monideal.dfixed import sbt_principal
from monideal.ideal_core import (
    DegenerateIdealError,
    MonomialIdeal,
    colon_ideal,
    ideal_power,
    max_var,
    monomials_of_degree,
    parse_ideal,
    saturate,
    truncate,
    variable,
)

BOREL_SIX = "(x1^7,x1^5*x2,x1^2*x2^4,x1*x2^6,x1^5*x3^2,x1*x2^4*x3^2)"


def I(text, n):
    return parse_ideal(text, n)


def _members(ideal, top):
    return [u for k in range(top + 1) for u in monomials_of_degree(ideal.n, k) if ideal.contains(u)]


def _swap(u, i, j, a=1, b=None):
    e = list(u)
    e[i - 1] -= a
    e[j - 1] += a if b is None else b
    return tuple(e)


def stable_by_definition(ideal):
    """Every monomial of the ideal up to one degree past its generators."""
    for u in _members(ideal, ideal.degree() + 1):
        m = max_var(u)
        if any(not ideal.contains(_swap(u, m, j)) for j in range(1, m)):
            return False
    return True


def strongly_stable_by_definition(ideal):
    for u in _members(ideal, ideal.degree() + 1):
        for i in range(2, ideal.n + 1):
            if u[i - 1] and any(not ideal.contains(_swap(u, i, j)) for j in range(1, i)):
                return False
    return True


def borel_type_by_saturations(ideal):
    """``(I : x_j^inf) = (I : (x_1..x_j)^inf)`` using a large power of the prefix ideal."""
    n = ideal.n
    big = n * ideal.degree() + 1
    for j in range(1, n + 1):
        prefix = MonomialIdeal(n, [variable(k, n) for k in range(1, j + 1)])
        if saturate(ideal, j) != colon_ideal(ideal, ideal_power(prefix, big)):
            return False
    return True


# ---------------------------------------------------------------------------
# classification examples


def test_classification_examples():
    assert is_strongly_stable(I("(x1)", 3))
    assert is_strongly_stable(I("(x1^2, x1*x2, x2^2, x1*x3)", 3))
    v = is_strongly_stable(I("(x1^3, x2^2)", 2))
    assert not v and v.witness == ((0, 2), 2, 1)


def test_borel_type_examples():
    assert is_borel_type(I("(x1^3, x2^2)", 2))
    v = is_borel_type(I("(x2)", 2))
    assert not v and v.witness == ((0, 1), 2, 1)
    assert is_borel_type(I(BOREL_SIX, 4))


def test_sbt_examples():
    assert not is_sbt(I("(x1^3, x2^2)", 2))
    assert is_sbt(sbt_principal((0, 7, 6)))
    assert sbt_principal((0, 7, 6)) == I("(x1^13, x1^7*x2^6, x1^6*x2^7, x2^13, x1^7*x3^6, x2^7*x3^6)", 3)


def test_degenerate_inputs():
    for check in (is_stable, is_strongly_stable, is_sbt, is_borel_type):
        with pytest.raises(DegenerateIdealError):
            check(MonomialIdeal.zero(2))
        with pytest.raises(DegenerateIdealError):
            check(MonomialIdeal.unit_ideal(2))


def test_min_exchange_power():
    ideal = I("(x1^3, x2^2)", 2)
    assert min_exchange_power(ideal, (0, 2), 2, 1) == 3
    assert min_exchange_power(I("(x2)", 2), (0, 1), 2, 1) is None


@given(ideals(max_gens=3, max_exp=3, max_deg=5))
def test_stability_matches_definition(ideal):
    assert bool(is_stable(ideal)) == stable_by_definition(ideal)
    assert bool(is_strongly_stable(ideal)) == strongly_stable_by_definition(ideal)


@given(ideals(max_gens=3, max_exp=3, max_deg=5))
def test_borel_type_matches_saturation_definition(ideal):
    assert bool(is_borel_type(ideal)) == borel_type_by_saturations(ideal)


@given(st.one_of(ideals(max_gens=3, max_exp=3, max_deg=5), borel_type_ideals()))
def test_classification_hierarchy(ideal):
    ss, st_, sbt, bt = (bool(f(ideal)) for f in (is_strongly_stable, is_stable, is_sbt, is_borel_type))
    assert not ss or st_
    assert not ss or sbt
    assert not sbt or bt
    assert not st_ or bt


# ---------------------------------------------------------------------------
# chains


def test_chain_examples():
    chain = sequential_chain(I(BOREL_SIX, 4))
    assert chain.pivots == [3, 2, 1]
    assert [link.ideal for link in chain.links[1:]] == [I("(x1^5, x1*x2^4)", 4), I("(x1)", 4)]
    assert len(sequential_chain(I("(x1^2, x2^2, x3^2)", 3))) == 1
    assert sequential_chain(I("(x1)", 2)).pivots == [1]
    with pytest.raises(DegenerateIdealError):
        sequential_chain(MonomialIdeal.zero(2))


@given(borel_type_ideals())
def test_chain_pivots_strictly_decrease(ideal):
    chain = sequential_chain(ideal)
    assert all(a > b for a, b in zip(chain.pivots, chain.pivots[1:]))
    assert len(chain) <= ideal.n
    assert chain.links[0].ideal == ideal
    for link, nxt in zip(chain.links, chain.links[1:]):
        assert nxt.ideal == saturate(link.ideal, link.pivot)


# ---------------------------------------------------------------------------
# regularity


def test_regularity_examples():
    report = regularity_via_chain(I(BOREL_SIX, 4))
    assert report.regularity == 8
    assert report.s_values == [7, 7, 0]
    assert regularity_min_stable(I(BOREL_SIX, 4)) == 8
    two = I("(x1^2, x2^2)", 2)
    assert regularity_via_chain(two).regularity == regularity_min_stable(two) == 3 == q_bound(two)
    sbt = sbt_principal((0, 7, 6))
    assert regularity_via_chain(sbt).regularity == regularity_min_stable(sbt) == 23
    assert q_bound(I("(x1)", 2)) == 1
    assert q_bound(I(BOREL_SIX, 4)) == 19


def test_truncation_threshold_of_six_generator_ideal():
    ideal = I(BOREL_SIX, 4)
    assert is_stable(truncate(ideal, 8))
    assert not is_stable(truncate(ideal, 7))


def test_regularity_rejects_non_borel():
    with pytest.raises(NotBorelTypeError):
        regularity_via_chain(I("(x2)", 2))
    with pytest.raises(NotBorelTypeError):
        regularity_min_stable(I("(x2)", 2))


@given(strongly_stable_ideals())
def test_stable_ideal_regularity_is_generator_degree(ideal):
    assert regularity_min_stable(ideal) == ideal.degree()


@given(borel_type_ideals())
def test_corner_report_shape(ideal):
    report = regularity_via_chain(ideal)
    assert len(report.corner_candidates) == len(sequential_chain(ideal))
    assert all(s >= 0 and dim >= 1 for _, s, dim in report.corner_candidates)
    assert report.regularity == max(report.s_values) + 1


def test_borel_type_oracle_on_known_cases():
    assert borel_type_by_saturations(I("(x1^3, x2^2)", 2))
    assert not borel_type_by_saturations(I("(x2)", 2))
    assert all(
        borel_type_by_saturations(MonomialIdeal(2, [(a, 0), (0, b)]))
        for a, b in itertools.product(range(1, 4), repeat=2)
    )
