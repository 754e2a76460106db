import itertools
import json
from importlib import resources
from math import comb, prod

import pytest
from conftest import ideals
from hypothesis import given
from hypothesis import strategies as st

from monideal.gin import closed_form_gin
from monideal.hilbert import (
    KNOWN_DIVERGENCES,
    RegimeError,
    classify_triple,
    divergence_table,
    hilbert_ci,
    hilbert_quotient,
    jk_counts,
    piecewise_hilbert,
)
from monideal.ideal_core import IdealError, MonomialIdeal, monomials_of_degree, parse_ideal
from monideal.repro import NON_LEFSCHETZ


def naive_hilbert(ideal, upto):
    return [sum(not ideal.contains(u) for u in monomials_of_degree(ideal.n, k)) for k in range(upto + 1)]


def monomial_ci(degrees):
    n = len(degrees)
    return MonomialIdeal(n, [tuple(d if i == j else 0 for i in range(n)) for j, d in enumerate(degrees)])


def triples(top):
    return list(itertools.combinations_with_replacement(range(2, top + 1), 3))


# ---------------------------------------------------------------------------
# product expansion


def test_hilbert_ci_examples():
    assert list(hilbert_ci((3, 3, 3))) == [1, 3, 6, 7, 6, 3, 1]
    assert list(hilbert_ci((2, 2, 2, 2))) == [1, 4, 6, 4, 1]
    assert list(hilbert_ci((5,))) == [1] * 5
    assert list(hilbert_ci((3, 3, 9))) == [1, 3, 6, 8, 9, 9, 9, 9, 9, 8, 6, 3, 1]
    with pytest.raises(IdealError):
        hilbert_ci(())
    with pytest.raises(IdealError):
        hilbert_ci((2, 0))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_hilbert_ci_total_symmetry_and_monomial_quotient(degrees):
    h = hilbert_ci(degrees)
    assert h.total == prod(degrees)
    assert h.top_degree == sum(degrees) - len(degrees)
    assert list(h) == list(reversed(list(h)))
    assert list(hilbert_quotient(monomial_ci(degrees), h.top_degree)) == list(h)


# ---------------------------------------------------------------------------
# monomial quotients


def test_hilbert_quotient_examples():
    assert list(hilbert_quotient(MonomialIdeal.zero(3), 6)) == [comb(k + 2, 2) for k in range(7)]
    assert list(hilbert_quotient(parse_ideal(NON_LEFSCHETZ, 3), 7)) == [1, 3, 6, 7, 6, 3, 1, 0]
    assert list(hilbert_quotient(closed_form_gin(3, 3, 9), 13)) == list(hilbert_ci((3, 3, 9))) + [0]
    assert list(hilbert_quotient(MonomialIdeal.unit_ideal(2), 3)) == [0, 0, 0, 0]
    with pytest.raises(IdealError):
        hilbert_quotient(MonomialIdeal.zero(2), -1)


@given(ideals(max_gens=4, max_exp=4, max_deg=6, nonzero=False), st.integers(0, 9))
def test_splitting_recursion_matches_counting(ideal, upto):
    assert list(hilbert_quotient(ideal, upto)) == naive_hilbert(ideal, upto)


# ---------------------------------------------------------------------------
# regimes and piecewise transcriptions


@pytest.mark.parametrize(
    "degrees, case",
    [
        ((3, 3, 9), "twin-low"),
        ((3, 4, 9), "spread-low"),
        ((5, 5, 5), "equal"),
        ((4, 4, 6), "twin-high"),
        ((4, 6, 6), "top-pair"),
        ((3, 5, 6), "spread-high"),
        ((2, 2, 3), "twin-low"),
        ((3, 3, 5), "twin-low"),
        ((3, 3, 4), "twin-high"),
        ((2, 3, 4), "spread-low"),
    ],
)
def test_classify_triple(degrees, case):
    assert classify_triple(degrees) == case


def test_classify_triple_rejects_out_of_regime():
    for bad in ((3, 2, 4), (1, 2, 3), (2, 3)):
        with pytest.raises(RegimeError):
            classify_triple(bad)
    with pytest.raises(RegimeError):
        piecewise_hilbert((2, 1), n_d=True)


def test_piecewise_examples():
    result = piecewise_hilbert((3, 3, 9))
    assert result.case == "twin-low" and result.divergences == ()
    assert result.values[4] == comb(3 + 1, 2) + sum(3 - i for i in range(1, 3)) == 9
    nd = piecewise_hilbert((4, 2), n_d=True)
    assert nd.values[2] == comb(5, 3) - 4 * comb(3, 3) == 6
    assert list(nd.values) == [1, 4, 6, 4, 1]


def test_piecewise_is_order_free():
    assert piecewise_hilbert((9, 3, 3)).values == piecewise_hilbert((3, 3, 9)).values


@pytest.mark.parametrize("n, d", list(itertools.product(range(2, 7), range(2, 7))))
def test_equal_degree_hilbert_is_symmetric(n, d):
    h = piecewise_hilbert((n, d), n_d=True).values
    top = n * (d - 1)
    assert all(h[k] == h[top - k] for k in range(top + 1))


def test_jk_count_examples():
    counts = jk_counts((4, 2), n_d=True).counts
    assert counts[2] == 4 and counts[3] == 16
    twin = jk_counts((3, 3, 9)).counts
    assert twin[:3] == (0, 0, 0)
    assert twin[13] == comb(15, 2)


@pytest.mark.parametrize("degrees", triples(9))
def test_transcriptions_agree_except_known_divergences(degrees):
    for result in (piecewise_hilbert(degrees), jk_counts(degrees)):
        for dv in result.divergences:
            assert dv.cause is not None, dv
    assert list(piecewise_hilbert(degrees).values) == list(hilbert_ci(degrees))


@pytest.mark.parametrize("n, d", list(itertools.product(range(2, 7), range(2, 7))))
def test_equal_degree_transcriptions_agree_except_known_divergences(n, d):
    for result in (piecewise_hilbert((n, d), n_d=True), jk_counts((n, d), n_d=True)):
        for dv in result.divergences:
            assert dv.cause is not None, dv


def test_middle_item_is_exact_below_twice_d():
    for n, d in itertools.product(range(2, 7), range(2, 7)):
        for dv in piecewise_hilbert((n, d), n_d=True).divergences:
            assert dv.item == "middle" and dv.k >= 2 * d


# ---------------------------------------------------------------------------
# divergence data file


def _data_file():
    return json.loads((resources.files("monideal") / "data" / "hilbert_divergences.json").read_text())


def test_divergence_file_is_current_and_explicit():
    table = divergence_table()
    assert _data_file() == json.loads(json.dumps(table))
    groups = table["hilbert"] + table["counts"]
    assert groups, "the divergence file must list something"
    assert all(group["cause"] and group["rows"] for group in groups)


def test_every_known_divergence_is_observed():
    table = divergence_table()
    seen = {(t, g["case"], g["item"]) for t in table for g in table[t]}
    assert seen == set(KNOWN_DIVERGENCES)
