import itertools

import pytest
from conftest import D_CHOICES, dfixed_ideals
from forms import product, total
from hypothesis import given
from hypothesis import strategies as st

from monideal.borel import is_borel_type, regularity_via_chain, sbt_move_closure
from monideal.dfixed import (
    DSequence,
    DSequenceError,
    HypothesisError,
    absorb_powers,
    decompose,
    dfixed_closure,
    dominated,
    is_dfixed,
    leq_d,
    pardue_regularity,
    powers_of_variables,
    principal_dfixed,
    reconstruct,
    saturate_by_maximal,
    sbt_principal,
    sbt_regularity,
    socle_bruteforce,
    socle_dfixed,
    socle_index_pairs,
    socle_principal_power,
    split_leq_d,
    torsion_monomials,
)
from monideal.ideal_core import (
    IdealError,
    MonomialIdeal,
    ParseError,
    ideal_product,
    parse_ideal,
    variable,
)

D = DSequence.of(1, 2, 4, 12)


def I(text, n):
    return parse_ideal(text, n)


@st.composite
def dseqs(draw):
    terms = [1]
    for _ in range(draw(st.integers(0, 3))):
        terms.append(terms[-1] * draw(st.integers(2, 4)))
    return DSequence(tuple(terms))


# ---------------------------------------------------------------------------
# d-sequences and digits


def test_dsequence_parsing():
    assert DSequence.parse("1|2|4|12") == D
    assert str(D) == "1|2|4|12"
    for bad in ("2|4", "1|3|4", "1|2|2"):
        with pytest.raises(DSequenceError):
            DSequence.parse(bad)
    with pytest.raises(ParseError):
        DSequence.parse("1|x")


def test_decompose_examples():
    assert decompose(21, D) == (1, 0, 2, 1)
    assert decompose(0, D) == (0, 0, 0, 0)
    assert decompose(17, D) == (1, 0, 1, 1)
    assert decompose(9, D) == (1, 0, 2, 0)
    assert decompose(16, D) == (0, 0, 1, 1)


def test_leq_d_examples():
    assert leq_d(2, 10, D)
    assert not leq_d(3, 4, D)
    assert leq_d(7, 7, D)


@given(st.integers(0, 10**6), dseqs())
def test_decompose_round_trip_and_bounds(a, d):
    digits = decompose(a, d)
    assert reconstruct(digits, d) == a
    assert all(0 <= digits[t] < d.ratio(t) for t in range(d.s))


@pytest.mark.parametrize("d", D_CHOICES, ids=str)
def test_decompose_unique_by_exhaustion(d):
    limit = d.terms[-1] * 4
    bounds = [range(d.ratio(t)) for t in range(d.s)] + [range(limit // d.terms[-1] + 1)]
    seen = {}
    for digits in itertools.product(*bounds):
        value = reconstruct(digits, d)
        assert value not in seen
        seen[value] = digits
    for a in range(limit + 1):
        assert decompose(a, d) == seen[a]


@pytest.mark.parametrize("d", D_CHOICES, ids=str)
def test_leq_d_is_partial_order_below_usual_order(d):
    values = range(40)
    rel = {(a, b): leq_d(a, b, d) for a in values for b in values}
    for a in values:
        assert rel[a, a]
    for a, b in itertools.product(values, repeat=2):
        if rel[a, b]:
            assert a <= b
            if rel[b, a]:
                assert a == b
    for a, b, c in itertools.product(range(20), repeat=3):
        if rel[a, b] and rel[b, c]:
            assert rel[a, c]
    assert dominated(21, D) == sorted(a for a in range(22) if leq_d(a, 21, D))


@pytest.mark.parametrize("d", [DSequence.of(1, 2, 4), DSequence.of(1, 3, 9)], ids=str)
def test_split_leq_d_exhaustive(d):
    for b in range(61):
        below = [a for a in range(b + 1) if leq_d(a, b, d)]
        for b1 in range(b + 1):
            b2 = b - b1
            for a in below:
                a1, a2 = split_leq_d(a, b, b1, b2, d)
                assert a1 + a2 == a and leq_d(a1, b1, d) and leq_d(a2, b2, d)


def test_split_leq_d_examples():
    d = DSequence.of(1, 2, 4)
    assert split_leq_d(7, 7, 3, 4, d) == (3, 4)
    assert split_leq_d(0, 7, 3, 4, d) == (0, 0)
    a1, a2 = split_leq_d(5, 7, 3, 4, d)
    valid = {(x, 5 - x) for x in range(6) if leq_d(x, 3, d) and leq_d(5 - x, 4, d)}
    assert (a1, a2) in valid
    with pytest.raises(IdealError):
        split_leq_d(2, 5, 2, 3, d)


# ---------------------------------------------------------------------------
# principal ideals


def test_principal_dfixed_examples():
    assert principal_dfixed((0, 0, 21), D) == product(3, "x1,x2,x3", "x1^4,x2^4,x3^4", "x1^4,x2^4,x3^4", "x1^12,x2^12,x3^12")
    assert principal_dfixed((2, 9, 16), D) == product(
        3, "x1^2", "x1,x2", "x1^4,x2^4", "x1^4,x2^4", "x1^4,x2^4,x3^4", "x1^12,x2^12,x3^12"
    )
    assert principal_dfixed((0, 0, 5), DSequence.of(1)) == product(3, *["x1,x2,x3"] * 5)
    with pytest.raises(IdealError):
        principal_dfixed((0, 0, 0), D)


def test_closure_examples():
    for u in ((0, 0, 21), (2, 9, 16)):
        assert dfixed_closure([u], D, 3) == principal_dfixed(u, D)
    ideal = principal_dfixed((0, 3, 5), D)
    assert dfixed_closure(ideal.gens, D, 3) == ideal
    with pytest.raises(IdealError):
        dfixed_closure([], D, 3)


def test_is_dfixed_examples():
    assert is_dfixed(principal_dfixed((1, 2, 7), D), D)
    v = is_dfixed(I("(x1^3, x2^2)", 2), DSequence.of(1))
    assert not v and v.witness[0] == (0, 2)


def test_p_borel_matches_dfixed_with_prime_powers():
    d = DSequence.of(1, 3, 9)
    ideal = dfixed_closure([(0, 0, 4), (0, 5, 0)], d, 3)
    for g in ideal.gens:
        for i in range(2, 4):
            for j in range(1, i):
                for t in range(1, g[i - 1] + 1):
                    carry_free = all(x <= y for x, y in zip(decompose(t, d), decompose(g[i - 1], d)))
                    if carry_free:
                        moved = list(g)
                        moved[i - 1] -= t
                        moved[j - 1] += t
                        assert ideal.contains(tuple(moved))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[st.integers(0, 9)] * n)).filter(any), st.sampled_from(D_CHOICES))
def test_principal_product_equals_closure(u, d):
    assert principal_dfixed(u, d) == dfixed_closure([u], d, len(u))


@st.composite
def dfixed_pairs(draw):
    n = draw(st.integers(1, 3))
    d = draw(st.sampled_from(D_CHOICES))
    gens = st.lists(st.tuples(*[st.integers(0, 3)] * n).filter(any), min_size=1, max_size=2)
    return d, dfixed_closure(draw(gens), d, n), dfixed_closure(draw(gens), d, n)


@given(dfixed_pairs())
def test_products_of_dfixed_are_dfixed_and_borel_type(data):
    d, a, b = data
    assert is_dfixed(a, d) and is_dfixed(b, d)
    assert is_borel_type(a)
    assert is_dfixed(ideal_product(a, b), d)


# ---------------------------------------------------------------------------
# strong Borel type principal ideals


def test_sbt_examples():
    assert sbt_principal((0, 7, 6)) == product(3, "x1^7,x2^7", "x1^6,x2^6,x3^6")
    assert sbt_principal((5, 0)) == I("(x1^5)", 2)
    report = sbt_regularity((0, 7, 6))
    assert report.chi == (12, 22) and report.regularity == 23
    assert sbt_regularity((0, 0, 4)).regularity == 3 * 3 + 1
    with pytest.raises(HypothesisError):
        sbt_regularity((0, 3, 6))


@given(st.integers(1, 4), st.integers(1, 6), st.integers(1, 6))
def test_sbt_matches_dfixed_for_dividing_exponents(b, k, beta):
    alpha = beta * k if k > 1 else beta * 2
    n = 3
    u = [0] * n
    a_idx, b_idx = 2, 3
    u[a_idx - 1], u[b_idx - 1] = alpha, beta
    terms = (1, beta, alpha) if beta > 1 else (1, alpha)
    d = DSequence(terms)
    assert sbt_principal(tuple(u)) == principal_dfixed(tuple(u), d)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(0, 6)] * n)).filter(any))
def test_sbt_principal_matches_move_closure(u):
    assert sbt_principal(u) == MonomialIdeal(len(u), sbt_move_closure([u], len(u)))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.integers(1, 6), min_size=1, max_size=n).map(lambda e: (n, e))))
def test_sbt_regularity_matches_chain(data):
    n, exps = data
    exps = sorted(exps, reverse=True)
    u = [0] * n
    for idx, a in zip(range(n - len(exps), n), exps):
        u[idx] = a
    u = tuple(u)
    assert sbt_regularity(u).regularity == regularity_via_chain(sbt_principal(u)).regularity


# ---------------------------------------------------------------------------
# regularity of principal d-fixed ideals


def test_pardue_examples():
    assert pardue_regularity((0, 0, 21), D).regularity == 34
    report = pardue_regularity((2, 16, 9), D)
    assert report.regularity == 32
    assert report.offset == 2
    assert [b.value for b in report.blocks] == [23, 30]
    assert pardue_regularity((0, 0, 7), DSequence.of(1)).regularity == 7


# ---------------------------------------------------------------------------
# socles


def socle_by_definition(ideal):
    """Standard monomials of an Artinian ideal killed by every variable, found in a box."""
    n = ideal.n
    caps = [max(g[i] for g in ideal.gens if sum(1 for a in g if a) == 1 and g[i]) for i in range(n)]
    found = set()
    for w in itertools.product(*(range(c) for c in caps)):
        if ideal.contains(w):
            continue
        if all(ideal.contains(w[:i] + (w[i] + 1,) + w[i + 1 :]) for i in range(n)):
            found.add(w)
    return found


def test_socle_bruteforce_examples():
    report = socle_bruteforce(MonomialIdeal.maximal(3))
    assert report.by_degree == {0: ((0, 0, 0),)}
    assert socle_bruteforce(I("(x1^2)", 2)).by_degree == {}
    assert socle_bruteforce(I("(x1^2, x1*x2)", 2)).by_degree == {1: ((1, 0),)}
    with pytest.raises(IdealError):
        socle_bruteforce(MonomialIdeal.unit_ideal(2))


def test_socle_top_degree_can_sit_below_regularity():
    u, d = (0, 3, 1), DSequence.of(1, 3)
    ideal = principal_dfixed(u, d)
    assert ideal == product(3, "x1^3,x2^3", "x1,x2,x3")
    assert socle_bruteforce(ideal).by_degree == {3: ((3, 0, 0), (0, 3, 0))}
    assert pardue_regularity(u, d).regularity == 5


def test_socle_of_power_example():
    construction = socle_principal_power(21, D, 3)
    brute = socle_bruteforce(construction.ideal)
    assert construction.report().by_degree == brute.by_degree
    digits = decompose(21, D)
    predicted = {t: sum(digits[j] * D.terms[j] for j in range(t, 4)) + 2 * (D.terms[t] - 1) - 1 for t in (0, 2, 3)}
    assert sorted(brute.by_degree) == sorted(predicted.values())
    assert brute.max_degree == 33 == pardue_regularity((0, 0, 21), D).regularity - 1
    pieces = construction.pieces
    assert pieces[(0,)] == product(3, "x1^4,x2^4,x3^4", "x1^4,x2^4,x3^4", "x1^12,x2^12,x3^12")
    assert pieces[(2,)] == ideal_product(product(3, "x1^3*x2^3*x3^3", "x1^4,x2^4,x3^4"), product(3, "x1^12,x2^12,x3^12"))
    assert pieces[(3,)] == I("(x1^11*x2^11*x3^11)", 3)
    for t, h in construction.predicted_dims.items():
        assert brute.dims[construction.predicted_degrees[t]] == h


def test_socle_pieces_are_disjoint_modulo_ideal():
    construction = socle_principal_power(21, D, 3)
    ideal = construction.ideal
    for t, piece in construction.pieces.items():
        others = total(ideal, *(p for s, p in construction.pieces.items() if s != t))
        assert not any(others.contains(g) for g in piece.gens)


def test_socle_power_alpha_one_is_residue_field():
    construction = socle_principal_power(1, D, 3)
    assert construction.pieces[(0,)].is_unit()
    assert socle_bruteforce(construction.ideal).by_degree == {0: ((0, 0, 0),)}


def test_socle_two_block_example():
    construction = socle_dfixed((0, 9, 16), D)
    assert set(construction.pieces) == {
        ((2,), (2,)),
        ((2,), (3,)),
        ((1, 2), (0, 2)),
        ((1, 2), (0, 3)),
        ((1, 2), (2, 3)),
    }
    assert construction.pieces[((2,), (3,))] == I("(x1^11*x2^11*x3^11)", 3)
    assert construction.pieces[((1, 2), (2, 3))] == product(3, "x1^3*x2^3*x3^11", "x1^12,x2^12", "x1^4,x2^4")
    brute = socle_bruteforce(construction.ideal)
    assert construction.report().by_degree == brute.by_degree
    assert brute.max_degree == pardue_regularity((0, 9, 16), D).regularity - 1
    assert construction.predicted_max_degree == brute.max_degree
    assert set(brute.by_degree) == set(construction.predicted_degrees.values())


def test_socle_hypotheses():
    with pytest.raises(HypothesisError):
        socle_dfixed((0, 4, 0), D)
    with pytest.raises(HypothesisError):
        socle_dfixed((2, 0, 4), D)
    with pytest.raises(IdealError):
        socle_principal_power(0, D, 3)


def test_socle_index_pairs_single_block():
    assert socle_index_pairs([decompose(21, D)]) == [((1,), (0,)), ((1,), (2,)), ((1,), (3,))]


@given(st.integers(1, 10), st.integers(2, 3), st.sampled_from([DSequence.of(1, 2), DSequence.of(1, 3), DSequence.of(1, 2, 4)]))
def test_socle_power_matches_definition(alpha, n, d):
    construction = socle_principal_power(alpha, d, n)
    brute = socle_bruteforce(construction.ideal)
    assert construction.report().by_degree == brute.by_degree
    assert set(brute.basis) == socle_by_definition(construction.ideal)
    assert brute.max_degree == pardue_regularity(variable(n, n, alpha), d).regularity - 1


@given(
    st.integers(1, 6),
    st.integers(1, 8),
    st.sampled_from([DSequence.of(1, 2), DSequence.of(1, 3), DSequence.of(1, 2, 4)]),
)
def test_socle_two_blocks_matches_bruteforce(a, b, d):
    u = (0, a, b)
    construction = socle_dfixed(u, d)
    brute = socle_bruteforce(construction.ideal)
    assert construction.report().by_degree == brute.by_degree
    assert brute.max_degree <= pardue_regularity(u, d).regularity - 1


@given(dfixed_ideals(n=3))
def test_torsion_is_saturation_complement(ideal):
    sat = saturate_by_maximal(ideal)
    torsion = torsion_monomials(ideal)
    assert all(sat.contains(w) and not ideal.contains(w) for w in torsion)


# ---------------------------------------------------------------------------
# powers of variables


POWERS = [(2, 7), (3, 10), (5, 17)]


def printed_powers_decomposition():
    n, top = 5, "x4^12,x5^12"
    first = product(n, "x1,x2", "x1^2,x2^2", "x1^4,x2^4")
    second = total(
        product(n, "x1^2,x2^2", "x1^4,x2^4", "x3^4"),
        product(n, "x1^4,x2^4", "x3^6"),
        product(n, "x1^2,x2^2", "x3^8"),
        product(n, "x3^10"),
    )
    third = total(
        product(n, "x1,x2", "x1^4,x2^4", top),
        product(n, "x1^4,x2^4", "x3", top),
        product(n, "x1^4,x2^4", "x4,x5", top),
        product(n, "x1,x2", "x3^4", top),
        product(n, "x1,x2", "x4^4,x5^4", top),
        product(n, "x3", "x4^4,x5^4", top),
        product(n, "x3^4", "x4,x5", top),
        product(n, "x3^5", top),
        product(n, "x4,x5", "x4^4,x5^4", top),
    )
    return first, second, third


def test_powers_example_matches_printed_sum_and_closure():
    ideal = powers_of_variables(POWERS, D, 5)
    assert ideal == total(*printed_powers_decomposition())
    assert ideal == dfixed_closure([variable(i, 5, a) for i, a in POWERS], D, 5)
    assert ideal == total(*(principal_dfixed(variable(i, 5, a), D) for i, a in POWERS))


def test_powers_single_pair_is_principal():
    assert powers_of_variables([(3, 21)], D, 3) == principal_dfixed((0, 0, 21), D)


def test_absorption():
    assert absorb_powers([(2, 7), (3, 5), (4, 9)]) == [(3, 5), (4, 9)]
    with pytest.raises(IdealError):
        powers_of_variables([], D, 3)
