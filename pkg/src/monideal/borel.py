"""Stability classes of monomial ideals, sequential chains and regularity.

Regularity of a Borel-type ideal is computed two independent ways: from the
top degrees of the successive saturation quotients along the sequential
chain, and as the least degree at which the truncation becomes stable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ideal_core import (
    DegenerateIdealError,
    IdealError,
    Monomial,
    MonomialIdeal,
    max_var,
    revlex_key,
    saturate,
    shadow,
)


class NotBorelTypeError(IdealError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a classification check.

    ``witness`` is ``(generator, i, j)`` for the first violated exchange
    ``x_j`` for ``x_i``, or ``None`` when the property holds.
    """

    holds: bool
    witness: tuple[Monomial, int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _require_proper(ideal: MonomialIdeal) -> None:
    if not ideal.is_proper_nonzero():
        kind = "zero" if ideal.is_zero() else "unit"
        raise DegenerateIdealError(f"classification is undefined for the {kind} ideal")


def _exchange(g: Monomial, i: int, j: int, amount: int = 1, gain: int | None = None) -> Monomial:
    """Remove ``amount`` copies of ``x_i`` from ``g`` and add ``gain`` copies of ``x_j``."""
    e = list(g)
    e[i - 1] -= amount
    e[j - 1] += amount if gain is None else gain
    return tuple(e)


def is_stable(ideal: MonomialIdeal) -> Verdict:
    """``x_j g / x_m(g)`` lies in the ideal for every generator ``g`` and ``j < m(g)``."""
    _require_proper(ideal)
    for g in ideal.gens:
        m = max_var(g)
        for j in range(1, m):
            if not ideal.contains(_exchange(g, m, j)):
                return Verdict(False, (g, m, j))
    return Verdict(True)


def is_strongly_stable(ideal: MonomialIdeal) -> Verdict:
    """``x_j g / x_i`` lies in the ideal whenever ``x_i`` divides generator ``g`` and ``j < i``."""
    _require_proper(ideal)
    for g in ideal.gens:
        for i in range(2, ideal.n + 1):
            if not g[i - 1]:
                continue
            for j in range(1, i):
                if not ideal.contains(_exchange(g, i, j)):
                    return Verdict(False, (g, i, j))
    return Verdict(True)


def min_exchange_power(ideal: MonomialIdeal, g: Monomial, i: int, j: int) -> int | None:
    """Least ``t > 0`` with ``x_j^t g / x_i^{nu_i(g)}`` in the ideal, or ``None``.

    A generator ``f`` divides ``x_j^t h`` (``h`` being ``g`` stripped of
    ``x_i``) exactly when ``f`` divides ``h`` off coordinate ``j`` and
    ``t >= f_j - h_j``, so the least ``t`` is a minimum over generators.
    """
    h = g[: i - 1] + (0,) + g[i:]
    best = None
    for f in ideal.gens:
        if all(a <= b for k, (a, b) in enumerate(zip(f, h)) if k != j - 1):
            t = max(1, f[j - 1] - h[j - 1])
            if best is None or t < best:
                best = t
    return best


def _borel_by_exchange(ideal: MonomialIdeal) -> Verdict:
    """Vectorised :func:`min_exchange_power` over all generators ``f`` at once."""
    t_max = ideal.n * ideal.degree()
    gens = ideal.gens_array()
    for g in ideal.gens:
        for i in range(2, ideal.n + 1):
            if not g[i - 1]:
                continue
            h = np.array(g[: i - 1] + (0,) + g[i:], dtype=np.int64)
            over = gens > h
            n_over = over.sum(axis=1)
            for j in range(1, i):
                fits = n_over - over[:, j - 1] == 0
                if not fits.any():
                    return Verdict(False, (g, i, j))
                t = max(1, int((gens[fits, j - 1] - h[j - 1]).min()))
                if t > t_max:
                    return Verdict(False, (g, i, j))
    return Verdict(True)


def _borel_by_saturation(ideal: MonomialIdeal) -> bool:
    sats = [saturate(ideal, i) for i in range(1, ideal.n + 1)]
    return all(
        sats[i].is_subset_of(sats[j]) for i in range(ideal.n) for j in range(i)
    )


def is_borel_type(ideal: MonomialIdeal) -> Verdict:
    """Borel type, decided by the exchange criterion on generators.

    The saturation-inclusion characterisation is evaluated as well and the
    two must agree.
    """
    _require_proper(ideal)
    verdict = _borel_by_exchange(ideal)
    second = _borel_by_saturation(ideal)
    if verdict.holds != second:
        raise AssertionError(f"Borel-type routes disagree on {ideal}")
    return verdict


def is_sbt(ideal: MonomialIdeal) -> Verdict:
    """Strong Borel type: ``x_j^t u / x_i^{nu_i(u)}`` in the ideal for some ``t <= nu_i(u)``.

    Since smaller ``t`` gives a divisor, the condition is equivalent to the
    full swap ``t = nu_i(u)``.  A full swap of ``g * w`` factors as the swap
    of ``g`` times the swap of ``w``, so checking the generators decides the
    whole ideal; :func:`sbt_move_closure` is the fixpoint form of the same test.
    """
    _require_proper(ideal)
    for g in ideal.gens:
        for i in range(2, ideal.n + 1):
            a = g[i - 1]
            if not a:
                continue
            for j in range(1, i):
                if not ideal.contains(_exchange(g, i, j, a)):
                    return Verdict(False, (g, i, j))
    return Verdict(True)


def sbt_move_closure(gens: list[Monomial] | tuple[Monomial, ...], n: int) -> set[Monomial]:
    """Close a monomial set under full swaps ``x_j^{a} u / x_i^{a}`` with ``a = nu_i(u)``, ``j < i``."""
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(2, n + 1):
                a = u[i - 1]
                if not a:
                    continue
                for j in range(1, i):
                    v = _exchange(u, i, j, a)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# sequential chain and regularity


@dataclass(frozen=True)
class ChainLink:
    ideal: MonomialIdeal
    pivot: int


@dataclass(frozen=True)
class SequentialChain:
    links: tuple[ChainLink, ...]

    def __len__(self) -> int:
        return len(self.links)

    @property
    def pivots(self) -> list[int]:
        return [link.pivot for link in self.links]


def sequential_chain(ideal: MonomialIdeal) -> SequentialChain:
    """Saturate by the last occurring variable until the unit ideal is reached."""
    if ideal.is_zero():
        raise DegenerateIdealError("the zero ideal has no sequential chain")
    links = []
    current = ideal
    while not current.is_unit():
        pivot = current.max_var()
        links.append(ChainLink(current, pivot))
        current = saturate(current, pivot)
        if len(links) > ideal.n:
            raise AssertionError("sequential chain longer than the variable count")
    return SequentialChain(tuple(links))


@dataclass(frozen=True)
class LinkReport:
    pivot: int
    top_degree: int
    top_dim: int


@dataclass(frozen=True)
class ChainRegularityReport:
    links: tuple[LinkReport, ...]
    regularity: int

    @property
    def s_values(self) -> list[int]:
        return [link.top_degree for link in self.links]

    @property
    def corner_candidates(self) -> list[tuple[int, int, int]]:
        """``(pivot, top degree, top dimension)`` per link, unfiltered."""
        return [(link.pivot, link.top_degree, link.top_dim) for link in self.links]


def _saturation_quotient_top(inner: MonomialIdeal, outer: MonomialIdeal, bound: int) -> tuple[int, int]:
    """Top degree and its dimension of ``outer / inner`` (both in the same ring).

    Walks the monomials of ``outer`` outside ``inner`` degree by degree,
    starting from the generators of ``outer``: the complement of ``inner`` is
    closed under division, so every such monomial is reached through a chain
    of single-variable multiplications that never enters ``inner``.
    """
    by_degree: dict[int, set[Monomial]] = {}
    for g in outer.gens:
        if not inner.contains(g):
            by_degree.setdefault(sum(g), set()).add(g)
    if not by_degree:
        raise AssertionError("saturation did not enlarge the ideal")
    k = min(by_degree)
    top, dim = k, 0
    layer: list[Monomial] = []
    while True:
        layer = sorted(set(layer) | by_degree.get(k, set()), key=revlex_key)
        if not layer:
            if k > max(by_degree):
                break
        else:
            top, dim = k, len(layer)
            if k > bound:
                raise NotBorelTypeError(
                    f"saturation quotient reaches degree {k} beyond the bound {bound}"
                )
        grown = shadow(layer, inner.n) if layer else []
        if grown:
            mask = inner.contains_many(grown)
            layer = [u for u, hit in zip(grown, mask) if not hit]
        else:
            layer = []
        k += 1
    return top, dim


def regularity_via_chain(ideal: MonomialIdeal) -> ChainRegularityReport:
    """Regularity as ``max_l s_l + 1`` over the sequential chain.

    ``s_l`` is the top degree of ``I_{l+1} / I_l`` computed inside
    ``K[x_1..x_{n_l}]``; its dimension is kept for the corner report.
    """
    if not is_borel_type(ideal):
        raise NotBorelTypeError(f"{ideal} is not of Borel type")
    chain = sequential_chain(ideal)
    reports = []
    for idx, link in enumerate(chain.links):
        nl = link.pivot
        nxt = saturate(link.ideal, nl)
        inner = link.ideal.in_subring(nl)
        outer = nxt.in_subring(nl)
        bound = inner.q_bound()
        top, dim = _saturation_quotient_top(inner, outer, bound)
        reports.append(LinkReport(nl, top, dim))
    reg = max(r.top_degree for r in reports) + 1
    return ChainRegularityReport(tuple(reports), reg)


def _truncation_is_stable(ideal: MonomialIdeal, e: int, standard: list[Monomial]) -> bool:
    """Stability of ``I_{>=e}`` given the degree-``e`` standard monomials of ``I``.

    ``I_{>=e}`` is generated by its degree-``e`` part (plus generators above
    ``e``, which are checked directly).  A degree-``e`` monomial ``u`` of the
    ideal fails exactly when some move ``x_j u / x_{m(u)}`` is standard, so
    each standard ``w`` is traced back to the ``u = x_m w / x_j`` that could
    produce it.
    """
    n = ideal.n
    std = set(standard)
    for w in standard:
        mw = max_var(w)
        for j in range(1, n + 1):
            if not w[j - 1]:
                continue
            for m in range(max(j + 1, mw), n + 1):
                u = list(w)
                u[j - 1] -= 1
                u[m - 1] += 1
                u = tuple(u)
                if max_var(u) == m and u not in std:
                    return False
    for g in ideal.gens:
        if sum(g) <= e:
            continue
        m = max_var(g)
        for j in range(1, m):
            if not ideal.contains(_exchange(g, m, j)):
                return False
    return True


def regularity_min_stable(ideal: MonomialIdeal) -> int:
    """Least ``e >= deg(I)`` whose truncation ``I_{>=e}`` is stable."""
    if not is_borel_type(ideal):
        raise NotBorelTypeError(f"{ideal} is not of Borel type")
    start = ideal.degree()
    bound = ideal.q_bound()
    layer = []
    for k, layer in enumerate(_standard_layers_unbounded(ideal)):
        if k < start:
            continue
        if _truncation_is_stable(ideal, k, layer):
            return k
        if k > bound:
            raise AssertionError(f"no stable truncation up to the bound {bound}")
    raise AssertionError("standard-monomial walk ended unexpectedly")


def _standard_layers_unbounded(ideal: MonomialIdeal):
    layer = [tuple([0] * ideal.n)]
    k = 0
    while True:
        yield layer
        grown = shadow(layer, ideal.n) if layer else []
        if grown:
            mask = ideal.contains_many(grown)
            layer = [u for u, hit in zip(grown, mask) if not hit]
        else:
            layer = []
        k += 1


def q_bound(ideal: MonomialIdeal) -> int:
    return ideal.q_bound()
