"""Generic initial ideals of complete intersections, constructed degree by degree.

The constructor does not compute ``Gin`` from polynomials.  It enumerates the
monomial ideals ``J`` that satisfy the constraints such a ``Gin`` must meet
when the quotient has the strong Lefschetz property in characteristic zero:

* ``J`` is strongly stable;
* ``S/J`` has the Hilbert function of the complete intersection;
* multiplication by ``x_n^b`` from degree ``t`` to ``t + b`` on ``S/J`` has
  maximal rank for every ``t`` and ``b``.

Going from degree ``k`` to ``k + 1`` the slice ``J_{k+1}`` contains the
shadow of ``J_k`` and the missing monomials are chosen by backtracking.
Whether those constraints pin down a unique ``J`` is a property of the
degrees, so every solution is returned.

:func:`closed_form_gin` writes down the three-variable solutions directly,
one generator family per degree regime.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .borel import is_strongly_stable
from .hilbert import ambient_count, classify_triple, hilbert_ci, hilbert_quotient
from .ideal_core import (
    DegenerateIdealError,
    IdealError,
    Monomial,
    MonomialIdeal,
    minimalize,
    monomials_of_degree,
    revlex_key,
    shadow,
    standard_layers,
)

DEFAULT_NODE_BUDGET = 10**6


class NotArtinianError(IdealError):
    pass


class NoSolutionError(IdealError):
    def __init__(self, message: str, deepest_degree: int) -> None:
        super().__init__(message)
        self.deepest_degree = deepest_degree


class SearchBudgetError(IdealError):
    def __init__(self, message: str, nodes: int) -> None:
        super().__init__(message)
        self.nodes = nodes


@lru_cache(maxsize=256)
def _slice(n: int, k: int) -> tuple[Monomial, ...]:
    return tuple(monomials_of_degree(n, k))


# ---------------------------------------------------------------------------
# Lefschetz property in the last variable


@dataclass(frozen=True)
class PairVerdict:
    """Maximal rank of ``x_n^b : (S/J)_t -> (S/J)_{t+b}``.

    ``mode`` is ``injective``, ``surjective`` or ``bijective`` depending on
    how ``H(t)`` compares to ``H(t + b)``.  ``witness`` is a standard monomial
    of degree ``t`` sent into the ideal (injectivity) or a standard monomial
    of degree ``t + b`` not divisible by ``x_n^b`` (surjectivity).
    """

    t: int
    b: int
    mode: str
    holds: bool
    witness: Monomial | None = None


@dataclass(frozen=True)
class LefschetzReport:
    element: int
    strong: bool
    pairs: tuple[PairVerdict, ...]

    @property
    def holds(self) -> bool:
        return all(p.holds for p in self.pairs)

    @property
    def weak_holds(self) -> bool:
        return all(p.holds for p in self.pairs if p.b == 1)

    @property
    def failures(self) -> list[PairVerdict]:
        return [p for p in self.pairs if not p.holds]


def _mode(h_from: int, h_to: int) -> str:
    if h_from < h_to:
        return "injective"
    if h_from > h_to:
        return "surjective"
    return "bijective"


def _pair_verdict(
    n: int, t: int, b: int, std_from: Iterable[Monomial], std_to: Sequence[Monomial], mode: str
) -> PairVerdict:
    """``std_to`` must be a set or support fast membership for the injectivity test."""
    if mode in ("injective", "bijective"):
        targets = std_to if isinstance(std_to, (set, frozenset)) else set(std_to)
        for m in std_from:
            if m[:-1] + (m[-1] + b,) not in targets:
                return PairVerdict(t, b, mode, False, m)
    if mode in ("surjective", "bijective"):
        for w in std_to:
            if w[-1] < b:
                return PairVerdict(t, b, mode, False, w)
    return PairVerdict(t, b, mode, True)


def check_lefschetz(ideal: MonomialIdeal, strong: bool = True) -> LefschetzReport:
    """Maximal rank of multiplication by powers of ``x_n`` on ``S/I``.

    With ``strong`` every ``x_n^b`` with ``t + b`` at most the top degree is
    checked; otherwise only ``b = 1``.  A monomial ``m`` maps to ``m x_n^b``,
    so injectivity fails exactly when some standard ``m`` lands in ``I``, and
    surjectivity fails exactly when some standard monomial of the target
    degree is not divisible by ``x_n^b``.
    """
    if not ideal.is_proper_nonzero():
        raise DegenerateIdealError("the Lefschetz check needs a proper nonzero ideal")
    if not ideal.is_artinian():
        raise NotArtinianError(f"{ideal} is not Artinian")
    layers = [layer for layer in standard_layers(ideal) if layer]
    sets = [set(layer) for layer in layers]
    h = [len(layer) for layer in layers]
    top = len(h) - 1
    pairs = []
    for t in range(top + 1):
        for b in range(1, top - t + 1):
            if not strong and b > 1:
                break
            mode = _mode(h[t], h[t + b])
            target = layers[t + b] if mode == "surjective" else sets[t + b]
            pairs.append(_pair_verdict(ideal.n, t, b, layers[t], target, mode))
    return LefschetzReport(ideal.n, strong, tuple(pairs))


# ---------------------------------------------------------------------------
# revlex predicates


@dataclass(frozen=True)
class RevlexVerdict:
    """``witness`` is ``(generator, missing monomial)`` for the first failure."""

    holds: bool
    witness: tuple[Monomial, Monomial] | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_almost_revlex(ideal: MonomialIdeal) -> RevlexVerdict:
    """Every monomial of a generator's degree that precedes it in revlex lies in the ideal."""
    if not ideal.is_proper_nonzero():
        raise DegenerateIdealError("almost-revlex is undefined for the zero or unit ideal")
    for u in ideal.gens:
        for v in _slice(ideal.n, sum(u)):
            if v == u:
                break
            if not ideal.contains(v):
                return RevlexVerdict(False, (u, v))
    return RevlexVerdict(True)


def is_revlex_segment(monomials: Iterable[Monomial], n: int | None = None) -> bool:
    """The set is the initial segment of its degree in revlex descending order."""
    items = set(monomials)
    if not items:
        return True
    degrees = {sum(u) for u in items}
    if len(degrees) != 1:
        raise IdealError(f"revlex segments are single-degree, got degrees {sorted(degrees)}")
    if n is None:
        n = len(next(iter(items)))
    k = degrees.pop()
    return set(_slice(n, k)[: len(items)]) == items


# ---------------------------------------------------------------------------
# constraint set and constructor


@dataclass(frozen=True)
class GradedMonomialSet:
    """Degree slices ``J_0 .. J_K`` of a monomial ideal with their target sizes."""

    n: int
    slices: tuple[frozenset[Monomial], ...]
    targets: tuple[int, ...]

    def ideal(self) -> MonomialIdeal:
        gens = []
        for k, part in enumerate(self.slices):
            below = set(shadow(self.slices[k - 1], self.n)) if k and self.slices[k - 1] else set()
            gens.extend(u for u in part if u not in below)
        return minimalize(gens, self.n)

    @classmethod
    def of(cls, ideal: MonomialIdeal, degrees: Sequence[int]) -> "GradedMonomialSet":
        targets = _targets(degrees)
        slices = tuple(frozenset(ideal.degree_slice(k)) for k in range(len(targets)))
        return cls(ideal.n, slices, targets)


def _targets(degrees: Sequence[int]) -> tuple[int, ...]:
    """``|J_k|`` for ``k`` up to one past the top degree, where ``J_k = S_k``."""
    h = hilbert_ci(degrees)
    n = len(degrees)
    return tuple(ambient_count(n, k) - h[k] for k in range(len(h) + 1))


def gin_constraint_violations(ideal: MonomialIdeal, degrees: Sequence[int]) -> list[str]:
    """Reasons ``ideal`` cannot be a constructor solution for ``degrees``; empty when it is one."""
    out = []
    if ideal.n != len(degrees):
        return [f"ambient {ideal.n} differs from {len(degrees)} degrees"]
    if not ideal.is_proper_nonzero() or not ideal.is_artinian():
        return ["not a proper Artinian ideal"]
    target = hilbert_ci(degrees)
    got = hilbert_quotient(ideal, len(target))
    if tuple(got.values[: len(target)]) != target.values or got[len(target)] != 0:
        out.append(f"Hilbert function {list(got)} differs from {list(target)}")
    stable = is_strongly_stable(ideal)
    if not stable:
        out.append(f"not strongly stable at {stable.witness}")
    report = check_lefschetz(ideal, strong=True)
    for p in report.failures[:1]:
        out.append(f"x_{ideal.n}^{p.b} from degree {p.t} is not {p.mode} (witness {p.witness})")
    return out


@dataclass
class _Search:
    n: int
    targets: tuple[int, ...]
    hilbert: tuple[int, ...]
    budget: int
    revlex_lowest: bool = True
    nodes: int = 0
    deepest: int = 0
    solutions: list[tuple[frozenset[Monomial], ...]] = field(default_factory=list)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetError(f"search exceeded {self.budget} nodes", self.nodes)

    def run(self) -> None:
        self.extend([frozenset()])

    def extend(self, slices: list[frozenset[Monomial]]) -> None:
        k = len(slices) - 1
        self.deepest = max(self.deepest, k)
        if k + 1 == len(self.targets):
            self.solutions.append(tuple(slices))
            return
        for nxt in self.next_slices(slices):
            self.extend(slices + [nxt])

    def next_slices(self, slices: list[frozenset[Monomial]]):
        """All admissible ``J_{k+1}`` over ``Shad(J_k)``, revlex-descending choices first."""
        n, k1 = self.n, len(slices)
        shad = frozenset(shadow(slices[-1], n)) if slices[-1] else frozenset()
        need = self.targets[k1] - len(shad)
        cands = [u for u in _slice(n, k1) if u not in shad]
        if need < 0 or need > len(cands):
            return
        forbidden, forced = self.rank_rules(slices, cands, k1)
        if self.revlex_lowest and not slices[-1] and need:
            # the first nonzero slice is pinned to the revlex initial segment
            forbidden = [forbidden[i] or i >= need for i in range(len(cands))]
        chosen: list[Monomial] = []
        taken: set[Monomial] = set(shad)

        def predecessors_present(u: Monomial) -> bool:
            for i in range(1, n):
                if u[i]:
                    v = list(u)
                    v[i] -= 1
                    v[i - 1] += 1
                    if tuple(v) not in taken:
                        return False
            return True

        def walk(idx: int):
            self.tick()
            if len(chosen) == need:
                if any(forced[j] for j in range(idx, len(cands))):
                    return
                candidate = frozenset(taken)
                if self.slice_passes(slices, candidate, k1):
                    yield candidate
                return
            if len(cands) - idx < need - len(chosen):
                return
            u = cands[idx]
            if not forbidden[idx] and predecessors_present(u):
                chosen.append(u)
                taken.add(u)
                yield from walk(idx + 1)
                taken.discard(u)
                chosen.pop()
            if not forced[idx]:
                yield from walk(idx + 1)

        yield from walk(0)

    def rank_rules(self, slices, cands, k1):
        """Per-candidate flags implied by the rank conditions ending in degree ``k1``.

        A candidate ``u`` is forbidden when ``u / x_n^b`` is standard in a
        degree where ``x_n^b`` must be injective, and forced when ``u`` is not
        divisible by ``x_n^b`` for some ``b`` where ``x_n^b`` must be surjective.
        """
        h = self.hilbert
        injective_b, surjective_b = [], 0
        for b in range(1, k1 + 1):
            t = k1 - b
            mode = _mode(h[t], h[k1]) if k1 < len(h) else "surjective"
            if mode != "surjective":
                injective_b.append(b)
            if mode != "injective":
                surjective_b = max(surjective_b, b)
        forbidden, forced = [], []
        for u in cands:
            bad = False
            for b in injective_b:
                if u[-1] >= b:
                    m = u[:-1] + (u[-1] - b,)
                    if m not in slices[k1 - b]:
                        bad = True
                        break
            forbidden.append(bad)
            forced.append(u[-1] < surjective_b)
        return forbidden, forced

    def slice_passes(self, slices, candidate, k1) -> bool:
        """Rank conditions for every ``(t, b)`` with ``t + b = k1``, shadow included."""
        h, n = self.hilbert, self.n
        if k1 >= len(h):
            return True
        std_to = [u for u in _slice(n, k1) if u not in candidate]
        std_to_set = set(std_to)
        for b in range(1, k1 + 1):
            t = k1 - b
            mode = _mode(h[t], h[k1])
            std_from = [u for u in _slice(n, t) if u not in slices[t]]
            if not _pair_verdict(n, t, b, std_from, std_to_set if mode != "surjective" else std_to, mode).holds:
                return False
        return True


def node_budget() -> int:
    raw = os.environ.get("MONIDEAL_GIN_NODE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class GinSearchResult:
    degrees: tuple[int, ...]
    solutions: tuple[MonomialIdeal, ...]
    nodes: int

    def __len__(self) -> int:
        return len(self.solutions)


def _canonical(ideal: MonomialIdeal) -> tuple:
    return tuple(sorted((sum(g), revlex_key(g)) for g in ideal.gens))


def construct_gin(
    degrees: Sequence[int], budget: int | None = None, revlex_lowest: bool = True
) -> GinSearchResult:
    """Every ideal meeting the constraint set for these degrees, sorted canonically.

    With ``revlex_lowest`` the first nonzero slice ``J_k`` must be the revlex
    initial segment of its degree.  Three-variable searches are unaffected;
    from four variables on, dropping it admits extra solutions.

    Raises :class:`NoSolutionError` (with the deepest degree reached) when the
    constraints are unsatisfiable and :class:`SearchBudgetError` when the
    node cap is hit.  Each solution is re-checked with the full predicates.
    """
    degs = tuple(int(d) for d in degrees)
    if len(degs) < 2:
        raise IdealError("the constructor needs at least two degrees")
    if any(d < 1 for d in degs):
        raise IdealError(f"degrees must be positive, got {list(degs)}")
    n = len(degs)
    search = _Search(n, _targets(degs), hilbert_ci(degs).values, budget or node_budget(), revlex_lowest)
    search.run()
    if not search.solutions:
        raise NoSolutionError(
            f"no ideal meets the constraints for degrees {list(degs)}", search.deepest
        )
    ideals = {}
    for slices in search.solutions:
        ideal = GradedMonomialSet(n, slices, search.targets).ideal()
        problems = gin_constraint_violations(ideal, degs)
        if problems:
            raise AssertionError(f"constructed {ideal} fails: {problems}")
        ideals[_canonical(ideal)] = ideal
    ordered = tuple(ideals[key] for key in sorted(ideals))
    return GinSearchResult(degs, ordered, search.nodes)


# ---------------------------------------------------------------------------
# closed forms in three variables
#
# Each family is a list of x3-free generators ``x1^i x2^j`` together with
# layers ``(a, b, c)`` standing for ``x3^a x2^b {x1, x2}^c``, the ``c + 1``
# monomials ``x1^i x2^{b + c - i} x3^a``.


def _layer(a: int, b: int, c: int) -> list[Monomial]:
    return [(i, b + c - i, a) for i in range(c + 1)]


def _assemble(free: Iterable[tuple[int, int]], layers: Iterable[tuple[int, int, int]]) -> MonomialIdeal:
    gens = [(i, j, 0) for i, j in free]
    for a, b, c in layers:
        gens.extend(_layer(a, b, c))
    return minimalize(gens, 3)


def _twin_low(d: int, d3: int):
    free = [(d, 0)] + [(d - j - 1, 2 * j + 1) for j in range(d)]
    layers = [(d3 - 2 * d + 2 * j + 2, 2 * d - 2 * j - 2, j) for j in range(d - 1)]
    layers += [(d3 + 2 * j - 2, 0, d - j) for j in range(1, d + 1)]
    return free, layers


def _spread_low(d1: int, d2: int, d3: int):
    free = [(d1, 0)] + [(d1 - j, d2 - d1 + 2 * j - 1) for j in range(1, d1)] + [(0, d1 + d2 - 1)]
    layers = [(d3 - d1 - d2 + 2 * j + 2, d1 + d2 - 2 * j - 2, j) for j in range(d1 - 1)]
    layers += [(d3 + d1 - d2 - 2 + 2 * j, d2 - d1 + 1 - j, d1 - 1) for j in range(1, d2 - d1 + 1)]
    layers += [(d3 + d2 - d1 + 2 * j - 2, 0, d1 - j) for j in range(1, d1 + 1)]
    return free, layers


def _equal(d: int):
    free = [(d - i, i) for i in range(3)]
    if d % 2:
        free += [pair for j in range(1, (d - 3) // 2 + 1) for pair in ((d - 2 * j - 1, 3 * j + 1), (d - 2 * j - 2, 3 * j + 2))]
        free += [(0, (3 * d - 1) // 2)]
        # the lone x3 layer has x2 exponent (3d - 3)/2; it is printed over 3
        layers = [(1, (3 * d - 3) // 2, 0)]
        layers += [(2 * j + 1, (3 * d - 3) // 2 - 3 * j, 2 * j) for j in range(1, (d - 3) // 2 + 1)]
    else:
        free += [pair for j in range(1, (d - 4) // 2 + 1) for pair in ((d - 2 * j - 1, 3 * j + 1), (d - 2 * j - 2, 3 * j + 2))]
        free += [(1, (3 * d - 4) // 2), (0, (3 * d - 2) // 2)]
        layers = [(2 * j, 3 * d // 2 - 3 * j, 2 * j - 1) for j in range(1, (d - 2) // 2 + 1)]
    layers += [(d - 2 + 2 * j, 0, d - j) for j in range(1, d + 1)]
    return free, layers


def _twin_high(d: int, d3: int):
    free = [(d, 0), (d - 1, 1)] + [(d - j - 1, 2 * j + 1) for j in range(1, d3 - d)]
    top = (2 * d - d3) // 2
    free += [
        pair
        for j in range(1, top + 1)
        for pair in ((2 * d - d3 - 2 * j + 1, 2 * d3 - 2 * d + 3 * j - 2), (2 * d - d3 - 2 * j, 2 * d3 - 2 * d + 3 * j - 1))
    ]
    if d3 % 2 == 0:
        # x2 exponent (2d + d3)/2 - 3j; the printed (2d + d3 - 2)/2 - 3j is one short
        layers = [(2 * j, (2 * d + d3) // 2 - 3 * j, 2 * j - 1) for j in range(1, (2 * d - d3 - 2) // 2 + 1)]
    else:
        free += [(0, (2 * d + d3 - 1) // 2)]
        layers = [(1, (2 * d + d3 - 3) // 2, 0)]
        layers += [(2 * j + 1, (2 * d + d3 - 3) // 2 - 3 * j, 2 * j) for j in range(1, (2 * d - d3 - 3) // 2 + 1)]
    layers += [(2 * d - d3 - 2 + 2 * j, 2 * d3 - 2 * d + 2 - 2 * j, 2 * d - d3 + j - 2) for j in range(1, d3 - d + 1)]
    layers += [(d3 - 2 + 2 * j, 0, d - j) for j in range(1, d + 1)]
    return free, layers


def _top_pair(d1: int, d: int):
    free = [(d1, 0)]
    if d1 % 2 == 0:
        free += [pair for j in range(1, (d1 - 2) // 2 + 1) for pair in ((d1 - 2 * j + 1, d - d1 - 2 + 3 * j), (d1 - 2 * j, d - d1 - 1 + 3 * j))]
        # the pure x2 power is x2^{(d1 + 2d - 2)/2}, printed with -4, and the
        # x3^{2j} layers run to j = (d1 - 2)/2, printed as (d1 - 4)/2
        free += [(1, (d1 + 2 * d - 4) // 2), (0, (d1 + 2 * d - 2) // 2)]
        layers = [(2 * j, (d1 + 2 * d) // 2 - 3 * j, 2 * j - 1) for j in range(1, (d1 - 2) // 2 + 1)]
    else:
        free += [pair for j in range(1, (d1 - 1) // 2 + 1) for pair in ((d1 - 2 * j + 1, d - d1 - 2 + 3 * j), (d1 - 2 * j, d - d1 - 1 + 3 * j))]
        free += [(0, (d1 + 2 * d - 1) // 2)]
        layers = [(1, (d1 + 2 * d - 3) // 2, 0)]
        layers += [(2 * j + 1, (d1 + 2 * d - 3) // 2 - 3 * j, 2 * j) for j in range(1, (d1 - 3) // 2 + 1)]
    layers += [(d1 - 2 + 2 * j, d - d1 - j + 1, d1 - 1) for j in range(1, d - d1 + 1)]
    layers += [(2 * d - d1 - 2 + 2 * j, 0, d1 - j) for j in range(1, d1 + 1)]
    return free, layers


def _spread_high(d1: int, d2: int, d3: int):
    alpha = d1 + d2 - d3
    total = d1 + d2 + d3
    free = [(d1, 0)] + [(d1 - i, d2 - d1 + 2 * i - 1) for i in range(1, d3 - d2 + 1)]
    if alpha % 2 == 0:
        free += [
            pair
            for j in range(1, (alpha - 2) // 2 + 1)
            for pair in ((alpha - 2 * j, 2 * d3 - d1 - d2 + 3 * j - 1), (alpha - 2 * j + 1, 2 * d3 - d1 - d2 + 3 * j - 2))
        ]
        free += [(0, (total - 2) // 2), (1, (total - 4) // 2)]
        layers = [(2 * j, total // 2 - 3 * j, 2 * j - 1) for j in range(1, (alpha - 2) // 2 + 1)]
    else:
        free += [
            pair
            for j in range(1, (alpha - 1) // 2 + 1)
            for pair in ((alpha - 2 * j, 2 * d3 - d1 - d2 + 3 * j - 1), (alpha - 2 * j + 1, 2 * d3 - d1 - d2 + 3 * j - 2))
        ]
        free += [(0, (total - 1) // 2)]
        layers = [(1, (total - 3) // 2, 0)]
        layers += [(2 * j + 1, (total - 3) // 2 - 3 * j, 2 * j) for j in range(1, (alpha - 3) // 2 + 1)]
    layers += [(alpha + 2 * j - 2, d3 - alpha - 2 * j + 2, alpha + j - 2) for j in range(1, d3 - d2 + 1)]
    layers += [(d1 + d3 - d2 + 2 * j - 2, d2 - d1 - j + 1, d1 - 1) for j in range(1, d2 - d1 + 1)]
    layers += [(d2 + d3 - d1 - 2 + 2 * j, 0, d1 - j) for j in range(1, d1 + 1)]
    return free, layers


def _family(degrees: Sequence[int]):
    d1, d2, d3 = degrees
    case = classify_triple(degrees)
    if case == "twin-low":
        return case, _twin_low(d1, d3)
    if case == "spread-low":
        return case, _spread_low(d1, d2, d3)
    if case == "equal":
        return case, _equal(d1)
    if case == "twin-high":
        return case, _twin_high(d1, d3)
    if case == "top-pair":
        return case, _top_pair(d1, d2)
    return case, _spread_high(d1, d2, d3)


def closed_form_gin(d1: int, d2: int, d3: int) -> MonomialIdeal:
    """The three-variable constructor solution written down from its degree regime.

    The result is checked to be strongly stable with the complete
    intersection Hilbert function before it is returned.
    """
    degrees = tuple(sorted((d1, d2, d3)))
    _, (free, layers) = _family(degrees)
    ideal = _assemble(free, layers)
    if not is_strongly_stable(ideal):
        raise AssertionError(f"closed form for {degrees} is not strongly stable")
    target = hilbert_ci(degrees)
    got = hilbert_quotient(ideal, len(target))
    if tuple(got.values[: len(target)]) != target.values or got[len(target)] != 0:
        raise AssertionError(f"closed form for {degrees} has Hilbert function {list(got)}")
    return ideal


def generator_count(d1: int, d2: int, d3: int) -> int:
    """Number of minimal generators of :func:`closed_form_gin`, from the regime formula."""
    degrees = tuple(sorted((d1, d2, d3)))
    case = classify_triple(degrees)
    a, b, c = degrees
    if case == "twin-low":
        count = a * a + a + 1
    elif case == "spread-low":
        count = 1 + a + a * b
    elif case == "equal":
        count = 1 + a * (a + 1) // 2 + ((a + 1) ** 2 // 4 if a % 2 else a * (a + 2) // 4)
    elif case == "twin-high":
        gap = 2 * a - c
        count = a * (a + 1) + 1 - (gap * gap // 4 if gap % 2 == 0 else (gap * gap - 1) // 4)
    elif case == "top-pair":
        # parity of d1 decides the correction term
        count = a * (b + 1) + 1 - (a * a // 4 if a % 2 == 0 else (a * a - 1) // 4)
    else:
        alpha = a + b - c
        count = a * (b + 1) + 1 - (alpha * alpha // 4 if alpha % 2 == 0 else (alpha * alpha - 1) // 4)
    actual = len(closed_form_gin(*degrees).gens)
    if count != actual:
        raise AssertionError(f"generator count {count} differs from {actual} for {degrees}")
    return count
