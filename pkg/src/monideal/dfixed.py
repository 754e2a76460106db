"""d-sequences, d-fixed ideals, their regularity and the socle of their quotients.

A d-sequence ``1 = d_0 | d_1 | ... | d_s`` gives every nonnegative integer a
unique mixed-radix expansion; ``a <=_d b`` compares those expansions digit by
digit.  An ideal is d-fixed when it is closed under the moves
``u * x_j^t / x_i^t`` for ``j < i`` and ``t <=_d nu_i(u)``.

Every closed form here has an independent brute-force counterpart:
:func:`dfixed_closure` for the generator formulas and
:func:`socle_bruteforce` for the socle constructions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .ideal_core import (
    IdealError,
    Monomial,
    MonomialIdeal,
    ParseError,
    colon,
    ideal_intersection,
    minimalize,
    revlex_key,
    saturate,
    variable,
)

_INT64_MAX = 2**63 - 1


class DSequenceError(IdealError):
    pass


class HypothesisError(IdealError):
    """An input violates the hypothesis a closed form is stated under."""


# ---------------------------------------------------------------------------
# d-sequences and digit expansions


@dataclass(frozen=True)
class DSequence:
    """Strictly increasing divisibility chain starting at 1."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms or terms[0] != 1:
            raise DSequenceError(f"a d-sequence must start at 1, got {terms}")
        for a, b in zip(terms, terms[1:]):
            if b <= a or b % a:
                raise DSequenceError(f"{b} does not follow {a} in a d-sequence")

    @classmethod
    def parse(cls, text: str) -> "DSequence":
        parts = text.strip().split("|")
        terms = []
        pos = 0
        for part in parts:
            stripped = part.strip()
            if not stripped.isdigit():
                raise ParseError("expected a positive integer", text, pos)
            terms.append(int(stripped))
            pos += len(part) + 1
        return cls(tuple(terms))

    @classmethod
    def of(cls, *terms: int) -> "DSequence":
        return cls(tuple(terms))

    @property
    def s(self) -> int:
        return len(self.terms) - 1

    def ratio(self, t: int) -> int:
        """``d_{t+1} / d_t``; the top digit has no bound."""
        return self.terms[t + 1] // self.terms[t]

    def __str__(self) -> str:
        return "|".join(str(t) for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)


DDecomposition = tuple[int, ...]
"""Digits ``a_0..a_s`` with ``a = sum a_t d_t`` and ``a_t < d_{t+1}/d_t`` below the top."""


def decompose(a: int, d: DSequence) -> DDecomposition:
    """Greedy top-down expansion: each digit is the quotient of what is left."""
    if a < 0:
        raise DSequenceError("only nonnegative integers have a d-expansion")
    digits = [0] * len(d)
    rest = a
    for t in range(d.s, -1, -1):
        digits[t], rest = divmod(rest, d.terms[t])
    return tuple(digits)


def reconstruct(digits: Sequence[int], d: DSequence) -> int:
    return sum(a * dt for a, dt in zip(digits, d.terms))


def leq_d(a: int, b: int, d: DSequence) -> bool:
    return all(x <= y for x, y in zip(decompose(a, d), decompose(b, d)))


def dominated(b: int, d: DSequence) -> list[int]:
    """All ``t`` with ``t <=_d b``, ascending."""
    digits = decompose(b, d)
    values = [
        reconstruct(choice, d)
        for choice in product(*(range(x + 1) for x in digits))
    ]
    return sorted(values)


def split_leq_d(a: int, b: int, b1: int, b2: int, d: DSequence) -> tuple[int, int]:
    """Split ``a <=_d b1 + b2`` as ``a1 + a2`` with ``a1 <=_d b1`` and ``a2 <=_d b2``.

    Digits are fixed from the top down.  At each position the largest digit
    sum ``c_t <= b1_t + b2_t`` is taken for which the remainder can still be
    written with the lower digit bounds; ``c_t`` is then given to ``a1`` up
    to ``b1_t`` and the excess to ``a2``.  Each share respects its own digit
    bound, so the shares are exactly the expansions of ``a1`` and ``a2``.
    """
    if b != b1 + b2 or min(a, b1, b2) < 0:
        raise DSequenceError(f"need b = b1 + b2 with nonnegative terms, got {b}, {b1}, {b2}")
    if not leq_d(a, b, d):
        raise DSequenceError(f"{a} is not d-dominated by {b} under {d}")
    top1 = decompose(b1, d)
    top2 = decompose(b2, d)
    caps = [x + y for x, y in zip(top1, top2)]
    below = [0] * len(d)
    for t in range(1, len(d)):
        below[t] = below[t - 1] + caps[t - 1] * d.terms[t - 1]

    @lru_cache(maxsize=None)
    def reachable(t: int, rest: int) -> bool:
        if t < 0:
            return rest == 0
        return _digit_choice(t, rest) is not None

    def _digit_choice(t: int, rest: int) -> int | None:
        dt = d.terms[t]
        hi = min(caps[t], rest // dt)
        lo = max(0, -(-(rest - below[t]) // dt))
        for c in range(hi, lo - 1, -1):
            if reachable(t - 1, rest - c * dt):
                return c
        return None

    share1 = [0] * len(d)
    share2 = [0] * len(d)
    rest = a
    for t in range(d.s, -1, -1):
        c = _digit_choice(t, rest)
        if c is None:
            raise AssertionError(f"no admissible split of {a} under {b1}+{b2} for {d}")
        share1[t] = min(top1[t], c)
        share2[t] = c - share1[t]
        rest -= c * d.terms[t]
    return reconstruct(share1, d), reconstruct(share2, d)


# ---------------------------------------------------------------------------
# set products


def _power_set_product(factors: Iterable[list[Monomial]], n: int) -> set[Monomial]:
    """All products choosing one monomial from each factor, deduplicated."""
    current = {tuple([0] * n)}
    for factor in factors:
        current = {tuple(a + b for a, b in zip(u, v)) for u in current for v in factor}
    return current


def _powers_of(indices: Iterable[int], n: int, power: int) -> list[Monomial]:
    """``{x_k^power : k in indices}``."""
    return [variable(k, n, power) for k in indices]


def _blocks(u: Monomial) -> list[tuple[int, int]]:
    """``(i_q, alpha_q)`` for the variables occurring in ``u``, by index."""
    return [(i + 1, a) for i, a in enumerate(u) if a]


def _require_nonunit(u: Monomial) -> None:
    if not any(u):
        raise IdealError("the unit monomial does not generate a proper ideal")


def _digit_factors(indices: range, alpha: int, d: DSequence, n: int) -> list[list[Monomial]]:
    """Factor list of ``prod_t (x_k^{d_t} : k in indices)^{alpha_t}``."""
    out = []
    for t, count in enumerate(decompose(alpha, d)):
        out.extend([_powers_of(indices, n, d.terms[t])] * count)
    return out


# ---------------------------------------------------------------------------
# d-fixed ideals


def principal_dfixed(u: Monomial, d: DSequence) -> MonomialIdeal:
    """Smallest d-fixed ideal containing ``u``, as a product of powered variable sets.

    Block ``q`` contributes ``(x_1^{d_t}, ..., x_{i_q}^{d_t})^{alpha_{q,t}}``
    for every digit of its exponent.
    """
    _require_nonunit(u)
    n = len(u)
    factors: list[list[Monomial]] = []
    for i, alpha in _blocks(u):
        factors.extend(_digit_factors(range(1, i + 1), alpha, d, n))
    return MonomialIdeal(n, _power_set_product(factors, n))


def dfixed_moves(g: Monomial, d: DSequence):
    """Yield ``(i, j, t, g * x_j^t / x_i^t)`` for ``j < i`` and ``0 < t <=_d nu_i(g)``."""
    n = len(g)
    for i in range(2, n + 1):
        a = g[i - 1]
        if not a:
            continue
        for t in dominated(a, d)[1:]:
            for j in range(1, i):
                v = list(g)
                v[i - 1] -= t
                v[j - 1] += t
                yield i, j, t, tuple(v)


def dfixed_closure(gens: Iterable[Sequence[int]], d: DSequence, n: int | None = None) -> MonomialIdeal:
    """Fixpoint of all d-moves applied to the current minimal generators.

    Moves preserve degree, so only finitely many monomials are ever visited.
    Applying moves to generators alone is enough: a move on ``g * w`` splits
    into a move on ``g`` and one on ``w`` with digit-dominated amounts.
    """
    items = [tuple(g) for g in gens]
    if not items:
        raise IdealError("the d-fixed closure needs at least one generator")
    current = minimalize(items, n)
    while True:
        moved = {v for g in current.gens for *_, v in dfixed_moves(g, d)}
        fresh = [v for v in moved if not current.contains(v)]
        if not fresh:
            return current
        current = MonomialIdeal(current.n, current.gens + tuple(fresh))


@dataclass(frozen=True)
class DFixedVerdict:
    """``witness`` is ``(generator, i, j, t)`` for the first move leaving the ideal."""

    holds: bool
    witness: tuple[Monomial, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_dfixed(ideal: MonomialIdeal, d: DSequence) -> DFixedVerdict:
    """Check every d-move of every minimal generator."""
    if not ideal.is_proper_nonzero():
        raise IdealError("d-fixedness is checked on proper nonzero ideals only")
    for g in ideal.gens:
        for i, j, t, v in dfixed_moves(g, d):
            if not ideal.contains(v):
                return DFixedVerdict(False, (g, i, j, t))
    return DFixedVerdict(True)


# ---------------------------------------------------------------------------
# strong Borel type principal ideals


def sbt_principal(u: Monomial) -> MonomialIdeal:
    """``prod_q (x_1^{alpha_q}, ..., x_{i_q}^{alpha_q})``."""
    _require_nonunit(u)
    n = len(u)
    factors = [_powers_of(range(1, i + 1), n, alpha) for i, alpha in _blocks(u)]
    return MonomialIdeal(n, _power_set_product(factors, n))


@dataclass(frozen=True)
class SbtRegularity:
    chi: tuple[int, ...]
    regularity: int


def sbt_regularity(u: Monomial) -> SbtRegularity:
    """``max_q chi_q + 1`` with ``chi_q = alpha_1 + ... + alpha_{q-1} + (alpha_q - 1) i_q``.

    Stated for weakly decreasing exponents only; other inputs are rejected.
    """
    _require_nonunit(u)
    blocks = _blocks(u)
    exps = [a for _, a in blocks]
    if any(a < b for a, b in zip(exps, exps[1:])):
        raise HypothesisError(f"exponents {exps} are not weakly decreasing")
    chi = []
    prefix = 0
    for i, alpha in blocks:
        chi.append(prefix + (alpha - 1) * i)
        prefix += alpha
    return SbtRegularity(tuple(chi), max(chi) + 1)


# ---------------------------------------------------------------------------
# regularity of principal d-fixed ideals


@dataclass(frozen=True)
class PardueBlock:
    index: int
    exponent: int
    digits: DDecomposition
    top_digit: int
    weight: int
    value: int


@dataclass(frozen=True)
class PardueReport:
    """Per-block data and the resulting regularity.

    ``offset`` is the exponent of a leading ``x_1`` factor, which only
    shifts the regularity; ``blocks`` describes what remains after it.
    """

    blocks: tuple[PardueBlock, ...]
    offset: int
    regularity: int

    @property
    def corners(self) -> list[tuple[int, int]]:
        """Candidate corners ``(i_q, D_q - 1)``, with ``(1, alpha_1)`` for a leading ``x_1``."""
        out = [(1, self.offset)] if self.offset else []
        return out + [(b.index, b.value - 1) for b in self.blocks]


def pardue_regularity(u: Monomial, d: DSequence) -> PardueReport:
    """``max_q D_q`` with ``D_q = d_{q,s_q} + (i_q - 1)(d_{s_q} - 1)``.

    ``s_q`` is the top nonzero digit of ``alpha_q`` and ``d_{q,s_q}`` sums
    the digits at positions ``>= s_q`` of every block up to ``q``.
    """
    _require_nonunit(u)
    blocks = _blocks(u)
    offset = 0
    if blocks[0][0] == 1:
        offset = blocks[0][1]
        blocks = blocks[1:]
    if not blocks:
        return PardueReport((), offset, offset)
    digits = [decompose(alpha, d) for _, alpha in blocks]
    out = []
    for q, (i, alpha) in enumerate(blocks):
        sq = max(t for t, a in enumerate(digits[q]) if a)
        weight = sum(
            digits[e][j] * d.terms[j] for e in range(q + 1) for j in range(sq, len(d))
        )
        value = weight + (i - 1) * (d.terms[sq] - 1)
        out.append(PardueBlock(i, alpha, digits[q], sq, weight, value))
    return PardueReport(tuple(out), offset, offset + max(b.value for b in out))


# ---------------------------------------------------------------------------
# socle


@dataclass(frozen=True)
class SocleReport:
    """Socle monomials of ``S/I`` grouped by degree."""

    by_degree: dict[int, tuple[Monomial, ...]]

    @property
    def dims(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.by_degree.items()}

    @property
    def max_degree(self) -> int:
        return max(self.by_degree)

    @property
    def basis(self) -> list[Monomial]:
        return [w for k in sorted(self.by_degree) for w in self.by_degree[k]]


def _group(monomials: Iterable[Monomial]) -> dict[int, tuple[Monomial, ...]]:
    grouped: dict[int, list[Monomial]] = {}
    for w in monomials:
        grouped.setdefault(sum(w), []).append(w)
    return {k: tuple(sorted(v, key=revlex_key)) for k, v in sorted(grouped.items())}


def saturate_by_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """``(I : m^inf)``, the intersection of the single-variable saturations.

    ``w`` kills a power of ``m`` exactly when it kills a power of each
    variable, since ``m^{n(N-1)+1}`` lies in ``(x_1^N, ..., x_n^N)``.
    """
    result = saturate(ideal, 1)
    for i in range(2, ideal.n + 1):
        result = ideal_intersection(result, saturate(ideal, i))
    return result


def torsion_monomials(ideal: MonomialIdeal) -> list[Monomial]:
    """Monomials of ``(I : m^inf)`` outside ``I``; a finite set for any proper nonzero ``I``.

    Walked degree by degree from the generators of the saturation: the
    complement of ``I`` is closed under division, so each such monomial is
    reached by single-variable steps that stay outside ``I``.
    """
    if not ideal.is_proper_nonzero():
        raise IdealError("the socle is computed for proper nonzero ideals only")
    sat = saturate_by_maximal(ideal)
    n = ideal.n
    pending: dict[int, set[Monomial]] = {}
    for g in sat.gens:
        if not ideal.contains(g):
            pending.setdefault(sum(g), set()).add(g)
    found: list[Monomial] = []
    layer: set[Monomial] = set()
    k = min(pending, default=0)
    while layer or any(deg >= k for deg in pending):
        layer |= pending.pop(k, set())
        found.extend(layer)
        grown = list({w[:i] + (w[i] + 1,) + w[i + 1 :] for w in layer for i in range(n)})
        mask = ideal.contains_many(grown) if grown else []
        layer = {w for w, hit in zip(grown, mask) if not hit}
        k += 1
    return found


def socle_bruteforce(ideal: MonomialIdeal) -> SocleReport:
    """Monomials ``w`` outside the ideal with ``x_i w`` inside for every ``i``.

    Such ``w`` lie in ``(I : m)``, hence in the saturation, so only the
    finitely many monomials of ``(I : m^inf)`` outside ``I`` are tested.
    """
    n = ideal.n
    found = []
    for w in torsion_monomials(ideal):
        ups = [w[:i] + (w[i] + 1,) + w[i + 1 :] for i in range(n)]
        if ideal.contains_many(ups).all():
            found.append(w)
    return SocleReport(_group(found))


@dataclass(frozen=True)
class SocleConstruction:
    """An ideal ``J`` with ``Soc(S/I) = (J + I)/I``, built piece by piece.

    ``pieces`` maps a label to its ideal, ``predicted_degrees`` maps the
    same label to the degree its socle elements are claimed to sit in and
    ``predicted_dims`` (when known in closed form) to their number.
    """

    ideal: MonomialIdeal
    pieces: dict[tuple, MonomialIdeal]
    predicted_degrees: dict[tuple, int]
    predicted_dims: dict[tuple, int] = field(default_factory=dict)
    predicted_max_degree: int | None = None

    @property
    def generator(self) -> MonomialIdeal:
        gens = [g for piece in self.pieces.values() for g in piece.gens]
        return MonomialIdeal(self.ideal.n, gens)

    def report(self) -> SocleReport:
        """Monomials of ``J`` outside the ideal (all of them lie in its saturation)."""
        candidates = torsion_monomials(self.ideal)
        mask = self.generator.contains_many(candidates) if candidates else []
        return SocleReport(_group(w for w, hit in zip(candidates, mask) if hit))


def _checked_binomial(top: int, bottom: int) -> int:
    value = comb(top, bottom)
    if value > _INT64_MAX:
        raise OverflowError(f"binomial({top}, {bottom}) exceeds 64 bits")
    return value


def _checked_product(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out *= v
        if out > _INT64_MAX:
            raise OverflowError("socle dimension exceeds 64 bits")
    return out


def socle_principal_power(alpha: int, d: DSequence, n: int) -> SocleConstruction:
    """Socle of ``S / <x_n^alpha>_d``.

    For every nonzero digit ``alpha_t`` the piece is
    ``(x_1...x_n)^{d_t - 1} (m^[d_t])^{alpha_t - 1} prod_{j>t} (m^[d_j])^{alpha_j}``,
    sitting in degree ``q_t + (n - 1)(d_t - 1) - 1`` where ``q_t`` is the
    value of the digits from ``t`` upward.
    """
    if alpha < 1:
        raise IdealError("the exponent must be positive")
    if n < 2:
        raise IdealError("the socle formula needs at least two variables")
    digits = decompose(alpha, d)
    allvars = range(1, n + 1)
    ideal = principal_dfixed(variable(n, n, alpha), d)
    pieces, degrees, dims = {}, {}, {}
    for t, a_t in enumerate(digits):
        if not a_t:
            continue
        dt = d.terms[t]
        factors = [[tuple([dt - 1] * n)]]
        factors += [_powers_of(allvars, n, dt)] * (a_t - 1)
        for j in range(t + 1, len(d)):
            factors += [_powers_of(allvars, n, d.terms[j])] * digits[j]
        pieces[(t,)] = MonomialIdeal(n, _power_set_product(factors, n))
        q_t = sum(digits[j] * d.terms[j] for j in range(t, len(d)))
        degrees[(t,)] = q_t + (n - 1) * (dt - 1) - 1
        dims[(t,)] = _checked_product(
            [_checked_binomial(n + a_t - 2, n - 1)]
            + [_checked_binomial(n + digits[j] - 1, n - 1) for j in range(t + 1, len(d))]
        )
    top = max(t for t, a in enumerate(digits) if a)
    c = digits[top] * d.terms[top] + (n - 1) * (d.terms[top] - 1) - 1
    return SocleConstruction(ideal, pieces, degrees, dims, c)


def socle_index_pairs(alpha_digits: Sequence[DDecomposition]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(lambda, t)``: block chains ending at the last block with rising digit positions.

    Indices are 1-based for blocks and 0-based for digit positions; the
    digit ``alpha_{lambda_v, t_v}`` must be nonzero for every ``v``.
    """
    r = len(alpha_digits)
    out = []
    for a in range(1, r + 1):
        for head in combinations(range(1, r), a - 1):
            lam = head + (r,)
            choices = [
                [t for t, x in enumerate(alpha_digits[q - 1]) if x] for q in lam
            ]
            for ts in product(*choices):
                if all(x < y for x, y in zip(ts, ts[1:])):
                    out.append((lam, tuple(ts)))
    return out


def socle_dfixed(u: Monomial, d: DSequence) -> SocleConstruction:
    """Socle of ``S / <u>_d`` for ``u`` whose last variable is ``x_n``.

    Each pair ``(lambda, t)`` from :func:`socle_index_pairs` gives the piece
    ``prod_e (x_{i_{lambda_{e-1}}+1} ... x_{i_{lambda_e}})^{d_{t_e} - 1}`` times,
    for every ``v``, the set ``m_{lambda_v}^[d_{t_{v+1}}]`` (omitted for the
    last ``v``), the digits of block ``lambda_v`` above ``t_v``, one fewer copy
    of its digit at ``t_v``, and the digits at ``>= t_v`` of the blocks
    strictly between ``lambda_{v-1}`` and ``lambda_v``.
    """
    _require_nonunit(u)
    n = len(u)
    blocks = _blocks(u)
    if blocks[-1][0] != n:
        raise HypothesisError(f"the last variable x_{n} must divide {u}")
    if blocks[0][0] == 1:
        raise HypothesisError("the socle formula assumes x_1 does not divide the generator")
    idx = [0] + [i for i, _ in blocks]
    digits = [decompose(alpha, d) for _, alpha in blocks]
    width = len(d)
    ideal = principal_dfixed(u, d)

    def m(q: int, t: int) -> list[Monomial]:
        return _powers_of(range(1, idx[q] + 1), n, d.terms[t])

    pieces, degrees = {}, {}
    for lam, ts in socle_index_pairs(digits):
        a = len(lam)
        chain = (0,) + lam
        corner = [0] * n
        for e in range(1, a + 1):
            for k in range(idx[chain[e - 1]] + 1, idx[chain[e]] + 1):
                corner[k - 1] = d.terms[ts[e - 1]] - 1
        factors = [[tuple(corner)]]
        weight = 0
        for v in range(1, a + 1):
            q, t = lam[v - 1], ts[v - 1]
            if v < a:
                factors.append(m(q, ts[v]))
            for j in range(t + 1, width):
                factors += [m(q, j)] * digits[q - 1][j]
            factors += [m(q, t)] * (digits[q - 1][t] - 1)
            for p in range(chain[v - 1] + 1, q):
                for j in range(t, width):
                    factors += [m(p, j)] * digits[p - 1][j]
            for p in range(chain[v - 1] + 1, q + 1):
                weight += sum(digits[p - 1][j] * d.terms[j] for j in range(t, width))
        pieces[(lam, ts)] = MonomialIdeal(n, _power_set_product(factors, n))
        degrees[(lam, ts)] = (
            weight
            + sum(
                (idx[chain[v]] - idx[chain[v - 1]]) * (d.terms[ts[v - 1]] - 1)
                for v in range(1, a + 1)
            )
            - d.terms[ts[0]]
        )
    s_r = max(t for t, x in enumerate(digits[-1]) if x)
    top_weight = sum(digits[e][j] * d.terms[j] for e in range(len(blocks)) for j in range(s_r, width))
    c = top_weight + (n - 1) * (d.terms[s_r] - 1) - 1
    return SocleConstruction(ideal, pieces, degrees, {}, c)


# ---------------------------------------------------------------------------
# d-fixed ideals generated by powers of variables


def absorb_powers(pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Drop every ``x_j^alpha`` already inside ``<x_{j'}^beta>_d`` with ``j <= j'``, ``beta <= alpha``."""
    items = sorted(set((int(i), int(a)) for i, a in pairs))
    for i, a in items:
        if i < 1 or a < 1:
            raise IdealError(f"variable power x_{i}^{a} is not a proper generator")
    kept = [
        (i, a)
        for i, a in items
        if not any((j, b) != (i, a) and j >= i and b <= a for j, b in items)
    ]
    for (i, a), (j, b) in zip(kept, kept[1:]):
        if not (i < j and a < b):
            raise AssertionError(f"absorption left non-increasing pairs {kept}")
    return kept


def powers_of_variables(
    pairs: Iterable[tuple[int, int]], d: DSequence, n: int | None = None, validate: bool = True
) -> MonomialIdeal:
    """``<x_{i_1}^{alpha_1}, ..., x_{i_r}^{alpha_r}>_d`` as a sum over admissible splittings.

    Block ``q`` contributes, for every carry-free digit splitting
    ``gamma_1 + ... + gamma_q = alpha_q`` whose proper prefix sums stay below
    the matching ``alpha_i``, the product
    ``prod_e prod_t (x_{i_{e-1}+1}^{d_t}, ..., x_{i_e}^{d_t})^{gamma_{e,t}}``.
    With ``validate`` the result is compared with :func:`dfixed_closure`.
    """
    blocks = absorb_powers(pairs)
    if not blocks:
        raise IdealError("no generators given")
    if n is None:
        n = blocks[-1][0]
    if blocks[-1][0] > n:
        raise IdealError(f"variable index {blocks[-1][0]} exceeds {n}")
    idx = [0] + [i for i, _ in blocks]
    exps = [a for _, a in blocks]
    gens: set[Monomial] = set()
    for q in range(1, len(blocks) + 1):
        for gammas in _splittings(q, exps[q - 1], exps, d):
            factors: list[list[Monomial]] = []
            for e, g in enumerate(gammas, start=1):
                factors.extend(_digit_factors(range(idx[e - 1] + 1, idx[e] + 1), g, d, n))
            gens |= _power_set_product(factors, n)
    result = MonomialIdeal(n, gens)
    if validate:
        oracle = dfixed_closure([variable(i, n, a) for i, a in blocks], d, n)
        if oracle != result:
            raise AssertionError(f"splitting formula disagrees with the closure for {blocks}")
    return result


def _splittings(q: int, target: int, exps: list[int], d: DSequence):
    """Digit splittings ``gamma_1 + ... + gamma_q = target`` with no carries.

    The digits of the ``gamma_e`` add up position by position to the digits
    of ``target``; every proper prefix sum must stay below the matching
    exponent in ``exps``.
    """
    top = decompose(target, d)

    def walk(prefix: tuple[int, ...], left: tuple[int, ...], total: int):
        if len(prefix) == q - 1:
            yield prefix + (reconstruct(left, d),)
            return
        bound = exps[len(prefix)]
        for choice in product(*(range(x + 1) for x in left)):
            g = reconstruct(choice, d)
            if total + g >= bound:
                continue
            rest = tuple(x - y for x, y in zip(left, choice))
            yield from walk(prefix + (g,), rest, total + g)

    yield from walk((), top, 0)


def colon_by_variables(ideal: MonomialIdeal, indices: Iterable[int]) -> MonomialIdeal:
    """``(I : (x_k : k in indices))`` as the intersection of the single-variable colons."""
    result = None
    for k in indices:
        part = colon(ideal, variable(k, ideal.n))
        result = part if result is None else ideal_intersection(result, part)
    if result is None:
        raise IdealError("empty variable set")
    return result
