"""Monomials, monomial ideals and the ideal algebra the other modules build on.

A monomial is a plain tuple of nonnegative exponents; entry ``i - 1`` is the
exponent of ``x_i``.  Ideals are immutable :class:`MonomialIdeal` values that
always hold their minimal generators in canonical order (degree ascending,
then revlex descending), so structural equality is ideal equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

import numpy as np

Monomial = tuple[int, ...]

MAX_EXPONENT = 2**32 - 1
"""Exponents and degrees are unsigned 32-bit quantities; anything larger is an error."""

_CHUNK = 1 << 22


class IdealError(ValueError):
    """Base class for domain errors raised by this package."""


class AmbientMismatchError(IdealError):
    pass


class ExponentOverflowError(IdealError):
    pass


class DegenerateIdealError(IdealError):
    """Raised when an invariant such as deg(I) is requested for the zero or unit ideal."""


class ParseError(IdealError):
    """Syntax or range error in the text grammar; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int) -> None:
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


# ---------------------------------------------------------------------------
# monomial helpers


def degree(u: Monomial) -> int:
    return sum(u)


def max_var(u: Monomial) -> int:
    """1-based index of the last variable dividing ``u``; 0 for the unit monomial."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i + 1
    return 0


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial ``x_i^power`` in ``n`` variables (``i`` is 1-based)."""
    if not 1 <= i <= n:
        raise IdealError(f"variable index {i} out of range 1..{n}")
    e = [0] * n
    e[i - 1] = power
    return tuple(e)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    w = tuple(a + b for a, b in zip(u, v))
    if w and max(w) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent overflow multiplying {u} by {v}")
    return w


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """``u / gcd(u, v)``, the generator of ``(u) : v``."""
    return tuple(a - min(a, b) for a, b in zip(u, v))


def revlex_key(u: Monomial) -> tuple:
    """Sort key placing monomials by degree ascending and revlex descending.

    Within a degree, ``u > v`` in revlex iff the last nonzero entry of
    ``u - v`` is negative, which is the same as ``u[::-1] < v[::-1]``.
    """
    return (sum(u), u[::-1])


def revlex_greater(u: Monomial, v: Monomial) -> bool:
    """True when ``u > v`` in graded revlex (``x_1 > x_2 > ... > x_n``)."""
    du, dv = sum(u), sum(v)
    if du != dv:
        return du > dv
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return a < b
    return False


def monomials_of_degree(n: int, k: int) -> list[Monomial]:
    """All monomials of degree ``k`` in ``n`` variables, revlex descending."""
    if k < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=revlex_key)
    return out


def _check_exponents(n: int, u: Sequence[int]) -> Monomial:
    if len(u) != n:
        raise AmbientMismatchError(f"monomial {tuple(u)} has length {len(u)}, expected {n}")
    t = tuple(int(a) for a in u)
    for a in t:
        if a < 0:
            raise IdealError(f"negative exponent in {t}")
        if a > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {a} exceeds {MAX_EXPONENT}")
    if sum(t) > MAX_EXPONENT:
        raise ExponentOverflowError(f"degree of {t} exceeds {MAX_EXPONENT}")
    return t


# ---------------------------------------------------------------------------
# vectorised divisibility


def _as_array(monomials: Sequence[Monomial], n: int) -> np.ndarray:
    if not monomials:
        return np.zeros((0, n), dtype=np.int64)
    return np.asarray(monomials, dtype=np.int64).reshape(len(monomials), n)


def divisible_mask(candidates: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask: row ``r`` of ``candidates`` is divisible by some row of ``gens``."""
    k = candidates.shape[0]
    if gens.shape[0] == 0 or k == 0:
        return np.zeros(k, dtype=bool)
    n = candidates.shape[1]
    step = max(1, _CHUNK // max(1, gens.shape[0] * n))
    out = np.empty(k, dtype=bool)
    for start in range(0, k, step):
        block = candidates[start : start + step]
        out[start : start + step] = (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return out


def minimal_subset(monomials: Iterable[Monomial], n: int) -> tuple[Monomial, ...]:
    """Inclusion-minimal elements of a monomial set, in canonical order."""
    by_degree: dict[int, set[Monomial]] = {}
    for u in monomials:
        by_degree.setdefault(sum(u), set()).add(u)
    kept: list[Monomial] = []
    kept_arr = np.zeros((0, n), dtype=np.int64)
    for deg in sorted(by_degree):
        layer = sorted(by_degree[deg], key=revlex_key)
        if kept:
            arr = _as_array(layer, n)
            mask = divisible_mask(arr, kept_arr)
            layer = [u for u, hit in zip(layer, mask) if not hit]
        if layer:
            kept.extend(layer)
            kept_arr = np.vstack([kept_arr, _as_array(layer, n)])
    return tuple(kept)


# ---------------------------------------------------------------------------
# the ideal type


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]`` given by its minimal generators.

    The constructor minimalizes and sorts, so any generating set is accepted.
    The empty set is the zero ideal and ``{1}`` is the unit ideal.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()) -> None:
        if n < 1:
            raise IdealError("ambient variable count must be at least 1")
        checked = [_check_exponents(n, g) for g in gens]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", minimal_subset(checked, n))

    @classmethod
    def _trusted(cls, n: int, gens: tuple[Monomial, ...]) -> "MonomialIdeal":
        """Wrap generators already known to be minimal and canonically sorted."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "gens", gens)
        return obj

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._trusted(n, ())

    @classmethod
    def unit_ideal(cls, n: int) -> "MonomialIdeal":
        return cls._trusted(n, (unit(n),))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls._trusted(n, tuple(variable(i, n) for i in range(1, n + 1)))

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def _require_proper(self, what: str) -> None:
        if self.is_zero():
            raise DegenerateIdealError(f"{what} is undefined for the zero ideal")
        if self.is_unit():
            raise DegenerateIdealError(f"{what} is undefined for the unit ideal")

    def degree(self) -> int:
        """Largest degree of a minimal generator."""
        self._require_proper("deg(I)")
        return max(sum(g) for g in self.gens)

    def max_var(self) -> int:
        """Largest variable index occurring in a minimal generator."""
        self._require_proper("m(I)")
        return max(max_var(g) for g in self.gens)

    def q_bound(self) -> int:
        """``m(I) * (deg(I) - 1) + 1``, the regularity bound for Borel-type ideals."""
        return self.max_var() * (self.degree() - 1) + 1

    def is_artinian(self) -> bool:
        """True when a pure power of every variable lies in the ideal."""
        seen = set()
        for g in self.gens:
            support = [i for i, a in enumerate(g) if a]
            if len(support) == 1:
                seen.add(support[0])
            elif not support:
                return True
        return len(seen) == self.n

    def contains(self, u: Monomial) -> bool:
        return any(all(a <= b for a, b in zip(g, u)) for g in self.gens)

    __contains__ = contains

    def contains_many(self, monomials: Sequence[Monomial]) -> np.ndarray:
        return divisible_mask(_as_array(monomials, self.n), self.gens_array())

    def gens_array(self) -> np.ndarray:
        cached = self.__dict__.get("_gens_array")
        if cached is None:
            cached = _as_array(self.gens, self.n)
            cached.setflags(write=False)
            object.__setattr__(self, "_gens_array", cached)
        return cached

    def is_subset_of(self, other: "MonomialIdeal") -> bool:
        _same_ambient(self, other)
        return all(other.contains(g) for g in self.gens)

    def in_subring(self, k: int) -> "MonomialIdeal":
        """The same generators viewed in ``K[x_1..x_k]``; they must not involve later variables."""
        if any(any(g[k:]) for g in self.gens):
            raise IdealError(f"generators involve variables beyond x{k}")
        return MonomialIdeal._trusted(k, tuple(g[:k] for g in self.gens))

    def degree_slice(self, k: int) -> list[Monomial]:
        """All degree-``k`` monomials of the ideal, revlex descending."""
        cands = monomials_of_degree(self.n, k)
        if not cands:
            return []
        mask = self.contains_many(cands)
        return [u for u, hit in zip(cands, mask) if hit]

    def __str__(self) -> str:
        return format_ideal(self)


def _same_ambient(*ideals: MonomialIdeal) -> int:
    n = ideals[0].n
    for ideal in ideals[1:]:
        if ideal.n != n:
            raise AmbientMismatchError(f"ambient mismatch: {n} vs {ideal.n}")
    return n


# ---------------------------------------------------------------------------
# ideal algebra


def minimalize(monomials: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``monomials`` with its minimal generating set."""
    items = [tuple(u) for u in monomials]
    if n is None:
        if not items:
            raise IdealError("cannot infer the ambient count of an empty set")
        n = len(items[0])
    lengths = {len(u) for u in items}
    if lengths - {n}:
        raise AmbientMismatchError(f"mixed ambient counts {sorted(lengths | {n})}")
    return MonomialIdeal(n, items)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(a, b)
    return MonomialIdeal(n, a.gens + b.gens)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(a, b)
    return MonomialIdeal(n, {mul(u, v) for u in a.gens for v in b.gens})


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(a, b)
    return MonomialIdeal(n, {lcm(u, v) for u in a.gens for v in b.gens})


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise IdealError("negative ideal power")
    result = MonomialIdeal.unit_ideal(a.n)
    for _ in range(k):
        result = ideal_product(result, a)
    return result


def colon(a: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """``(I : v)`` for a monomial ``v``."""
    v = _check_exponents(a.n, v)
    return MonomialIdeal(a.n, {quotient(u, v) for u in a.gens})


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """``(I : J)`` as the intersection of ``(I : v)`` over generators ``v`` of ``J``."""
    n = _same_ambient(a, b)
    if b.is_zero():
        return MonomialIdeal.unit_ideal(n)
    result = colon(a, b.gens[0])
    for v in b.gens[1:]:
        result = ideal_intersection(result, colon(a, v))
    return result


def saturate(a: MonomialIdeal, j: int) -> MonomialIdeal:
    """``(I : x_j^inf)``: drop the ``x_j`` exponent of every generator."""
    if not 1 <= j <= a.n:
        raise IdealError(f"variable index {j} out of range 1..{a.n}")
    if not any(g[j - 1] for g in a.gens):
        return a
    return MonomialIdeal(a.n, {g[: j - 1] + (0,) + g[j:] for g in a.gens})


def truncate(a: MonomialIdeal, e: int) -> MonomialIdeal:
    """``I_{>=e}``, generated by the monomials of ``I`` of degree at least ``e``.

    Generators of degree below ``e`` are replaced by their degree-``e``
    multiples; this is the same as taking the degree-``e`` slice of ``I``
    together with the generators of degree above ``e``.
    """
    if e < 0:
        raise IdealError("truncation degree must be nonnegative")
    low = [g for g in a.gens if sum(g) < e]
    if not low:
        return a
    high = [g for g in a.gens if sum(g) >= e]
    return MonomialIdeal(a.n, list(a.degree_slice(e)) + high)


def shadow(monomials: Iterable[Monomial], n: int | None = None) -> list[Monomial]:
    """``{x_i * u}`` over all variables and inputs, deduplicated and revlex-sorted."""
    items = list(monomials)
    if not items:
        return []
    if n is None:
        n = len(items[0])
    degrees = {sum(u) for u in items}
    if len(degrees) > 1:
        raise IdealError(f"shadow needs equal-degree input, got degrees {sorted(degrees)}")
    out = set()
    for u in items:
        for i in range(n):
            out.add(u[:i] + (u[i] + 1,) + u[i + 1 :])
    return sorted(out, key=revlex_key)


def standard_monomials(a: MonomialIdeal, k: int) -> list[Monomial]:
    """Degree-``k`` monomials outside the ideal, revlex descending."""
    cands = monomials_of_degree(a.n, k)
    if not cands or a.is_zero():
        return cands
    mask = a.contains_many(cands)
    return [u for u, hit in zip(cands, mask) if not hit]


def standard_layers(a: MonomialIdeal) -> Iterator[list[Monomial]]:
    """Standard monomials degree by degree, grown by multiplying the previous layer.

    Stops after the first empty layer, so it terminates exactly when the
    quotient is Artinian; callers of non-Artinian ideals must bound it.
    """
    layer = [] if a.is_unit() else [unit(a.n)]
    while True:
        yield layer
        if not layer:
            return
        grown = shadow(layer, a.n)
        if a.is_zero():
            layer = grown
            continue
        mask = a.contains_many(grown)
        layer = [u for u, hit in zip(grown, mask) if not hit]


# ---------------------------------------------------------------------------
# text grammar


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def integer(self, what: str) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected {what}", self.text, start)
        return int(self.text[start : self.pos]), start

    def at_end(self) -> bool:
        return self.peek() == ""


def _parse_monomial_at(sc: _Scanner, n: int | None) -> dict[int, int] | None:
    """Parse one monomial; returns {index: exponent}, or None for the literal ``1``."""
    if sc.peek() == "1":
        sc.pos += 1
        return {}
    exps: dict[int, int] = {}
    while True:
        sc.expect("x")
        index, ipos = sc.integer("variable index")
        if index < 1 or (n is not None and index > n):
            bound = f"1..{n}" if n is not None else ">= 1"
            raise ParseError(f"variable index {index} out of range {bound}", sc.text, ipos)
        power = 1
        if sc.peek() == "^":
            sc.pos += 1
            power, epos = sc.integer("exponent")
            if power < 1:
                raise ParseError("exponent must be at least 1", sc.text, epos)
            if power > MAX_EXPONENT:
                raise ParseError(f"exponent overflow (max {MAX_EXPONENT})", sc.text, epos)
        total = exps.get(index, 0) + power
        if total > MAX_EXPONENT:
            raise ParseError(f"exponent overflow (max {MAX_EXPONENT})", sc.text, sc.pos)
        exps[index] = total
        if sc.peek() != "*":
            return exps
        sc.pos += 1


def _to_tuple(exps: dict[int, int], n: int, text: str) -> Monomial:
    e = [0] * n
    for i, a in exps.items():
        e[i - 1] = a
    if sum(e) > MAX_EXPONENT:
        raise ParseError(f"degree overflow (max {MAX_EXPONENT})", text, len(text))
    return tuple(e)


def parse_monomial(text: str, n: int | None) -> Monomial:
    """Parse ``x1^5*x2`` style text; ``1`` is the unit.  ``n=None`` infers the ambient count."""
    sc = _Scanner(text)
    exps = _parse_monomial_at(sc, n)
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", text, sc.pos)
    if n is None:
        n = max(exps, default=1)
    return _to_tuple(exps, n, text)


def parse_ideal(text: str, n: int | None) -> MonomialIdeal:
    """Parse ``(m, m, ...)``; ``()`` is accepted for the zero ideal."""
    sc = _Scanner(text)
    sc.expect("(")
    parsed: list[dict[int, int]] = []
    if sc.peek() != ")":
        while True:
            parsed.append(_parse_monomial_at(sc, n))
            if sc.peek() == ",":
                sc.pos += 1
                continue
            break
    sc.expect(")")
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", text, sc.pos)
    if n is None:
        n = max((max(p, default=1) for p in parsed), default=1)
    return MonomialIdeal(n, [_to_tuple(p, n, text) for p in parsed])


def infer_ambient(text: str) -> int:
    """Largest variable index mentioned in ``text`` (at least 1)."""
    sc = _Scanner(text)
    best = 1
    while sc.pos < len(text):
        if text[sc.pos] == "x":
            sc.pos += 1
            start = sc.pos
            while sc.pos < len(text) and text[sc.pos].isdigit():
                sc.pos += 1
            if sc.pos > start:
                best = max(best, int(text[start : sc.pos]))
        else:
            sc.pos += 1
    return best


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    return "(" + ", ".join(format_monomial(g) for g in ideal.gens) + ")"
