"""Hilbert functions of monomial quotients and of complete intersections.

:func:`hilbert_ci` expands ``prod_i (1 + t + ... + t^{d_i - 1})`` and is the
reference for everything else.  :func:`hilbert_quotient` counts standard
monomials through the splitting ``S/I -> S/(I : x_n)(-1) -> S/(I + x_n)``.

The closed piecewise formulas for three-variable complete intersections
(split by how the degrees compare) and for equal degrees in any number of
variables are kept as literal transcriptions.  They are evaluated item by
item against :func:`hilbert_ci`; any mismatch is reported as a
:class:`Divergence` instead of being patched over.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .ideal_core import IdealError, Monomial, MonomialIdeal, monomials_of_degree

CACHE_SIZE = int(os.environ.get("MONIDEAL_HILBERT_CACHE", "4096"))


class RegimeError(IdealError):
    """The degrees do not satisfy the inequalities a piecewise formula is stated for."""


@dataclass(frozen=True)
class HilbertFunction:
    """``H(0), ..., H(K)``; values past the end are zero."""

    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def top_degree(self) -> int:
        nz = [k for k, v in enumerate(self.values) if v]
        return nz[-1] if nz else -1

    @property
    def total(self) -> int:
        return sum(self.values)


def hilbert_ci(degrees: Sequence[int]) -> HilbertFunction:
    """Coefficients of ``prod_i (1 + t + ... + t^{d_i - 1})``."""
    if not degrees:
        raise IdealError("at least one degree is required")
    if any(d < 1 for d in degrees):
        raise IdealError(f"degrees must be positive, got {list(degrees)}")
    coeffs = [1]
    for d in degrees:
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                out[i + j] += c
        coeffs = out
    return HilbertFunction(tuple(coeffs))


def ambient_count(n: int, k: int) -> int:
    """Number of degree-``k`` monomials in ``n`` variables."""
    if k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return comb(k + n - 1, n - 1)


# ---------------------------------------------------------------------------
# monomial quotients


def _drop_last(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Generators free of the last variable, as monomials of the smaller ring."""
    return tuple(g[:-1] for g in gens if not g[-1])


@lru_cache(maxsize=CACHE_SIZE)
def _split_count(n: int, gens: tuple[Monomial, ...], upto: int) -> tuple[int, ...]:
    if any(not any(g) for g in gens):
        return (0,) * (upto + 1)
    if n == 0:
        return (1,) + (0,) * upto
    if not gens:
        return tuple(ambient_count(n, k) for k in range(upto + 1))
    cut = MonomialIdeal(n - 1, _drop_last(gens)).gens if n > 1 else _drop_last(gens)
    base = _split_count(n - 1, cut, upto)
    if all(g[-1] == 0 for g in gens):
        out, running = [], 0
        for k in range(upto + 1):
            running += base[k]
            out.append(running)
        return tuple(out)
    reduced = MonomialIdeal(n, [g[:-1] + (max(g[-1] - 1, 0),) for g in gens]).gens
    shifted = _split_count(n, reduced, upto)
    return tuple(base[k] + (shifted[k - 1] if k else 0) for k in range(upto + 1))


def _direct_count(ideal: MonomialIdeal, k: int) -> int:
    cands = monomials_of_degree(ideal.n, k)
    if ideal.is_zero():
        return len(cands)
    return int((~ideal.contains_many(cands)).sum()) if cands else 0


def hilbert_quotient(ideal: MonomialIdeal, upto: int) -> HilbertFunction:
    """``H(S/I, k)`` for ``0 <= k <= upto`` by the splitting recursion.

    Degrees up to 8 are recounted directly and must agree.
    """
    if upto < 0:
        raise IdealError("upto must be nonnegative")
    values = _split_count(ideal.n, ideal.gens, upto)
    for k in range(min(upto, 8) + 1):
        direct = _direct_count(ideal, k)
        if direct != values[k]:
            raise AssertionError(f"splitting recursion gives {values[k]} at degree {k}, direct count {direct}")
    return HilbertFunction(values)


def clear_cache() -> None:
    _split_count.cache_clear()


# ---------------------------------------------------------------------------
# piecewise transcriptions


@dataclass(frozen=True)
class Divergence:
    """A degree where a transcribed formula item disagrees with the product expansion.

    ``table`` is ``hilbert`` for ``H(A, k)`` items and ``counts`` for ``|J_k|`` items.
    """

    table: str
    case: str
    item: str
    k: int
    printed: int
    expected: int

    @property
    def cause(self) -> str | None:
        """Documented cause, or ``None`` for a divergence nobody has explained."""
        return KNOWN_DIVERGENCES.get((self.table, self.case, self.item))


@dataclass(frozen=True)
class PiecewiseResult:
    case: str
    values: HilbertFunction
    divergences: tuple[Divergence, ...]

    @property
    def failing_items(self) -> list[str]:
        return sorted({d.item for d in self.divergences})


Item = tuple[str, Callable[[], Iterable[int]], Callable[[int], int]]


def classify_triple(degrees: Sequence[int]) -> str:
    """Name of the degree regime of a sorted triple ``2 <= d1 <= d2 <= d3``.

    ``twin-low``/``twin-high``: ``d1 = d2 < d3`` with ``2 d1 <= d3 + 1`` or not;
    ``spread-low``/``spread-high``: ``d1 < d2 < d3`` with ``d1 + d2 <= d3 + 1`` or not;
    ``equal``: all three equal; ``top-pair``: ``d1 < d2 = d3``.
    """
    if len(degrees) != 3:
        raise RegimeError(f"expected three degrees, got {list(degrees)}")
    d1, d2, d3 = degrees
    if not 2 <= d1 <= d2 <= d3:
        raise RegimeError(f"degrees must be sorted and at least 2, got {list(degrees)}")
    if d1 == d2 == d3:
        return "equal"
    if d1 == d2:
        return "twin-low" if 2 * d1 <= d3 + 1 else "twin-high"
    if d2 == d3:
        return "top-pair"
    return "spread-low" if d1 + d2 <= d3 + 1 else "spread-high"


def _tri(m: int) -> int:
    return comb(m + 2, 2)


def _sum_desc(top: int, count: int, step: int = 1) -> int:
    """``sum_{i=1}^{count} (top - step * i)``."""
    return sum(top - step * i for i in range(1, count + 1))


def _hilbert_items(case: str, deg: Sequence[int], h: Callable[[int], int]) -> list[Item]:
    """Literal transcriptions of the printed ``H(A, k)`` items.

    ``h`` evaluates the reference function and is used only where an item
    is itself defined by reflection ``H(k) = H(top - k)``.
    """
    if case == "nd":
        n, d = deg
        mid_lo, mid_hi = n * (d - 1) // 2, -(-n * (d - 1) // 2)
        return [
            ("low", lambda: range(0, d), lambda k: ambient_count(n, k)),
            (
                "middle",
                lambda: range(d, mid_lo + 1),
                lambda k: ambient_count(n, k) - n * ambient_count(n, k - d),
            ),
            ("mirror", lambda: range(mid_hi, n * (d - 1) + 1), lambda k: h(n * (d - 1) - k)),
        ]
    d1, d2, d3 = deg
    top = d1 + d2 + d3 - 3
    mirror = lambda k: h(top - k) if top - k >= 0 else 0
    if case == "twin-low":
        d = d1
        return [
            ("low", lambda: range(0, d), _tri),
            ("rise", lambda: range(d - 1, 2 * d - 1), lambda k: comb(d + 1, 2) + _sum_desc(d, k - d + 1)),
            ("plateau", lambda: range(2 * d - 2, d3), lambda k: d * d),
            ("mirror", lambda: range(d3, top + 2), mirror),
        ]
    if case == "spread-low":
        return [
            ("low", lambda: range(0, d1), _tri),
            ("linear", lambda: range(d1 - 1, d2), lambda k: comb(d1 + 1, 2) + (k - d1 + 1) * d1),
            (
                "rise",
                lambda: range(d2 - 1, d2 + d1 - 1),
                lambda k: comb(d1 + 1, 2) + d1 * (d2 - d1) + _sum_desc(d1, k - d2 + 1),
            ),
            ("plateau", lambda: range(d1 + d2 - 2, d3), lambda k: d1 * d2),
            ("mirror", lambda: range(d3, top + 2), mirror),
        ]
    if case == "equal":
        d = d1
        return [
            ("low", lambda: range(0, d), _tri),
            (
                "rise",
                lambda: range(d - 1, d - 1 + (d - 1) // 2 + 1),
                lambda k: _tri(k) - 3 * (k - d + 1) * (k - d + 2) // 2,
            ),
            ("mirror", lambda: range(-(-(3 * d - 3) // 2), top + 2), mirror),
        ]
    if case == "twin-high":
        d = d1
        return [
            ("low", lambda: range(0, d), _tri),
            ("rise", lambda: range(d - 1, d3), lambda k: comb(d + 1, 2) + _sum_desc(d, k - d + 1)),
            (
                "steep",
                lambda: range(d3 - 1, d3 + (2 * d - d3 - 1) // 2),
                lambda k: comb(d + 1, 2) + _sum_desc(d, d3 - d) + _sum_desc(2 * d - d3, k - d3 + 1, 2),
            ),
            ("mirror", lambda: range(-(-(d3 + 2 * d - 3) // 2), top + 2), mirror),
        ]
    if case == "top-pair":
        d = d2
        return [
            ("low", lambda: range(0, d1 - 1), _tri),
            # printed as "k = j + d1 - " with the last term lost; read as d1 - 1
            ("linear", lambda: range(d1 - 1, d), lambda k: comb(d1 + 1, 2) + (k - d1 + 1) * d1),
            (
                "steep",
                lambda: range(d - 1, d + (d1 - 1) // 2),
                lambda k: comb(d1 + 1, 2) + d1 * (d - d1) + _sum_desc(d1, k - d + 1, 2),
            ),
            ("mirror", lambda: range(-(-(d1 + 2 * d - 3) // 2), top + 2), mirror),
        ]
    if case == "spread-high":
        a = d1 + d2 - d3
        return [
            ("low", lambda: range(0, d1 - 1), _tri),
            ("linear", lambda: range(d1 - 1, d2), lambda k: comb(d1 + 1, 2) + (k - d1 + 1) * d1),
            (
                "rise",
                lambda: range(d2 - 1, d3),
                lambda k: comb(d1 + 1, 2) + d1 * (d2 - d1) + _sum_desc(d1, k - d2 + 1),
            ),
            # the printed inner sum runs to d3 - 1 over a summand in j; it is
            # transcribed as printed
            (
                "steep",
                lambda: range(d3 - 1, d3 + (a - 1) // 2),
                lambda k: comb(d1 + 1, 2)
                + d1 * (d2 - d1)
                + (d3 - 1) * (d1 - (k - d3 + 1))
                + _sum_desc(a, k - d3 + 1, 2),
            ),
            ("mirror", lambda: range(d3 + (a - 1) // 2, top + 2), mirror),
        ]
    raise RegimeError(f"unknown case {case!r}")


def _count_items(case: str, deg: Sequence[int], jk: Callable[[int], int]) -> list[Item]:
    """Literal transcriptions of the printed ``|J_k|`` items.

    Items stated as an increment over an earlier ``|J_m|`` take that base
    value from the reference counts ``jk``.
    """
    if case == "nd":
        n, d = deg
        lo, hi = n * (d - 1) // 2, -(-n * (d - 1) // 2)
        return [
            ("low", lambda: range(0, d), lambda k: 0),
            ("middle", lambda: range(d, lo + 1), lambda k: n * ambient_count(n, k - d)),
            (
                "upper",
                lambda: range(hi, (n - 1) * (d - 1)),
                lambda k: _binom(hi + (k - hi) + n - 1, n - 1)
                - _binom(lo - (k - hi) + n - 1, n - 1)
                + n * _binom(lo - d - (k - hi) - n, n - 1),
            ),
            (
                "top",
                lambda: range((n - 1) * (d - 1), n * (d - 1) + 1),
                lambda k: _binom((n - 1) * d + (k - (n - 1) * (d - 1)), n - 1)
                - _binom(n - 1 + d - 1 - (k - (n - 1) * (d - 1)), n - 1),
            ),
        ]
    d1, d2, d3 = deg
    full = d1 + d2 + d3 - 2
    everything = lambda k: ambient_count(3, k)
    if case == "twin-low":
        d = d1
        return [
            ("low", lambda: range(0, d), lambda k: 0),
            ("first", lambda: range(d - 1, 2 * d - 1), lambda k: (k - d + 1) * (k - d + 2)),
            (
                "second",
                lambda: range(2 * d - 2, d3),
                lambda k: d * (d - 1) + 2 * d * (k - 2 * d + 2) + (k - 2 * d + 2) * (k - 2 * d + 1) // 2,
            ),
            (
                "third",
                lambda: range(d3 - 1, d3 + d - 1),
                lambda k: d3 * (d3 + 1) // 2 - d * d + (k - d3 + 1) * d3 + (k - d3 + 1) * (k - d3 + 2),
            ),
            (
                "fourth",
                lambda: range(d + d3 - 2, 2 * d + d3 - 1),
                lambda k: d3 * (d3 - 1) // 2 + d * (d3 - 1) + (k - d - d3 + 2) * (d3 + 2 * d),
            ),
            ("full", lambda: range(2 * d + d3 - 2, 2 * d + d3 + 1), everything),
        ]
    if case == "spread-low":
        e = d2 - d1
        return [
            ("low", lambda: range(0, d1), lambda k: 0),
            ("first", lambda: range(d1 - 1, d2), lambda k: (k - d1 + 1) * (k - d1 + 2) // 2),
            (
                "second",
                lambda: range(d2 - 1, d2 + d1 - 1),
                lambda k: e * (e - 1) // 2 + (k - d2 + 1) * e + (k - d2 + 1) * (k - d2 + 2),
            ),
            (
                "third",
                lambda: range(d1 + d2 - 2, d3),
                lambda k: (d1 * d1 + d2 * d2 - d1 - d2) // 2
                + (k - d1 - d2 + 2) * (d1 + d2)
                + (k - d1 - d2 + 2) * (k - d1 - d2 + 1) // 2,
            ),
            (
                "fourth",
                lambda: range(d3 - 1, d3 + d1 - 1),
                lambda k: (d3 * d3 + d3 - 2 * d1 * d2) // 2 + (k - d3 + 1) * d3 + (k - d3 + 1) * (k - d3 + 2),
            ),
            (
                "fifth",
                lambda: range(d1 + d3 - 2, d2 + d3 - 1),
                lambda k: ((d1 + d3) * (d1 + d3 - 1) + d1 * d1 - d1 - 2 * d1 * d2) // 2
                + (k - d1 - d3 + 2) * (d3 + 2 * d1)
                + (k - d1 - d3 + 2) * (k - d1 - d3 + 1) // 2,
            ),
            (
                "sixth",
                lambda: range(d2 + d3 - 2, d2 + d3 + d1 - 2),
                lambda k: ((d2 + d3) * (d2 + d3 - 1) + d1 * (d1 - 1)) // 2 + (k - d2 - d3 + 2) * (d1 + d2 + d3),
            ),
            ("full", lambda: range(full, full + 3), everything),
        ]
    if case == "equal":
        d = d1
        if d % 2 == 0:
            middle = (
                lambda: range((3 * d - 2) // 2, (3 * d - 2) // 2 + (d - 2) // 2 + 1),
                lambda k: Fraction(3 * d * d + 3 * d * (4 * (k - (3 * d - 2) // 2) + 2), 8)
                + 3 * (k - (3 * d - 2) // 2) * (k - (3 * d - 2) // 2 + 1) // 2,
            )
        else:
            middle = (
                lambda: range((3 * d - 3) // 2, (3 * d - 3) // 2 + (d - 1) // 2 + 1),
                lambda k: Fraction(3 * (d * d - 1) + 12 * (k - (3 * d - 3) // 2) * d, 8)
                + Fraction(3 * (k - (3 * d - 3) // 2) ** 2, 2),
            )
        return [
            ("low", lambda: range(0, d), lambda k: 0),
            ("first", lambda: range(d - 1, d - 1 + (3 * d - 1) // 2 + 1), lambda k: 3 * (k - d + 1) * (k - d + 2) // 2),
            ("middle", *middle),
            ("upper", lambda: range(2 * d - 2, 3 * d - 2), lambda k: 3 * d * (d - 1) // 2 + 3 * (k - 2 * d + 2) * d),
            ("full", lambda: range(3 * d - 2, 3 * d + 1), everything),
        ]
    if case == "twin-high":
        d = d1
        if d3 % 2 == 0:
            k0 = (2 * d + d3 - 2) // 2
            middle = (
                lambda: range(k0, k0 + (2 * d - d3 - 2) // 2 + 1),
                lambda k: Fraction(4 * d * d + 3 * d3 * d3 - 4 * d * d3 + 4 * d, 8)
                + Fraction((k - k0) * (2 * d + d3), 2)
                + 3 * (k - k0) * (k - k0 + 1) // 2,
            )
        else:
            k0 = (2 * d + d3 - 3) // 2
            middle = (
                lambda: range(k0, k0 + (2 * d - d3 - 1) // 2 + 1),
                lambda k: Fraction(3 * d3 * d3 + 4 * d * d - 4 * d * d3 - 3, 2)
                + Fraction((k - k0) * (2 * d + d3 - 3), 2)
                + 3 * (k - k0) * (k - k0 + 1) // 2,
            )
        return [
            ("low", lambda: range(0, d), lambda k: 0),
            ("first", lambda: range(d - 1, d3), lambda k: (k - d + 1) * (k - d + 2)),
            (
                "second",
                lambda: range(d3 - 1, d3 + (2 * d - d3 - 1) // 2),
                lambda k: d3 * d3 + d3 - d * d - d - 2 * d * d3
                + (k - d3 + 1) * (2 * d3 - d)
                + 3 * (k - d3 + 1) * (k - d3 + 2) // 2,
            ),
            ("middle", *middle),
            (
                "upper",
                lambda: range(2 * d - 2, d + d3 - 1),
                lambda k: 3 * d * d - 2 * d + d3 * (d3 + 1) // 2 - 2 * d * d3
                + (4 * d - d3) * (k - 2 * d + 2)
                + (k - 2 * d + 2) * (k - 2 * d + 1),
            ),
            (
                "top",
                lambda: range(d3 + d - 2, d3 + 2 * d - 2),
                lambda k: (d + d3) * (d + d3 - 1) // 2 - d * (d + 1) // 2 + (k - d3 - d + 2) * (2 * d + d3),
            ),
            ("full", lambda: range(full, full + 3), everything),
        ]
    if case == "top-pair":
        d = d2
        if d1 % 2 == 0:
            k0 = (2 * d + d1 - 2) // 2
            middle = (
                lambda: range(k0, k0 + (d1 - 2) // 2 + 1),
                lambda k: Fraction(3 * d1 * d1 + 2 * d1 + 4 * d * d + 4 * d - 4 * d * d1, 8)
                + Fraction((k - k0) * (2 * d + d1), 2)
                + 3 * (k - k0) * (k - k0 + 1) // 2,
            )
        else:
            k0 = (2 * d + d1 - 3) // 2
            middle = (
                lambda: range(k0, k0 + (d1 - 1) // 2 + 1),
                lambda k: Fraction(3 * d1 * d1 + 4 * d * d - 4 * d * d1 - 3, 2)
                + Fraction((k - k0) * (2 * d + d1), 2)
                + Fraction(3 * (k - k0) ** 2, 2),
            )
        return [
            ("low", lambda: range(0, d1), lambda k: 0),
            ("first", lambda: range(d1 - 1, d), lambda k: (k - d1 + 1) * (k - d1 + 2) // 2),
            (
                "second",
                lambda: range(d - 1, d + (d1 - 1) // 2),
                lambda k: (d - d1) * (d - d1 - 1) // 2 + (k - d + 1) * (d - d1) + 3 * (k - d + 1) * (k - d + 2) // 2,
            ),
            ("middle", *middle),
            (
                "upper",
                lambda: range(d1 + d - 2, 2 * d - 1),
                lambda k: d * (d - 1) // 2 + d1 * (d1 - 1)
                + (k - d1 - d + 2) * (2 * d1 + d)
                + (k - d1 - d + 2) * (k - d1 - d + 1) // 2,
            ),
            (
                "top",
                lambda: range(2 * d - 2, 2 * d + d1 - 2),
                lambda k: (2 * d * (2 * d - 1) - d1 * (d1 - 1)) // 2 + (k - 2 * d + 2) * (2 * d + d1),
            ),
            ("full", lambda: range(full, full + 3), everything),
        ]
    if case == "spread-high":
        a = d1 + d2 - d3
        total = d1 + d2 + d3
        if total % 2 == 0:
            k0 = (total - 2) // 2
            middle = (
                lambda: range(k0, k0 + (a - 2) // 2 + 1),
                lambda k: jk((total - 4) // 2) + Fraction((k - k0 + 1) * total, 2) + 3 * (k - k0) * (k - k0 + 1) // 2,
            )
        else:
            k0 = (total - 3) // 2
            middle = (
                lambda: range(k0, k0 + (a - 1) // 2 + 1),
                lambda k: jk((total - 3) // 2) + Fraction((k - k0) * total, 2) + Fraction(3 * (k - k0) ** 2, 2),
            )
        return [
            ("low", lambda: range(0, d1), lambda k: 0),
            ("first", lambda: range(d1 - 1, d2), lambda k: (k - d1 + 1) * (k - d1 + 2) // 2),
            (
                "second",
                lambda: range(d2 - 1, d3),
                lambda k: d2 * (d2 - 1) + (k - d2 + 1) * (d2 - d1) + (k - d2 + 1) * (k - d2 + 2),
            ),
            (
                "third",
                lambda: range(d3 - 1, d3 + (a - 1) // 2),
                lambda k: jk(d3 - 1) + (k - d3 + 1) * (2 * d3 - d1 - d2) + 3 * (k - d3 + 1) * (k - d3 + 2) // 2,
            ),
            ("middle", *middle),
            (
                "upper",
                lambda: range(d1 + d2 - 2, d1 + d3 - 1),
                lambda k: jk(d1 + d2 - 2) + (k - d1 - d2 + 2) * (2 * d1 + 2 * d2 - d3 - 1) + (k - d1 - d2 + 2) ** 2,
            ),
            (
                "upper2",
                lambda: range(d1 + d3 - 2, d2 + d3 - 1),
                lambda k: jk(d1 + d3 - 2)
                + (k - d1 - d3 + 2) * (2 * d1 + d3 - 1)
                + (k - d1 - d3 + 2) * (k - d1 - d3 + 3) // 2,
            ),
            (
                "top",
                lambda: range(d1 + d3 - 2, 2 * d1 + d3 - 1),
                lambda k: jk(d2 + d3 - 1) + (k - d1 - d3 + 2) * total,
            ),
            ("full", lambda: range(full, full + 3), everything),
        ]
    raise RegimeError(f"unknown case {case!r}")


def _binom(top: int, bottom: int) -> int:
    return comb(top, bottom) if top >= 0 and bottom >= 0 else 0


def _resolve(degrees: Sequence[int], n_d: bool) -> tuple[str, tuple[int, ...], tuple[int, ...]]:
    """``(case, formula parameters, full degree list)``.

    With ``n_d`` the input is ``(n, d)``; otherwise it is a triple in any order.
    """
    if n_d:
        degs = _nd_degrees(degrees)
        return "nd", (len(degs), degs[0]), degs
    degs = tuple(sorted(degrees))
    return classify_triple(degs), degs, degs


def _check_items(table: str, case: str, items: list[Item], reference: Callable[[int], int]) -> list[Divergence]:
    out = []
    for name, ks, formula in items:
        for k in ks():
            printed, expected = formula(k), reference(k)
            if printed != expected:
                out.append(Divergence(table, case, name, k, printed, expected))
    return out


def piecewise_hilbert(degrees: Sequence[int], n_d: bool = False) -> PiecewiseResult:
    """Evaluate the closed piecewise ``H(A, k)`` for the regime of ``degrees``.

    ``degrees`` is a triple, or ``(n, d)`` when ``n_d`` is set (equal
    degrees ``d`` in ``n`` variables).  The returned values are those of
    :func:`hilbert_ci`; every degree where a transcribed item differs is
    listed in ``divergences``.
    """
    case, params, degs = _resolve(degrees, n_d)
    ref = hilbert_ci(degs)
    items = _hilbert_items(case, params, ref.__getitem__)
    return PiecewiseResult(case, ref, tuple(_check_items("hilbert", case, items, ref.__getitem__)))


@dataclass(frozen=True)
class CountResult:
    case: str
    counts: tuple[int, ...]
    divergences: tuple[Divergence, ...]

    @property
    def failing_items(self) -> list[str]:
        return sorted({d.item for d in self.divergences})


def jk_counts(degrees: Sequence[int], n_d: bool = False) -> CountResult:
    """``|J_k| = C(k + n - 1, n - 1) - H(k)`` up to one past the top degree.

    The printed closed forms for the regime are evaluated alongside and
    mismatches listed in ``divergences``.
    """
    case, params, degs = _resolve(degrees, n_d)
    ref = hilbert_ci(degs)
    n = len(degs)
    counts = tuple(ambient_count(n, k) - ref[k] for k in range(len(ref) + 1))
    jk = lambda k: ambient_count(n, k) - ref[k]
    items = _count_items(case, params, jk)
    return CountResult(case, counts, tuple(_check_items("counts", case, items, jk)))


def _nd_degrees(pair: Sequence[int]) -> tuple[int, ...]:
    if len(pair) != 2:
        raise RegimeError("expected (n, d)")
    n, d = pair
    if n < 1 or d < 2:
        raise RegimeError(f"need n >= 1 and d >= 2, got {(n, d)}")
    return (d,) * n


# ---------------------------------------------------------------------------
# known divergences of the transcribed items

KNOWN_DIVERGENCES: dict[tuple[str, str, str], str] = {
    ("hilbert", "nd", "middle"): "single inclusion-exclusion correction; wrong once k >= 2d",
    ("hilbert", "spread-high", "steep"): "inner sum runs to d3 - 1 over a j-summand; sum_{i<=d3-d2}(d1-i) fits",
    ("counts", "equal", "first"): "stated range [(3d-1)/2] overlaps the later items; exact for j <= (d-1)/2",
    ("counts", "nd", "middle"): "single inclusion-exclusion correction; wrong once k >= 2d",
    ("counts", "nd", "upper"): "third binomial has a negative top argument and vanishes",
    ("counts", "spread-low", "second"): "base (e)(e-1)/2 with e = d2 - d1 should be e(e+1)/2",
    ("counts", "spread-low", "sixth"): "base exceeds the true count by d1^2",
    ("counts", "spread-high", "second"): "base d2(d2-1) should be e(e+1)/2 with e = d2 - d1",
    ("counts", "spread-high", "top"): "stated start k = j + d1 + d3 - 2 clashes with its base |J_{d2+d3-1}|",
    ("counts", "top-pair", "second"): "base (e)(e-1)/2 with e = d - d1 should be e(e+1)/2",
    ("counts", "top-pair", "middle"): "disagrees with the product expansion",
    ("counts", "top-pair", "top"): "disagrees with the product expansion",
    ("counts", "twin-high", "second"): "disagrees with the product expansion",
    ("counts", "twin-high", "middle"): "disagrees with the product expansion",
}

TRIPLE_SWEEP_MAX = 9
ND_SWEEP = (range(2, 7), range(2, 7))


def _json_number(x) -> int | str:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


def divergence_table() -> dict[str, list[dict]]:
    """Every divergence over the standard sweep, grouped by transcribed item.

    The sweep covers all sorted triples with ``2 <= d_i <= 9`` and ``(n, d)``
    with ``2 <= n, d <= 6``.  Each group carries the cause from
    :data:`KNOWN_DIVERGENCES` (``None`` if the item is not listed) and rows
    ``[degrees, k, formula value, product value]``.
    """
    from itertools import combinations_with_replacement

    inputs: list[tuple[tuple[int, ...], bool]] = [
        (t, False) for t in combinations_with_replacement(range(2, TRIPLE_SWEEP_MAX + 1), 3)
    ]
    inputs += [((n, d), True) for n in ND_SWEEP[0] for d in ND_SWEEP[1]]
    groups: dict[tuple[str, str, str], list] = {}
    for degrees, n_d in inputs:
        for table, result in (("hilbert", piecewise_hilbert(degrees, n_d)), ("counts", jk_counts(degrees, n_d))):
            for dv in result.divergences:
                groups.setdefault((table, dv.case, dv.item), []).append(
                    [list(degrees), dv.k, _json_number(dv.printed), _json_number(dv.expected)]
                )
    out: dict[str, list[dict]] = {"hilbert": [], "counts": []}
    for (table, case, item), rows in sorted(groups.items()):
        out[table].append(
            {"case": case, "item": item, "cause": KNOWN_DIVERGENCES.get((table, case, item)), "rows": rows}
        )
    return out
