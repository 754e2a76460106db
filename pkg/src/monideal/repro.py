"""Reference values regenerated by ``monideal repro``.

Each entry is named after the object it describes.  The committed copy in
``data/golden.json`` is the frozen expectation; ``repro`` recomputes every
entry and reports the names that differ.
"""

from __future__ import annotations

from .borel import regularity_min_stable, regularity_via_chain
from .dfixed import (
    DSequence,
    pardue_regularity,
    powers_of_variables,
    principal_dfixed,
    sbt_principal,
    sbt_regularity,
    socle_bruteforce,
    socle_dfixed,
)
from .gin import check_lefschetz, closed_form_gin, construct_gin, generator_count
from .hilbert import hilbert_ci
from .ideal_core import MonomialIdeal, format_monomial, parse_ideal, parse_monomial

D_MAIN = DSequence.of(1, 2, 4, 12)

BOREL_SIX = "(x1^7, x1^5*x2, x1^2*x2^4, x1*x2^6, x1^5*x3^2, x1*x2^4*x3^2)"
NON_LEFSCHETZ = (
    "(x1^3, x1^2*x2, x1*x2^2, x2^4, x1^2*x3^2, x2^3*x3^2, x1*x2*x3^3, x1*x3^4,"
    " x2^2*x3^4, x2*x3^5, x3^7)"
)

GIN_TRIPLES = [(3, 3, 9), (3, 4, 9), (5, 5, 5), (6, 6, 6), (4, 4, 6), (4, 4, 5), (4, 6, 6), (3, 6, 6), (3, 5, 6), (4, 5, 6)]
GIN_WIDER = [(2, 2, 2, 2), (2, 2, 2, 2, 2), (3, 3, 3, 3)]


def regularity_cases() -> dict[str, MonomialIdeal]:
    return {
        "borel-six-generators": parse_ideal(BOREL_SIX, 4),
        "two-squares": parse_ideal("(x1^2, x2^2)", 2),
        "sbt-x2^7*x3^6": sbt_principal(parse_monomial("x2^7*x3^6", 3)),
        "dfixed-x3^21": principal_dfixed(parse_monomial("x3^21", 3), D_MAIN),
        "dfixed-x1^2*x2^16*x3^9": principal_dfixed(parse_monomial("x1^2*x2^16*x3^9", 3), D_MAIN),
    }


def principal_cases() -> dict[str, MonomialIdeal]:
    return {
        "dfixed-x3^21": principal_dfixed(parse_monomial("x3^21", 3), D_MAIN),
        "dfixed-x1^2*x2^9*x3^16": principal_dfixed(parse_monomial("x1^2*x2^9*x3^16", 3), D_MAIN),
        "sbt-x2^7*x3^6": sbt_principal(parse_monomial("x2^7*x3^6", 3)),
        "powers-x2^7,x3^10,x5^17": powers_of_variables([(2, 7), (3, 10), (5, 17)], D_MAIN, 5),
    }


def _pretty(ideal: MonomialIdeal) -> list[str]:
    return [format_monomial(g) for g in ideal.gens]


def _socle(u: str) -> dict:
    construction = socle_dfixed(parse_monomial(u, 3), D_MAIN)
    report = socle_bruteforce(construction.ideal)
    return {
        "dims": {str(k): v for k, v in report.dims.items()},
        "max_degree": report.max_degree,
        "closed_form_agrees": construction.report().by_degree == report.by_degree,
    }


def reproduce() -> dict[str, object]:
    out: dict[str, object] = {}
    for name, ideal in regularity_cases().items():
        chain = regularity_via_chain(ideal)
        out[f"reg/{name}"] = {
            "chain": chain.regularity,
            "min_stable": regularity_min_stable(ideal),
            "s_values": chain.s_values,
        }
    for name, ideal in principal_cases().items():
        out[f"principal/{name}"] = {"count": len(ideal.gens), "gens": _pretty(ideal)}
    out["sbt-chi/x2^7*x3^6"] = list(sbt_regularity(parse_monomial("x2^7*x3^6", 3)).chi)
    for u in ("x3^21", "x1^2*x2^16*x3^9"):
        report = pardue_regularity(parse_monomial(u, 3), D_MAIN)
        out[f"pardue/{u}"] = {
            "regularity": report.regularity,
            "offset": report.offset,
            "block_values": [b.value for b in report.blocks],
        }
    for u in ("x3^21", "x2^9*x3^16"):
        out[f"socle/{u}"] = _socle(u)
    for triple in GIN_TRIPLES:
        key = "-".join(map(str, triple))
        ideal = closed_form_gin(*triple)
        out[f"hilbert/{key}"] = list(hilbert_ci(triple))
        out[f"gin-closed/{key}"] = {"count": generator_count(*triple), "gens": _pretty(ideal)}
    for degrees in GIN_WIDER:
        result = construct_gin(degrees)
        out[f"gin-construct/{'-'.join(map(str, degrees))}"] = [_pretty(s) for s in result.solutions]
    report = check_lefschetz(parse_ideal(NON_LEFSCHETZ, 3))
    out["lefschetz/non-lefschetz-quotient"] = {
        "weak_holds": report.weak_holds,
        "failures": [[p.t, p.b, format_monomial(p.witness)] for p in report.failures],
    }
    return out
