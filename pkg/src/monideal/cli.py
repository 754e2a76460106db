"""Command-line driver.

Every subcommand builds one JSON envelope::

    {"version": ..., "command": ..., "inputs": {...}, "result": {...},
     "diagnostics": [{"severity": ..., "code": ..., "message": ...}],
     "timing": {"seconds": ...}}

``--json`` prints it verbatim; otherwise the same result fields are printed
one per line.  The exit status is 0 exactly when no diagnostic has severity
``error``.  The layout is described in ``docs/json-schema.md``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .borel import (
    is_borel_type,
    is_sbt,
    is_stable,
    is_strongly_stable,
    regularity_min_stable,
    regularity_via_chain,
    sequential_chain,
)
from .dfixed import (
    DSequence,
    HypothesisError,
    dfixed_closure,
    is_dfixed,
    pardue_regularity,
    powers_of_variables,
    principal_dfixed,
    sbt_principal,
    sbt_regularity,
    socle_bruteforce,
    socle_dfixed,
)
from .gin import (
    check_lefschetz,
    closed_form_gin,
    construct_gin,
    generator_count,
    is_almost_revlex,
)
from .hilbert import divergence_table, hilbert_quotient, jk_counts, piecewise_hilbert
from .ideal_core import (
    IdealError,
    Monomial,
    MonomialIdeal,
    ParseError,
    format_monomial,
    infer_ambient,
    parse_ideal,
    parse_monomial,
)

SCHEMA_VERSION = "1"


class Diagnostics(list):
    def add(self, severity: str, code: str, message: str) -> None:
        self.append({"severity": severity, "code": code, "message": message})

    @property
    def has_error(self) -> bool:
        return any(d["severity"] == "error" for d in self)


# ---------------------------------------------------------------------------
# serialization


def monomial_json(u: Monomial) -> dict:
    return {"exponents": list(u), "pretty": format_monomial(u)}


def ideal_json(ideal: MonomialIdeal) -> dict:
    return {
        "n": ideal.n,
        "gens": [list(g) for g in ideal.gens],
        "pretty": [format_monomial(g) for g in ideal.gens],
    }


def emit_json(envelope: dict) -> bytes:
    return json.dumps(envelope, sort_keys=True, ensure_ascii=False).encode("utf-8")


# ---------------------------------------------------------------------------
# input helpers


def _ambient(text: str, args) -> int:
    if args.n is not None:
        return args.n
    if args.infer_n:
        return infer_ambient(text)
    raise IdealError("the ambient variable count is required: pass --n or --infer-n")


def _ideal(text: str, args) -> MonomialIdeal:
    text = text.strip()
    if not text.startswith("("):
        text = f"({text})"
    return parse_ideal(text, _ambient(text, args))


def _monomial(text: str, args) -> Monomial:
    return parse_monomial(text.strip(), _ambient(text, args))


def _dseq(args) -> DSequence:
    if not args.d:
        raise IdealError("a d-sequence is required: pass --d, e.g. --d '1|2|4'")
    return DSequence.parse(args.d)


def _verdict(v) -> dict:
    witness = v.witness
    if witness is not None:
        witness = [list(w) if isinstance(w, tuple) else w for w in witness]
    return {"holds": bool(v.holds), "witness": witness}


# ---------------------------------------------------------------------------
# subcommands; each returns (inputs, result)


def cmd_classify(args, diag: Diagnostics):
    ideal = _ideal(args.ideal, args)
    result = {
        "stable": _verdict(is_stable(ideal)),
        "strongly_stable": _verdict(is_strongly_stable(ideal)),
        "sbt": _verdict(is_sbt(ideal)),
        "borel_type": _verdict(is_borel_type(ideal)),
    }
    inputs = {"ideal": ideal_json(ideal)}
    if args.d:
        d = _dseq(args)
        inputs["d"] = str(d)
        result["d_fixed"] = _verdict(is_dfixed(ideal, d))
    return inputs, result


def cmd_chain(args, diag: Diagnostics):
    ideal = _ideal(args.ideal, args)
    chain = sequential_chain(ideal)
    links = [{"pivot": link.pivot, "ideal": ideal_json(link.ideal)} for link in chain.links]
    return {"ideal": ideal_json(ideal)}, {"length": len(chain), "pivots": chain.pivots, "links": links}


def cmd_reg(args, diag: Diagnostics):
    ideal = _ideal(args.ideal, args)
    report = regularity_via_chain(ideal)
    second = regularity_min_stable(ideal)
    if report.regularity != second:
        diag.add("error", "route-mismatch", f"chain gives {report.regularity}, truncation gives {second}")
    return {"ideal": ideal_json(ideal)}, {
        "regularity": report.regularity,
        "regularity_min_stable": second,
        "s_values": report.s_values,
        "corner_candidates": [list(c) for c in report.corner_candidates],
    }


def cmd_dfixed_gen(args, diag: Diagnostics):
    u, d = _monomial(args.monomial, args), _dseq(args)
    ideal = principal_dfixed(u, d)
    if dfixed_closure([u], d, len(u)).gens != ideal.gens:
        diag.add("error", "closure-mismatch", "product form and move closure differ")
    return {"monomial": monomial_json(u), "d": str(d)}, {"ideal": ideal_json(ideal), "count": len(ideal.gens)}


def cmd_sbt_gen(args, diag: Diagnostics):
    u = _monomial(args.monomial, args)
    ideal = sbt_principal(u)
    result = {"ideal": ideal_json(ideal), "count": len(ideal.gens)}
    try:
        reg = sbt_regularity(u)
    except HypothesisError as exc:
        diag.add("info", "no-regularity-formula", str(exc))
    else:
        result.update({"chi": list(reg.chi), "regularity": reg.regularity})
    return {"monomial": monomial_json(u)}, result


def cmd_pardue(args, diag: Diagnostics):
    u, d = _monomial(args.monomial, args), _dseq(args)
    report = pardue_regularity(u, d)
    chain = regularity_via_chain(principal_dfixed(u, d)).regularity
    if chain != report.regularity:
        diag.add("error", "route-mismatch", f"formula gives {report.regularity}, chain gives {chain}")
    blocks = [
        {"index": b.index, "exponent": b.exponent, "digits": list(b.digits), "value": b.value}
        for b in report.blocks
    ]
    return {"monomial": monomial_json(u), "d": str(d)}, {
        "regularity": report.regularity,
        "regularity_chain": chain,
        "offset": report.offset,
        "blocks": blocks,
    }


def _socle_json(report) -> dict:
    return {
        "degrees": sorted(report.by_degree),
        "dims": {str(k): v for k, v in sorted(report.dims.items())},
        "max_degree": report.max_degree,
        "basis": {str(k): [format_monomial(u) for u in us] for k, us in sorted(report.by_degree.items())},
    }


def cmd_socle(args, diag: Diagnostics):
    if args.d:
        u, d = _monomial(args.text, args), _dseq(args)
        construction = socle_dfixed(u, d)
        closed = construction.report()
        brute = socle_bruteforce(construction.ideal)
        if closed.by_degree != brute.by_degree:
            diag.add("error", "socle-mismatch", "closed form and brute force differ")
        return {"monomial": monomial_json(u), "d": str(d)}, {
            "socle": _socle_json(brute),
            "predicted_max_degree": construction.predicted_max_degree,
        }
    ideal = _ideal(args.text, args)
    return {"ideal": ideal_json(ideal)}, {"socle": _socle_json(socle_bruteforce(ideal))}


def cmd_powers(args, diag: Diagnostics):
    u, d = _monomial(args.monomial, args), _dseq(args)
    pairs = [(i, a) for i, a in enumerate(u, 1) if a]
    ideal = powers_of_variables(pairs, d, len(u))
    return {"pairs": pairs, "d": str(d)}, {"ideal": ideal_json(ideal), "count": len(ideal.gens)}


def _divergence_diags(divergences, diag: Diagnostics) -> list[dict]:
    rows = []
    for dv in divergences:
        rows.append({"item": dv.item, "k": dv.k, "formula": str(dv.printed), "expected": dv.expected})
        if dv.cause is None:
            diag.add("error", "unexplained-divergence", f"{dv.table} {dv.case}/{dv.item} at k={dv.k}")
    if divergences:
        items = sorted({(dv.table, dv.case, dv.item, dv.cause) for dv in divergences if dv.cause})
        for table, case, item, cause in items:
            diag.add("warning", "known-divergence", f"{table} {case}/{item}: {cause}")
    return rows


def cmd_hilbert(args, diag: Diagnostics):
    if args.ideal:
        ideal = _ideal(args.ideal, args)
        upto = args.upto if args.upto is not None else 10
        return {"ideal": ideal_json(ideal), "upto": upto}, {"values": list(hilbert_quotient(ideal, upto))}
    if not args.degrees:
        raise IdealError("give degrees or --ideal")
    degrees = [int(x) for x in args.degrees]
    result: dict[str, Any] = {}
    if args.nd or len(degrees) == 3:
        piece = piecewise_hilbert(degrees, args.nd)
        counts = jk_counts(degrees, args.nd)
        result.update(
            {
                "case": piece.case,
                "values": list(piece.values),
                "jk": list(counts.counts),
                "divergences": _divergence_diags(piece.divergences + counts.divergences, diag),
            }
        )
    else:
        from .hilbert import ambient_count, hilbert_ci

        values = hilbert_ci(degrees)
        n = len(degrees)
        result.update(
            {"values": list(values), "jk": [ambient_count(n, k) - values[k] for k in range(len(values) + 1)]}
        )
    return {"degrees": degrees, "nd": args.nd}, result


def cmd_gin_closed(args, diag: Diagnostics):
    d1, d2, d3 = args.degrees
    ideal = closed_form_gin(d1, d2, d3)
    return {"degrees": [d1, d2, d3]}, {
        "ideal": ideal_json(ideal),
        "generator_count": generator_count(d1, d2, d3),
        "almost_revlex": bool(is_almost_revlex(ideal)),
    }


def cmd_gin_construct(args, diag: Diagnostics):
    result = construct_gin(args.degrees, budget=args.budget, revlex_lowest=not args.free_lowest)
    return {"degrees": list(args.degrees), "revlex_lowest": not args.free_lowest}, {
        "solutions": len(result),
        "nodes": result.nodes,
        "ideals": [ideal_json(s) for s in result.solutions],
    }


def cmd_lefschetz(args, diag: Diagnostics):
    ideal = _ideal(args.ideal, args)
    report = check_lefschetz(ideal, strong=not args.weak)
    failures = [{"t": p.t, "b": p.b, "mode": p.mode, "witness": format_monomial(p.witness)} for p in report.failures]
    return {"ideal": ideal_json(ideal), "strong": not args.weak}, {
        "element": report.element,
        "holds": report.holds,
        "weak_holds": report.weak_holds,
        "pairs_checked": len(report.pairs),
        "failures": failures,
    }


def cmd_almost_revlex(args, diag: Diagnostics):
    ideal = _ideal(args.ideal, args)
    v = is_almost_revlex(ideal)
    witness = None if v.witness is None else [format_monomial(w) for w in v.witness]
    return {"ideal": ideal_json(ideal)}, {"holds": v.holds, "witness": witness}


# ---------------------------------------------------------------------------
# reproduction of the acceptance values


def _data_path(name: str) -> Path:
    return Path(str(resources.files("monideal") / "data" / name))


def cmd_repro(args, diag: Diagnostics):
    from .repro import reproduce

    current = {"golden": reproduce(), "divergences": divergence_table()}
    files = {"golden": Path(args.golden) if args.golden else _data_path("golden.json")}
    files["divergences"] = Path(args.divergences) if args.divergences else _data_path("hilbert_divergences.json")
    diffs = []
    for key, path in files.items():
        if args.write:
            path.write_text(json.dumps(current[key], indent=1, sort_keys=True) + "\n")
            continue
        stored = json.loads(path.read_text())
        if key == "golden":
            for name in sorted(set(stored) | set(current[key])):
                if stored.get(name) != current[key].get(name):
                    diffs.append(name)
                    diag.add("error", "golden-diff", f"{name} differs from {path.name}")
        elif stored != current[key]:
            diffs.append("divergences")
            diag.add("error", "golden-diff", f"divergence table differs from {path.name}")
    return {"files": {k: str(v) for k, v in files.items()}, "write": args.write}, {
        "entries": len(current["golden"]),
        "diffs": diffs,
    }


# ---------------------------------------------------------------------------
# driver


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monideal", description="Monomial ideal combinatorics.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON envelope")
    common.add_argument("--n", type=int, help="number of variables")
    common.add_argument("--infer-n", action="store_true", help="take n from the largest variable index")
    common.add_argument("--d", help="d-sequence such as '1|2|4|12'")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    add("classify", cmd_classify, "stability classes with witnesses").add_argument("ideal")
    add("chain", cmd_chain, "sequential saturation chain").add_argument("ideal")
    add("reg", cmd_reg, "regularity by both routes").add_argument("ideal")
    add("dfixed-gen", cmd_dfixed_gen, "generators of a principal d-fixed ideal").add_argument("monomial")
    add("sbt-gen", cmd_sbt_gen, "generators of a principal SBT ideal").add_argument("monomial")
    add("pardue", cmd_pardue, "regularity of a principal d-fixed ideal").add_argument("monomial")
    add("socle", cmd_socle, "socle of a quotient, or of a principal d-fixed ideal with --d").add_argument("text")
    add("powers", cmd_powers, "d-fixed ideal generated by powers of variables").add_argument("monomial")
    p = add("hilbert", cmd_hilbert, "Hilbert function of a complete intersection or quotient")
    p.add_argument("degrees", nargs="*")
    p.add_argument("--nd", action="store_true", help="read the degrees as (n, d)")
    p.add_argument("--ideal", help="monomial ideal instead of degrees")
    p.add_argument("--upto", type=int)
    add("gin-closed", cmd_gin_closed, "closed-form three-variable Gin").add_argument("degrees", type=int, nargs=3)
    p = add("gin-construct", cmd_gin_construct, "backtracking Gin constructor")
    p.add_argument("degrees", type=int, nargs="+")
    p.add_argument("--budget", type=int, help="node cap (default from MONIDEAL_GIN_NODE_BUDGET or 10^6)")
    p.add_argument("--free-lowest", action="store_true", help="do not pin the lowest slice to a revlex segment")
    p = add("lefschetz", cmd_lefschetz, "Lefschetz property of x_n")
    p.add_argument("ideal")
    p.add_argument("--weak", action="store_true")
    add("almost-revlex", cmd_almost_revlex, "almost reverse lexicographic test").add_argument("ideal")
    p = add("repro", cmd_repro, "regenerate acceptance values and diff against the golden files")
    p.add_argument("--golden")
    p.add_argument("--divergences")
    p.add_argument("--write", action="store_true", help="overwrite the golden files")
    return parser


def _human(envelope: dict) -> str:
    lines = [f"{envelope['command']}:"]
    for key, value in envelope["result"].items():
        lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
    for d in envelope["diagnostics"]:
        lines.append(f"  [{d['severity']}] {d['code']}: {d['message']}")
    return "\n".join(lines)


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    diag = Diagnostics()
    start = time.perf_counter()
    inputs: dict = {}
    result: dict = {}
    try:
        inputs, result = args.handler(args, diag)
    except ParseError as exc:
        diag.add("error", "parse", str(exc))
    except (IdealError, OverflowError) as exc:
        diag.add("error", type(exc).__name__, str(exc))
    envelope = {
        "version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "diagnostics": list(diag),
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    if args.json:
        out.write(emit_json(envelope).decode("utf-8") + "\n")
    else:
        out.write(_human(envelope) + "\n")
    return 1 if diag.has_error else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
