"""Command-line front end: ``granrough <command> ...``.

Exit codes: 0 success, 1 a counterexample where a claim predicts none,
2 input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from granrough import bigness as bg
from granrough import claims
from granrough import comparison as cmp
from granrough import prerough as pr
from granrough.core_space import SpaceError
from granrough.correspondence import CorrespondenceError, classify
from granrough.io import InputError, load_map, load_rys
from granrough.report import emit_report, emit_text
from granrough.rys import Rys, RysError, admissible, check_axiom, classify_evolution

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


class CliError(Exception):
    """Usage problems detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _subset(rys: Rys, text: str) -> int:
    """``x1,x2`` or ``{}`` for the empty set."""
    text = text.strip().strip("{}").strip()
    names = [t.strip() for t in text.split(",") if t.strip()] if text else []
    try:
        return rys.universe.mask_of(names)
    except (KeyError, ValueError, SpaceError):
        raise CliError(f"unknown element in {text!r}") from None


# -- commands -------------------------------------------------------------------------

def cmd_space(args) -> tuple[Any, int]:
    rys = load_rys(args.input)
    out: dict[str, Any] = {
        "name": rys.name,
        "universe": list(rys.universe.elements),
        "relation": rys.space.kind if rys.space is not None else None,
        "granulation": rys.granulation.style,
        "granules": [{"name": g.name, "members": rys.names(g.mask)} for g in rys.granulation],
        "definite": [rys.names(a) for a in rys.definite("lu")],
        "axioms": {a: check_axiom(rys, a) for a in rys.axioms},
        "admissible": admissible(rys),
    }
    if args.subset is not None:
        a = _subset(rys, args.subset)
        out["subset"] = {"members": rys.names(a), "lower": rys.names(rys.lower(a)),
                         "upper": rys.names(rys.upper(a))}
    return out, EXIT_OK


def _pair(args) -> tuple[Rys, Rys]:
    s1 = load_rys(args.s1)
    s2 = load_rys(args.s2) if args.s2 else s1
    return s1, s2


def cmd_classify(args) -> tuple[Any, int]:
    s1, s2 = _pair(args)
    phi = load_map(args.map, s1, s2)
    return {"map": phi.name, "certificate": classify(phi)}, EXIT_OK


def cmd_compare(args) -> tuple[Any, int]:
    s1, s2 = _pair(args)
    f, g = load_map(args.f, s1, s2), load_map(args.g, s1, s2)
    v = cmp.related(f, g, args.kind)
    back = cmp.related(g, f, args.kind)
    v = cmp.ComparisonVerdict(v.kind, v.holds, v.z0, v.i, v.j, v.reason, v.holds and back.holds)
    return {"f": f.name, "g": g.name, "verdict": v.to_json(s1)}, EXIT_OK


def cmd_evolution(args) -> tuple[Any, int]:
    x, y = load_rys(args.x), load_rys(args.y)
    v = classify_evolution(x, y)
    return {"label": v.label, "relations": v.relations, "granular_inclusion": v.granular_inclusion,
            "admissibility": v.admissibility, "equi_representability": v.equi_representability,
            "satisfied_x": v.satisfied_x, "satisfied_y": v.satisfied_y}, EXIT_OK


def _predicate(rys: Rys, s: bg.FiniteStructure, spec: str) -> bg.BignessPredicate:
    """``delta2:x0=x1,x2``, ``upset:x0=x1`` or ``members:x1;x1,x2``."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    pos = {a: k for k, a in enumerate(rys.carrier)}
    if kind == "members":
        return bg.extensional(s, [pos[_subset(rys, t)] for t in rest.split(";") if t.strip()])
    key, _, value = rest.partition("=")
    if key.strip() != "x0":
        raise CliError(f"predicate {spec!r} needs x0=<subset>")
    x0 = pos[_subset(rys, value)]
    if kind == "upset":
        return bg.upset_predicate(s, x0)
    try:
        return bg.delta_predicate(s, x0, bg.normalize_delta(kind))
    except bg.BignessError as e:
        raise CliError(str(e)) from None


def cmd_bigness(args) -> tuple[Any, int]:
    rys = load_rys(args.input)
    s = bg.structure_of(rys)
    pred = _predicate(rys, s, args.predicate)
    axioms = [a.strip() for a in args.axioms.split(",") if a.strip()] if args.axioms else list(bg.AXIOMS)
    unknown = [a for a in axioms if a not in bg.AXIOMS and a not in bg.DELTAS]
    if unknown:
        raise CliError(f"unknown axioms {unknown}")
    reports = [bg.check_bigness_axiom(pred, a).to_json(s) for a in axioms]
    return {"predicate": {"origin": pred.origin, "members": pred.labels()}, "reports": reports}, EXIT_OK


def _algebra(args) -> pr.PreRoughAlgebra:
    q = pr.quotient_by_rough_equality(load_rys(args.input))
    for _ in range(args.paste):
        q = pr.paste(q)
    if args.product:
        q = pr.product(q, pr.quotient_by_rough_equality(load_rys(args.product)))
    return q


def cmd_prerough(args) -> tuple[Any, int]:
    q = _algebra(args)
    ax = pr.check_prerough_axioms(q)
    out: dict[str, Any] = {
        "algebra": q,
        "axioms": {k: {"holds": v.holds, "witness": [q.labels[i] for i in v.witness] if v.witness else None}
                   for k, v in ax.items()},
        "no_nontrivial_lattice_l_filter": not pr.nontrivial_lattice_l_filters(q, bound=args.bound),
    }
    filters = pr.enumerate_filters(q, bound=args.bound)
    if args.filters:
        out["filters"] = [dict(r.to_json(q), id=k) for k, r in enumerate(filters)]
    if args.supremal:
        rows = []
        for r in (x for x in filters if x.lattice):
            s = pr.supremal(q, r.K)
            rows.append({"K": q.names(r.K), "K_plus": q.names(s.K_plus), "cofine": s.cofine,
                         "plus_is_lattice_l_filter": s.plus_is_lattice_l_filter,
                         "cofine_iff_plus_is_top": s.equivalence_holds})
        st = pr.supremal_structure(q, bound=args.bound)
        out["supremal"] = {"filters": rows, "supremals": [q.names(k) for k in st.supremals],
                           "boolean_under_inclusion": st.boolean_under_inclusion,
                           "boolean_under_plus_order": st.boolean_under_plus_order,
                           "plus_involutive": st.plus_involutive}
    if args.ocpr is not None:
        if not 0 <= args.ocpr < len(filters):
            raise CliError(f"filter id {args.ocpr} out of range 0..{len(filters) - 1}")
        o = pr.ocpr_build(q, filters[args.ocpr].K)
        ver = pr.verify_ocpr(o)
        w = pr.absorption_failure(o)
        out["ocpr"] = {
            "K": q.names(o.K),
            "relation": [[q.labels[x], q.labels[y]] for x in range(q.size) for y in range(q.size)
                         if x != y and o.lhd(x, y)],
            "checks": {k: v.holds for k, v in ver.items()},
            "absorption_failure": [q.labels[w[0]], q.labels[w[1]]] if w else None,
        }
    return out, EXIT_OK


def cmd_verify(args) -> tuple[Any, int]:
    ids = claims.CLAIM_IDS if args.suite == "all" else tuple(s.strip() for s in args.suite.split(","))
    unknown = [i for i in ids if i not in claims.CLAIM_IDS]
    if unknown:
        raise CliError(f"unknown claims {unknown}; known: {', '.join(claims.CLAIM_IDS)}")
    results = claims.run_suite(ids, args.max_size, args.seed, args.max_algebra)
    code = EXIT_COUNTEREXAMPLE if any(r.status == claims.COUNTEREXAMPLE for r in results) else EXIT_OK
    summary = {s: sum(r.status == s for r in results)
               for s in (claims.PASS, claims.COUNTEREXAMPLE, claims.WITNESS, claims.REPORTED)}
    return {"max_size": args.max_size, "seed": args.seed, "max_algebra": args.max_algebra,
            "summary": summary, "claims": [r.to_json() for r in results]}, code


# -- parser -------------------------------------------------------------------------------

def _globals(p: argparse.ArgumentParser, default) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default=default)
    fmt.add_argument("--text", dest="format", action="store_const", const="text", default=default)
    p.add_argument("--max-size", type=int, default=default, help="universe bound for sweeps (default 4)")
    p.add_argument("--seed", type=int, default=default, help="RNG seed for sampled checks (default 42)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="granrough", description="Finite-model workbench for granular rough sets.")
    _globals(p, None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sup = argparse.SUPPRESS

    s = sub.add_parser("space", help="granules, definite elements and axioms of a system")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--subset", help="approximate this subset, e.g. x1,x2")
    s.set_defaults(run=cmd_space)

    for name, fn, hlp in (("classify", cmd_classify, "certificate for a correspondence"),
                          ("compare", cmd_compare, "comparison relation between two maps")):
        c = sub.add_parser(name, help=hlp)
        c.add_argument("-s1", required=True, help="source system")
        c.add_argument("-s2", help="target system (defaults to the source)")
        if name == "classify":
            c.add_argument("-m", "--map", required=True)
        else:
            c.add_argument("--kind", default="theta_lu", type=cmp.normalize_kind)
            c.add_argument("-f", required=True)
            c.add_argument("-g", required=True)
        c.set_defaults(run=fn)

    e = sub.add_parser("evolution", help="evolution label between two systems")
    e.add_argument("-x", required=True)
    e.add_argument("-y", required=True)
    e.set_defaults(run=cmd_evolution)

    b = sub.add_parser("bigness", help="bigness axioms for a predicate")
    b.add_argument("-i", "--input", required=True)
    b.add_argument("--predicate", required=True, help="delta1..5:x0=<subset>, upset:x0=<subset>, members:<s>;<s>")
    b.add_argument("--axioms", help="comma-separated, default all B and BC axioms")
    b.set_defaults(run=cmd_bigness)

    q = sub.add_parser("prerough", help="rough-equality quotient and its filters")
    q.add_argument("-i", "--input", required=True)
    q.add_argument("--filters", action="store_true")
    q.add_argument("--supremal", action="store_true")
    q.add_argument("--ocpr", type=int, metavar="FILTER_ID")
    q.add_argument("--paste", type=int, default=0, metavar="N")
    q.add_argument("--product", metavar="OTHER")
    q.add_argument("--bound", type=int, default=16, help="largest algebra for filter enumeration")
    q.set_defaults(run=cmd_prerough)

    v = sub.add_parser("verify", help="run the claim suite")
    v.add_argument("--suite", default="all", help="all, or comma-separated claim ids")
    v.add_argument("--max-algebra", type=int, default=12)
    v.set_defaults(run=cmd_verify)

    for sp in sub.choices.values():
        _globals(sp, sup)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = args.format or "json"
    args.max_size = 4 if args.max_size is None else args.max_size
    args.seed = 42 if args.seed is None else args.seed
    try:
        result, code = args.run(args)
    except (InputError, CliError, SpaceError, RysError, CorrespondenceError, cmp.ComparisonError,
            bg.BignessError, pr.PreRoughError) as e:
        print(f"granrough {args.command}: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = emit_report(result, args.command) if args.format == "json" else emit_text(result)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
