"""Command line entry point.

Exit codes: 0 when everything passes, 1 on a failed check or an
inconsistency, 2 on usage errors, hypothesis violations and scale limits.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .centralizers import STRATEGIES_CSE, c_s_of_subsystem, z_of_fusion
from .corpusio import dumps_report, load_catalog, resolve_group, run_catalog
from .errors import FusionkitError, InconsistencyError
from .fusion import (
    FusionLikeSystem,
    alperin_family,
    aut_induced,
    f_conjugates,
    fusion_system,
    inner_automorphisms,
    is_centric,
    is_fully_normalized,
    is_radical,
)
from .permcore import PermGroup, centralizer, intersection, parse_cycles
from .structure import all_subgroups
from .theorems import (
    FAIL,
    PASS,
    check_corollary,
    check_lemma_1,
    check_theorem_a,
    check_theorem_b,
    paper_counterexample,
    proof_trace_theorem_b,
    serialize,
)

VERIFY = {
    "theorem-a": check_theorem_a,
    "theorem-b": check_theorem_b,
    "corollary": check_corollary,
    "lemma1": check_lemma_1,
}


def _exit_code(verdict: str) -> int:
    return {PASS: 0, FAIL: 1}.get(verdict, 2)


def _write_json(path, doc) -> None:
    if path:
        Path(path).write_text(dumps_report(doc))


def _fmt(group: PermGroup) -> str:
    if group.order() <= 12:
        return "{" + ", ".join(str(x) for x in group.elements()) + "}"
    return f"<{', '.join(str(g) for g in group.generators)}> (order {group.order()})"


def _need_subgroup(args, loaded):
    if not args.subgroup:
        raise FusionkitError(f"--subgroup is required for {args.command} {getattr(args, 'what', '')}".strip())
    return loaded.subgroup(args.subgroup)


def cmd_verify(args) -> int:
    loaded = resolve_group(args.group)
    if args.what == "theorem-a":
        report = check_theorem_a(loaded.group, args.prime)
    else:
        report = VERIFY[args.what](loaded.group, _need_subgroup(args, loaded), args.prime)
    print(report.summary())
    _write_json(args.json, report.to_dict())
    return _exit_code(report.verdict)


def cmd_trace(args) -> int:
    loaded = resolve_group(args.group)
    H = _need_subgroup(args, loaded)
    t = parse_cycles(args.element, loaded.group.degree)
    report = proof_trace_theorem_b(loaded.group, H, args.prime, t)
    print(report.summary())
    _write_json(args.json, report.to_dict())
    return _exit_code(report.verdict)


def cmd_counterexample(args) -> int:
    report = paper_counterexample()
    print(report.summary())
    _write_json(args.json, report.to_dict())
    return _exit_code(report.verdict)


def _fusion_report(F: FusionLikeSystem) -> tuple[list[str], dict]:
    rows = ["order\tconjugates\tcentric\tradical\taut_order\tinn_order\trepresentative"]
    classes = []
    seen = set()
    for P in all_subgroups(F.sylow):
        if P.key in seen:
            continue
        conjugates = f_conjugates(F, P)
        seen.update(Q.key for Q in conjugates)
        rep = next(Q for Q in conjugates if is_fully_normalized(F, Q))
        aut, inn = aut_induced(rep, F.ambient), inner_automorphisms(rep)
        flags = (is_centric(F, rep), is_radical(F, rep))
        gens = " ".join(str(g) for g in rep.generators) or "()"
        rows.append(f"{rep.order()}\t{len(conjugates)}\t{int(flags[0])}\t{int(flags[1])}\t{aut.order()}\t{inn.order()}\t{gens}")
        classes.append({
            "representative": serialize(rep),
            "conjugates": len(conjugates),
            "centric": flags[0],
            "radical": flags[1],
            "aut_order": aut.order(),
            "inn_order": inn.order(),
        })
    doc = {
        "prime": F.prime,
        "sylow": serialize(F.sylow),
        "Z(F)": serialize(z_of_fusion(F)),
        "classes": classes,
        "alperin_family": [{"subgroup": serialize(P), "aut_order": a.order()} for P, a in alperin_family(F)],
    }
    return rows, doc


def cmd_compute(args) -> int:
    loaded = resolve_group(args.group)
    G, p = loaded.group, args.prime
    F = fusion_system(G, p)
    if args.what == "zf":
        Z = z_of_fusion(F)
        print(f"S = {_fmt(F.sylow)}")
        print(f"Z(F) = {_fmt(Z)}")
        doc = {"S": serialize(F.sylow), "Z(F)": serialize(Z)}
    elif args.what == "cse":
        H = _need_subgroup(args, loaded)
        E = FusionLikeSystem(H, p, intersection(F.sylow, H))
        CSE = c_s_of_subsystem(F, E, args.strategy)
        CSH = centralizer(F.sylow, H)
        print(f"S = {_fmt(F.sylow)}")
        print(f"T = S ∩ H = {_fmt(E.sylow)}")
        print(f"C_S(E) = {_fmt(CSE)}")
        print(f"C_S(H) = {_fmt(CSH)}")
        doc = {"S": serialize(F.sylow), "T": serialize(E.sylow), "C_S(E)": serialize(CSE), "C_S(H)": serialize(CSH)}
    else:
        rows, doc = _fusion_report(F)
        print(f"# fusion system of {loaded.spec.name} at p={p}; S = {_fmt(F.sylow)}")
        print("\n".join(rows))
        print(f"# Z(F) has order {len(doc['Z(F)'])}; Alperin family size {len(doc['alperin_family'])}")
    _write_json(args.json, doc)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in load_catalog(args.catalog):
            print(f"{entry.id}\t{', '.join(f'{k}={v}' for k, v in entry.expected.items())}")
        return 0
    entries = load_catalog(args.catalog)
    doc = run_catalog(args.filter, args.jobs, entries=entries)
    for entry in doc["catalog"]:
        for result in entry["results"]:
            mark = "ok" if result["matches"] else "MISMATCH"
            print(f"[{mark}] {entry['id']} {result['claim']}: {result['report']['verdict']} (expected {result['expected']})")
    summary = doc["summary"]
    print(f"{summary['matched']}/{summary['claims']} claims matched across {summary['entries']} entries")
    _write_json(args.json, doc)
    return 0 if not summary["mismatched"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionkit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p, subgroup=False):
        p.add_argument("--group", required=True, help="group file, shipped name (e.g. s3xs3) or family:params")
        if subgroup:
            p.add_argument("--subgroup", help="name of a subgroup defined in the group file")
        p.add_argument("--prime", type=int, required=True)
        p.add_argument("--json", metavar="PATH", help="write the machine-readable report here")

    verify = sub.add_parser("verify", help="check one statement on one group")
    verify.add_argument("what", choices=sorted(VERIFY))
    group_args(verify, subgroup=True)
    verify.set_defaults(func=cmd_verify)

    trace = sub.add_parser("trace", help="replay the reduction behind the C_S(E) = C_S(H) proof for one element")
    group_args(trace, subgroup=True)
    trace.add_argument("--element", required=True, help="element of S in cycle notation, e.g. '(3 4 5)'")
    trace.set_defaults(func=cmd_trace)

    counter = sub.add_parser("counterexample", help="reproduce the non-normal S3 x S3 example")
    counter.add_argument("--json", metavar="PATH")
    counter.set_defaults(func=cmd_counterexample)

    compute = sub.add_parser("compute", help="compute Z(F), C_S(E) or a fusion report")
    compute.add_argument("what", choices=["zf", "cse", "fusion-report"])
    group_args(compute, subgroup=True)
    compute.add_argument("--strategy", choices=STRATEGIES_CSE, default="cyclic")
    compute.set_defaults(func=cmd_compute)

    catalog = sub.add_parser("catalog", help="run or list the shipped verification catalog")
    catalog.add_argument("action", choices=["run", "list"])
    catalog.add_argument("--filter", help="substring of an entry id, or a claim name")
    catalog.add_argument("--jobs", type=int, default=1)
    catalog.add_argument("--catalog", metavar="PATH", help="alternative catalog file")
    catalog.add_argument("--json", metavar="PATH")
    catalog.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    except (FusionkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
