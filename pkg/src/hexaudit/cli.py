"""Command-line surface.

Exit codes: 0 = pass, 1 = property violation / infeasible, 2 = usage or
parse error.  All commands are deterministic given their inputs and
declared seeds; reports embed the tool version and an input digest.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .audit import AxiomConfig, audit, default_threads
from .errors import InternalConsistencyError
from .formats import dump_lineset, dumps_report, load_lineset, report_document
from .gf import is_prime_power
from .hexagon import SUPPORTED_Q, build
from .pg import projective_space
from .polygon import find_kgon, girth_and_diameter
from .quadric import parabolic_quadric
from .search import SearchSpec, run as run_search
from .srg import (
    eigenvalues,
    eigenvalues_displayed_sign,
    pencil_graph_params,
    q_feasible,
    q_to_u,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_build(args) -> int:
    if args.q not in SUPPORTED_Q:
        print(
            f"error: unsupported q={args.q}"
            + ("" if is_prime_power(args.q) else " (not a prime power)")
            + f"; supported: {', '.join(map(str, SUPPORTED_Q))}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    ls = build(args.q)
    _write(args.out, dump_lineset(ls))
    print(f"H({args.q}): {len(ls)} lines, {len(ls.point_lines)} points")
    return EXIT_OK


def _load(path: str):
    text = Path(path).read_text()
    return load_lineset(text), text


def cmd_audit(args) -> int:
    try:
        ls, text = _load(args.infile)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.axioms:
        cfg = AxiomConfig.from_names(args.axioms.split(","))
    else:
        cfg = AxiomConfig.all()
    threads = args.threads if args.threads else default_threads()
    rep = audit(ls, cfg, threads=threads)
    doc = report_document("audit", rep.to_dict(), source_text=text)
    _write(args.out, dumps_report(doc))
    for a in rep.axioms:
        status = "pass" if rep.verdicts[a] else "FAIL"
        print(f"{a}: {status}")
        if not rep.verdicts[a] and rep.witnesses.get(a) is not None:
            print(f"  witness: {rep.witnesses[a]}")
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_polygon(args) -> int:
    try:
        ls, _ = _load(args.infile)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        gon = find_kgon(ls, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if gon is None:
        print("none")
    else:
        print(" ".join(str(v) for v in gon.vertices))
    if args.graph:
        girth, diameter = girth_and_diameter(ls)
        print(f"incidence girth: {'none' if girth == float('inf') else girth}")
        print(f"incidence diameter: {diameter}")
    return EXIT_OK


def cmd_classify4(args) -> int:
    if args.q not in (2, 3):
        print("error: classify4 supports q in {2, 3}", file=sys.stderr)
        return EXIT_USAGE
    quad = parabolic_quadric(args.q)
    space = projective_space(6, args.q)
    hist: dict[str, int] = {}
    for sub in space.enumerate_subspaces(4):
        kind, _ = quad.classify_section(sub)
        hist[kind.value] = hist.get(kind.value, 0) + 1
    for kind in sorted(hist):
        print(f"{kind}: {hist[kind]}")
    total = sum(hist.values())
    print(f"total: {total}")
    if args.out:
        doc = report_document("classify4", {"q": args.q, "histogram": dict(sorted(hist.items()))})
        _write(args.out, dumps_report(doc))
    return EXIT_OK


def cmd_srg(args) -> int:
    q = args.q
    if q < 2:
        print("error: need q >= 2", file=sys.stderr)
        return EXIT_USAGE
    params = pencil_graph_params(q)
    feasible = q_feasible(q)
    ev = eigenvalues(params)
    ev_disp = eigenvalues_displayed_sign(params)
    print(f"parameters: (v, k, lambda, mu) = ({params.v}, {params.k}, {params.lam}, {params.mu})")
    print(f"eigenvalues (standard sign): {ev[0]:g}, {ev[1]:g}")
    print(f"eigenvalues (displayed sign): {ev_disp[0]:g}, {ev_disp[1]:g}")
    if feasible:
        print(f"feasible: q={q} (u={q_to_u(q)})")
        return EXIT_OK
    print(f"infeasible: 1+4q={1 + 4 * q} not an odd square")
    return EXIT_VIOLATION


def cmd_search(args) -> int:
    try:
        spec_doc = json.loads(Path(args.spec).read_text())
        spec = SearchSpec.from_dict(spec_doc)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: bad search spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_search(spec)
    prefix = args.out_prefix or "search"
    Path(prefix + ".log").write_text(result.log)
    if result.found is not None:
        Path(prefix + ".lines").write_text(dump_lineset(result.found))
        print(f"found: {len(result.found)} lines -> {prefix}.lines")
    else:
        print("none")
    print(f"log: {prefix}.log")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexaudit",
        description="Split Cayley hexagon construction and intersection-number audits.",
    )
    parser.add_argument("--version", action="version", version=f"hexaudit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="construct the H(q) line set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = subs.add_parser("audit", help="audit a line-set file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--axioms", default=None, help="comma list, e.g. Pt,Pl,Sd (default: all)")
    p.add_argument("--out", default="-")
    p.add_argument("--threads", type=int, default=0,
                   help="audit workers (default: HEXAUDIT_THREADS or cpu count)")
    p.set_defaults(func=cmd_audit)

    p = subs.add_parser("polygon", help="find a k-gon in a line-set file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph", action="store_true",
                   help="also print incidence girth and diameter")
    p.set_defaults(func=cmd_polygon)

    p = subs.add_parser("classify4", help="classify all 4-space quadric sections")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_classify4)

    p = subs.add_parser("srg", help="pencil-graph SRG feasibility for q")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_srg)

    p = subs.add_parser("search", help="run the line-set search harness")
    p.add_argument("--spec", required=True, help="JSON search spec file")
    p.add_argument("--out-prefix", default=None)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
