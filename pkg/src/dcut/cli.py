"""Command-line interface: ``dcut <verb> ...``.

Exit codes: 0 for a yes-decision or success, 1 for a no-decision or a failed
validation, 2 for usage errors, unreadable input and class violations.
"""
import argparse
import json
import logging
import sys

from . import __version__
from .colouring import bichromatic_edges, validate_colouring
from .config import ORACLE_GUARD_ENV
from .domination import min_dominating_set
from .exceptions import DCutError, PreconditionError, Unsupported
from .graph import diameter, is_connected, line_graph, mask_of, radius
from .io import certificate_from_json, certificate_to_json, dump_json, emit_graph6, load_json, read_graph
from .patterns import RECOGNIZED, find_induced

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

log = logging.getLogger("dcut")


def _fmt(value):
    return "inf" if value == float("inf") else str(value)


def cmd_solve(args):
    from .solvers import solve

    g = read_graph(args.input)
    try:
        outcome = solve(g, args.d, args.algo)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.evidence is not None:
            print(f"evidence: {json.dumps(_jsonable(exc.evidence))}", file=sys.stderr)
        return EXIT_ERROR
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("YES" if outcome.decision else "NO")
    print(f"algorithm: {outcome.algorithm}", file=sys.stderr)
    if args.stats:
        print(json.dumps(outcome.stats.to_json()), file=sys.stderr)
    if outcome.decision and args.witness:
        dump_json(certificate_to_json(outcome.certificate), args.witness)
    return EXIT_YES if outcome.decision else EXIT_NO


def _jsonable(evidence):
    if isinstance(evidence, (list, tuple, set, frozenset)):
        return [_jsonable(x) for x in evidence]
    return evidence


def cmd_verify(args):
    g = read_graph(args.graph)
    cert = certificate_from_json(load_json(args.certificate))
    try:
        problems = [str(v) for v in validate_colouring(g, cert.red, cert.blue, cert.d)]
    except ValueError as exc:
        problems = [str(exc)]
    else:
        actual = set(bichromatic_edges(g, mask_of(cert.red)))
        listed = set(cert.cut_edges)
        for u, v in sorted(listed - actual):
            problems.append(f"listed cut edge {u}-{v} is not a bichromatic edge")
        for u, v in sorted(actual - listed):
            problems.append(f"bichromatic edge {u}-{v} missing from cut_edges")
    if problems:
        for p in problems:
            print(p)
        return EXIT_NO
    print(f"valid {cert.d}-cut with {len(cert.cut_edges)} cut edges")
    return EXIT_YES


def recognize(g, dom_cap=6):
    connected = is_connected(g)
    report = {
        "n": g.n,
        "m": g.m,
        "connected": connected,
        "diameter": _fmt(diameter(g)),
        "radius": _fmt(radius(g)),
    }
    for name in RECOGNIZED:
        report[f"{name}-free"] = find_induced(g, name) is None
    dom = min_dominating_set(g, dom_cap) if g.n else frozenset()
    report["domination_number"] = len(dom) if dom is not None else f">{dom_cap}"
    return report


def cmd_recognize(args):
    report = recognize(read_graph(args.input), args.dom_cap)
    if args.json:
        print(json.dumps(report, indent=2))
        return EXIT_YES
    for key, value in report.items():
        if isinstance(value, bool):
            value = "yes" if value else "no"
        print(f"{key}: {value}")
    return EXIT_YES


def _parse_assignment(text, n_vars):
    text = text.strip()
    tokens = text.split(",") if "," in text else list(text)
    truth = {"1": True, "t": True, "true": True, "0": False, "f": False, "false": False}
    try:
        values = tuple(truth[t.strip().lower()] for t in tokens)
    except KeyError as exc:
        raise ValueError(f"bad truth value {exc.args[0]!r}") from None
    if len(values) != n_vars:
        raise ValueError(f"assignment has {len(values)} values for {n_vars} variables")
    return values


def cmd_reduce(args):
    from .gadgets import NAE_ALL_POSITIVE, SPLIT_POS_NEG, build_3p2_gadget, build_line_gadget, parse_dimacs
    from .gadgets.cnf import InvalidInstance, require_valid
    from .gadgets.line_gadget import edge_colouring_to_vertex_masks, validate_line_witness, witness_edge_colouring
    from .gadgets.threep2 import check_witness, witness_colouring_3p2
    from .io import edge_colouring_to_json

    flavour = NAE_ALL_POSITIVE if args.type == "nae-line" else SPLIT_POS_NEG
    with open(args.cnf) as fh:
        inst = parse_dimacs(fh.read())
    try:
        require_valid(inst, flavour)
        gadget = build_line_gadget(inst, args.d) if flavour == NAE_ALL_POSITIVE else build_3p2_gadget(inst, args.d)
    except InvalidInstance as exc:
        for v in exc.violations:
            print(f"violation: {v}", file=sys.stderr)
        return EXIT_ERROR
    _write_text(args.out, emit_graph6(gadget.graph) + "\n")
    if args.roles:
        dump_json(gadget.role_map_json(), args.roles)
    if gadget.pre_graph is not None and args.pre_out:
        _write_text(args.pre_out, emit_graph6(gadget.pre_graph) + "\n")
        if args.roles:
            dump_json([r.to_json(v) for v, r in enumerate(gadget.pre_role_map)], args.roles + ".pre.json")
    print(f"{args.type} gadget: {gadget.graph.n} vertices, {gadget.graph.m} edges", file=sys.stderr)
    if not args.witness_assignment:
        return EXIT_YES
    try:
        assignment = _parse_assignment(args.witness_assignment, inst.n_vars)
        if flavour == NAE_ALL_POSITIVE:
            ec = witness_edge_colouring(inst, assignment, args.d, gadget)
            ok = not validate_line_witness(gadget, ec, args.d)
            red, blue = edge_colouring_to_vertex_masks(gadget, ec)
            witness = {"edge_colouring": edge_colouring_to_json(ec), "red": _bits(red), "blue": _bits(blue)}
        else:
            red, blue = witness_colouring_3p2(inst, assignment, args.d, gadget)
            ok = check_witness(gadget, red, blue, args.d)
            witness = {"red": sorted(red), "blue": sorted(blue)}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    if args.witness_out:
        dump_json(dict(witness, d=args.d, valid=ok), args.witness_out)
    print(f"witness colouring: {'valid' if ok else 'INVALID'}", file=sys.stderr)
    return EXIT_YES if ok else EXIT_NO


def _bits(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args):
    from .generate import GenerationError, generate

    try:
        graphs, report = generate(args.graph_class, args.n, args.count, args.seed, (args.p_min, args.p_max))
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps(exc.report.to_json()), file=sys.stderr)
        return EXIT_ERROR
    _write_text(args.out, "".join(emit_graph6(g) + "\n" for g in graphs))
    print(json.dumps(report.to_json()), file=sys.stderr)
    return EXIT_YES


def cmd_linegraph(args):
    g = read_graph(args.input)
    lg, edges = line_graph(g)
    _write_text(args.out, emit_graph6(lg) + "\n")
    if args.edge_map:
        dump_json([{"vertex": i, "edge": list(e)} for i, e in enumerate(edges)], args.edge_map)
    return EXIT_YES


def cmd_crosscheck(args):
    from .campaign import CampaignConfig, run_campaign

    config = CampaignConfig(
        graph_class=args.graph_class,
        n_min=args.n_min,
        n_max=args.n_max,
        d_values=tuple(args.d),
        trials=args.trials,
        seed=args.seed,
        timeout=args.timeout,
        guard=args.guard,
        algo=args.algo,
        corpus=tuple(args.corpus or ()),
        workers=args.workers,
    )
    report = run_campaign(config)
    report.write(args.json, args.csv)
    summary = report.summary()
    print(json.dumps(summary))
    for r in report.mismatches[:20]:
        print(f"MISMATCH {r.instance_id} {r.graph6} d={r.d}: {r.algo}={r.decision} oracle={r.oracle_decision}")
    return EXIT_NO if report.failed else EXIT_YES


def build_parser():
    from .generate import CLASSES
    from .solvers import ALGORITHMS

    parser = argparse.ArgumentParser(prog="dcut", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"dcut {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", help="decide d-Cut for one graph")
    p.add_argument("input", help="graph6 or edge-list file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="auto")
    p.add_argument("--witness", help="write the certificate JSON here on YES")
    p.add_argument("--stats", action="store_true", help="print branch statistics to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recognize", help="report metric and H-freeness properties")
    p.add_argument("input")
    p.add_argument("--dom-cap", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reduce", help="build a hardness gadget from a CNF file")
    p.add_argument("type", choices=("nae-line", "3p2"))
    p.add_argument("cnf")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default="-", help="gadget graph6 (default stdout)")
    p.add_argument("--roles", help="role map JSON")
    p.add_argument("--pre-out", help="nae-line only: graph6 of the graph before taking its line graph")
    p.add_argument("--witness-assignment", help='truth values, e.g. "TTF" or "1,1,0"')
    p.add_argument("--witness-out", help="write the constructed witness colouring here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="seeded random class members as graph6")
    p.add_argument("graph_class", choices=CLASSES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p-min", type=float, default=0.2)
    p.add_argument("--p-max", type=float, default=0.8)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("linegraph", help="write the line graph of a graph")
    p.add_argument("input")
    p.add_argument("--out", default="-")
    p.add_argument("--edge-map", help="JSON mapping line-graph vertices to edges")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("crosscheck", help="compare a solver with the oracle over many graphs")
    p.add_argument("--class", dest="graph_class", choices=CLASSES, default="connected")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--d", type=int, action="append", help="repeatable; default 2")
    p.add_argument("--trials", type=int, default=0, help="random graphs per n (0 = enumerate or read corpus)")
    p.add_argument("--seed", type=int)
    p.add_argument("--timeout", type=float, help="seconds per oracle call")
    p.add_argument("--guard", type=int, help=f"oracle size guard (default from ${ORACLE_GUARD_ENV})")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="auto")
    p.add_argument("--corpus", action="append", help="graph6 corpus file (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", help="JSON report path")
    p.add_argument("--csv", help="CSV report path")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "d", None) is None and args.verb == "crosscheck":
        args.d = [2]
    try:
        return args.func(args)
    except (OSError, ValueError, DCutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
