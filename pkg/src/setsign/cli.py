"""Command-line interface: ``setsign label|induce|check|verify|gen``.

Exit status: 0 when the requested property holds, 1 when it fails (a witness
is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from setsign import __version__
from setsign.analysis import (
    eulerian_label_sum_parity,
    is_balanced,
    is_two_clusterable,
)
from setsign.constructors import (
    Unbalanced,
    balance_compatible_labeling,
    canonical_set_indexer,
    random_valuation,
)
from setsign.errors import NotEulerian, NotSetIndexer, PreconditionViolated, SetSignError
from setsign.graph import Sign, SignedGraph
from setsign.io import (
    default_names,
    parse_signed_graph,
    parse_valuation,
    serialize_signed_graph,
    serialize_valuation_json,
    serialize_valuation_text,
)
from setsign.oracle import Family, random_graph, verify_theorem_suite
from setsign.valuation import induce_signed_graph, is_set_indexer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, allow_unsigned: bool = False):
    return parse_signed_graph(_read(path), source=path, allow_unsigned=allow_unsigned)


def _load_valuation(path: str, names):
    return parse_valuation(_read(path), names, source=path)


def _serialize_valuation(val, names, fmt: str) -> str:
    if fmt == "json":
        return serialize_valuation_json(val, names)
    return serialize_valuation_text(val, names)


def _names_of(vertices, names) -> list[str]:
    return [names[v] for v in sorted(vertices)]


# -- subcommands ------------------------------------------------------------

def cmd_label(args) -> int:
    sg, names = _load_graph(args.graph, allow_unsigned=args.scheme == "canonical")
    if args.scheme == "canonical":
        val = canonical_set_indexer(sg.graph)
    else:
        val = balance_compatible_labeling(sg)
        if isinstance(val, Unbalanced):
            print("unbalanced: no signature-compatible labeling exists")
            print("negative cycle: " + " ".join(names[v] for v in val.cycle.vertices))
            return EXIT_FAIL
    _write(args.out, _serialize_valuation(val, names, args.format))
    return EXIT_OK


def cmd_induce(args) -> int:
    sg, names = _load_graph(args.graph, allow_unsigned=True)
    val, _ = _load_valuation(args.valuation, names)
    _write(args.out, serialize_signed_graph(induce_signed_graph(sg.graph, val), names))
    return EXIT_OK


def _check_balance(sg, names) -> dict:
    res = is_balanced(sg)
    if res:
        bp = res.bipartition
        return {"holds": True, "v1": _names_of(bp.v1, names), "v2": _names_of(bp.v2, names)}
    return {"holds": False, "negative_cycle": [names[v] for v in res.negative_cycle.vertices]}


def _check_two_cluster(sg, names) -> dict:
    try:
        res = is_two_clusterable(sg)
    except PreconditionViolated as exc:
        return {"holds": False, "reason": "Disconnected", "detail": str(exc)}
    if res:
        a, b = res.certificate.clusters
        return {"holds": True, "clusters": [_names_of(a, names), _names_of(b, names)]}
    return {"holds": False, "reason": res.reason.value}


def _check_indexer(sg, val, names) -> dict:
    res = is_set_indexer(sg.graph, val)
    if res:
        return {"holds": True}
    (a, b), (c, d) = res.collision
    return {"holds": False, "colliding_edges": [[names[a], names[b]], [names[c], names[d]]]}


def _check_eulerian(sg, val, names, strict: bool) -> dict:
    try:
        rep = eulerian_label_sum_parity(sg.graph, val, strict=strict)
    except (NotEulerian, NotSetIndexer) as exc:
        return {"holds": False, "reason": type(exc).__name__, "detail": str(exc)}
    return {
        "holds": rep.even and all(c.total % 2 == 0 for c in rep.cycles),
        "total": rep.total,
        "cycles": [
            {
                "vertices": [names[v] for v in c.cycle.vertices],
                "sum": c.total,
                "positive_sum": c.positive_sum,
                "negative_sum": c.negative_sum,
                "negative_edges": c.negative_count,
            }
            for c in rep.cycles
        ],
    }


def _format_result(name: str, res: dict) -> list[str]:
    lines = [f"{name}: {'yes' if res['holds'] else 'no'}"]
    for key, value in res.items():
        if key == "holds":
            continue
        if key == "cycles":
            for c in value:
                lines.append(
                    f"  cycle {' '.join(c['vertices'])}: sum={c['sum']} "
                    f"(positive {c['positive_sum']}, negative {c['negative_sum']} "
                    f"over {c['negative_edges']} edges)"
                )
        elif isinstance(value, list):
            if value and isinstance(value[0], list):
                lines.append(f"  {key}: " + " | ".join(" ".join(x) for x in value))
            else:
                lines.append(f"  {key}: " + " ".join(map(str, value)))
        else:
            lines.append(f"  {key}: {value}")
    return lines


def cmd_check(args) -> int:
    sg, names = _load_graph(args.graph, allow_unsigned=args.valuation is not None)
    val = None
    if args.valuation is not None:
        val, _ = _load_valuation(args.valuation, names)
        sg = induce_signed_graph(sg.graph, val)
    wanted = [k for k in ("balance", "two_cluster", "indexer", "eulerian_sum") if getattr(args, k)]
    if not wanted:
        wanted = ["balance"]
    if val is None and ({"indexer", "eulerian_sum"} & set(wanted)):
        raise UsageError("--indexer and --eulerian-sum need --valuation")
    results = {}
    for k in wanted:
        if k == "balance":
            results[k] = _check_balance(sg, names)
        elif k == "two_cluster":
            results[k] = _check_two_cluster(sg, names)
        elif k == "indexer":
            results[k] = _check_indexer(sg, val, names)
        else:
            results[k] = _check_eulerian(sg, val, names, strict=not args.relaxed)
    if args.json:
        print(json.dumps(results, sort_keys=True, indent=2))
    else:
        for k in wanted:
            print("\n".join(_format_result(k.replace("_", "-"), results[k])))
    return EXIT_OK if all(r["holds"] for r in results.values()) else EXIT_FAIL


def cmd_verify(args) -> int:
    family = Family(
        max_n=args.max_n,
        max_m=args.max_m,
        budget=args.budget,
        random_instances=args.random,
        random_max_n=args.random_max_n,
        random_max_m=args.random_max_m,
        seed=args.seed,
    )
    report = verify_theorem_suite(family)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    g = random_graph(args.n, args.p, rng)
    names = default_names(g.n)
    val = None
    if args.m is not None:
        val = random_valuation(g, args.m, args.seed)
    signs = args.signs or ("induced" if val is not None else "random")
    if signs == "induced":
        if val is None:
            raise UsageError("--signs induced needs --m")
        sg = induce_signed_graph(g, val)
    elif signs == "random":
        sg = SignedGraph(g, tuple(Sign.NEGATIVE if x else Sign.POSITIVE for x in rng.random(g.m) < 0.5))
    else:
        sg = SignedGraph.all_positive(g)
    _write(args.out, serialize_signed_graph(sg, names))
    if val is not None and args.valuation_out:
        _write(args.valuation_out, _serialize_valuation(val, names, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setsign", description="Set-labeled signed graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="construct a set-valuation for a graph")
    p.add_argument("graph", help="signed edge list ('-' for stdin)")
    p.add_argument("--scheme", choices=("canonical", "compatible"), default="canonical")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("induce", help="signed graph induced by a valuation")
    p.add_argument("graph")
    p.add_argument("valuation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("check", help="test properties and print certificates or witnesses")
    p.add_argument("graph")
    p.add_argument("--valuation", help="analyse the signed graph induced by this valuation")
    p.add_argument("--balance", action="store_true")
    p.add_argument("--two-cluster", dest="two_cluster", action="store_true")
    p.add_argument("--indexer", action="store_true")
    p.add_argument("--eulerian-sum", dest="eulerian_sum", action="store_true")
    p.add_argument("--relaxed", action="store_true", help="--eulerian-sum without requiring a set-indexer")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the brute-force theorem suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--random", type=int, default=0, help="number of seeded random instances")
    p.add_argument("--random-max-n", type=int, default=10)
    p.add_argument("--random-max-m", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random graph and valuation")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--m", type=int, help="ground-set size; also draws a random valuation")
    p.add_argument("--signs", choices=("induced", "random", "positive"))
    p.add_argument("--out")
    p.add_argument("--valuation-out")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"setsign: error: {exc}", file=sys.stderr)
    except (SetSignError, OSError, ValueError) as exc:
        print(f"setsign: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
