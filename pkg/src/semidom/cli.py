"""Command-line front end.

Subcommands: solve, verify, reduce, check-reduction, gen, bench. Every run
writes a single JSON document to stdout. Exit codes: 0 success, 1 invalid
input, 2 verification failure, 3 infeasible instance, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .approx import approx_semitotal
from .domination import DominationKind, exact_min, verify
from .errors import InfeasibleError, SizeCapError
from .formats import (parse_edgelist, parse_intervals, parse_partition,
                      parse_vertex_set, write_edgelist, write_intervals,
                      write_partition)
from .generators import (NAMED_FAMILIES, gen_connected_graph, gen_interval_model,
                         gen_named, gen_split_graph)
from .graph import Graph
from .intervals import IntervalModel, intersection_graph
from .interval_solver import solve_interval
from .reductions import GadgetKind, build_gadget, check_reduction

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION = 2
EXIT_INFEASIBLE = 3
EXIT_SIZE_CAP = 4

_KINDS = {"dom": DominationKind.DOMINATING,
          "total": DominationKind.TOTAL,
          "semitotal": DominationKind.SEMITOTAL}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # unknown flags and bad values exit 1, not 2
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_instance(args) -> tuple[Graph, IntervalModel | None]:
    text = _read(args.input)
    if args.format == "intervals":
        model = parse_intervals(text)
        return intersection_graph(model), model
    return parse_edgelist(text), None


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_solve(args) -> tuple[dict, int]:
    g, model = _load_instance(args)
    t0 = time.perf_counter()
    if args.algo == "exact":
        result = exact_min(g, DominationKind.SEMITOTAL)
    elif args.algo == "interval":
        if model is None:
            raise ValueError("--algo interval requires --format intervals")
        result = solve_interval(model)
    else:
        result = approx_semitotal(g)
    elapsed = (time.perf_counter() - t0) * 1000.0
    ok = verify(g, result, DominationKind.SEMITOTAL).valid
    doc = {
        "algorithm": args.algo,
        "n": g.n,
        "m": g.m,
        "size": len(result),
        "set": list(result),
        "verified": ok,
        "elapsedMs": round(elapsed, 3),
        "extra": {},
    }
    return doc, EXIT_OK if ok else EXIT_VERIFICATION


def _cmd_verify(args) -> tuple[dict, int]:
    g, _ = _load_instance(args)
    members = parse_vertex_set(_read(args.set))
    report = verify(g, members, _KINDS[args.kind])
    doc = {
        "algorithm": "verify",
        "kind": args.kind,
        "n": g.n,
        "m": g.m,
        "size": len(set(members)),
        "set": sorted(set(members)),
        "valid": report.valid,
        "violations": [[v, reason.value] for v, reason in report.violations],
    }
    return doc, EXIT_OK if report.valid else EXIT_VERIFICATION


def _cmd_reduce(args) -> tuple[dict, int]:
    g = parse_edgelist(_read(args.input))
    kind = GadgetKind[args.kind.upper()]
    partition = None
    if kind is GadgetKind.SPLIT:
        if not args.partition:
            raise ValueError("--kind split requires --partition")
        partition = parse_partition(_read(args.partition))
    go = build_gadget(g, kind, partition)
    out = Path(args.output)
    out.write_text(write_edgelist(go.h), encoding="utf-8")
    roles_path = Path(str(out) + ".roles.json")
    roles = {str(v): list(role) for v, role in sorted(go.roles.items())}
    roles_path.write_text(json.dumps(roles, indent=2) + "\n", encoding="utf-8")
    doc = {
        "algorithm": "reduce",
        "kind": args.kind,
        "n": g.n,
        "m": g.m,
        "extra": {
            "h_n": go.h.n,
            "h_m": go.h.m,
            "output": str(out),
            "roles": str(roles_path),
        },
    }
    return doc, EXIT_OK


def _cmd_check_reduction(args) -> tuple[dict, int]:
    kind = GadgetKind[args.kind.upper()]
    partition = None
    if args.input:
        g = parse_edgelist(_read(args.input))
        if kind is GadgetKind.SPLIT:
            if not args.partition:
                raise ValueError("--kind split requires --partition with --input")
            partition = parse_partition(_read(args.partition))
    elif kind is GadgetKind.SPLIT:
        if args.clique is None or args.ind is None:
            raise ValueError("split check needs --clique and --ind (or --input)")
        g, partition = gen_split_graph(args.clique, args.ind, args.density, args.seed)
    else:
        if args.size is None:
            raise ValueError("check needs --input or --size")
        g = gen_connected_graph(args.size, args.p, args.seed)
    report = check_reduction(g, kind, partition)
    doc = {
        "algorithm": "check-reduction",
        "kind": args.kind,
        "holds": report.holds,
        "details": report.details,
    }
    return doc, EXIT_OK if report.holds else EXIT_VERIFICATION


def _cmd_gen(args) -> tuple[dict, int]:
    out = Path(args.output)
    extra: dict = {"output": str(out)}
    if args.family == "intervals":
        model = gen_interval_model(args.size, args.seed)
        out.write_text(write_intervals(model), encoding="utf-8")
        doc_n, doc_m = model.n, intersection_graph(model).m
    elif args.family == "random":
        g = gen_connected_graph(args.size, args.p, args.seed)
        out.write_text(write_edgelist(g), encoding="utf-8")
        doc_n, doc_m = g.n, g.m
    elif args.family == "split":
        if args.clique is None or args.ind is None:
            raise ValueError("--family split needs --clique and --ind")
        g, part = gen_split_graph(args.clique, args.ind, args.density, args.seed)
        out.write_text(write_edgelist(g), encoding="utf-8")
        part_path = Path(str(out) + ".partition")
        part_path.write_text(write_partition(part), encoding="utf-8")
        extra["partition"] = str(part_path)
        doc_n, doc_m = g.n, g.m
    elif args.family in NAMED_FAMILIES:
        g = gen_named(args.family, args.size, args.seed)
        out.write_text(write_edgelist(g), encoding="utf-8")
        doc_n, doc_m = g.n, g.m
    else:
        raise ValueError(f"unknown family: {args.family}")
    doc = {
        "algorithm": "gen",
        "family": args.family,
        "n": doc_n,
        "m": doc_m,
        "seed": args.seed,
        "extra": extra,
    }
    return doc, EXIT_OK


def _cmd_bench(args) -> tuple[dict, int]:
    if args.algo != "interval":
        raise ValueError("bench supports --algo interval")
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    results = []
    for n in sizes:
        model = gen_interval_model(n, args.seed)
        best = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            solution = solve_interval(model)
            dt = (time.perf_counter() - t0) * 1000.0
            best = dt if best is None else min(best, dt)
        results.append({"n": n, "size": len(solution), "elapsedMs": round(best, 3)})
    doc = {"algorithm": "bench", "benchAlgo": args.algo, "seed": args.seed,
           "results": results}
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semidom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a semitotal domination instance")
    p.add_argument("--algo", choices=("exact", "interval", "approx"), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("edgelist", "intervals"), default="edgelist")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a vertex set against a domination kind")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("edgelist", "intervals"), default="edgelist")
    p.add_argument("--set", required=True)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="build a gadget graph and its role map")
    p.add_argument("--kind", choices=("gp4", "bipartite", "split", "ln", "apx"),
                   required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--partition")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("check-reduction", help="oracle equality check for a gadget")
    p.add_argument("--kind", choices=("gp4", "bipartite", "split", "ln", "apx"),
                   required=True)
    p.add_argument("--input")
    p.add_argument("--partition")
    p.add_argument("--clique", type=int)
    p.add_argument("--ind", type=int)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--size", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_check_reduction)

    p = sub.add_parser("gen", help="write a deterministic instance file")
    p.add_argument("--family",
                   choices=NAMED_FAMILIES + ("random", "split", "intervals"),
                   required=True)
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--clique", type=int)
    p.add_argument("--ind", type=int)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the interval solver on seeded models")
    p.add_argument("--algo", default="interval")
    p.add_argument("--sizes", default="500,1000,2000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except InfeasibleError as exc:
        _emit({"error": str(exc), "kind": "infeasible"})
        return EXIT_INFEASIBLE
    except SizeCapError as exc:
        _emit({"error": str(exc), "kind": "size-cap"})
        return EXIT_SIZE_CAP
    except (ValueError, OSError, KeyError) as exc:
        _emit({"error": str(exc), "kind": "invalid-input"})
        return EXIT_INVALID_INPUT
    _emit(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
