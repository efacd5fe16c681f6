"""Command line interface: ``compute``, ``generate``, ``verify`` and ``report``.

Exit codes: 0 success, 1 at least one violation, 2 usage or capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .circular import exact_circular_cutwidth
from .degeneracy import core_decomposition
from .errors import CapacityError, GraphFormatError
from .graph import (clique_number, generate_complete, generate_hypercube, generate_petersen,
                    generate_random_gnp, generate_random_tree, generate_turan,
                    generate_turan_modular, read_graph, serialize_edge_list, serialize_graph6)
from .harness import (ConfigError, SweepConfig, load_result, parse_int_list, run_sweep,
                      sweep_table, write_outputs)
from .solvers import DP_MAX_N, exact_cutwidth_dp, heuristic_cutwidth

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def cmd_compute(args) -> int:
    G = read_graph(args.file)
    dec = core_decomposition(G)
    if args.heuristic:
        res = heuristic_cutwidth(G, iterations=args.iterations, seed=args.seed) if G.n else None
    else:
        try:
            res = exact_cutwidth_dp(G, args.dp_max_n)
        except CapacityError as exc:
            if args.exact:
                raise CapacityError(f"{exc}; rerun with --heuristic for an upper bound") from None
            res = heuristic_cutwidth(G, iterations=args.iterations, seed=args.seed)
    out = {
        "n": G.n,
        "m": G.m,
        "degeneracy": dec.degeneracy,
        "core_numbers": list(dec.core_number),
        "cutwidth": res.value if res else 0,
        "cutwidth_method": res.method if res else "exact-dp",
        "ordering": list(res.witness.order) if res else [],
        "clique_number": clique_number(G),
    }
    out["triangle_free"] = out["clique_number"] < 3
    if args.circular:
        try:
            circ = exact_circular_cutwidth(G)
            out["circular_cutwidth"] = circ.value
        except CapacityError as exc:
            out["circular_cutwidth"] = None
            print(f"circular cutwidth skipped: {exc}", file=sys.stderr)
    if args.json:
        print(json.dumps(out, indent=1))
    else:
        for key, value in out.items():
            if isinstance(value, list):
                value = " ".join(map(str, value))
            print(f"{key}: {value}")
    return EXIT_OK


def _one(values, name, family):
    if not values:
        raise UsageError(f"family {family!r} needs --{name}")
    return values[0]


def build_graph(family, args):
    if family == "complete":
        return generate_complete(_one(args.n, "n", family))
    if family in ("turan", "turan-modular"):
        gen = generate_turan if family == "turan" else generate_turan_modular
        return gen(_one(args.n, "n", family), _one(args.k, "k", family))
    if family == "hypercube":
        return generate_hypercube(_one(args.d, "d", family))
    if family == "petersen":
        return generate_petersen()
    if args.seed is None:
        raise UsageError(f"family {family!r} is randomized; pass --seed")
    if family == "tree":
        return generate_random_tree(_one(args.n, "n", family), args.seed)
    if family == "gnp":
        if args.p is None:
            raise UsageError("family 'gnp' needs --p")
        return generate_random_gnp(_one(args.n, "n", family), Fraction(args.p), args.seed)
    raise UsageError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    G = build_graph(args.family, args)
    fmt = args.format or ("graph6" if args.out and args.out.endswith(".g6") else "edgelist")
    text = serialize_graph6(G) + "\n" if fmt == "graph6" else serialize_edge_list(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _config_from_args(args) -> SweepConfig:
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
        return SweepConfig.from_dict(data)
    if not args.family:
        raise UsageError("verify needs --config or --family")
    cfg = SweepConfig(
        family=args.family,
        n=args.n or [], k=args.k or [], d=args.d or [],
        p=[s.strip() for s in args.p.split(",")] if args.p else [],
        seeds=args.seeds,
        files=args.files or [],
        checks=[c.strip() for c in args.checks.split(",")],
        output_format=args.format,
        output=args.out,
        workers=args.workers,
    )
    for name in ("dp_max_n", "brute_max_n", "circular_max_n", "subset_max_n"):
        if getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    return cfg.validate()


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    result = run_sweep(cfg)
    written = write_outputs(result, cfg)
    summary = result["summary"]
    print(f"graphs processed: {summary['graphs_processed']}")
    print(f"violations: {summary['violation_count']}")
    print(f"tight cases: {summary['tight_cases']}")
    print(f"capacity skips: {len(summary['capacity_skips'])}")
    for path in written:
        print(f"wrote {path}")
    if summary["violation_count"]:
        by_check = {}
        for v in summary["violations"]:
            by_check[v["check"]] = by_check.get(v["check"], 0) + 1
        for check, count in sorted(by_check.items()):
            print(f"  {check}: {count}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_report(args) -> int:
    result = load_result(args.results)
    table = sweep_table(result)
    if args.csv:
        Path(args.csv).write_text(table)
    else:
        sys.stdout.write(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutwidth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one graph file (graph6 or edge list)")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="fail instead of falling back to the heuristic")
    mode.add_argument("--heuristic", action="store_true", help="skip the exact DP")
    p.add_argument("--circular", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dp-max-n", type=int, default=DP_MAX_N)
    p.add_argument("--iterations", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write one graph of a family")
    p.add_argument("family", choices=["complete", "turan", "turan-modular", "hypercube",
                                      "petersen", "tree", "gnp"])
    p.add_argument("--n", type=parse_int_list)
    p.add_argument("--k", type=parse_int_list)
    p.add_argument("--d", type=parse_int_list)
    p.add_argument("--p")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["graph6", "edgelist"])
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a bound-verification sweep")
    p.add_argument("--config")
    p.add_argument("--family")
    p.add_argument("--n", type=parse_int_list)
    p.add_argument("--k", type=parse_int_list)
    p.add_argument("--d", type=parse_int_list)
    p.add_argument("--p", help="comma separated rationals, e.g. 1/5,1/2")
    p.add_argument("--seeds", type=parse_int_list)
    p.add_argument("--files", nargs="*")
    p.add_argument("--checks", default="bounds")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    for name in ("dp-max-n", "brute-max-n", "circular-max-n", "subset-max-n"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="CSV table from a sweep result")
    p.add_argument("results")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, ConfigError, UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
