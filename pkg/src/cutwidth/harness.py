"""Bound-verification sweeps over graph families, with JSON/CSV reports."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from . import __version__
from .bounds import (SUBSET_MAX_N, BoundReport, format_rational, is_uniformly_sparse,
                     SparsityParams, uniform_lambda_profile, verify_theorem_on_graph)
from .circular import CIRCULAR_MAX_M, CIRCULAR_MAX_N, exact_circular_cutwidth
from .degeneracy import core_decomposition, greedy_color, is_proper_coloring
from .graph import (Graph, all_labeled_graphs, generate_complete, generate_hypercube,
                    generate_random_gnp, generate_random_tree, generate_turan,
                    generate_turan_modular, read_graph, serialize_graph6)
from .solvers import BRUTE_MAX_N, exact_cutwidth_bruteforce

SCHEMA = 1
FAMILIES = ("complete", "turan", "turan-modular", "hypercube", "tree", "gnp", "exhaustive", "file")
RANDOM_FAMILIES = ("tree", "gnp")
CHECKS = ("cutwidth", "circular", "sparsity", "bounds", "coloring", "tree-theorem")
CAP_LIMITS = {"dp_max_n": 26, "brute_max_n": BRUTE_MAX_N,
              "circular_max_n": CIRCULAR_MAX_N, "subset_max_n": SUBSET_MAX_N}
EXHAUSTIVE_MAX_N = 7
BOUND_COLUMNS = ("general", "triangle-free", "clique-free", "eq-main2", "eq-main",
                 "eq-main2-core", "eq-main-core", "turan-lower", "turan-upper")


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    family: str
    n: list[int] = field(default_factory=list)
    k: list[int] = field(default_factory=list)
    d: list[int] = field(default_factory=list)
    p: list[str] = field(default_factory=list)
    seeds: list[int] | None = None
    files: list[str] = field(default_factory=list)
    dp_max_n: int = 22
    brute_max_n: int = BRUTE_MAX_N
    circular_max_n: int = CIRCULAR_MAX_N
    subset_max_n: int = 14
    checks: list[str] = field(default_factory=lambda: ["bounds"])
    output_format: str = "json"
    output: str | None = None
    workers: int = 1

    def validate(self):
        if self.family not in FAMILIES:
            raise ConfigError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family in RANDOM_FAMILIES and not self.seeds:
            raise ConfigError(f"family {self.family!r} is randomized and needs seeds")
        for name, limit in CAP_LIMITS.items():
            value = getattr(self, name)
            if not 0 <= value <= limit:
                raise ConfigError(f"{name}={value} outside [0, {limit}]")
        bad = set(self.checks) - set(CHECKS)
        if bad:
            raise ConfigError(f"unknown checks {sorted(bad)}; choose from {', '.join(CHECKS)}")
        if self.output_format not in ("json", "csv"):
            raise ConfigError(f"output format must be json or csv, got {self.output_format!r}")
        if self.family == "exhaustive" and any(n > EXHAUSTIVE_MAX_N for n in self.n):
            raise ConfigError(f"exhaustive family is limited to n <= {EXHAUSTIVE_MAX_N}")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        needs = {"complete": "n", "turan": "nk", "turan-modular": "nk", "hypercube": "d",
                 "tree": "n", "gnp": "np", "exhaustive": "n", "file": ""}[self.family]
        for attr in needs:
            if not getattr(self, attr):
                raise ConfigError(f"family {self.family!r} needs parameter {attr!r}")
        if self.family == "file" and not self.files:
            raise ConfigError("family 'file' needs input files")
        return self

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config fields {sorted(unknown)}")
        try:
            cfg = cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None
        return cfg.validate()


def parse_int_list(text: str) -> list[int]:
    """``"2..8"`` (inclusive), ``"1,3,5"`` or a single integer."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


# ---------------------------------------------------------------------------
# graph streams

def iter_family(cfg: SweepConfig) -> Iterator[tuple[str, Graph, dict]]:
    fam = cfg.family
    if fam == "complete":
        for n in cfg.n:
            yield f"K{n}", generate_complete(n), {}
    elif fam in ("turan", "turan-modular"):
        gen = generate_turan if fam == "turan" else generate_turan_modular
        for n in cfg.n:
            for k in cfg.k:
                if 1 <= k:
                    yield f"{fam}({n},{k})", gen(n, k), {"turan": [n, k]}
    elif fam == "hypercube":
        for d in cfg.d:
            yield f"Q{d}", generate_hypercube(d), {}
    elif fam == "tree":
        for n in cfg.n:
            for s in cfg.seeds:
                yield f"tree(n={n},seed={s})", generate_random_tree(n, s), {"tree": True}
    elif fam == "gnp":
        for n in cfg.n:
            for p in cfg.p:
                for s in cfg.seeds:
                    yield f"gnp(n={n},p={p},seed={s})", generate_random_gnp(n, Fraction(p), s), {}
    elif fam == "exhaustive":
        for n in cfg.n:
            for i, G in enumerate(all_labeled_graphs(n)):
                yield f"labeled(n={n},#{i})", G, {}
    elif fam == "file":
        for path in cfg.files:
            yield str(path), read_graph(path), {}


def _is_tree(G: Graph) -> bool:
    if G.n == 0 or G.m != G.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for u in G.adjacency[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


# ---------------------------------------------------------------------------
# per-graph checks

def _json_value(x):
    if isinstance(x, Fraction) or (isinstance(x, float) and math.isinf(x)):
        return format_rational(x)
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def report_to_dict(report: BoundReport) -> dict:
    d = asdict(report)
    d["entries"] = [dict(_json_value(asdict(e)), threshold=e.threshold) for e in report.entries]
    return _json_value(d)


def check_graph(job) -> dict:
    index, graph_id, G, meta, cfg = job
    checks = set(cfg.checks)
    rec = {"index": index, "graph": graph_id, "graph6": serialize_graph6(G), "n": G.n, "m": G.m,
           "checks": {}, "violations": [], "capacity_skips": []}

    def violation(check, detail, witness=None):
        rec["violations"].append({"index": index, "graph": graph_id, "graph6": rec["graph6"],
                                  "check": check, "detail": detail, "witness": witness})

    turan = tuple(meta["turan"]) if "turan" in meta and meta["turan"][1] >= 2 else None
    report = verify_theorem_on_graph(G, graph_id, dp_max_n=cfg.dp_max_n,
                                     subset_max_n=cfg.subset_max_n,
                                     turan=turan)
    rec["capacity_skips"].extend(report.skipped)
    cw = report.cutwidth
    if "bounds" in checks:
        for e in report.violations:
            violation(f"bound:{e.name}",
                      {"bound": format_rational(e.value), "kind": e.kind, "cutwidth": cw,
                       "params": _json_value(e.params)},
                      {"ordering": list(report.cutwidth_witness)})
    else:
        report.entries = []
    rec["report"] = report_to_dict(report)

    if "cutwidth" in checks:
        if cw is None or G.n > cfg.brute_max_n:
            rec["capacity_skips"].append(f"cutwidth-oracle: n={G.n} over brute-force cap")
        else:
            brute = exact_cutwidth_bruteforce(G, cfg.brute_max_n)
            rec["checks"]["cutwidth"] = {"dp": cw, "brute_force": brute.value}
            if brute.value != cw:
                violation("cutwidth", {"dp": cw, "brute_force": brute.value},
                          {"dp": list(report.cutwidth_witness), "brute_force": list(brute.witness.order)})

    want_circ = "circular" in checks or ("tree-theorem" in checks and _is_tree(G))
    if want_circ:
        if G.n > cfg.circular_max_n or G.m > CIRCULAR_MAX_M or cw is None:
            rec["capacity_skips"].append(f"circular: n={G.n}, m={G.m} over caps")
        else:
            circ = exact_circular_cutwidth(G, cfg.circular_max_n)
            rec["checks"]["circular"] = {"circular_cutwidth": circ.value, "cutwidth": cw}
            layout = {"cyclic_order": list(circ.witness.cyclic_order),
                      "clockwise": [[u, v, c] for (u, v), c in sorted(circ.witness.clockwise.items())]}
            if "circular" in checks and circ.value > cw:
                violation("circular", {"circular_cutwidth": circ.value, "cutwidth": cw}, layout)
            if "tree-theorem" in checks and _is_tree(G):
                rec["checks"]["tree-theorem"] = circ.value == cw
                if circ.value != cw:
                    violation("tree-theorem", {"circular_cutwidth": circ.value, "cutwidth": cw},
                              {"layout": layout, "ordering": list(report.cutwidth_witness)})

    if "coloring" in checks:
        dec = core_decomposition(G)
        colors = greedy_color(G, dec.ordering)
        used = max(colors, default=-1) + 1
        rec["checks"]["coloring"] = {"colors": used, "degeneracy": dec.degeneracy}
        if used > dec.degeneracy + 1 or not is_proper_coloring(G, colors):
            violation("coloring", {"colors": used, "degeneracy": dec.degeneracy},
                      {"ordering": list(dec.ordering)})

    if "sparsity" in checks:
        if G.n > cfg.subset_max_n:
            rec["capacity_skips"].append(f"sparsity: n={G.n} over subset cap")
        else:
            lams = uniform_lambda_profile(G, cfg.subset_max_n)
            rec["checks"]["sparsity"] = [format_rational(x) for x in lams]
            for j in range(G.n):
                if lams[j] > lams[j + 1]:
                    violation("sparsity", {"monotonicity": j})
            for j, lam in enumerate(lams):
                rho = Fraction(j, G.n) if G.n else Fraction(0)
                ok, witness = is_uniformly_sparse(G, SparsityParams(rho, lam), cfg.subset_max_n)
                if not ok:
                    violation("sparsity", {"rho": format_rational(rho), "lambda": format_rational(lam)},
                              {"subset": list(witness)})
    return rec


# ---------------------------------------------------------------------------
# sweeps

def run_sweep(cfg: SweepConfig) -> dict:
    cfg.validate()
    jobs = ((i, gid, G, meta, cfg) for i, (gid, G, meta) in enumerate(iter_family(cfg)))
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            records = list(pool.map(check_graph, jobs, chunksize=32))
    else:
        records = [check_graph(j) for j in jobs]

    violations = [v for r in records for v in r["violations"]]
    tight = sum(1 for r in records for e in r["report"]["entries"] if e["tight"])
    skips = [{"index": r["index"], "graph": r["graph"], "reason": s}
             for r in records for s in r["capacity_skips"]]
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "config": asdict(cfg),
        "summary": {"graphs_processed": len(records), "violation_count": len(violations),
                    "violations": violations, "tight_cases": tight, "capacity_skips": skips},
        "graphs": records,
    }


def dump_result(result: dict) -> str:
    return json.dumps(result, indent=1) + "\n"


def load_result(path) -> dict:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not a sweep result ({exc})") from None
    if not isinstance(data, dict) or data.get("schema") != SCHEMA or "graphs" not in data:
        raise ValueError(f"{path}: not a schema-{SCHEMA} sweep result")
    return data


def _strongest(entries, name):
    picked = [e for e in entries if e["name"] == name]
    if not picked:
        return None
    if name == "turan-upper":
        return min(picked, key=lambda e: Fraction(e["value"]))
    return max(picked, key=lambda e: Fraction(e["value"]))


def sweep_table(result: dict) -> str:
    """CSV: one row per graph, strongest instance of each bound and its gap to cw."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["graph", "graph6", "n", "m", "delta", "cw", "cw_method"]
    for col in BOUND_COLUMNS:
        header += [col, f"{col}_gap"]
    writer.writerow(header)
    for rec in result["graphs"]:
        rep = rec["report"]
        cw = rep["cutwidth"]
        row = [rec["graph"], rec["graph6"], rep["n"], rep["m"], rep["degeneracy"],
               "" if cw is None else cw, rep["cutwidth_method"] or ""]
        for col in BOUND_COLUMNS:
            name, scope = (col[:-5], "core") if col.endswith("-core") else (col, "graph")
            entries = [e for e in rep["entries"]
                       if e["params"].get("scope", "graph") == scope]
            e = _strongest(entries, name)
            if e is None:
                row += ["", ""]
                continue
            value = Fraction(e["value"])
            if cw is None:
                gap = ""
            else:
                gap = format_rational(value - cw if e["kind"] == "upper" else cw - value)
            row += [format_rational(value), gap]
        writer.writerow(row)
    return buf.getvalue()


def write_outputs(result: dict, cfg: SweepConfig) -> list[Path]:
    """Write the result file (and a graph6 reproducer list when there are violations)."""
    written = []
    if cfg.output:
        out = Path(cfg.output)
        out.write_text(sweep_table(result) if cfg.output_format == "csv" else dump_result(result))
        written.append(out)
        bad = result["summary"]["violations"]
        if bad:
            repro = out.with_name(out.stem + ".violations.g6")
            seen = dict.fromkeys(v["graph6"] for v in bad)
            repro.write_text("".join(g + "\n" for g in seen))
            written.append(repro)
    return written

