"""Uniform sparsity and the cutwidth lower bounds built on it.

Every bound is an exact ``Fraction``; comparisons against cutwidth values
never touch floating point. An unbounded sparsity parameter (no qualifying
subset has an edge) is represented by ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .circular import exact_circular_cutwidth
from .degeneracy import core_decomposition, degeneracy_core
from .errors import CapacityError
from .graph import Graph, clique_number
from .solvers import DP_MAX_N, exact_cutwidth_dp, heuristic_cutwidth

SUBSET_MAX_N = 18


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x) -> str:
    """Canonical ``p/q`` text (lowest terms, positive denominator); ``inf`` for infinity."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str):
    if text in ("inf", "-inf"):
        return float(text)
    return Fraction(text)


@dataclass(frozen=True)
class SparsityParams:
    rho: Fraction
    lam: Fraction | float  # math.inf allowed

    def __post_init__(self):
        object.__setattr__(self, "rho", as_fraction(self.rho))
        if not (isinstance(self.lam, float) and math.isinf(self.lam)):
            object.__setattr__(self, "lam", as_fraction(self.lam))
        if not 0 <= self.rho <= 1:
            raise ValueError(f"rho must lie in [0, 1], got {self.rho}")
        if self.lam < 1:
            raise ValueError(f"lambda must be at least 1, got {self.lam}")

    def threshold(self, n: int) -> int:
        """Smallest subgraph order the sparsity condition applies to, ceil(rho n)."""
        return math.ceil(self.rho * n)


def _inverse(lam):
    return Fraction(0) if isinstance(lam, float) else 1 / lam


# ---------------------------------------------------------------------------
# sparsity

def is_lambda_sparse(G: Graph, lam) -> bool:
    lam = as_fraction(lam)
    if lam < 1:
        raise ValueError(f"lambda must be at least 1, got {lam}")
    return 2 * lam * G.m <= G.n * (G.n - 1)


@lru_cache(maxsize=4096)
def densest_by_size(G: Graph, max_n: int = SUBSET_MAX_N) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each order s, the most edges in an induced subgraph on s vertices and one such subset mask.

    Exhaustive over all ``2**n`` subsets. Induced subgraphs are the worst
    case: any subgraph on a vertex set has at most the induced edges.
    """
    n = G.n
    if n > max_n:
        raise CapacityError(f"subset scan is capped at n={max_n} (got n={n})")
    size = 1 << n
    masks = np.array(G.adjacency_masks, dtype=np.uint32)
    inner = np.zeros(size, dtype=np.int32)
    for v in range(n):
        lo = 1 << v
        rest = np.arange(lo, dtype=np.uint32)
        inner[lo:2 * lo] = inner[:lo] + np.bitwise_count(rest & masks[v]).astype(np.int32)
    pop = np.bitwise_count(np.arange(size, dtype=np.uint32))
    # lexsort: last key is primary -> by size, then most edges first
    order = np.lexsort((-inner, pop))
    first = np.concatenate(([0], np.cumsum(np.bincount(pop, minlength=n + 1))[:-1]))
    best_mask = order[first]
    return tuple(int(inner[s]) for s in best_mask), tuple(int(s) for s in best_mask)


def _mask_to_set(mask):
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def max_uniform_lambda(G: Graph, rho, max_n: int = SUBSET_MAX_N):
    """Largest lambda for which ``G`` is (rho, lambda)-uniformly sparse."""
    rho = as_fraction(rho)
    if not 0 <= rho <= 1:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    most, _ = densest_by_size(G, max_n)
    t = math.ceil(rho * G.n)
    best = math.inf
    for s in range(max(t, 2), G.n + 1):
        if most[s]:
            best = min(best, Fraction(s * (s - 1), 2 * most[s]))
    return best


def uniform_lambda_profile(G: Graph, max_n: int = SUBSET_MAX_N) -> list:
    """``max_uniform_lambda(G, j/n)`` for every threshold ``j = 0..n`` in one pass."""
    most, _ = densest_by_size(G, max_n)
    out = [math.inf] * (G.n + 1)
    best = math.inf
    for s in range(G.n, -1, -1):
        if s >= 2 and most[s]:
            best = min(best, Fraction(s * (s - 1), 2 * most[s]))
        out[s] = best
    return out


def is_uniformly_sparse(G: Graph, params: SparsityParams, max_n: int = SUBSET_MAX_N):
    """``(True, None)`` or ``(False, violating vertex subset)``."""
    most, where = densest_by_size(G, max_n)
    for s in range(max(params.threshold(G.n), 2), G.n + 1):
        if 2 * params.lam * most[s] > s * (s - 1):
            return False, _mask_to_set(where[s])
    return True, None


def turan_sparsity_lambda(k: int, s: int) -> Fraction:
    """Sparsity guaranteed by Turan's theorem for a K_{k+1}-free graph on s vertices."""
    if k < 2 or s < 2:
        raise ValueError("need k >= 2 and s >= 2")
    return Fraction(k * (s - 1), (k - 1) * s)


# ---------------------------------------------------------------------------
# bound evaluators

def prefix_bound(i: int, delta: int, lam) -> Fraction:
    """Lower bound on the cut after the first i vertices of an ordering of the delta-core."""
    return i * delta - (i * i - i) * _inverse(lam)


def bound_eq_main2(n: int, delta: int, params: SparsityParams) -> Fraction:
    c = params.threshold(n)
    return c * (delta - (c - 1) * _inverse(params.lam))


def bound_eq_main(delta: int, lam) -> Fraction:
    lam = as_fraction(lam)
    return (delta * lam + 1) ** 2 / (4 * lam) - 1 / lam


def guard_eq_main(n: int, delta: int, params: SparsityParams) -> bool:
    if isinstance(params.lam, float):
        return delta > 0
    return 2 * n * params.rho <= delta * params.lam - 1


def eq_main_epsilon(delta: int, lam) -> Fraction:
    half = (delta * as_fraction(lam) + 1) / 2
    return half - math.floor(half)


def eq_main_point(delta: int, lam) -> int:
    """Prefix length the quadratic bound is read off at."""
    return math.floor((delta * as_fraction(lam) + 1) / 2)


def bound_general(delta: int) -> Fraction:
    return Fraction(delta * delta, 4) + Fraction(delta, 2)


def bound_triangle_free(delta: int) -> Fraction:
    return Fraction(delta * delta, 2)


def bound_clique_free(delta: int, k: int) -> Fraction:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return Fraction(k * delta * delta, 4 * (k - 1)) - Fraction(k - 1, k)


def turan_envelope(n: int, k: int) -> tuple[Fraction, Fraction]:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    quad = Fraction((k - 1) * n * n, 4 * k)
    lower = quad - Fraction(n, 2) - Fraction(3 * k, 4 * (k - 1))
    upper = quad + Fraction(n, 2) + Fraction(k, 4 * (k - 1))
    return lower, upper


def integer_threshold(value: Fraction, kind: str) -> int:
    """Smallest integer allowed by a lower bound, or largest allowed by an upper bound."""
    if kind == "lower":
        return math.ceil(value)
    if kind == "strict-lower":
        return math.floor(value) + 1
    if kind == "upper":
        return math.floor(value)
    raise ValueError(f"unknown bound kind {kind!r}")


# ---------------------------------------------------------------------------
# reports

@dataclass
class BoundEntry:
    name: str
    params: dict
    value: Fraction
    kind: str  # "lower", "strict-lower" or "upper"
    verdict: str = "unchecked"  # "pass", "violation" or "unchecked"
    tight: bool = False

    @property
    def threshold(self) -> int:
        return integer_threshold(self.value, self.kind)


@dataclass
class BoundReport:
    graph_id: str
    n: int
    m: int
    degeneracy: int
    core_size: int
    cutwidth: int | None = None
    cutwidth_method: str | None = None
    cutwidth_upper: int | None = None
    # ordering realising `cutwidth` (or `cutwidth_upper`)
    cutwidth_witness: tuple[int, ...] = ()
    circular_cutwidth: int | None = None
    entries: list[BoundEntry] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.verdict == "violation"]

    def judge(self, entry: BoundEntry) -> BoundEntry:
        """Fill in ``entry.verdict`` from the stored cutwidth data."""
        entry.verdict, entry.tight = judge_bound(entry.value, entry.kind,
                                                 self.cutwidth, self.cutwidth_upper)
        return entry


def judge_bound(value, kind, exact, upper=None) -> tuple[str, bool]:
    """Verdict of a bound against an exact cutwidth or, failing that, an upper bound on it."""
    if exact is not None:
        if kind == "lower":
            ok = exact >= value
        elif kind == "strict-lower":
            ok = exact > value
        else:
            ok = exact <= value
        return ("pass" if ok else "violation"), exact == integer_threshold(value, kind)
    if upper is not None and kind != "upper":
        # cw <= upper, so a lower bound above it is refuted outright
        refuted = upper < value if kind == "lower" else upper <= value
        return ("violation" if refuted else "unchecked"), False
    return "unchecked", False


def verify_theorem_on_graph(G: Graph, graph_id: str = "", *, dp_max_n: int = DP_MAX_N,
                            subset_max_n: int = 14, circular: bool = False,
                            turan: tuple[int, int] | None = None, seed: int = 0) -> BoundReport:
    """Evaluate every applicable lower bound on ``G`` against its cutwidth.

    Sparsity parameters come from three sources: (0, 1), which every graph
    satisfies; the Turan density guarantee when ``G`` is clique-free; and,
    for ``n <= subset_max_n``, the exhaustively computed best lambda at every
    threshold ``ceil(rho n) = j``. Each parameter pair is applied twice:
    literally to ``G`` (scope ``"graph"``) and to its delta-core with the
    core's own order (scope ``"core"``).
    """
    delta = core_decomposition(G).degeneracy
    core, core_vertices = degeneracy_core(G)
    report = BoundReport(graph_id, G.n, G.m, delta, len(core_vertices))

    try:
        res = exact_cutwidth_dp(G, dp_max_n)
        report.cutwidth = res.value
    except CapacityError as exc:
        report.skipped.append(f"exact-cutwidth: {exc}")
        res = heuristic_cutwidth(G, seed=seed)
        report.cutwidth_upper = res.value
    report.cutwidth_method, report.cutwidth_witness = res.method, res.witness.order
    if circular:
        try:
            report.circular_cutwidth = exact_circular_cutwidth(G).value
        except CapacityError as exc:
            report.skipped.append(f"circular-cutwidth: {exc}")

    def add(name, params, value, kind):
        report.entries.append(report.judge(BoundEntry(name, params, value, kind)))

    add("general", {"delta": delta}, bound_general(delta), "lower")

    omega = clique_number(G) if G.n <= 64 else None
    if omega is not None and omega <= 2:
        add("triangle-free", {"delta": delta}, bound_triangle_free(delta), "lower")
    if omega is not None and omega >= 2:
        add("clique-free", {"delta": delta, "k": omega}, bound_clique_free(delta, omega), "lower")

    candidates = []
    for scope, H in (("graph", G), ("core", core)):
        candidates.append(("trivial", scope, H, SparsityParams(0, 1)))
        if H.n == 0:
            continue
        if omega is not None and omega >= 2:
            for j in range(2, H.n + 1):
                # below 1 only when s <= k, where the trivial lambda = 1 is sharper
                lam = max(Fraction(1), turan_sparsity_lambda(omega, j))
                candidates.append(("turan", scope, H, SparsityParams(Fraction(j, H.n), lam)))
        if H.n <= subset_max_n:
            lams = uniform_lambda_profile(H, subset_max_n)
            for j in range(1, H.n + 1):
                candidates.append(("exhaustive", scope, H, SparsityParams(Fraction(j, H.n), lams[j])))
        elif scope == "graph":
            report.skipped.append(f"exhaustive-sparsity: n={H.n} over cap {subset_max_n}")

    for source, scope, H, params in candidates:
        info = {"scope": scope, "source": source, "n": H.n, "delta": delta,
                "rho": params.rho, "lambda": params.lam}
        add("eq-main2", info, bound_eq_main2(H.n, delta, params), "lower")
        if guard_eq_main(H.n, delta, params) and not isinstance(params.lam, float):
            info = dict(info, epsilon=eq_main_epsilon(delta, params.lam),
                        point=eq_main_point(delta, params.lam))
            add("eq-main", info, bound_eq_main(delta, params.lam), "strict-lower")

    if turan is not None:
        tn, tk = turan
        lower, upper = turan_envelope(tn, tk)
        add("turan-lower", {"n": tn, "k": tk}, lower, "lower")
        add("turan-upper", {"n": tn, "k": tk}, upper, "upper")
    return report
