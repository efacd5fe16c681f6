"""Cut profiles and cutwidth solvers.

The exact solver is a dynamic program over vertex subsets: the number of
edges crossing the gap after a prefix depends only on the prefix *set*, so

    dp[S] = max(cut(S), min_{v in S} dp[S - v])

with ``cut(S)`` the number of edges leaving ``S``. Both tables are filled
with vectorised numpy passes.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapacityError
from .graph import Graph, generate_turan_modular

DP_MAX_N = 22
BRUTE_MAX_N = 9


@dataclass(frozen=True)
class LinearOrdering:
    order: tuple[int, ...]
    # profile[i] = edges with exactly one endpoint among order[:i+1]
    profile: tuple[int, ...]

    @property
    def width(self) -> int:
        return max(self.profile, default=0)


@dataclass(frozen=True)
class CutwidthResult:
    value: int
    witness: LinearOrdering
    method: str  # "exact-dp", "brute-force" or "heuristic"


def _check_permutation(n, order):
    if len(order) != n or set(order) != set(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")


def cut_profile(G: Graph, order) -> LinearOrdering:
    order = tuple(order)
    _check_permutation(G.n, order)
    placed = [False] * G.n
    profile = []
    cut = 0
    for v in order:
        back = sum(1 for u in G.adjacency[v] if placed[u])
        cut += G.degree(v) - 2 * back
        placed[v] = True
        profile.append(cut)
    return LinearOrdering(order, tuple(profile))


def ordering_width(G: Graph, order) -> int:
    return cut_profile(G, order).width


# ---------------------------------------------------------------------------
# exact: subset dynamic programming

def _subset_tables(G: Graph):
    n = G.n
    size = 1 << n
    masks = np.array(G.adjacency_masks, dtype=np.uint32)
    cut = np.zeros(size, dtype=np.int32)
    for v in range(n):
        lo = 1 << v
        rest = np.arange(lo, dtype=np.uint32)
        inside = np.bitwise_count(rest & masks[v]).astype(np.int32)
        cut[lo:2 * lo] = cut[:lo] + G.degree(v) - 2 * inside
    return cut


def exact_cutwidth_dp(G: Graph, max_n: int = DP_MAX_N) -> CutwidthResult:
    """Exact cutwidth with an optimal ordering.

    The witness is rebuilt from the full set backwards, always removing the
    smallest vertex that keeps the remaining prefix within the optimum.
    """
    n = G.n
    if n > max_n:
        raise CapacityError(
            f"exact DP is capped at n={max_n} (got n={n}); use heuristic_cutwidth instead"
        )
    if n == 0:
        return CutwidthResult(0, LinearOrdering((), ()), "exact-dp")

    cut = _subset_tables(G)
    full = (1 << n) - 1
    idx_all = np.arange(full + 1, dtype=np.uint32)
    pop = np.bitwise_count(idx_all)
    by_layer = np.argsort(pop, kind="stable").astype(np.uint32)
    bounds = np.concatenate(([0], np.cumsum(np.bincount(pop, minlength=n + 1))))

    big = np.iinfo(np.int32).max
    dp = np.zeros(full + 1, dtype=np.int32)
    for layer in range(1, n + 1):
        idx = by_layer[bounds[layer]:bounds[layer + 1]]
        best = np.full(idx.shape, big, dtype=np.int32)
        for v in range(n):
            bit = np.uint32(1 << v)
            cand = np.where(idx & bit, dp[idx ^ bit], big)
            np.minimum(best, cand, out=best)
        dp[idx] = np.maximum(cut[idx], best)

    value = int(dp[full])
    seq = []
    S = full
    while S:
        for v in range(n):
            if S >> v & 1 and dp[S ^ (1 << v)] <= value:
                seq.append(v)
                S ^= 1 << v
                break
    witness = cut_profile(G, reversed(seq))
    assert witness.width == value
    return CutwidthResult(value, witness, "exact-dp")


# ---------------------------------------------------------------------------
# exact: permutation scan (oracle)

@lru_cache(maxsize=None)
def _half_permutations(n):
    # an ordering and its reverse have the same width: keep first < last
    perms = [p for p in itertools.permutations(range(n)) if n < 2 or p[0] < p[-1]]
    return np.array(perms, dtype=np.int8).reshape(len(perms), n)


def exact_cutwidth_bruteforce(G: Graph, max_n: int = BRUTE_MAX_N) -> CutwidthResult:
    """Scan every ordering (up to reversal); the first optimum in lexicographic order wins."""
    n = G.n
    if n > max_n:
        raise CapacityError(f"brute force is capped at n={max_n} (got n={n})")
    if n == 0:
        return CutwidthResult(0, LinearOrdering((), ()), "brute-force")
    perms = _half_permutations(n)
    if G.m == 0:
        return CutwidthResult(0, cut_profile(G, perms[0].tolist()), "brute-force")
    pos = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    pos[rows, perms] = np.arange(n, dtype=np.int8)
    us, vs = np.array(G.edges).T
    a, b = pos[:, us], pos[:, vs]
    left, right = np.minimum(a, b), np.maximum(a, b)
    width = np.zeros(len(perms), dtype=np.int32)
    for gap in range(n - 1):
        crossing = np.count_nonzero((left <= gap) & (right > gap), axis=1)
        np.maximum(width, crossing, out=width)
    best = int(np.argmin(width))
    witness = cut_profile(G, perms[best].tolist())
    return CutwidthResult(int(width[best]), witness, "brute-force")


# ---------------------------------------------------------------------------
# heuristic upper bound

@dataclass(frozen=True)
class AnnealingSchedule:
    iterations: int = 20000
    initial_temperature: float = 2.0
    final_temperature: float = 0.02
    swap_probability: float = 0.5  # otherwise relocate a single vertex


DEFAULT_SCHEDULE = AnnealingSchedule()


def _bfs_order(G: Graph):
    seen = [False] * G.n
    order = []
    starts = sorted(range(G.n), key=lambda v: (G.degree(v), v))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        for v in queue:
            order.append(v)
            for u in sorted(G.adjacency[v], key=lambda u: (G.degree(u), u)):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def _energy(G, order):
    prof = cut_profile(G, order).profile
    w = max(prof, default=0)
    # secondary term: how many gaps sit at the maximum
    return w * (G.n + 1) + prof.count(w)


def heuristic_cutwidth(G: Graph, iterations: int | None = None, seed: int = 0,
                       schedule: AnnealingSchedule = DEFAULT_SCHEDULE) -> CutwidthResult:
    """Simulated annealing over orderings; the value is always an upper bound on cw(G)."""
    if G.n < 1:
        raise ValueError("heuristic needs at least one vertex")
    iters = schedule.iterations if iterations is None else iterations
    rng = random.Random(seed)
    n = G.n
    current = _bfs_order(G)
    e_cur = _energy(G, current)
    best, e_best = list(current), e_cur
    if n > 1 and iters > 0:
        t0, t1 = schedule.initial_temperature, schedule.final_temperature
        cooling = (t1 / t0) ** (1.0 / iters)
        temp = t0
        for _ in range(iters):
            cand = list(current)
            if rng.random() < schedule.swap_probability:
                i = rng.randrange(n - 1)
                cand[i], cand[i + 1] = cand[i + 1], cand[i]
            else:
                i, j = rng.randrange(n), rng.randrange(n)
                cand.insert(j, cand.pop(i))
            e_new = _energy(G, cand)
            if e_new <= e_cur or rng.random() < math.exp((e_cur - e_new) / temp):
                current, e_cur = cand, e_new
                if e_cur < e_best:
                    best, e_best = list(current), e_cur
            temp *= cooling
    witness = cut_profile(G, best)
    return CutwidthResult(witness.width, witness, "heuristic")


def cutwidth(G: Graph, max_n: int = DP_MAX_N, seed: int = 0) -> CutwidthResult:
    """Exact cutwidth when within ``max_n``, otherwise the heuristic upper bound."""
    if G.n <= max_n:
        return exact_cutwidth_dp(G, max_n)
    return heuristic_cutwidth(G, seed=seed)


# ---------------------------------------------------------------------------
# the explicit ordering of Tur(n, k)

def turan_natural_ordering(n: int, k: int) -> LinearOrdering:
    """Identity ordering of the modular Turan graph on ``0..n-1``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return cut_profile(generate_turan_modular(n, k), range(n))


def turan_crossing_bound(n: int, k: int, i: int) -> Fraction:
    """c(i) = i((n - i)(k - 1)/k + 1): edges over the gap after the i-th vertex (1-based)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not 1 <= i <= n:
        raise ValueError(f"position {i} outside 1..{n}")
    return i * (Fraction((n - i) * (k - 1), k) + 1)


def turan_crossing_bound_max(n: int, k: int) -> Fraction:
    return max(turan_crossing_bound(n, k, i) for i in range(1, n + 1))
