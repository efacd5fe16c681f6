"""Circular cutwidth.

A layout places the vertices on a circle in a cyclic order and routes each
edge along one of its two arcs. Gap ``g`` lies between cyclic positions
``g`` and ``g + 1 (mod n)``; an arc running clockwise from position ``p`` to
position ``q`` crosses gaps ``p, p+1, ..., q-1 (mod n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import CapacityError
from .graph import Graph
from .solvers import LinearOrdering

CIRCULAR_MAX_N = 8
CIRCULAR_MAX_M = 16


@dataclass(frozen=True)
class CircularLayout:
    cyclic_order: tuple[int, ...]
    # edge (u, v) with u < v -> True when routed clockwise from u to v
    clockwise: Mapping[tuple[int, int], bool] = field(default_factory=dict)


@dataclass(frozen=True)
class CircularResult:
    value: int
    witness: CircularLayout


def _arc_gaps(n, p, q):
    """Gaps crossed going clockwise from position p to position q."""
    return [(p + t) % n for t in range((q - p) % n)]


def circular_congestion(G: Graph, layout: CircularLayout) -> tuple[int, tuple[int, ...]]:
    """Maximum gap load and the load of every gap."""
    order = tuple(layout.cyclic_order)
    n = G.n
    if len(order) != n or set(order) != set(range(n)):
        raise ValueError("cyclic_order must be a permutation of the vertices")
    if set(layout.clockwise) != set(G.edges):
        raise ValueError("arc choice must be given for exactly the edges of the graph")
    if n == 0:
        return 0, ()
    pos = {v: i for i, v in enumerate(order)}
    loads = [0] * n
    for (u, v), cw in layout.clockwise.items():
        a, b = (pos[u], pos[v]) if cw else (pos[v], pos[u])
        for g in _arc_gaps(n, a, b):
            loads[g] += 1
    return max(loads), tuple(loads)


def line_layout_embed(G: Graph, ordering: LinearOrdering) -> CircularLayout:
    """Close a linear ordering into a circle, keeping the last-to-first gap empty."""
    pos = {v: i for i, v in enumerate(ordering.order)}
    if len(pos) != G.n or set(pos) != set(range(G.n)):
        raise ValueError("ordering does not match the graph")
    return CircularLayout(tuple(ordering.order), {(u, v): pos[u] < pos[v] for u, v in G.edges})


def exact_circular_cutwidth(G: Graph, max_n: int = CIRCULAR_MAX_N,
                            max_m: int = CIRCULAR_MAX_M) -> CircularResult:
    """Minimum congestion over all cyclic orders and arc choices.

    Vertices are placed one cyclic position at a time (vertex 0 fixed at
    position 0, mirror images skipped); when a vertex is placed, the arcs of
    all its edges to already placed vertices are chosen, and a branch is cut
    as soon as some gap exceeds the best value found so far minus one.
    """
    n, m = G.n, G.m
    if n > max_n or m > max_m:
        raise CapacityError(
            f"circular search is capped at n<={max_n}, m<={max_m} (got n={n}, m={m})"
        )
    identity = tuple(range(n))
    start = CircularLayout(identity, {e: True for e in G.edges})
    if m == 0:
        return CircularResult(0, start)

    best_value, _ = circular_congestion(G, start)
    best_layout = start
    # every edge at v leaves through one of the two gaps next to v
    lower = max(1, max((d + 1) // 2 for d in G.degrees))
    if best_value <= lower:
        return CircularResult(best_value, best_layout)

    adj = G.adjacency
    pos = [-1] * n
    order = [0]
    pos[0] = 0
    loads = [0] * n
    arcs = {}

    class Done(Exception):
        pass

    def place(q):
        nonlocal best_value, best_layout
        if q == n:
            value = max(loads)
            best_value = value
            best_layout = CircularLayout(tuple(order), dict(arcs))
            if value <= lower:
                raise Done
            return
        for v in range(1, n):
            if pos[v] >= 0:
                continue
            if q == n - 1 and n > 2 and v < order[1]:
                continue  # mirror image of a layout already covered
            pos[v] = q
            order.append(v)
            back = [u for u in adj[v] if pos[u] >= 0]
            back.sort(key=lambda u: -abs(2 * (q - pos[u]) - n))
            route(q, v, back, 0)
            order.pop()
            pos[v] = -1

    def route(q, v, back, t):
        if t == len(back):
            place(q + 1)
            return
        u = back[t]
        p = pos[u]
        forward = list(range(p, q))  # clockwise from u to v
        backward = list(range(q, n)) + list(range(p))
        options = [(forward, True), (backward, False)]
        if len(backward) < len(forward):
            options.reverse()
        limit = best_value - 1
        key = (u, v) if u < v else (v, u)
        for gaps, u_to_v in options:
            if any(loads[g] >= limit + 1 for g in gaps):
                continue
            for g in gaps:
                loads[g] += 1
            arcs[key] = u_to_v if u < v else not u_to_v
            # the cutoff may have dropped while the subtree was explored
            if max(loads) <= best_value - 1:
                route(q, v, back, t + 1)
            del arcs[key]
            for g in gaps:
                loads[g] -= 1
            limit = best_value - 1

    try:
        place(1)
    except Done:
        pass
    return CircularResult(best_value, best_layout)
