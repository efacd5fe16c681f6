"""k-cores, degeneracy orderings and greedy coloring."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class CoreDecomposition:
    core_number: tuple[int, ...]
    degeneracy: int
    # reverse of the peeling order: each vertex has at most `degeneracy`
    # neighbours earlier in the sequence (later in `removal_order`)
    ordering: tuple[int, ...]
    removal_order: tuple[int, ...]

    def core_vertices(self, k: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.core_number) if c >= k)


def k_core(G: Graph, k: int) -> tuple[Graph, tuple[int, ...]]:
    """Repeatedly delete vertices of degree below ``k``.

    Returns the surviving induced subgraph (relabeled) and the original ids
    of its vertices.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    deg = list(G.degrees)
    alive = [True] * G.n
    stack = [v for v in range(G.n) if deg[v] < k]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        for u in G.adjacency[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] < k:
                    alive[u] = False
                    stack.append(u)
    survivors = tuple(v for v in range(G.n) if alive[v])
    return induced_subgraph(G, survivors), survivors


def core_decomposition(G: Graph) -> CoreDecomposition:
    """Peel minimum-degree vertices (ties to the smallest id).

    The core number of a vertex is the running maximum of removal degrees;
    the degeneracy ordering is the removal order reversed.
    """
    deg = list(G.degrees)
    removed = [False] * G.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    core = [0] * G.n
    removal = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        k = max(k, d)
        core[v] = k
        removal.append(v)
        for u in G.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return CoreDecomposition(
        core_number=tuple(core),
        degeneracy=max(core, default=0),
        ordering=tuple(reversed(removal)),
        removal_order=tuple(removal),
    )


def degeneracy(G: Graph) -> int:
    return core_decomposition(G).degeneracy


def degeneracy_core(G: Graph) -> tuple[Graph, tuple[int, ...]]:
    """The delta(G)-core of ``G``: its minimum degree equals the degeneracy."""
    return k_core(G, degeneracy(G))


def greedy_color(G: Graph, ordering) -> list[int]:
    """First-fit coloring along ``ordering``; returns the color of each vertex."""
    ordering = list(ordering)
    if sorted(ordering) != list(range(G.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    color = [-1] * G.n
    for v in ordering:
        used = {color[u] for u in G.adjacency[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def is_proper_coloring(G: Graph, color) -> bool:
    return all(color[u] != color[v] for u, v in G.edges)
