"""Simple undirected graphs on vertices ``0..n-1``.

Includes graph6 and edge-list I/O, the generators used throughout the
package (complete, Turan, hypercube, random families) and a couple of
structural queries (induced subgraphs, clique detection).
"""

from __future__ import annotations

import heapq
import itertools
import random
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError

GRAPH6_HEADER = ">>graph6<<"
MAX_HYPERCUBE_DIM = 20


class Graph:
    """Immutable simple graph.

    Construction validates the edge list: self-loops, out-of-range endpoints
    and repeated edges (in either orientation) raise ``ValueError``.
    """

    __slots__ = ("_n", "_edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self._n = n
        self._edges = tuple(sorted(seen))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self._n)]
        for u, v in self._edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitmask."""
        masks = [0] * self._n
        for u, v in self._edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


# ---------------------------------------------------------------------------
# graph6

def _n_to_graph6(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def serialize_graph6(G: Graph) -> str:
    """Encode ``G`` as a graph6 string (no header, no trailing newline)."""
    bits = []
    adj = G.adjacency
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if i in adj[j] else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _n_to_graph6(G.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string; an optional ``>>graph6<<`` header is stripped."""
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("empty graph6 string", offset=base)
    vals = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", offset=base + i)
        vals.append(c - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte size header", offset=base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte size header", offset=base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit stream: expected {nbytes} data bytes, got {len(body)}",
            offset=base + len(vals),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after bit stream", offset=base + pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge lists

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n"`` followed by one ``"u v"`` pair per line.

    Blank lines are ignored and repeated edges are merged; everything else
    that is not a valid pair raises ``GraphFormatError`` with a 1-based line
    number.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        try:
            nums = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("first line must be a nonnegative vertex count", line=lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = nums
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range for n={n}", line=lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("missing vertex count", line=1)
    return Graph(n, edges)


def serialize_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    """Load a graph file, choosing the format from its content."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    # graph6 bytes are all in 63..126, so a leading digit means edge list
    if first and not first[0].isdigit():
        return parse_graph6(first)
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# generators

def generate_complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def generate_empty(n: int) -> Graph:
    return Graph(n)


def generate_path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def generate_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def generate_star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def turan_class_sizes(n: int, k: int) -> list[int]:
    """Sizes of the ``k`` parts of Tur(n, k), larger parts first."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def generate_complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = []
    for idx, s in enumerate(sizes):
        part.extend([idx] * s)
    n = len(part)
    return Graph(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]))


def generate_turan(n: int, k: int) -> Graph:
    """Most balanced complete ``k``-partite graph; parts are consecutive vertex blocks."""
    return generate_complete_multipartite(turan_class_sizes(n, k))


def generate_turan_modular(n: int, k: int) -> Graph:
    """Tur(n, k) realised on ``0..n-1`` with ``a ~ b`` iff ``a % k != b % k``."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return Graph(n, ((a, b) for a, b in itertools.combinations(range(n), 2) if a % k != b % k))


def generate_hypercube(d: int) -> Graph:
    if not 0 <= d <= MAX_HYPERCUBE_DIM:
        raise ValueError(f"hypercube dimension must be in [0, {MAX_HYPERCUBE_DIM}], got {d}")
    n = 1 << d
    return Graph(n, ((v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1))


def generate_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def generate_random_gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs are visited in lexicographic order."""
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    p = float(p)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def generate_random_kpartite(n: int, k: int, p, seed: int) -> Graph:
    """Random ``k``-partite graph: uniform part labels, cross-part pairs kept with probability ``p``.

    The result never contains ``K_{k+1}``.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    rng = random.Random(seed)
    part = [rng.randrange(k) for _ in range(n)]
    p = float(p)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                     if part[u] != part[v] and rng.random() < p])


def prufer_decode(seq: Sequence[int]) -> Graph:
    """Labeled tree on ``len(seq) + 2`` vertices encoded by a Prufer sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"Prufer entry {x} out of range for n={n}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def generate_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Prufer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, one per Prufer sequence."""
    if n == 1:
        yield Graph(1)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Stream all ``2**(n(n-1)/2)`` labeled graphs; bit ``t`` of the index selects the t-th pair."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[t] for t in range(len(pairs)) if mask >> t & 1])


# ---------------------------------------------------------------------------
# structure

def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``, relabeled ``0..|S|-1`` in increasing vertex order."""
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    index = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(index[u], index[v]) for u, v in G.edges
                              if u in index and v in index])


def has_clique(G: Graph, r: int) -> bool:
    """Exact test for ``r`` pairwise adjacent vertices (branch and bound on bitmasks)."""
    if r < 1:
        raise ValueError(f"clique size must be at least 1, got {r}")
    if r > G.n:
        return False
    if r == 1:
        return True
    masks = G.adjacency_masks

    def extend(size, cand):
        if size == r:
            return True
        if size + cand.bit_count() < r:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only later candidates, so each clique is explored once
            if extend(size + 1, cand & masks[v]):
                return True
            if size + cand.bit_count() < r:
                return False
        return False

    return extend(0, (1 << G.n) - 1)


def is_triangle_free(G: Graph) -> bool:
    return not has_clique(G, 3)


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    r = 1
    while has_clique(G, r + 1):
        r += 1
    return r
