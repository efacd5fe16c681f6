import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from cutwidth.errors import GraphFormatError
from cutwidth.graph import (Graph, all_labeled_graphs, all_labeled_trees, generate_complete,
                            generate_cycle, generate_hypercube, generate_random_gnp,
                            generate_random_kpartite, generate_random_tree, generate_turan,
                            generate_turan_modular, has_clique, induced_subgraph,
                            is_triangle_free, parse_edge_list, parse_graph6, read_graph,
                            serialize_edge_list, serialize_graph6, turan_class_sizes)
from oracles import has_clique_naive


def is_connected(G):
    if G.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        for u in G.adjacency[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_rejects_duplicates_either_orientation(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    @given(graphs())
    def test_adjacency_is_symmetric_closure(self, G):
        pairs = {(u, v) for u in range(G.n) for v in G.adjacency[u]}
        assert pairs == set(G.edges) | {(v, u) for u, v in G.edges}
        assert G.m <= G.n * (G.n - 1) // 2
        assert sum(G.degrees) == 2 * G.m


class TestGraph6:
    def test_k5(self):
        G = parse_graph6("D~{")
        assert (G.n, G.m) == (5, 10)
        # hand decode: '~' = 111111, '{' = 60 = 111100 -> the first 10 bits are all ones
        assert G == generate_complete(5)

    def test_single_vertex(self):
        G = parse_graph6("@")
        assert (G.n, G.m) == (1, 0)
        assert serialize_graph6(Graph(1)) == "@"

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<D~{\n") == generate_complete(5)

    def test_matches_networkx_decoder(self):
        for seed in range(30):
            G = generate_random_gnp(9, 0.4, seed)
            ref = nx.from_graph6_bytes(serialize_graph6(G).encode())
            assert sorted(tuple(sorted(e)) for e in ref.edges()) == list(G.edges)
            assert nx.to_graph6_bytes(ref, header=False).decode().strip() == serialize_graph6(G)

    def test_large_vertex_count_header(self):
        G = Graph(70, [(0, 69), (3, 4)])
        text = serialize_graph6(G)
        assert text.startswith("~")
        assert parse_graph6(text) == G
        assert nx.from_graph6_bytes(text.encode()).number_of_edges() == 2

    def test_round_trip_random(self):
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(0, 12)
            G = generate_random_gnp(n, rng.random(), rng.randrange(10**6))
            text = serialize_graph6(G)
            assert serialize_graph6(parse_graph6(text)) == text
            assert parse_graph6(text) == G

    @pytest.mark.parametrize("text, offset", [
        ("D~", 2),          # one data byte short
        ("D~{?", 3),        # trailing byte
        ("D~ {", 2),        # space is outside 63..126
        ("~?", 2),          # truncated long header
    ])
    def test_malformed(self, text, offset):
        with pytest.raises(GraphFormatError) as err:
            parse_graph6(text)
        assert err.value.offset == offset
        assert f"byte offset {offset}" in str(err.value)


class TestEdgeList:
    def test_path(self):
        G = parse_edge_list("3\n0 1\n1 2")
        assert G.edges == ((0, 1), (1, 2))

    def test_dedup(self):
        assert parse_edge_list("2\n0 1\n1 0").m == 1

    def test_self_loop_line_number(self):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list("4\n0 1\n2 2")
        assert err.value.line == 3

    def test_out_of_range(self):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list("3\n0 3")
        assert err.value.line == 2

    def test_non_integer(self):
        with pytest.raises(GraphFormatError) as err:
            parse_edge_list("3\n0 x")
        assert err.value.line == 2

    def test_round_trip(self, tmp_path):
        G = generate_hypercube(3)
        assert parse_edge_list(serialize_edge_list(G)) == G
        path = tmp_path / "q3.txt"
        path.write_text(serialize_edge_list(G))
        assert read_graph(path) == G
        path.write_text(serialize_graph6(G) + "\n")
        assert read_graph(path) == G


class TestGenerators:
    def test_complete(self):
        assert generate_complete(0).n == 0
        assert generate_complete(5).m == 10
        assert set(generate_complete(4).degrees) == {3}

    def test_turan_6_3(self):
        G = generate_turan(6, 3)
        sizes = turan_class_sizes(6, 3)
        assert G.m == (36 - sum(s * s for s in sizes)) // 2 == 12

    def test_turan_edge_cases(self):
        assert generate_turan(4, 4) == generate_complete(4)
        assert generate_turan(5, 1).m == 0
        with pytest.raises(ValueError):
            generate_turan(3, 0)

    def test_turan_class_sizes(self):
        for n in range(0, 15):
            for k in range(1, 6):
                sizes = turan_class_sizes(n, k)
                assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
                assert sizes.count(n // k + 1) == (n % k if n % k else 0)

    def test_modular(self):
        G = generate_turan_modular(6, 3)
        assert G.m == 12 and set(G.degrees) == {4}
        assert generate_turan_modular(4, 1).m == 0
        with pytest.raises(ValueError):
            generate_turan_modular(4, 0)

    def test_modular_matches_turan(self):
        for n in range(1, 11):
            for k in range(1, n + 1):
                a, b = generate_turan(n, k), generate_turan_modular(n, k)
                assert a.m == b.m
                assert sorted(a.degrees) == sorted(b.degrees)

    def test_modular_is_isomorphic_to_turan(self):
        for n, k in [(7, 3), (9, 4), (10, 2)]:
            a = nx.Graph(list(generate_turan(n, k).edges))
            b = nx.Graph(list(generate_turan_modular(n, k).edges))
            assert nx.is_isomorphic(a, b)

    def test_hypercube(self):
        assert generate_hypercube(0).n == 1
        Q2 = generate_hypercube(2)
        assert Q2.m == 4 and set(Q2.degrees) == {2} and is_connected(Q2)
        Q3 = generate_hypercube(3)
        assert Q3.m == 12 and set(Q3.degrees) == {3}
        with pytest.raises(ValueError):
            generate_hypercube(21)

    def test_gnp(self):
        assert generate_random_gnp(7, 0, 1).m == 0
        assert generate_random_gnp(7, 1, 1) == generate_complete(7)
        assert generate_random_gnp(9, 0.5, 11) == generate_random_gnp(9, 0.5, 11)

    def test_random_tree(self):
        assert generate_random_tree(1, 0).n == 1
        assert generate_random_tree(2, 0) == Graph(2, [(0, 1)])
        for seed in range(20):
            T = generate_random_tree(8, seed)
            assert T.m == 7 and is_connected(T)
        assert generate_random_tree(8, 5) == generate_random_tree(8, 5)

    def test_all_labeled_trees_counts(self):
        # Cayley: n^(n-2) labeled trees, all distinct
        for n in range(1, 7):
            trees = list(all_labeled_trees(n))
            assert len(trees) == max(1, n ** (n - 2))
            assert len(set(trees)) == len(trees)
            assert all(T.m == n - 1 and is_connected(T) for T in trees)

    def test_all_labeled_graphs(self):
        gs = list(all_labeled_graphs(4))
        assert len(gs) == 64 and len(set(gs)) == 64

    def test_kpartite_is_clique_free(self):
        for seed in range(20):
            G = generate_random_kpartite(9, 3, 0.8, seed)
            assert not has_clique(G, 4)


class TestStructure:
    def test_induced(self):
        K5 = generate_complete(5)
        assert induced_subgraph(K5, range(5)) == K5
        assert induced_subgraph(K5, []).n == 0
        assert induced_subgraph(K5, [0, 2, 4]) == generate_complete(3)
        with pytest.raises(ValueError):
            induced_subgraph(K5, [7])

    @given(graphs(max_n=8))
    @settings(max_examples=60)
    def test_induced_edge_count(self, G):
        S = {v for v in range(G.n) if v % 3 != 1}
        H = induced_subgraph(G, S)
        assert H.m == sum(1 for u, v in G.edges if u in S and v in S)

    def test_has_clique_examples(self):
        assert has_clique(generate_complete(4), 4)
        assert not has_clique(generate_cycle(5), 3)
        assert is_triangle_free(generate_cycle(5))
        T = generate_turan(6, 3)
        assert not has_clique(T, 4) and has_clique(T, 3)
        assert not has_clique(generate_complete(3), 4)

    @given(graphs(max_n=7))
    @settings(max_examples=80)
    def test_has_clique_oracle(self, G):
        for r in range(1, 6):
            assert has_clique(G, r) == has_clique_naive(G.n, list(G.edges), r)
