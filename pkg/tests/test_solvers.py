import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs
from cutwidth.errors import CapacityError
from cutwidth.bounds import max_uniform_lambda, prefix_bound
from cutwidth.degeneracy import core_decomposition, degeneracy_core
from cutwidth.graph import (Graph, all_labeled_graphs, generate_complete, generate_cycle,
                            generate_hypercube, generate_path, generate_petersen,
                            generate_random_gnp, generate_star, generate_turan_modular)
from cutwidth.solvers import (AnnealingSchedule, cut_profile, exact_cutwidth_bruteforce,
                              exact_cutwidth_dp, heuristic_cutwidth, turan_crossing_bound,
                              turan_crossing_bound_max, turan_natural_ordering)
from oracles import cut_profile_naive, cutwidth_naive


class TestCutProfile:
    def test_path(self):
        lo = cut_profile(generate_path(4), [0, 1, 2, 3])
        assert lo.profile == (1, 1, 1, 0) and lo.width == 1

    def test_k4(self):
        lo = cut_profile(generate_complete(4), [3, 1, 0, 2])
        assert lo.profile == (3, 4, 3, 0) and lo.width == 4

    def test_c4_interleaved(self):
        # oracle: cut_profile_naive on the four cycle edges gives [2, 4, 2, 0]
        assert cut_profile(generate_cycle(4), [0, 2, 1, 3]).profile == (2, 4, 2, 0)

    def test_trivial(self):
        assert cut_profile(Graph(1), [0]).width == 0
        assert cut_profile(Graph(0), []).width == 0
        assert cut_profile(Graph(4), [3, 2, 1, 0]).width == 0

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            cut_profile(generate_path(3), [0, 1, 1])
        with pytest.raises(ValueError):
            cut_profile(generate_path(3), [0, 1])

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=80)
    def test_profile_invariants(self, G):
        order = list(range(G.n))
        random.Random(G.m).shuffle(order)
        lo = cut_profile(G, order)
        assert list(lo.profile) == cut_profile_naive(G.n, list(G.edges), order)
        assert lo.profile[-1] == 0 and min(lo.profile) >= 0
        prev = 0
        for v, cur in zip(order, lo.profile):
            assert abs(cur - prev) <= G.degree(v)
            prev = cur


class TestExactDP:
    def test_complete_graphs(self):
        for n in range(1, 13):
            assert exact_cutwidth_dp(generate_complete(n)).value == n * n // 4

    def test_oracle_values(self):
        # frozen from cutwidth_naive (all permutations, tests/oracles.py)
        assert exact_cutwidth_dp(generate_star(4)).value == 2
        assert exact_cutwidth_dp(generate_cycle(6)).value == 2
        assert exact_cutwidth_dp(generate_hypercube(3)).value == 5

    def test_petersen(self):
        # exact_cutwidth_bruteforce(max_n=10) also returns 6
        assert exact_cutwidth_dp(generate_petersen()).value == 6

    def test_zero_iff_edgeless(self):
        assert exact_cutwidth_dp(Graph(6)).value == 0
        assert exact_cutwidth_dp(Graph(0)).value == 0
        assert exact_cutwidth_dp(Graph(2, [(0, 1)])).value == 1

    def test_witness_deterministic_and_optimal(self):
        G = generate_random_gnp(10, 0.4, 3)
        a, b = exact_cutwidth_dp(G), exact_cutwidth_dp(G)
        assert a == b
        assert a.witness.width == a.value
        assert sorted(a.witness.order) == list(range(10))

    def test_capacity(self):
        with pytest.raises(CapacityError, match="heuristic"):
            exact_cutwidth_dp(Graph(23))
        assert exact_cutwidth_dp(generate_path(5), max_n=5).value == 1
        with pytest.raises(CapacityError):
            exact_cutwidth_dp(generate_path(6), max_n=5)

    @given(graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_against_naive_oracle(self, G):
        assert exact_cutwidth_dp(G).value == cutwidth_naive(G.n, list(G.edges))

    def test_dp_equals_bruteforce_random(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(7, 9)
            G = generate_random_gnp(n, rng.choice([0.2, 0.4, 0.6, 0.8]), rng.randrange(10**6))
            assert exact_cutwidth_dp(G).value == exact_cutwidth_bruteforce(G).value

    def test_subgraph_monotonicity(self):
        rng = random.Random(11)
        for _ in range(40):
            G = generate_random_gnp(9, 0.5, rng.randrange(10**6))
            keep = [e for e in G.edges if rng.random() < 0.7]
            H = Graph(G.n, keep)
            assert exact_cutwidth_dp(H).value <= exact_cutwidth_dp(G).value


class TestBruteForce:
    def test_examples(self):
        assert exact_cutwidth_bruteforce(Graph(5)).value == 0
        assert exact_cutwidth_bruteforce(Graph(2, [(0, 1)])).value == 1
        with pytest.raises(CapacityError):
            exact_cutwidth_bruteforce(Graph(10))

    def test_agrees_with_dp_up_to_five(self):
        for n in range(0, 6):
            for G in all_labeled_graphs(n):
                b = exact_cutwidth_bruteforce(G)
                assert b.value == exact_cutwidth_dp(G).value
                assert b.witness.width == b.value


class TestHeuristic:
    def test_upper_bound(self):
        rng = random.Random(5)
        for _ in range(20):
            G = generate_random_gnp(rng.randint(2, 9), 0.5, rng.randrange(10**6))
            h = heuristic_cutwidth(G, iterations=500, seed=1)
            assert h.value >= exact_cutwidth_bruteforce(G).value
            assert h.witness.width == h.value
            assert h.method == "heuristic"

    def test_k10(self):
        assert heuristic_cutwidth(generate_complete(10)).value == 25

    def test_deterministic(self):
        G = generate_random_gnp(14, 0.3, 9)
        assert heuristic_cutwidth(G, iterations=2000, seed=3) == heuristic_cutwidth(G, iterations=2000, seed=3)

    def test_custom_schedule_on_hypercube(self):
        # exact value 10 from exact_cutwidth_dp
        h = heuristic_cutwidth(generate_hypercube(4), seed=1, schedule=AnnealingSchedule(iterations=5000))
        assert 10 <= h.value == h.witness.width

    def test_single_vertex(self):
        assert heuristic_cutwidth(Graph(1)).value == 0


class TestTuranOrdering:
    def test_crossing_bound_values(self):
        assert turan_crossing_bound(12, 3, 6) == 30
        for n in range(1, 10):
            assert turan_crossing_bound(n, 3, n) == n
        with pytest.raises(ValueError):
            turan_crossing_bound(5, 3, 0)
        with pytest.raises(ValueError):
            turan_crossing_bound(5, 3, 6)

    def test_profile_below_crossing_bound(self):
        for n in range(1, 21):
            for k in range(2, 6):
                lo = turan_natural_ordering(n, k)
                assert lo.order == tuple(range(n))
                for i, cnt in enumerate(lo.profile, start=1):
                    assert cnt <= turan_crossing_bound(n, k, i)
                assert lo.width <= turan_crossing_bound_max(n, k)

    def test_6_3(self):
        lo = turan_natural_ordering(6, 3)
        assert lo.profile == tuple(cut_profile_naive(6, list(generate_turan_modular(6, 3).edges), range(6)))
        assert lo.width <= turan_crossing_bound_max(6, 3)

    def test_complete_case(self):
        for n in range(1, 12):
            assert turan_natural_ordering(n, n).width == n * n // 4

    def test_k1_empty(self):
        assert set(turan_natural_ordering(7, 1).profile) == {0}


def test_proof_prefix_inequality():
    rng = random.Random(3)
    for _ in range(30):
        G = generate_random_gnp(rng.randint(3, 9), 0.6, rng.randrange(10**6))
        delta = core_decomposition(G).degeneracy
        core, _ = degeneracy_core(G)
        lam = max_uniform_lambda(core, 0)
        for _ in range(5):
            order = list(range(core.n))
            rng.shuffle(order)
            for i, cnt in enumerate(cut_profile(core, order).profile, start=1):
                assert cnt >= prefix_bound(i, delta, lam)
