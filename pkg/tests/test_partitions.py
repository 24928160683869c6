from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from conftest import graphs
from genchroma.degrees import DegreeStats
from genchroma.errors import SolverLimitError
from genchroma.graphs import Graph, complete, cycle, empty, path, star, turan
from genchroma.partitions import (
    DeltaPartition,
    edge_bound_check,
    equality_classifier,
    is_delta_set,
    partition_inequality_check,
    phi_exact,
    phi_lower_bounds,
    phi_oracle,
)


class TestIsDeltaSet:
    def test_middle_of_path(self):
        assert is_delta_set(path(3), {1})  # degree 2 <= 3 - 1

    def test_full_clique_fails(self):
        assert not is_delta_set(complete(4), {0, 1, 2, 3})

    def test_singleton_max_degree(self):
        assert is_delta_set(complete(4), {0})  # 3 <= 4 - 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_delta_set(path(3), set())

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            is_delta_set(path(3), {5})

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=100)
    def test_independent_sets_qualify(self, g):
        # greedily build a maximal independent set
        chosen: set[int] = set()
        blocked = 0
        for v in range(g.n):
            if not (blocked >> v) & 1:
                chosen.add(v)
                blocked |= (1 << v) | g.adj[v]
        assert is_delta_set(g, chosen)


class TestDeltaPartition:
    def test_sizes(self):
        p = DeltaPartition.of(cycle(5), [{0, 1, 2}, {3, 4}])
        assert p.sizes == (3, 2)

    def test_rejects_empty_part(self):
        with pytest.raises(ValueError, match="empty part"):
            DeltaPartition.of(cycle(5), [{0, 1, 2, 3, 4}, set()])

    def test_rejects_overlap(self):
        with pytest.raises(ValueError, match="overlap"):
            DeltaPartition.of(cycle(5), [{0, 1, 2}, {2, 3, 4}])

    def test_rejects_missing_cover(self):
        with pytest.raises(ValueError, match="cover"):
            DeltaPartition.of(cycle(5), [{0, 1, 2}, {3}])

    def test_rejects_oversized_part(self):
        with pytest.raises(ValueError, match="degree bound"):
            DeltaPartition.of(complete(4), [{0, 1}, {2, 3}])


class TestPhiExact:
    def test_complete_graph_needs_singletons(self):
        result = phi_exact(complete(4))
        assert result.phi == 4
        assert result.witness.sizes == (1, 1, 1, 1)

    def test_five_cycle(self):
        result = phi_exact(cycle(5))
        assert result.phi == 2
        assert sorted(result.witness.sizes) == [2, 3]

    def test_balanced_tripartite(self):
        assert phi_exact(turan(6, 3)).phi == 3

    def test_single_vertex(self):
        assert phi_exact(Graph.from_edges(1, [])).phi == 1

    def test_no_vertices_rejected(self):
        with pytest.raises(ValueError):
            phi_exact(Graph.from_edges(0, []))

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=100)
    def test_witness_parts_are_admissible(self, g):
        result = phi_exact(g)
        assert len(result.witness.parts) == result.phi
        for part in result.witness.parts:
            assert is_delta_set(g, part)


class TestPhiOracle:
    def test_edgeless_single_part(self):
        result = phi_oracle(empty(4))
        assert result.phi == 1
        assert result.witness.sizes == (4,)

    def test_star(self):
        result = phi_oracle(star(4))
        assert result.phi == 2
        assert sorted(result.witness.sizes) == [1, 3]

    def test_single_vertex(self):
        assert phi_oracle(Graph.from_edges(1, [])).phi == 1

    def test_size_limit(self):
        with pytest.raises(SolverLimitError):
            phi_oracle(empty(13))
        assert phi_oracle(empty(13), max_n=13).phi == 1

    def test_exhaustive_agreement_n4(self):
        from genchroma.reports import all_labeled_graphs

        for g in all_labeled_graphs(4):
            assert phi_exact(g).phi == phi_oracle(g).phi

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=150)
    def test_greedy_matches_oracle(self, g):
        assert phi_exact(g).phi == phi_oracle(g).phi

    @given(graphs(min_n=1, max_n=6))
    @settings(max_examples=80)
    def test_matches_unpruned_enumeration(self, g):
        assert phi_oracle(g).phi == brute.brute_phi(g)


class TestDegreeSequenceDeterminism:
    def test_same_degree_multiset_same_phi(self):
        hexagon = cycle(6)
        two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert sorted(hexagon.degrees()) == sorted(two_triangles.degrees())
        assert phi_exact(hexagon).phi == phi_exact(two_triangles).phi

    @given(graphs(min_n=1, max_n=7), st.data())
    @settings(max_examples=60)
    def test_relabeling_invariant(self, g, data):
        import random as _random

        perm = list(range(g.n))
        _random.Random(data.draw(st.integers(0, 10**6))).shuffle(perm)
        relabeled = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert phi_exact(relabeled).phi == phi_exact(g).phi


class TestLowerBounds:
    def test_five_cycle(self):
        # r=1 fails (20 > 0), r=2 holds (80 <= 125)
        assert phi_lower_bounds(DegreeStats.from_graph(cycle(5))) == (2, 2)

    def test_complete_graph_equality(self):
        # r=4: 16*36 = 576 = 64*9
        assert phi_lower_bounds(DegreeStats.from_graph(complete(4))) == (4, 4)

    def test_edgeless(self):
        assert phi_lower_bounds(DegreeStats.from_graph(empty(6))) == (1, 1)

    def test_star(self):
        assert phi_lower_bounds(DegreeStats.from_graph(star(4))) == (2, 2)

    def test_impossible_degree_rejected(self):
        with pytest.raises(ValueError, match="impossible"):
            phi_lower_bounds(DegreeStats.from_degrees([3, 3, 3]))

    def test_zero_vertices_rejected(self):
        with pytest.raises(ValueError):
            phi_lower_bounds(DegreeStats.from_degrees([]))

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=150)
    def test_sandwich(self, g):
        bounds = phi_lower_bounds(DegreeStats.from_graph(g))
        assert bounds.from_mean <= bounds.from_quad_mean <= phi_exact(g).phi


class TestEqualityClassifier:
    def test_balanced_tripartite_equality(self):
        verdict = equality_classifier(turan(6, 3), 3)
        assert verdict.equality_holds and verdict.divisibility_ok and verdict.regular_ok
        # 9 * 96 = 864 = 216 * 4
        stats = DegreeStats.from_graph(turan(6, 3))
        assert 9 * stats.sum_d2 == 6**3 * 4

    def test_five_cycle_no_equality(self):
        verdict = equality_classifier(cycle(5), 2)
        assert not verdict.equality_holds  # 4*20 = 80 != 125

    def test_star_not_regular(self):
        verdict = equality_classifier(star(4), 2)
        assert not verdict.equality_holds and not verdict.regular_ok

    def test_wrong_phi_rejected(self):
        with pytest.raises(ValueError, match="partition number"):
            equality_classifier(cycle(5), 3)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=150)
    def test_never_raises_on_real_graphs(self, g):
        verdict = equality_classifier(g, phi_exact(g).phi)
        assert verdict.equality_holds == (verdict.divisibility_ok and verdict.regular_ok)


class TestPartitionInequalityCheck:
    def test_five_cycle_witness(self):
        p = DeltaPartition.of(cycle(5), [{0, 1, 2}, {3, 4}])
        check = partition_inequality_check(cycle(5), p)
        assert check.sum_d2 == 20 and check.square_cap == 30
        assert check.square_sum_ok and check.sigma2_ok and check.sigma3_ok

    def test_balanced_tripartite_equality(self):
        g = turan(6, 3)
        check = partition_inequality_check(g, phi_exact(g).witness)
        assert check.sum_d2 == check.square_cap == 96

    def test_edgeless_single_part(self):
        g = empty(3)
        check = partition_inequality_check(g, DeltaPartition.of(g, [{0, 1, 2}]))
        assert check.sum_d2 == 0 and check.square_cap == 0
        assert check.square_sum_ok and check.sigma2_ok and check.sigma3_ok

    def test_partition_revalidated(self):
        p = DeltaPartition.of(cycle(5), [{0, 1, 2}, {3, 4}])
        with pytest.raises(ValueError):
            partition_inequality_check(complete(4), p)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=100)
    def test_holds_on_every_witness(self, g):
        check = partition_inequality_check(g, phi_exact(g).witness)
        assert check.square_sum_ok and check.sigma2_ok and check.sigma3_ok


class TestEdgeBoundCheck:
    def test_star(self):
        check = edge_bound_check(star(4), 2, 2)
        assert check.phi_bound_ok  # 12 <= 16
        assert check.turan_ok

    def test_balanced_tripartite_tight(self):
        check = edge_bound_check(turan(6, 3), 3, 3)
        assert check.turan_ok and check.phi_bound_ok  # 72 = 72

    def test_complete_graph_tight(self):
        check = edge_bound_check(complete(4), 4, 4)
        assert check.turan_ok and check.phi_bound_ok  # 48 = 48

    def test_inconsistent_rejected(self):
        with pytest.raises(ValueError):
            edge_bound_check(complete(4), 5, 4)
