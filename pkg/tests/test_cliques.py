from __future__ import annotations

import pytest
from hypothesis import given, settings

import brute
from conftest import graphs
from genchroma.cliques import (
    chromatic_number,
    clique_bound_check,
    clique_number,
    extremal_clique_classifier,
)
from genchroma.errors import SolverLimitError
from genchroma.graphs import Graph, complete, cycle, empty, star, turan
from genchroma.partitions import phi_exact


class TestCliqueNumber:
    @pytest.mark.parametrize(
        "g,expected",
        [
            (cycle(5), 2),
            (turan(6, 3), 3),
            (complete(4), 4),
            (empty(5), 1),
            (star(4), 2),
            (Graph.from_edges(1, []), 1),
            (Graph.from_edges(0, []), 0),
        ],
    )
    def test_known_values(self, g, expected):
        omega, witness = clique_number(g)
        assert omega == expected
        assert len(witness) == expected

    def test_size_limit(self):
        with pytest.raises(SolverLimitError):
            clique_number(empty(5), max_n=4)

    @given(graphs(max_n=9))
    @settings(max_examples=120)
    def test_matches_subset_enumeration(self, g):
        omega, witness = clique_number(g)
        assert omega == brute.brute_clique(g)
        members = sorted(witness)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                assert g.has_edge(u, v)


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "g,expected",
        [
            (cycle(5), 3),
            (turan(6, 3), 3),
            (empty(5), 1),
            (complete(4), 4),
            (star(4), 2),
            (Graph.from_edges(0, []), 0),
        ],
    )
    def test_known_values(self, g, expected):
        chi, _ = chromatic_number(g)
        assert chi == expected

    def test_size_limit(self):
        with pytest.raises(SolverLimitError):
            chromatic_number(empty(6), max_n=5)

    @given(graphs(max_n=7))
    @settings(max_examples=100)
    def test_matches_cover_dp(self, g):
        chi, coloring = chromatic_number(g)
        assert chi == brute.brute_chromatic(g)
        if g.n:
            assert len(set(coloring)) == chi
            for u, v in g.edges():
                assert coloring[u] != coloring[v]

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=100)
    def test_invariant_chain(self, g):
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g)
        assert phi_exact(g).phi <= omega <= chi


class TestCliqueBoundCheck:
    def test_five_cycle(self):
        check = clique_bound_check(cycle(5), 2)
        assert check.bound_ok and not check.equality  # 80 <= 125

    def test_complete_graph_equality(self):
        check = clique_bound_check(complete(4), 4)
        assert check.bound_ok and check.equality  # 576 = 576

    def test_balanced_tripartite_equality(self):
        check = clique_bound_check(turan(6, 3), 3)
        assert check.equality  # 9*96 = 864 = 216*4

    def test_inconsistent_omega(self):
        with pytest.raises(ValueError):
            clique_bound_check(cycle(5), 0)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=120)
    def test_bound_always_holds(self, g):
        omega, _ = clique_number(g)
        assert clique_bound_check(g, omega).bound_ok


class TestExtremalClassifier:
    def test_balanced_tripartite(self):
        check = extremal_clique_classifier(turan(6, 3), 3, 3, 3)
        assert check.bound_equality and check.regular and check.complete_multipartite

    def test_five_cycle_regular_but_no_equality(self):
        check = extremal_clique_classifier(cycle(5), 2, 2, 3)
        assert not check.bound_equality and check.regular
        assert not check.complete_multipartite

    def test_star(self):
        check = extremal_clique_classifier(star(4), 2, 2, 2)
        assert not check.bound_equality and not check.regular
        assert not check.complete_multipartite

    def test_complete_graph(self):
        check = extremal_clique_classifier(complete(4), 4, 4, 4)
        assert check.bound_equality and check.regular and check.complete_multipartite

    def test_edgeless_graph_is_one_partite(self):
        check = extremal_clique_classifier(empty(4), 1, 1, 1)
        assert check.bound_equality and check.regular and check.complete_multipartite

    def test_inconsistent_invariants(self):
        with pytest.raises(ValueError):
            extremal_clique_classifier(cycle(5), 2, 3, 3)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=120)
    def test_equality_forces_structure(self, g):
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g)
        phi = phi_exact(g).phi
        check = extremal_clique_classifier(g, omega, phi, chi)
        if check.bound_equality:
            assert check.regular and check.complete_multipartite
