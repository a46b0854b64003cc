"""
Unit tests for the Bruhat order and lower intervals.
"""

import networkx as nx
import pytest

from core.bruhat import (
    ORDER_CACHE_SIZE,
    bruhat_leq,
    covering_edges,
    group_poincare,
    hasse_graph,
    is_palindromic,
    lower_interval,
    lower_interval_filtered,
    order_cache_info,
)
from core.coxeter import enumerate_elements, from_word, identity, longest_element, multiply
from core.errors import MixedSystems, ParseError
from core.rootdata import CartanDatum, build_root_system
from tests.fixtures.expected_counts import A3_GROUP_POINCARE

MAX_ORDER = 3628800


class TestBruhatOrder:
    """Test cases for the order relation."""

    def test_identity_is_minimum(self, a3_elements):
        """Test e <= w and w <= w0 for every w."""
        e = a3_elements[0]
        w0 = a3_elements[-1]
        for w in a3_elements:
            assert bruhat_leq(e, w)
            assert bruhat_leq(w, w0)

    def test_incomparable_pair(self, a2):
        """Test s1 s2 and s2 s1 are incomparable."""
        u = from_word(a2, (1, 2))
        v = from_word(a2, (2, 1))
        assert not bruhat_leq(u, v)
        assert not bruhat_leq(v, u)

    def test_order_axioms(self, a3_elements):
        """Test reflexivity, antisymmetry and transitivity on A3."""
        relation = {(u, w): bruhat_leq(u, w) for u in a3_elements for w in a3_elements}
        for u in a3_elements:
            assert relation[(u, u)]
            for w in a3_elements:
                if u != w and relation[(u, w)]:
                    assert not relation[(w, u)]
                    assert u.length < w.length
        for u in a3_elements:
            for v in a3_elements:
                if not relation[(u, v)]:
                    continue
                for w in a3_elements:
                    if relation[(v, w)]:
                        assert relation[(u, w)]

    def test_b2_relation(self, b2_elements):
        """Test every B2 element of length l is above all elements of length l - 2."""
        for u in b2_elements:
            for w in b2_elements:
                if w.length - u.length >= 2:
                    assert bruhat_leq(u, w)

    def test_longest_element_reverses_order(self, a3, a3_elements):
        """Test u <= w iff w0 w <= w0 u on every A3 pair."""
        w0 = longest_element(a3)
        shifted = {w: multiply(w0, w) for w in a3_elements}
        for u in a3_elements:
            for w in a3_elements:
                assert bruhat_leq(u, w) == bruhat_leq(shifted[w], shifted[u])

    def test_order_memo_is_bounded(self, a3_elements):
        """Test the order memo has a finite size."""
        bruhat_leq(a3_elements[0], a3_elements[-1])
        info = order_cache_info()
        assert info.maxsize == ORDER_CACHE_SIZE
        assert 0 < info.currsize <= ORDER_CACHE_SIZE

    def test_mixed_systems(self, a2, a3):
        """Test comparing elements of different systems is rejected."""
        with pytest.raises(MixedSystems):
            bruhat_leq(identity(a2), identity(a3))


class TestLowerInterval:
    """Test cases for [e, w]."""

    def test_a2_s1s2(self, a2):
        """Test [e, s1 s2] has size 4 and coefficients [1, 2, 1]."""
        interval = lower_interval(from_word(a2, (1, 2)))
        assert interval.size == 4
        assert interval.poincare == (1, 2, 1)

    def test_identity_interval(self, a2):
        """Test [e, e] = {e}."""
        interval = lower_interval(from_word(a2, (1, 1)))
        assert interval.size == 1
        assert interval.poincare == (1,)

    def test_full_group(self, a3, a3_elements):
        """Test [e, w0] is the whole group."""
        interval = lower_interval(longest_element(a3))
        assert interval.members == frozenset(a3_elements)
        assert interval.poincare == A3_GROUP_POINCARE

    def test_word_independence(self, a3):
        """Test any reduced word of w gives the same interval."""
        w = from_word(a3, (1, 2, 1))
        assert lower_interval(w, (2, 1, 2)) == lower_interval(w)

    def test_rejects_non_reduced_word(self, a3):
        """Test the optional word must be a reduced word of w."""
        w = from_word(a3, (1, 2))
        with pytest.raises(ParseError):
            lower_interval(w, (1, 2, 2, 2))
        with pytest.raises(ParseError):
            lower_interval(w, (2, 1))

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_subproduct_matches_filter(self, rank):
        """Test the sub-product interval equals the order-filter interval on A_n."""
        system = build_root_system(CartanDatum.from_series("A", rank))
        elements = enumerate_elements(system, MAX_ORDER)
        for w in elements:
            assert lower_interval(w) == lower_interval_filtered(w, elements)

    @pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("C", 3)])
    def test_first_coefficient_is_support_size(self, series, rank):
        """Test b_1 counts the generators occurring in w."""
        system = build_root_system(CartanDatum.from_series(series, rank))
        for w in enumerate_elements(system, MAX_ORDER):
            poincare = lower_interval(w).poincare
            b1 = poincare[1] if len(poincare) > 1 else 0
            assert b1 == len(set(w.word))

    def test_relation_table_matches_membership(self, a3_elements):
        """Test u in [e, w] iff u <= w for all pairs in A3."""
        intervals = {w: lower_interval(w) for w in a3_elements}
        for u in a3_elements:
            for w in a3_elements:
                assert (u in intervals[w]) == bruhat_leq(u, w)

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_interval_invariants(self, rank):
        """Test b_0 = b_l = 1 and the coefficients sum to the size."""
        system = build_root_system(CartanDatum.from_series("A", rank))
        for w in enumerate_elements(system, MAX_ORDER):
            interval = lower_interval(w)
            assert interval.poincare[0] == 1
            assert interval.poincare[w.length] == 1
            assert sum(interval.poincare) == interval.size

    def test_sorted_members(self, a2):
        """Test members sort by length then canonical word."""
        interval = lower_interval(longest_element(a2))
        words = [u.word_string for u in interval.sorted_members()]
        assert words == ["e", "1", "2", "1,2", "2,1", "1,2,1"]


class TestPalindromicity:
    """Test cases for the palindromicity test."""

    @pytest.mark.parametrize(
        "coefficients,expected",
        [((1,), True), ((1, 2, 1), True), ((1, 3, 5, 4, 1), False), ((1, 3, 5, 6, 4, 1), False)],
    )
    def test_sequences(self, coefficients, expected):
        """Test palindromicity of coefficient lists."""
        assert is_palindromic(coefficients) is expected

    def test_b2_intervals_are_palindromic(self, b2_elements):
        """Test every B2 interval is rationally smooth."""
        assert all(is_palindromic(lower_interval(w)) for w in b2_elements)


class TestHasseDiagram:
    """Test cases for covering relations and the graph model."""

    def test_a2_covering_edges(self, a2):
        """Test the Hasse diagram of S_3 has 8 edges."""
        interval = lower_interval(longest_element(a2))
        edges = covering_edges(interval)
        assert len(edges) == 8
        assert all(v.length == u.length + 1 for u, v in edges)

    def test_graph_model(self, a2):
        """Test the networkx graph mirrors the covering edges."""
        graph = hasse_graph(lower_interval(longest_element(a2)))
        assert isinstance(graph, nx.DiGraph)
        assert graph.number_of_nodes() == 6
        assert graph.number_of_edges() == 8
        assert graph.nodes["e"]["length"] == 0
        assert graph.has_edge("1", "1,2")
        assert nx.is_directed_acyclic_graph(graph)


class TestGroupPoincare:
    """Test cases for whole-group length generating functions."""

    def test_a3_is_q_factorial(self, a3_elements):
        """Test the length distribution of S_4."""
        assert group_poincare(a3_elements) == A3_GROUP_POINCARE

    def test_b2(self, b2_elements):
        """Test the length distribution of the dihedral group of order 8."""
        assert group_poincare(b2_elements) == (1, 2, 2, 2, 1)
