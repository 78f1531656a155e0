import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchcx import graphs
from matchcx.errors import InvalidInputError


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graphs.make_graph(n, chosen)


def as_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


class TestMakeGraph:
    def test_path(self):
        G = graphs.make_graph(3, [(0, 1), (1, 2)])
        assert G.m == 2 and G.degrees() == [1, 2, 1]

    def test_single_vertex(self):
        assert graphs.make_graph(1, []).m == 0

    def test_dedup(self):
        assert graphs.make_graph(4, [(0, 1), (1, 0), (0, 1), (2, 3)]).m == 2

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
    def test_rejects(self, edges):
        with pytest.raises(InvalidInputError):
            graphs.make_graph(3, edges)


class TestGenerators:
    def test_sizes(self):
        assert (graphs.complete(7).n, graphs.complete(7).m) == (7, 21)
        assert (graphs.complete_bipartite(2, 3).n, graphs.complete_bipartite(2, 3).m) == (5, 6)
        assert (graphs.star_triangle(2).n, graphs.star_triangle(2).m) == (5, 6)
        assert graphs.cycle(5).degrees() == [2] * 5
        assert graphs.path(3).n == 4 and graphs.path(3).m == 3
        assert graphs.star(4).degree(0) == 4

    def test_generate_dispatch(self):
        assert graphs.generate("complete", 4) == graphs.complete(4)
        with pytest.raises(InvalidInputError):
            graphs.generate("petersen", 10)

    def test_cameron_walker(self):
        base = graphs.make_graph(2, [(0, 1)])
        G = graphs.cameron_walker(base, leaves={0: 2}, triangles={1: 1})
        assert G.n == 2 + 2 + 2 and G.m == 1 + 2 + 3

    def test_cameron_walker_needs_leaves(self):
        base = graphs.make_graph(2, [(0, 1)])
        with pytest.raises(InvalidInputError):
            graphs.cameron_walker(base, leaves={}, triangles={})

    def test_bipartition(self):
        assert graphs.bipartition(graphs.cycle(5)) is None
        X, Y = graphs.bipartition(graphs.complete_bipartite(2, 3))
        assert sorted(map(len, (X, Y))) == [2, 3]


class TestDerived:
    def test_line_graph_labels(self):
        H = graphs.complete_bipartite(2, 3)
        L, labels = graphs.line_graph(H)
        assert L.n == H.m
        assert [(lab.u, lab.v) for lab in labels] == list(H.edges)
        assert [lab.index for lab in labels] == list(range(H.m))

    def test_girth(self):
        assert graphs.girth(graphs.cycle(7)) == 7
        assert graphs.girth(graphs.complete(4)) == 3
        assert graphs.girth(graphs.path(4)) == graphs.INF

    def test_matching_numbers(self):
        assert graphs.max_matching_size(graphs.complete(7)) == 3
        assert graphs.max_induced_matching_size(graphs.complete(7)) == 1
        assert graphs.max_induced_matching_size(graphs.path(4)) == 2
        assert graphs.has_perfect_matching(graphs.cycle(6))
        assert not graphs.has_perfect_matching(graphs.star(3))

    def test_independence_polynomial(self):
        # C5: 1 + 5x + 5x^2
        assert graphs.independence_polynomial(graphs.cycle(5)).coefficients == (1, 5, 5)
        p = graphs.independence_polynomial(graphs.make_graph(3, []))
        assert p.coefficients == (1, 3, 3, 1) and p(-1) == 0


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_line_graph_matches_networkx(G):
    L, labels = graphs.line_graph(G)
    expected = nx.line_graph(as_nx(G))
    assert L.m == expected.number_of_edges()


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_complement_involution(G):
    assert graphs.complement(graphs.complement(G)) == G


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_matching_sizes_against_networkx(G):
    g = as_nx(G)
    assert graphs.max_matching_size(G) == len(nx.max_weight_matching(g, maxcardinality=True))
    assert graphs.is_connected(G) == (G.n > 0 and nx.is_connected(g))


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_independence_polynomial_counts_sets(G):
    counts = [0] * (G.n + 1)
    for k in range(G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            if not any(G.has_edge(a, b) for a, b in itertools.combinations(S, 2)):
                counts[k] += 1
    while counts[-1] == 0:
        counts.pop()
    assert graphs.independence_polynomial(G).coefficients == tuple(counts)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_isomorphism_against_networkx(G):
    rng = __import__("random").Random(G.m)
    perm = list(range(G.n))
    rng.shuffle(perm)
    H = graphs.make_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges])
    assert graphs.is_isomorphic(G, H)
    assert graphs.canonical_form(G) == graphs.canonical_form(H)
