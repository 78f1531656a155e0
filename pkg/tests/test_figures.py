import itertools

from matchcx import classify, corpus, decide, figures, graphs
from matchcx.complexes import matching_complex


def test_fig1_is_unique_six_edge_graph_with_complement_c6_line_graph():
    target = graphs.complement(graphs.cycle(6))
    hits = [H for H in corpus.connected_graphs(7) if H.m == 6
            and graphs.is_isomorphic(graphs.line_graph(H)[0], target)]
    assert len(hits) == 1
    assert graphs.is_isomorphic(hits[0], figures.paper_fig1())


def test_fig2_rightmost_checksum():
    H = figures.paper_fig2_rightmost()
    L = graphs.line_graph(H)[0]
    poly = graphs.independence_polynomial(L)
    assert poly.coefficients == figures.FIG2_RIGHTMOST_POLY
    assert decide.euler_sign_test(L) is decide.SignTest.FAILS
    assert graphs.is_isomorphic(H, graphs.complete_bipartite(3, 4))


def test_fig2_rightmost_removal_property():
    H = figures.paper_fig2_rightmost()
    # a maximum matching each of whose edges leaves a pentagon or K_{2,3} behind
    c5, k23 = graphs.cycle(5), graphs.complete_bipartite(2, 3)
    size = graphs.max_matching_size(H)
    found = False
    for M in itertools.combinations(H.edges, size):
        if len({v for e in M for v in e}) != 2 * size:
            continue
        rests = [graphs.remove_vertices(H, e) for e in M]
        if all(any(graphs.is_isomorphic(graphs.induced_subgraph(r, [v for v in range(r.n) if r.degree(v)])[0], t)
                   for t in (c5, k23)) for r in rests):
            found = True
            break
    assert found


def test_fig3_checksum():
    H = figures.paper_fig3()
    cw = classify.cameron_walker_decompose(H)
    assert cw is not None and cw.reassemble(H.n) == H
    assert classify.has_im_eq_m(H)
    assert decide.is_vertex_decomposable(matching_complex(H))
