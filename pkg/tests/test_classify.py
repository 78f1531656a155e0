import pytest

from matchcx import classify, corpus, decide, figures, graphs
from matchcx.complexes import matching_complex
from matchcx.errors import InvalidInputError
from matchcx.homology import GF, QQ


class TestRecognizers:
    def test_stars(self):
        assert classify.is_star(graphs.star(4))
        assert classify.is_star(graphs.complete(2))
        assert not classify.is_star(graphs.cycle(5))

    def test_star_triangles(self):
        assert classify.is_star_triangle(graphs.star_triangle(3))
        assert classify.is_star_triangle(graphs.complete(3))
        assert not classify.is_star_triangle(graphs.cycle(5))

    def test_disconnected_rejected(self):
        H = graphs.disjoint_union(graphs.complete(2), graphs.complete(2))
        for fn in (classify.is_star, classify.is_star_triangle, classify.cameron_walker_decompose):
            with pytest.raises(InvalidInputError):
                fn(H)


class TestCameronWalker:
    def test_decomposes_fig3(self):
        H = figures.paper_fig3()
        cw = classify.cameron_walker_decompose(H)
        assert cw is not None
        assert cw.reassemble(H.n) == H
        assert sorted(cw.X) == [0, 2] and sorted(cw.Y) == [1, 3]
        assert cw.triangle_count == 3
        assert all(len(v) >= 1 for v in cw.leaf_edges.values())

    def test_non_examples(self):
        for H in (graphs.cycle(5), graphs.star(3), graphs.complete(4), graphs.path(3)):
            assert classify.cameron_walker_decompose(H) is None

    def test_path_with_four_edges_is_cw(self):
        cw = classify.cameron_walker_decompose(graphs.path(4))
        assert cw is not None and sorted(cw.X) == [1, 3]

    def test_pure_size(self):
        H = figures.paper_fig3()
        cw = classify.cameron_walker_decompose(H)
        cx = matching_complex(H)
        assert cx.dim + 1 == len(cw.X) + cw.triangle_count
        assert decide.is_vertex_decomposable(cx)


class TestGorensteinClassifier:
    @pytest.mark.parametrize("H,expected", [
        (graphs.complete(2), True),
        (graphs.path(2), True),
        (graphs.cycle(5), True),
        (graphs.complete_bipartite(2, 3), True),
        (graphs.path(3), False),
        (graphs.cycle(4), False),
        (graphs.disjoint_union(graphs.cycle(5), graphs.complete(1)), True),
    ])
    def test_examples(self, H, expected):
        assert classify.gorenstein_classifier(H) is expected

    def test_edgeless_rejected(self):
        with pytest.raises(InvalidInputError):
            classify.gorenstein_classifier(graphs.make_graph(3, []))


class TestGirth5:
    def test_examples(self):
        assert classify.girth5_cm_classifier(graphs.cycle(5))
        assert not classify.girth5_cm_classifier(graphs.cycle(7))
        assert not decide.is_cohen_macaulay(matching_complex(graphs.cycle(7)), QQ)
        assert not classify.girth5_cm_classifier(graphs.cycle(6))
        assert classify.girth5_cm_classifier(graphs.star(4))

    def test_hypothesis_enforced(self):
        with pytest.raises(InvalidInputError):
            classify.girth5_cm_classifier(graphs.cycle(4))


class TestFamilies:
    @pytest.mark.parametrize("n", range(2, 10))
    def test_kn(self, n):
        pred = classify.kn_predicates(n)
        assert pred["strongly_connected"] == (n % 2 == 1 or n == 2)
        assert pred["cm"] == (n in (2, 3, 5))

    def test_kmn(self):
        assert classify.kmn_predicates(3, 5)["cm"] is True
        assert classify.kmn_predicates(5, 3)["cm"] is True
        assert classify.kmn_predicates(3, 4)["cm"] is False
        assert classify.kmn_predicates(5, 5)["cm"] is False
        assert classify.kmn_predicates(6, 20)["cm"] == classify.UNKNOWN
        assert classify.kmn_predicates(4, 4)["strongly_connected"] is False

    def test_a_m(self):
        assert classify.a_m_search(2, "vd", 5) == 3
        assert classify.a_m_search(3, "cm", 6, GF(3)) == 5

    def test_unknown_criterion(self):
        with pytest.raises(InvalidInputError):
            classify.criterion_holds(graphs.complete(3), "bogus")


def test_im_eq_m_brute_vs_structural():
    for H in corpus.connected_graphs(6):
        assert classify.has_im_eq_m(H) == classify.im_eq_m_structural(H)


def test_report_with_oracle():
    rep = classify.classify_report(graphs.cycle(5), oracle=True, field=QQ)
    assert rep["gorenstein_classifier"] and rep["oracle"]["gorenstein_agrees"]
    assert rep["girth"] == 5 and rep["girth5_cm_classifier"]


def test_kmn_false_cells_match_oracle():
    # every definite False for m >= 5 is confirmed by the rational CM oracle
    for n in range(5, 9):
        assert classify.kmn_predicates(5, n)["cm"] is False
        assert not decide.is_cohen_macaulay(matching_complex(graphs.complete_bipartite(5, n)), QQ)
    assert classify.kmn_predicates(5, 9)["cm"] == classify.UNKNOWN
