import random
import threading

import pytest

from matchcx import complexes as cxm
from matchcx import corpus, decide, graphs
from matchcx.homology import GF, QQ

from conftest import random_complex

SC = cxm.SimplicialComplex
M = cxm.matching_complex


class TestCohenMacaulay:
    def test_small_complete_graphs(self):
        assert decide.is_cohen_macaulay(M(graphs.complete(5)), QQ)
        assert not decide.is_cohen_macaulay(M(graphs.complete(4)), QQ)

    def test_k7_depends_on_characteristic(self):
        cx = M(graphs.complete(7))
        assert decide.is_cohen_macaulay(cx, QQ)
        assert not decide.is_cohen_macaulay(cx, GF(3))

    def test_non_pure_is_not_cm(self):
        assert not decide.is_cohen_macaulay(SC.from_facets([[0, 1], [2]]))

    def test_zero_dimensional_is_cm(self):
        assert decide.is_cohen_macaulay(SC.from_facets([[0], [1], [2]]))

    def test_cache_coherence(self):
        rng = random.Random(3)
        for _ in range(80):
            cx = random_complex(rng)
            for f in (QQ, GF(2)):
                on = decide.is_cohen_macaulay(cx, f, decide.DecisionCache())
                off = decide.is_cohen_macaulay(cx, f, decide.DecisionCache(enabled=False))
                assert on == off

    def test_link_stability(self):
        rng = random.Random(11)
        for H in corpus.connected_graphs(6):
            cx = M(H)
            if not decide.is_cohen_macaulay(cx, QQ):
                continue
            faces = cxm.all_faces(cx)
            for F in rng.sample(faces, min(5, len(faces))):
                assert decide.is_cohen_macaulay(cxm.link(cx, F), QQ)


class TestGorenstein:
    def test_pentagon_and_edge(self):
        assert decide.is_gorenstein(M(graphs.cycle(5)), QQ)
        assert decide.is_gorenstein(M(graphs.path(1)), QQ)

    def test_k23_is_gorenstein(self):
        assert decide.is_gorenstein(M(graphs.complete_bipartite(2, 3)), GF(2))

    def test_path3_is_not(self):
        assert not decide.is_gorenstein(M(graphs.path(3)), QQ)

    def test_euler_sign(self):
        assert decide.euler_sign_test(graphs.line_graph(graphs.cycle(5))[0]) is decide.SignTest.PASSES
        assert decide.euler_sign_test(graphs.complete(1)) is decide.SignTest.NOT_APPLICABLE


class TestVertexDecomposable:
    def test_k22_is_not(self):
        assert decide.is_vertex_decomposable(M(graphs.complete_bipartite(2, 2))) is False

    def test_simplex(self):
        assert decide.is_vertex_decomposable(cxm.simplex([0, 1, 2]))
        assert decide.is_vertex_decomposable(cxm.EMPTY)

    def test_witness_validates(self):
        for H in (graphs.complete_bipartite(2, 3), graphs.complete_bipartite(3, 5), graphs.cycle(5)):
            cx = M(H)
            tree = decide.vertex_decomposition(cx)
            assert tree is not None and decide.check_vertex_decomposition(cx, tree)
            assert decide.shedding_order(tree)

    def test_budget_gives_none(self):
        cx = M(graphs.complete_bipartite(4, 7))
        assert decide.is_vertex_decomposable(cx, budget=3, cache=decide.DecisionCache()) is None

    def test_cache_coherence(self):
        rng = random.Random(5)
        for _ in range(60):
            cx = random_complex(rng)
            assert (decide.is_vertex_decomposable(cx, cache=decide.DecisionCache())
                    == decide.is_vertex_decomposable(cx, cache=decide.DecisionCache(enabled=False)))


class TestShellable:
    def test_order_is_checked(self):
        cx = M(graphs.complete_bipartite(2, 3))
        res = decide.is_shellable(cx)
        assert res.verdict and decide.check_shelling(cx, res.order)

    def test_bad_order_rejected(self):
        cx = SC.from_facets([[0, 1], [2, 3], [1, 2]])
        assert not decide.check_shelling(cx, [(0, 1), (2, 3), (1, 2)])
        assert decide.check_shelling(cx, [(0, 1), (1, 2), (2, 3)])

    def test_non_shellable(self):
        assert decide.is_shellable(M(graphs.complete_bipartite(3, 4))).verdict is False
        assert decide.is_shellable(SC.from_facets([[0, 1], [2, 3]])).verdict is False

    def test_budget(self):
        res = decide.is_shellable(M(graphs.complete_bipartite(4, 7)), budget=5, cache=decide.DecisionCache())
        assert res.verdict is None and res.reason == "budget exhausted"


def test_hierarchy_on_small_corpus():
    for H in corpus.all_graphs(6):
        if H.m == 0:
            continue
        cx = M(H)
        vd = decide.is_vertex_decomposable(cx)
        sh = decide.is_shellable(cx).verdict
        cm = decide.is_cohen_macaulay(cx, QQ)
        if cxm.is_pure(cx):
            assert not vd or sh
            assert not sh or cm
        if cm:
            assert cxm.is_pure(cx) and (cx.dim < 1 or cxm.is_strongly_connected(cx))


def test_shared_cache_across_threads():
    cache = decide.DecisionCache()
    items = list(corpus.connected_graphs(5))
    expected = [decide.is_cohen_macaulay(M(H), QQ, decide.DecisionCache(enabled=False)) for H in items]
    results = [None] * len(items)

    def work(lo):
        for i in range(lo, len(items), 4):
            results[i] = decide.is_cohen_macaulay(M(items[i]), QQ, cache)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == expected


def test_cache_counters():
    cache = decide.DecisionCache()
    cx = M(graphs.complete(5))
    decide.is_cohen_macaulay(cx, QQ, cache)
    before = cache.hits
    decide.is_cohen_macaulay(cx, QQ, cache)
    assert cache.hits > before
    cache.clear()
    assert len(cache) == 0


@pytest.mark.parametrize("H", [graphs.complete_bipartite(2, 3), graphs.cycle(5), graphs.star(3)])
def test_gorenstein_field_independent(H):
    verdicts = {decide.is_gorenstein(M(H), f) for f in (QQ, GF(2), GF(3), GF(5))}
    assert len(verdicts) == 1
