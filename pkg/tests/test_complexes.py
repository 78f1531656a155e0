import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchcx import complexes as cxm
from matchcx import graphs
from matchcx.errors import InvalidInputError
from matchcx.graphs import iter_matchings

SC = cxm.SimplicialComplex


def faces_by_brute_force(cx):
    out = set()
    for m in cx.masks:
        verts = cxm.vertices_of(m)
        for k in range(len(verts) + 1):
            out.update(cxm.mask_of(s) for s in itertools.combinations(verts, k))
    return out


@st.composite
def complexes_st(draw):
    n = draw(st.integers(1, 7))
    facets = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True),
                           min_size=1, max_size=6))
    return SC.from_facets(facets)


def test_facets_are_an_antichain():
    cx = SC.from_facets([[0, 1, 2], [0, 1], [3]])
    assert cx.facets == ((0, 1, 2), (3,))
    assert cx.dim == 2 and not cxm.is_pure(cx)


def test_empty_and_void():
    assert cxm.EMPTY.dim == -1 and cxm.f_vector(cxm.EMPTY) == [1]
    assert cxm.reduced_euler_characteristic(cxm.EMPTY) == -1


def test_matching_complex_faces_are_matchings():
    H = graphs.complete_bipartite(2, 3)
    cx = cxm.matching_complex(H)
    expected = {cxm.mask_of(M) for M in iter_matchings(H)}
    assert faces_by_brute_force(cx) == expected
    assert cx.dim == 1 and len(cx.masks) == 6


@pytest.mark.parametrize("n", range(2, 8))
def test_matching_complex_of_complete_graph_f_vector(n):
    cx = cxm.matching_complex(graphs.complete(n))
    counts = [0] * (n // 2 + 1)
    for M in iter_matchings(graphs.complete(n)):
        counts[len(M)] += 1
    assert cxm.f_vector(cx) == counts


def test_link_and_deletion():
    cx = SC.from_facets([[1, 2], [2, 3]])
    assert cxm.link(cx, [2]).facets == ((1,), (3,))
    assert cxm.link(cx, [1]).facets == ((2,),)
    assert cxm.delete_vertex(cx, 2).facets == ((1,), (3,))
    with pytest.raises(InvalidInputError):
        cxm.link(cx, [1, 3])


def test_core_removes_cone_points():
    cone = SC.from_facets([[0, 1, 9], [1, 2, 9], [0, 2, 9]])
    assert cxm.core(cone).facets == ((0, 1), (0, 2), (1, 2))
    assert cxm.core(cxm.core(cone)) == cxm.core(cone)


def test_shedding_examples():
    cx = SC.from_facets([[1, 2], [2, 3]])
    assert cxm.is_shedding_vertex(cx, 1)
    assert not cxm.is_shedding_vertex(cx, 2)


@pytest.mark.parametrize("m,a", [(2, 3), (2, 4), (3, 4), (3, 5)])
def test_largest_part_edges_shed(m, a):
    H = graphs.complete_bipartite(m, a)
    cx = cxm.matching_complex(H)
    for i, (u, v) in enumerate(H.edges):
        if v >= m:  # v lies in the larger part
            assert cxm.is_shedding_vertex(cx, i)


def test_strong_connectivity():
    assert cxm.is_strongly_connected(cxm.matching_complex(graphs.complete(5)))
    assert not cxm.is_strongly_connected(cxm.matching_complex(graphs.complete(4)))
    ok, why = cxm.strong_connectivity(SC.from_facets([[0, 1], [2]]))
    assert not ok and why == "not pure"


def test_h_vector_of_boundary_of_triangle():
    cx = SC.from_facets([[0, 1], [1, 2], [0, 2]])
    assert cxm.h_vector(cx) == [1, 1, 1]


def test_canonical_key_is_relabelling_invariant():
    a = SC.from_facets([[0, 1], [1, 2]])
    b = SC.from_facets([[5, 7], [7, 9]])
    assert cxm.canonical_key(a)[0] == cxm.canonical_key(b)[0]


@settings(max_examples=80, deadline=None)
@given(complexes_st())
def test_faces_match_brute_force(cx):
    faces = faces_by_brute_force(cx)
    assert set(cxm.all_faces(cx)) == faces
    assert sum(cxm.f_vector(cx)) == len(faces)


@settings(max_examples=80, deadline=None)
@given(complexes_st(), st.data())
def test_link_faces(cx, data):
    faces = sorted(faces_by_brute_force(cx))
    F = data.draw(st.sampled_from(faces))
    lk = cxm.link(cx, F)
    expected = {G & ~F for G in faces if G & F == F}
    assert faces_by_brute_force(lk) == expected


@settings(max_examples=80, deadline=None)
@given(complexes_st(), st.data())
def test_deletion_faces(cx, data):
    v = data.draw(st.sampled_from(cx.vertices))
    expected = {G for G in faces_by_brute_force(cx) if not G >> v & 1}
    assert faces_by_brute_force(cxm.delete_vertex(cx, v)) == expected
