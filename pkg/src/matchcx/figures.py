"""Named built-in graphs used by the reproduction suites.

``paper-fig1`` is ``K_{2,3}``: among connected graphs with six edges it is
the only one whose line graph is the complement of a 6-cycle.

``paper-fig2-rightmost`` is ``K_{3,4}`` (parts ``{0, 5, 6}`` and
``{1, 2, 3, 4}``): exhaustive search over 7-vertex, 12-edge graphs finds it
as the unique graph with independence polynomial ``1 + 12x + 36x^2 + 24x^3``
for its line graph and a maximum matching each of whose edges leaves a
5-cycle or ``K_{2,3}`` when its endpoints are removed.

``paper-fig3`` is a Cameron-Walker graph exercising every ingredient:
a path base ``x0 - y0 - x1 - y1``, leaves at both X vertices, and
pendant triangles at both Y vertices.
"""

from .graphs import Graph, cameron_walker, complete_bipartite, make_graph

FIG2_RIGHTMOST_POLY = (1, 12, 36, 24)


def paper_fig1() -> Graph:
    return complete_bipartite(2, 3)


def paper_fig2_rightmost() -> Graph:
    return make_graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6),
                          (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)])


def paper_fig3() -> Graph:
    # base path 0-1-2-3 has X = {0, 2}, Y = {1, 3}
    base = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    return cameron_walker(base, leaves={0: 2, 2: 1}, triangles={1: 1, 3: 2})


BUILTINS = {
    "paper-fig1": paper_fig1,
    "paper-fig2-rightmost": paper_fig2_rightmost,
    "paper-fig3": paper_fig3,
}
