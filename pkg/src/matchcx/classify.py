"""Closed-form classifiers for matching complexes and the structural recognisers they need.

Each classifier has an oracle counterpart in :mod:`matchcx.decide`; the test
suite checks that the two agree on exhaustive small-graph corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .complexes import matching_complex
from .decide import (
    BudgetExhausted,
    DecisionCache,
    is_cohen_macaulay,
    is_gorenstein,
    is_shellable,
    is_vertex_decomposable,
)
from .errors import InvalidInputError
from .graphs import (
    INF,
    Graph,
    complete_bipartite,
    connected_components,
    girth,
    is_connected,
    is_isomorphic,
    make_graph,
    max_induced_matching_size,
    max_matching_size,
)
from .homology import QQ, FieldSpec

UNKNOWN = "unknown"

FIGURE1_GRAPH = complete_bipartite(2, 3)


def _require_connected(H: Graph) -> None:
    if not is_connected(H):
        raise InvalidInputError("graph must be connected")


def is_star(H: Graph) -> bool:
    """``K_{1,k}`` with ``k >= 1``; ``K_2`` counts."""
    _require_connected(H)
    return H.m >= 1 and H.n == H.m + 1 and max(H.degrees()) == H.m


def is_star_triangle(H: Graph) -> bool:
    """Triangles sharing one common vertex (a lone triangle included)."""
    _require_connected(H)
    t, rem = divmod(H.m, 3)
    if rem or t < 1 or H.n != 2 * t + 1:
        return False
    degs = H.degrees()
    for c in range(H.n):
        if degs[c] != H.n - 1:
            continue
        if all(degs[v] == 2 for v in range(H.n) if v != c):
            return True
    return False


@dataclass(frozen=True)
class CWDecomposition:
    """Bipartite base plus leaf edges at X and pendant triangles at Y."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    base_edges: tuple[tuple[int, int], ...]
    leaf_edges: dict[int, tuple[tuple[int, int], ...]] = field(hash=False)
    pendant_triangles: dict[int, tuple[tuple[int, int], ...]] = field(hash=False)

    @property
    def triangle_count(self) -> int:
        return sum(len(v) for v in self.pendant_triangles.values())

    def all_edges(self) -> list[tuple[int, int]]:
        edges = list(self.base_edges)
        for es in self.leaf_edges.values():
            edges += es
        for y, tris in self.pendant_triangles.items():
            for a, b in tris:
                edges += [(min(y, a), max(y, a)), (min(y, b), max(y, b)), (a, b)]
        return edges

    def reassemble(self, n: int) -> Graph:
        return make_graph(n, self.all_edges())

    def as_dict(self) -> dict:
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "base_edges": [list(e) for e in self.base_edges],
            "leaf_edges": {str(x): [list(e) for e in es] for x, es in self.leaf_edges.items()},
            "pendant_triangles": {str(y): [list(t) for t in ts] for y, ts in self.pendant_triangles.items()},
        }


def cameron_walker_decompose(H: Graph) -> CWDecomposition | None:
    """Peel pendant triangles and leaves, then verify the bipartite base.

    Returns None when ``H`` is not a Cameron-Walker graph, which includes
    stars and star triangles.
    """
    _require_connected(H)
    if H.m == 0 or is_star(H) or is_star_triangle(H):
        return None
    deg = H.degrees()
    adj = H.adjacency

    # pendant triangle: an edge ab with deg a = deg b = 2 and a common neighbour y of degree > 2
    triangles: dict[int, list[tuple[int, int]]] = {}
    peeled = set()
    for a, b in H.edges:
        if deg[a] != 2 or deg[b] != 2:
            continue
        common = adj[a] & adj[b]
        if not common:
            continue
        y = common.bit_length() - 1
        if deg[y] <= 2:
            return None
        triangles.setdefault(y, []).append((a, b))
        peeled.update((a, b))

    leaves = {v for v in range(H.n) if deg[v] == 1}
    X = sorted({w for v in leaves for w in H.neighbors(v)})
    if any(x in leaves or x in peeled for x in X):
        return None
    Xs = set(X)
    Y = sorted(v for v in range(H.n) if v not in leaves and v not in peeled and v not in Xs)
    Ys = set(Y)
    if any(y not in Ys for y in triangles):
        return None

    base, leaf_edges = [], {x: [] for x in X}
    for u, v in H.edges:
        if u in peeled or v in peeled:
            continue
        if u in leaves or v in leaves:
            leaf, x = (u, v) if u in leaves else (v, u)
            leaf_edges[x].append((u, v))
            continue
        if (u in Xs) == (v in Xs):
            return None  # X-X or Y-Y edge: base is not bipartite on (X, Y)
        base.append((u, v))
    if not base:
        return None
    # base must be connected on X ∪ Y
    base_vertices = sorted(Xs | Ys)
    index = {v: i for i, v in enumerate(base_vertices)}
    if not is_connected(make_graph(len(base_vertices), [(index[u], index[v]) for u, v in base])):
        return None
    decomposition = CWDecomposition(
        tuple(X), tuple(Y), tuple(base),
        {x: tuple(es) for x, es in leaf_edges.items()},
        {y: tuple(ts) for y, ts in sorted(triangles.items())},
    )
    if decomposition.reassemble(H.n).edges != H.edges:
        return None
    return decomposition


def has_im_eq_m(H: Graph) -> bool:
    _require_connected(H)
    return max_induced_matching_size(H) == max_matching_size(H)


def im_eq_m_structural(H: Graph) -> bool:
    """Star, star triangle or Cameron-Walker, decided without computing matchings."""
    return is_star(H) or is_star_triangle(H) or cameron_walker_decompose(H) is not None


# -- Gorenstein -------------------------------------------------------------


def _component_kind(C: Graph) -> str | None:
    if C.n == 1:
        return "isolated_vertex"
    if C.n == 2 and C.m == 1:
        return "edge"
    if C.n == 3 and C.m == 2:
        return "path2"
    if C.n == 5 and C.m == 5 and all(d == 2 for d in C.degrees()):
        return "cycle5"
    if C.n == 5 and C.m == 6 and is_isomorphic(C, FIGURE1_GRAPH):
        return "k23"
    return None


def gorenstein_components(H: Graph) -> list[str | None]:
    """Kind of every component; None marks a component outside the allowed list."""
    return [_component_kind(C) for C, _ in connected_components(H)]


def gorenstein_classifier(H: Graph) -> bool:
    """Every component is a path of length at most 2, a 5-cycle or ``K_{2,3}``.

    Isolated vertices are accepted as paths of length 0; they do not
    change the matching complex.
    """
    if H.m == 0:
        raise InvalidInputError("graph must have at least one edge")
    return all(kind is not None for kind in gorenstein_components(H))


# -- girth at least five ----------------------------------------------------


def is_cycle(H: Graph, length: int) -> bool:
    return H.n == length and H.m == length and is_connected(H) and all(d == 2 for d in H.degrees())


def girth5_cm_classifier(H: Graph) -> bool:
    """CM matching complex for connected graphs of girth at least 5."""
    _require_connected(H)
    if girth(H) < 5:
        raise InvalidInputError("girth5_cm_classifier needs girth >= 5")
    return is_cycle(H, 5) or is_star(H) or cameron_walker_decompose(H) is not None


# -- complete and complete bipartite graphs ---------------------------------


def kn_predicates(n: int) -> dict[str, bool]:
    if n < 1:
        raise InvalidInputError("n must be positive")
    return {"strongly_connected": n % 2 == 1 or n == 2, "cm": n <= 3 or n == 5}


def kmn_predicates(m: int, n: int) -> dict[str, bool | str]:
    """``cm`` is ``"unknown"`` where the question is open (larger part ``m >= 5``)."""
    if m > n:
        m, n = n, m
    if m < 1:
        raise InvalidInputError("both parts must be non-empty")
    # a 0-dimensional complex (m == 1) is trivially strongly connected
    sc = m == 1 or n != m
    if m < 5:
        cm: bool | str = n >= 2 * m - 1
    elif n == m or (m == 5 and n < 2 * m - 1):
        cm = False
    else:
        cm = UNKNOWN
    return {"strongly_connected": sc, "cm": cm}


Criterion = Literal["vd", "shellable", "cm"]

_am_memo: dict[tuple, int | None] = {}


def criterion_holds(H: Graph, criterion: Criterion, field: FieldSpec = QQ, *,
                    budget: int | None = None, cache: DecisionCache | None = None) -> bool:
    """Evaluate one decide-module criterion on the matching complex of ``H``.

    Raises :class:`BudgetExhausted` when a search runs out of budget.
    """
    cx = matching_complex(H)
    if criterion == "cm":
        return is_cohen_macaulay(cx, field, cache)
    if criterion == "vd":
        verdict = is_vertex_decomposable(cx, budget=budget, cache=cache)
    elif criterion == "shellable":
        verdict = is_shellable(cx, budget=budget, cache=cache).verdict
    else:
        raise InvalidInputError(f"unknown criterion {criterion!r}")
    if verdict is None:
        raise BudgetExhausted(f"{criterion} undecided for {H!r}")
    return verdict


def a_m_search(m: int, criterion: Criterion, n_max: int, field: FieldSpec = QQ, *,
               budget: int | None = None, cache: DecisionCache | None = None) -> int | None:
    """Smallest ``n`` in ``(m, n_max]`` with the criterion holding on ``M(K_{m,n})``."""
    if m < 1:
        raise InvalidInputError("m must be positive")
    key = (m, criterion, n_max, field.p if criterion == "cm" else None)
    if key in _am_memo:
        return _am_memo[key]
    result = None
    for n in range(m + 1, n_max + 1):
        if criterion_holds(complete_bipartite(m, n), criterion, field, budget=budget, cache=cache):
            result = n
            break
    _am_memo[key] = result
    return result


# -- report -----------------------------------------------------------------


def classify_report(H: Graph, *, oracle: bool = False, field: FieldSpec = QQ,
                    cache: DecisionCache | None = None) -> dict:
    """All classifier verdicts for ``H``, optionally with oracle comparisons."""
    report: dict = {}
    connected = is_connected(H)
    g = girth(H)
    report["connected"] = connected
    report["girth"] = None if g == INF else int(g)
    if H.m:
        kinds = gorenstein_components(H)
        report["gorenstein_classifier"] = all(k is not None for k in kinds)
        report["gorenstein_components"] = kinds
        report["has_isolated_vertex_component"] = "isolated_vertex" in kinds
    if connected and H.m:
        star_, tri = is_star(H), is_star_triangle(H)
        cw = cameron_walker_decompose(H)
        report["is_star"] = star_
        report["is_star_triangle"] = tri
        report["cameron_walker"] = cw.as_dict() if cw else None
        report["has_im_eq_m"] = has_im_eq_m(H)
        report["im_eq_m_structural"] = star_ or tri or cw is not None
        if H.n == 2:
            report["note"] = "K2 is treated as a star (it is also a path)"
        if g >= 5:
            report["girth5_cm_classifier"] = girth5_cm_classifier(H)
    if oracle and H.m:
        cx = matching_complex(H)
        report["oracle"] = {
            "field": str(field),
            "is_gorenstein": is_gorenstein(cx, field, cache),
            "is_cohen_macaulay": is_cohen_macaulay(cx, field, cache),
        }
        report["oracle"]["gorenstein_agrees"] = report["oracle"]["is_gorenstein"] == report["gorenstein_classifier"]
        if "girth5_cm_classifier" in report:
            report["oracle"]["girth5_agrees"] = report["oracle"]["is_cohen_macaulay"] == report["girth5_cm_classifier"]
    return report
