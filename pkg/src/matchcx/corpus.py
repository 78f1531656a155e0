"""Exhaustive small-graph corpora, one representative per isomorphism class.

Graphs are grown one vertex at a time: every class on ``n`` vertices is
obtained from a class on ``n - 1`` vertices by adding a vertex joined to
some subset. Candidates are bucketed by a Weisfeiler-Lehman hash and
deduplicated with networkx's VF2 isomorphism test.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

import networkx as nx

from .graphs import Graph, girth, is_connected, make_graph


def to_networkx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def from_networkx(g: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return make_graph(len(index), [(index[u], index[v]) for u, v in g.edges])


def _dedup(candidates: list[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
    out = []
    for G in candidates:
        g = to_networkx(G)
        key = (G.m, tuple(sorted(G.degrees())), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for _, h in bucket):
            continue
        bucket.append((G, g))
        out.append(G)
    return out


@lru_cache(maxsize=None)
def _classes(n: int, prop_name: str) -> tuple[Graph, ...]:
    prop = _HEREDITARY[prop_name]
    if n == 0:
        return (Graph(0, ()),)
    candidates = []
    for G in _classes(n - 1, prop_name):
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                H = make_graph(n, list(G.edges) + [(v, n - 1) for v in nbrs])
                if prop(H):
                    candidates.append(H)
    return tuple(_dedup(candidates))


# properties closed under taking induced subgraphs, so growth never loses a class
_HEREDITARY: dict[str, Callable[[Graph], bool]] = {
    "all": lambda G: True,
    "girth5": lambda G: girth(G) >= 5,
}


def graphs(n: int, *, hereditary: str = "all") -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism (optionally girth >= 5 only)."""
    return list(_classes(n, hereditary))


def connected_graphs(max_n: int, *, min_n: int = 1, min_edges: int = 1,
                     hereditary: str = "all") -> Iterator[Graph]:
    """Connected graphs with ``min_n..max_n`` vertices, one per isomorphism class."""
    for n in range(min_n, max_n + 1):
        for G in _classes(n, hereditary):
            if G.m >= min_edges and is_connected(G):
                yield G


def all_graphs(max_n: int, *, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from _classes(n, "all")
