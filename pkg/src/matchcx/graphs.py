"""Finite simple graphs on vertices ``0..n-1``.

Everything here works on small graphs (a few dozen edges at most), so the
matching numbers are computed by exhaustive search over vertex bitmasks
rather than by a polynomial-time matching algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import InvalidInputError

INF = float("inf")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``edges`` is sorted with ``u < v`` in each pair."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)


class EdgeLabel(NamedTuple):
    """Vertex ``index`` of a line graph and the edge ``(u, v)`` it stands for."""

    index: int
    u: int
    v: int


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, ``coefficients[k]`` is the coefficient of ``x**k``."""

    coefficients: tuple[int, ...]

    def __call__(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}x")
            else:
                terms.append(f"{c}x^{k}")
        return " + ".join(terms) or "0"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, normalising and deduplicating the edge list."""
    if n < 0:
        raise InvalidInputError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise InvalidInputError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


# -- named families ---------------------------------------------------------


def complete(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """``K_{m,n}`` with parts ``0..m-1`` and ``m..m+n-1``."""
    return make_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"a cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(length: int) -> Graph:
    """Path with ``length`` edges (``length + 1`` vertices)."""
    if length < 0:
        raise InvalidInputError("path length must be non-negative")
    return make_graph(length + 1, [(i, i + 1) for i in range(length)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 0:
        raise InvalidInputError("leaf count must be non-negative")
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def star_triangle(t: int) -> Graph:
    """``t`` triangles glued at vertex 0."""
    if t < 1:
        raise InvalidInputError("a star triangle needs at least one triangle")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return make_graph(2 * t + 1, edges)


def bipartition(G: Graph) -> tuple[list[int], list[int]] | None:
    """2-colouring of a connected graph (colour of vertex 0 first), or None."""
    if G.n == 0:
        return [], []
    colour = [-1] * G.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if colour[w] < 0:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    if min(colour) < 0:
        return None
    return ([v for v in range(G.n) if colour[v] == 0],
            [v for v in range(G.n) if colour[v] == 1])


def cameron_walker(base: Graph, leaves: Mapping[int, int],
                   triangles: Mapping[int, int] | None = None) -> Graph:
    """Attach leaf edges to the X side and pendant triangles to the Y side of ``base``.

    ``base`` must be connected and bipartite. The side holding the keys of
    ``leaves`` is X, and every X vertex needs at least one leaf. New vertices
    are numbered after the base vertices, X attachments first.
    """
    triangles = dict(triangles or {})
    if base.n == 0 or not is_connected(base):
        raise InvalidInputError("Cameron-Walker base must be a non-empty connected graph")
    parts = bipartition(base)
    if parts is None:
        raise InvalidInputError("Cameron-Walker base must be bipartite")
    side0, side1 = parts
    if not leaves:
        raise InvalidInputError("at least one X vertex with leaves is required")
    X, Y = (side0, side1) if next(iter(leaves)) in side0 else (side1, side0)
    for x in X:
        if leaves.get(x, 0) < 1:
            raise InvalidInputError(f"X vertex {x} needs at least one leaf edge")
    for v in leaves:
        if v not in X:
            raise InvalidInputError(f"leaf multiplicities given on both sides (vertex {v})")
    for y, k in triangles.items():
        if y not in Y:
            raise InvalidInputError(f"pendant triangles must attach to Y, vertex {y} is in X")
        if k < 0:
            raise InvalidInputError("triangle multiplicity must be non-negative")
    edges = list(base.edges)
    nxt = base.n
    for x in X:
        for _ in range(leaves[x]):
            edges.append((x, nxt))
            nxt += 1
    for y in Y:
        for _ in range(triangles.get(y, 0)):
            a, b = nxt, nxt + 1
            edges += [(y, a), (y, b), (a, b)]
            nxt += 2
    return make_graph(nxt, edges)


FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "star": star,
    "star_triangle": star_triangle,
    "cameron_walker": cameron_walker,
}


def generate(family: str, *params) -> Graph:
    """Dispatch to a named generator, e.g. ``generate("complete_bipartite", 2, 3)``."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise InvalidInputError(f"unknown graph family {family!r}") from None
    return fn(*params)


# -- derived graphs ---------------------------------------------------------


def line_graph(H: Graph) -> tuple[Graph, list[EdgeLabel]]:
    labels = [EdgeLabel(i, u, v) for i, (u, v) in enumerate(H.edges)]
    at_vertex: list[list[int]] = [[] for _ in range(H.n)]
    for i, (u, v) in enumerate(H.edges):
        at_vertex[u].append(i)
        at_vertex[v].append(i)
    edges = set()
    for incident in at_vertex:
        edges.update(combinations(incident, 2))
    return make_graph(len(labels), edges), labels


def complement(G: Graph) -> Graph:
    present = set(G.edges)
    return Graph(G.n, tuple(e for e in combinations(range(G.n), 2) if e not in present))


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``vertices`` relabelled in increasing order, plus the old labels."""
    keep = tuple(sorted(set(vertices)))
    new = {v: i for i, v in enumerate(keep)}
    edges = [(new[u], new[v]) for u, v in G.edges if u in new and v in new]
    return Graph(len(keep), tuple(sorted(edges))), keep


def remove_vertices(G: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced_subgraph(G, [v for v in range(G.n) if v not in drop])[0]


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return make_graph(offset, edges)


def connected_components(G: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components ordered by smallest vertex; each comes with its vertex map."""
    seen = 0
    out = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adjacency[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(induced_subgraph(G, _bits(comp)))
    return out


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- matchings --------------------------------------------------------------


def iter_matchings(H: Graph) -> Iterator[tuple[int, ...]]:
    """Every matching of ``H`` as a sorted tuple of edge indices (empty one included)."""
    edges = H.edges

    def extend(start: int, used: int, chosen: list[int]):
        yield tuple(chosen)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append(i)
            yield from extend(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    yield from extend(0, 0, [])


def max_matching_size(H: Graph) -> int:
    """``m(H)`` by branch and bound over the lowest unmatched vertex."""
    adj = H.adjacency

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        # drop vertices that have no available neighbour
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= low
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        top = best(rest)
        cap = (avail.bit_count()) // 2
        for w in _bits(adj[v] & rest):
            if top == cap:
                break
            top = max(top, 1 + best(rest & ~(1 << w)))
        return top

    return best((1 << H.n) - 1)


def max_induced_matching_size(H: Graph) -> int:
    """``im(H)``: largest matching whose edges are pairwise joined by no edge of ``H``."""
    adj = H.adjacency
    closed = [adj[u] | adj[v] | 1 << u | 1 << v for u, v in H.edges]
    ends = [1 << u | 1 << v for u, v in H.edges]

    @lru_cache(maxsize=None)
    def best(blocked: int, start: int) -> int:
        # an edge is usable if neither endpoint is blocked
        top = 0
        for i in range(start, len(ends)):
            if ends[i] & blocked:
                continue
            top = max(top, 1 + best(blocked | closed[i], i + 1))
        return top

    return best(0, 0)


def has_perfect_matching(H: Graph) -> bool:
    return H.n % 2 == 0 and 2 * max_matching_size(H) == H.n


def independence_polynomial(G: Graph) -> Polynomial:
    """Independent-set counts by size, via ``I(G) = I(G - v) + x I(G - N[v])``."""
    adj = G.adjacency

    @lru_cache(maxsize=None)
    def poly(avail: int) -> tuple[int, ...]:
        if not avail:
            return (1,)
        v = (avail & -avail).bit_length() - 1
        if not adj[v] & avail:
            # isolated in what remains: factor (1 + x)
            p = poly(avail & ~(1 << v))
            return _add(p, (0,) + p)
        without = poly(avail & ~(1 << v))
        with_v = poly(avail & ~(adj[v] | 1 << v))
        return _add(without, (0,) + with_v)

    return Polynomial(poly((1 << G.n) - 1))


def _add(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    if len(p) < len(q):
        p, q = q, p
    return tuple(a + (q[i] if i < len(q) else 0) for i, a in enumerate(p))


# -- isomorphism (brute force, small graphs only) ---------------------------


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Backtracking isomorphism test, meant for graphs with at most ~10 vertices."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    n = G.n
    ga, ha = G.adjacency, H.adjacency
    gdeg, hdeg = G.degrees(), H.degrees()
    order = sorted(range(n), key=lambda v: -gdeg[v])
    image = [-1] * n

    def extend(k: int, used: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if (ga[v] >> u & 1) != (ha[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                if extend(k + 1, used | 1 << w):
                    return True
        image[v] = -1
        return False

    return extend(0, 0)


def canonical_form(G: Graph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least relabelled edge list over all permutations.

    Exponential; only used by tests on graphs with at most 6 or 7 vertices.
    """
    best = None
    for perm in permutations(range(G.n)):
        cand = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or cand < best:
            best = cand
    return best or ()
