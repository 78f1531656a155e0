"""Simplicial complexes presented by their facets.

Faces are stored as integer bitmasks over the vertex labels, so subset tests
and intersections are single integer operations. Vertex labels stay fixed
under links and deletions; vertices that no longer lie in a facet are
simply absent from the ground mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import InvalidInputError
from .graphs import Graph, line_graph


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _face_key(mask: int) -> tuple[int, ...]:
    return vertices_of(mask)


def _maximal(masks: Iterable[int]) -> list[int]:
    """Drop every mask contained in another one."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Complex given by an antichain of facets (bitmasks) inside a ground mask.

    Use :meth:`from_facets` unless the masks are already an antichain.
    ``{∅}`` is the single facet ``0``; an empty facet list is rejected.
    """

    ground_mask: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if not self.masks:
            raise InvalidInputError("the void complex (no faces) is not representable")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], ground: Iterable[int] | int | None = None) -> "SimplicialComplex":
        masks = [mask_of(f) for f in facets]
        if not masks:
            raise InvalidInputError("the void complex (no faces) is not representable")
        return cls._build(masks, ground)

    @classmethod
    def from_masks(cls, masks: Iterable[int], ground: int | None = None) -> "SimplicialComplex":
        return cls._build(list(masks), ground)

    @classmethod
    def _build(cls, masks: list[int], ground) -> "SimplicialComplex":
        maximal = sorted(_maximal(masks), key=_face_key)
        support = 0
        for m in maximal:
            support |= m
        if ground is None:
            gmask = support
        elif isinstance(ground, int):
            gmask = (1 << ground) - 1
        else:
            gmask = mask_of(ground)
        if support & ~gmask:
            raise InvalidInputError("facet vertex outside the ground set")
        return cls(gmask, tuple(maximal))

    # -- basic data ---------------------------------------------------------

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self.masks)

    @property
    def ground(self) -> tuple[int, ...]:
        return vertices_of(self.ground_mask)

    @cached_property
    def vertex_mask(self) -> int:
        """Vertices lying in at least one facet."""
        support = 0
        for m in self.masks:
            support |= m
        return support

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.vertex_mask)

    @cached_property
    def dim(self) -> int:
        return max(m.bit_count() for m in self.masks) - 1

    def is_simplex(self) -> bool:
        return len(self.masks) == 1

    def contains(self, face: Iterable[int] | int) -> bool:
        f = face if isinstance(face, int) else mask_of(face)
        return any(f & m == f for m in self.masks)

    def faces(self, size: int) -> list[int]:
        """Faces with ``size`` vertices, sorted by vertex tuple."""
        if size < 0:
            return []
        found = set()
        for m in self.masks:
            vs = vertices_of(m)
            if len(vs) < size:
                continue
            for c in combinations(vs, size):
                found.add(mask_of(c))
        return sorted(found, key=_face_key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        return f"SimplicialComplex(facets={[list(f) for f in self.facets]})"


EMPTY = SimplicialComplex(0, (0,))


# -- construction -----------------------------------------------------------


def independence_complex(G: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets, found as maximal cliques of the complement."""
    full = (1 << G.n) - 1
    non_adj = [full & ~a & ~(1 << v) for v, a in enumerate(G.adjacency)]
    found: list[int] = []

    def expand(R: int, P: int, X: int):
        if not P and not X:
            found.append(R)
            return
        PX = P | X
        # Tomita pivot: maximise candidates covered
        pivot, best = -1, -1
        while PX:
            low = PX & -PX
            u = low.bit_length() - 1
            c = (P & non_adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
            PX ^= low
        todo = P & ~non_adj[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            expand(R | low, P & non_adj[v], X & non_adj[v])
            P &= ~low
            X |= low
            todo ^= low

    expand(0, full, 0)
    return SimplicialComplex(full, tuple(sorted(found, key=_face_key)))


def matching_complex(H: Graph) -> SimplicialComplex:
    """Complex of matchings of ``H``; vertex ``i`` is edge ``H.edges[i]``."""
    return independence_complex(line_graph(H)[0])


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex.from_facets([list(vertices)])


# -- local operations -------------------------------------------------------


def _face_mask(face) -> int:
    return face if isinstance(face, int) else mask_of(face)


def link(cx: SimplicialComplex, face: Iterable[int] | int) -> SimplicialComplex:
    f = _face_mask(face)
    kept = [m & ~f for m in cx.masks if m & f == f]
    if not kept:
        raise InvalidInputError(f"{vertices_of(f)} is not a face of the complex")
    # facets through f minus f are automatically an antichain
    return SimplicialComplex(cx.ground_mask & ~f, tuple(sorted(kept, key=_face_key)))


def delete_vertex(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    bit = 1 << v
    if not cx.ground_mask & bit:
        raise InvalidInputError(f"vertex {v} is not in the ground set")
    avoiding = [m for m in cx.masks if not m & bit]
    trimmed = [m & ~bit for m in cx.masks if m & bit]
    kept = avoiding + [t for t in trimmed if not any(t & a == t for a in avoiding)]
    return SimplicialComplex(cx.ground_mask & ~bit, tuple(sorted(kept, key=_face_key)))


def star(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    bit = 1 << v
    if not cx.ground_mask & bit:
        raise InvalidInputError(f"vertex {v} is not in the ground set")
    kept = [m for m in cx.masks if m & bit]
    if not kept:
        raise InvalidInputError(f"vertex {v} lies in no facet")
    return SimplicialComplex(cx.ground_mask, tuple(kept))


def core(cx: SimplicialComplex) -> SimplicialComplex:
    """Remove the cone points (vertices lying in every facet)."""
    cone = cx.masks[0]
    for m in cx.masks[1:]:
        cone &= m
    if not cone:
        return cx
    return SimplicialComplex(cx.ground_mask & ~cone, tuple(sorted((m & ~cone for m in cx.masks), key=_face_key)))


def restrict(cx: SimplicialComplex, vertices: Iterable[int] | int) -> SimplicialComplex:
    """Induced subcomplex on a vertex set."""
    w = _face_mask(vertices)
    return SimplicialComplex.from_masks([m & w for m in cx.masks], ground=None)


def all_faces(cx: SimplicialComplex) -> list[int]:
    out = []
    for k in range(cx.dim + 2):
        out.extend(cx.faces(k))
    return out


# -- global properties ------------------------------------------------------


def is_pure(cx: SimplicialComplex) -> bool:
    size = cx.masks[0].bit_count()
    return all(m.bit_count() == size for m in cx.masks)


def f_vector(cx: SimplicialComplex) -> list[int]:
    """``f[k]`` counts faces with ``k`` vertices; ``f[0] = 1`` for the empty face."""
    return [len(cx.faces(k)) for k in range(cx.dim + 2)]


def h_vector(cx: SimplicialComplex) -> list[int]:
    f = f_vector(cx)
    d = len(f) - 1
    return [sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
            for k in range(d + 1)]


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    return sum((-1) ** (k - 1) * c for k, c in enumerate(f_vector(cx)))


def facet_graph_components(cx: SimplicialComplex) -> list[list[int]]:
    """Facets (by index) grouped into classes joined by codimension-1 overlaps."""
    parent = list(range(len(cx.masks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_ridge: dict[int, int] = {}
    for i, m in enumerate(cx.masks):
        rest = m
        while rest:
            low = rest & -rest
            ridge = m ^ low
            j = by_ridge.setdefault(ridge, i)
            if j != i:
                parent[find(i)] = find(j)
            rest ^= low
    groups: dict[int, list[int]] = {}
    for i in range(len(cx.masks)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def strong_connectivity(cx: SimplicialComplex) -> tuple[bool, str]:
    """Verdict plus a short diagnostic explaining it."""
    if not is_pure(cx):
        return False, "not pure"
    comps = facet_graph_components(cx)
    if len(comps) == 1:
        return True, "facet graph connected"
    return False, f"facet graph has {len(comps)} components"


def is_strongly_connected(cx: SimplicialComplex) -> bool:
    return strong_connectivity(cx)[0]


def is_shedding_vertex(cx: SimplicialComplex, v: int) -> bool:
    """No facet of ``link(v)`` is a facet of ``cx - v``."""
    bit = 1 << v
    through = [m for m in cx.masks if m & bit]
    if not through:
        raise InvalidInputError(f"{{{v}}} is not a face of the complex")
    avoiding = [m for m in cx.masks if not m & bit]
    for m in through:
        rest = m ^ bit
        if not any(rest & a == rest for a in avoiding):
            return False
    return True


def canonical_key(cx: SimplicialComplex) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Facet masks after relabelling vertices by first occurrence, and the label order.

    ``order[i]`` is the original vertex that received label ``i``.
    """
    label: dict[int, int] = {}
    order: list[int] = []
    for m in cx.masks:
        for v in vertices_of(m):
            if v not in label:
                label[v] = len(order)
                order.append(v)
    relabelled = []
    for m in cx.masks:
        r = 0
        for v in vertices_of(m):
            r |= 1 << label[v]
        relabelled.append(r)
    relabelled.sort()
    return tuple(relabelled), tuple(order)
