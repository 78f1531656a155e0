"""Decision procedures: Cohen-Macaulay, Gorenstein, vertex decomposable, shellable.

Recursive checks memoise on :func:`~matchcx.complexes.canonical_key`, which
relabels vertices by first occurrence. Links of matching complexes are
matching complexes of smaller graphs, so a handful of keys covers most of
the recursion tree.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Hashable

from .complexes import (
    SimplicialComplex,
    canonical_key,
    core,
    delete_vertex,
    facet_graph_components,
    h_vector,
    independence_complex,
    is_pure,
    is_shedding_vertex,
    link,
    vertices_of,
)
from .graphs import Graph, independence_polynomial
from .homology import GF, QQ, FieldSpec, reduced_betti


class DecisionCache:
    """Memo table with get-or-compute semantics, safe to share between threads.

    The lock only guards the table; two threads racing on the same key may
    both compute it, which is harmless because results are deterministic.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._table: dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        if not self.enabled:
            return compute()
        with self._lock:
            if key in self._table:
                self.hits += 1
                return self._table[key]
        value = compute()
        with self._lock:
            self.misses += 1
            self._table.setdefault(key, value)
        return value

    def lookup(self, key: Hashable, default=None):
        with self._lock:
            return self._table.get(key, default)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._table)


default_cache = DecisionCache()


class BudgetExhausted(Exception):
    """A search ran out of nodes before reaching a verdict."""


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"search budget of {self.limit} nodes exhausted")


def _key(cx: SimplicialComplex) -> tuple[int, ...]:
    return canonical_key(cx)[0]


# -- Cohen-Macaulay ---------------------------------------------------------


def _homology_vanishes_below_top(cx: SimplicialComplex, field: FieldSpec) -> bool:
    betti = reduced_betti(cx, field)
    return all(betti[i] == 0 for i in range(-1, cx.dim))


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ,
                      cache: DecisionCache | None = None) -> bool:
    """Reisner's criterion in its vertex-link form.

    ``cx`` is CM iff every vertex link is CM and the reduced homology of
    ``cx`` vanishes below its dimension.
    """
    cache = default_cache if cache is None else cache

    def run(c: SimplicialComplex) -> bool:
        return cache.get_or_compute(("cm", field.p, _key(c)), lambda: compute(c))

    def compute(c: SimplicialComplex) -> bool:
        if c.dim <= 0:
            return True
        if not is_pure(c):
            return False
        for v in c.vertices:
            if not run(link(c, 1 << v)):
                return False
        return _homology_vanishes_below_top(c, field)

    return run(cx)


# -- Gorenstein -------------------------------------------------------------


def is_homology_sphere(cx: SimplicialComplex, field: FieldSpec = QQ,
                       cache: DecisionCache | None = None) -> bool:
    """Every face link (the complex itself included) has the homology of a sphere of its dimension."""
    cache = default_cache if cache is None else cache

    def run(c: SimplicialComplex) -> bool:
        return cache.get_or_compute(("sphere", field.p, _key(c)), lambda: compute(c))

    def compute(c: SimplicialComplex) -> bool:
        if not is_pure(c):
            return False
        betti = reduced_betti(c, field)
        d = c.dim
        if any(betti[i] != 0 for i in range(-1, d)) or betti[d] != 1:
            return False
        return all(run(link(c, 1 << v)) for v in c.vertices)

    return run(cx)


def is_gorenstein(cx: SimplicialComplex, field: FieldSpec = QQ,
                  cache: DecisionCache | None = None) -> bool:
    """Gorenstein over ``field`` iff the core is a homology sphere in every face link."""
    return is_homology_sphere(core(cx), field, cache)


# -- vertex decomposability -------------------------------------------------


def _shedding_candidates(cx: SimplicialComplex) -> list[int]:
    """Vertices ordered by how many facets contain them, most first."""
    counts: dict[int, int] = {}
    for m in cx.masks:
        for v in vertices_of(m):
            counts[v] = counts.get(v, 0) + 1
    return sorted(counts, key=lambda v: (-counts[v], v))


def _pure_shelling_obstruction(c: SimplicialComplex) -> str | None:
    """A cheap certificate that a pure complex admits no shelling, if one applies.

    Shellable complexes are strongly connected, have a non-negative
    h-vector and are homotopy equivalent to a wedge of top-dimensional
    spheres, so their reduced homology vanishes below the top over every
    field. Only GF(2) and GF(3) are tried.
    """
    if c.dim < 1:
        return None
    if len(facet_graph_components(c)) > 1:
        return "not strongly connected"
    if any(h < 0 for h in h_vector(c)):
        return "negative h-vector entry"
    # over Q the Betti numbers are bounded by those over any GF(p)
    for p in (2, 3):
        betti = reduced_betti(c, GF(p))
        if any(betti[i] for i in range(-1, c.dim)):
            return f"GF({p}) homology below the top dimension"
    return None


def is_vertex_decomposable(cx: SimplicialComplex, *, budget: int | None = None,
                           cache: DecisionCache | None = None) -> bool | None:
    """True/False, or None when ``budget`` search nodes did not suffice."""
    cache = default_cache if cache is None else cache
    counter = _Budget(budget)
    try:
        return _vd(cx, cache, counter)
    except BudgetExhausted:
        return None


def _vd(cx: SimplicialComplex, cache: DecisionCache, counter: _Budget) -> bool:
    def run(c: SimplicialComplex) -> bool:
        return cache.get_or_compute(("vd", _key(c)), lambda: compute(c))

    def compute(c: SimplicialComplex) -> bool:
        counter.tick()
        if c.is_simplex():
            return True
        if is_pure(c):
            # pure vertex decomposable complexes are shellable and their links are too
            if _pure_shelling_obstruction(c) is not None:
                return False
            if not all(run(link(c, 1 << v)) for v in c.vertices):
                return False
        for v in _shedding_candidates(c):
            if not is_shedding_vertex(c, v):
                continue
            if run(link(c, 1 << v)) and run(delete_vertex(c, v)):
                return True
        return False

    return run(cx)


def vertex_decomposition(cx: SimplicialComplex, *, budget: int | None = None,
                         cache: DecisionCache | None = None) -> dict | None:
    """Witness tree for a vertex decomposable complex, None if there is none.

    A simplex is ``{"simplex": [vertices]}``; otherwise the node is
    ``{"shed": v, "link": subtree, "deletion": subtree}`` in the original labels.
    Raises :class:`BudgetExhausted` if the budget runs out.
    """
    cache = default_cache if cache is None else cache
    counter = _Budget(budget)
    if not _vd(cx, cache, counter):
        return None

    def build(c: SimplicialComplex) -> dict:
        if c.is_simplex():
            return {"simplex": list(vertices_of(c.masks[0]))}
        for v in _shedding_candidates(c):
            if not is_shedding_vertex(c, v):
                continue
            lk, dl = link(c, 1 << v), delete_vertex(c, v)
            if _vd(lk, cache, counter) and _vd(dl, cache, counter):
                return {"shed": v, "link": build(lk), "deletion": build(dl)}
        raise AssertionError("memoised verdict disagrees with reconstruction")

    return build(cx)


def shedding_order(tree: dict) -> list[int]:
    """Shedding vertices along the deletion spine of a witness tree."""
    order = []
    while "shed" in tree:
        order.append(tree["shed"])
        tree = tree["deletion"]
    return order


def check_vertex_decomposition(cx: SimplicialComplex, tree: dict) -> bool:
    """Independently validate a witness tree against ``cx``."""
    if "simplex" in tree:
        return cx.is_simplex() and list(vertices_of(cx.masks[0])) == tree["simplex"]
    v = tree["shed"]
    if not cx.vertex_mask >> v & 1 or not is_shedding_vertex(cx, v):
        return False
    return (check_vertex_decomposition(link(cx, 1 << v), tree["link"])
            and check_vertex_decomposition(delete_vertex(cx, v), tree["deletion"]))


# -- shellability -----------------------------------------------------------


@dataclass
class ShellingResult:
    verdict: bool | None  # None: budget exhausted
    order: list[tuple[int, ...]] | None = None
    reason: str = ""
    nodes: int = 0

    def __bool__(self) -> bool:
        return bool(self.verdict)


def _attaches(f: int, placed: list[int]) -> bool:
    """Whether <placed> ∩ <f> is pure of codimension one in f."""
    size = f.bit_count() - 1
    restriction = 0
    for g in placed:
        if (f & g).bit_count() == size:
            restriction |= f & ~g
    if not restriction:
        return False
    return all(f & ~g & restriction for g in placed)


def _shelling_search(facets: list[int], counter: _Budget) -> list[int] | None:
    """Facet indices in a shelling order, or None if no order exists."""
    t = len(facets)
    full = (1 << t) - 1
    dead: set[int] = set()
    order: list[int] = []

    def search(state: int) -> bool:
        if state == full:
            return True
        if state in dead:
            return False
        counter.tick()
        placed = [facets[i] for i in order]
        for i in range(t):
            if state >> i & 1 or not _attaches(facets[i], placed):
                continue
            order.append(i)
            if search(state | 1 << i):
                return True
            order.pop()
        dead.add(state)
        return False

    for first in range(t):
        order[:] = [first]
        if search(1 << first):
            return order
    return None


def _shellable_precheck(c: SimplicialComplex, linked: Callable[[SimplicialComplex], bool]) -> str | None:
    """Reason ``c`` cannot be shellable, or None if the search is still needed."""
    if not is_pure(c):
        return "not pure; only pure shellability is decided"
    if c.is_simplex():
        return None
    obstruction = _pure_shelling_obstruction(c)
    if obstruction is not None:
        return obstruction
    # links of a shellable complex are shellable
    for v in c.vertices:
        if not linked(link(c, 1 << v)):
            return f"link of vertex {v} is not shellable"
    return None


def is_shellable(cx: SimplicialComplex, *, budget: int | None = 1_000_000,
                 cache: DecisionCache | None = None) -> ShellingResult:
    """Backtracking search for a shelling order of a pure complex.

    A set of already placed facets determines which facets may follow, so
    failed sets are remembered and never expanded twice. Vertex links are
    checked first (recursively, memoised), which rejects most
    non-shellable matching complexes without searching them.
    """
    cache = default_cache if cache is None else cache
    counter = _Budget(budget)

    def verdict(c: SimplicialComplex) -> bool:
        return cache.get_or_compute(("shell", _key(c)), lambda: compute(c))

    def compute(c: SimplicialComplex) -> bool:
        if _shellable_precheck(c, verdict) is not None:
            return False
        return c.is_simplex() or _shelling_search(list(c.masks), counter) is not None

    try:
        reason = _shellable_precheck(cx, verdict)
        if reason is not None:
            return ShellingResult(False, reason=reason, nodes=counter.used)
        facets = list(cx.masks)
        order = _shelling_search(facets, counter)
    except BudgetExhausted:
        return ShellingResult(None, reason="budget exhausted", nodes=counter.used)
    if order is None:
        return ShellingResult(False, reason="search exhausted", nodes=counter.used)
    return ShellingResult(True, [vertices_of(facets[i]) for i in order],
                          "shelling found", counter.used)


def check_shelling(cx: SimplicialComplex, order) -> bool:
    """Validate a proposed shelling order."""
    from .complexes import mask_of

    masks = [mask_of(f) for f in order]
    if sorted(masks) != sorted(cx.masks):
        return False
    return all(_attaches(masks[i], masks[:i]) for i in range(1, len(masks)))


# -- Euler sign pre-filter ----------------------------------------------------


class SignTest(str, Enum):
    PASSES = "passes"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


def euler_sign_test(G: Graph) -> SignTest:
    """Necessary condition for a Gorenstein independence complex without cone points.

    Such a complex must satisfy ``I(G, -1) == (-1) ** (dim + 1)``.
    """
    cx = independence_complex(G)
    if core(cx) != cx:
        return SignTest.NOT_APPLICABLE
    value = independence_polynomial(G)(-1)
    return SignTest.PASSES if value == (-1) ** (cx.dim + 1) else SignTest.FAILS
