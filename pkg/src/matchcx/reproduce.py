"""Reproduction suites: recompute every tabulated claim and compare.

Each suite returns a list of :class:`Claim`. ``MATCHCX_THREADS`` (default 1)
sets how many worker threads evaluate corpus graphs; results do not depend
on it.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from . import classify
from .complexes import is_pure, is_strongly_connected, matching_complex
from .corpus import all_graphs, connected_graphs
from .decide import (
    SignTest,
    euler_sign_test,
    is_cohen_macaulay,
    is_gorenstein,
    is_shellable,
    is_vertex_decomposable,
)
from .figures import FIG2_RIGHTMOST_POLY, paper_fig2_rightmost, paper_fig3
from .graphs import (
    complete,
    complete_bipartite,
    cycle,
    has_perfect_matching,
    independence_polynomial,
    line_graph,
)
from .homology import GF, QQ, reduced_betti

FIELDS = (QQ, GF(2), GF(3))
PRIMES_TO_50 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass
class Claim:
    suite: str
    name: str
    expected: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"{mark} [{self.suite}] {self.name}: observed {self.observed!r}"
        if not self.passed:
            text += f", expected {self.expected!r}"
        return text

    def as_dict(self) -> dict:
        return {"suite": self.suite, "claim": self.name, "expected": _jsonable(self.expected),
                "observed": _jsonable(self.observed), "passed": self.passed}


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, SignTest):
        return x.value
    return x


def _pmap(fn: Callable, items: Iterable) -> list:
    workers = int(os.environ.get("MATCHCX_THREADS", "1") or 1)
    items = list(items)
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def kn_cm_expected(n: int, p: int) -> bool:
    """CM verdict for ``M(K_n)`` over a field of characteristic ``p``, as far as the data reach."""
    return n <= 3 or n == 5 or (n == 7 and p != 3)


# -- suites -----------------------------------------------------------------


def suite_kn() -> list[Claim]:
    claims = []
    for n in range(2, 10):
        cx = matching_complex(complete(n))
        pred = classify.kn_predicates(n)
        claims.append(Claim("kn", f"K{n} strongly connected", pred["strongly_connected"],
                            is_strongly_connected(cx)))
        verdicts = {}
        for f in FIELDS:
            verdicts[str(f)] = is_cohen_macaulay(cx, f)
            claims.append(Claim("kn", f"K{n} CM over {f}", kn_cm_expected(n, f.p), verdicts[str(f)]))
        claims.append(Claim("kn", f"K{n} CM over every tested field", pred["cm"], all(verdicts.values())))
    b9 = reduced_betti(matching_complex(complete(9)), QQ)
    claims.append(Claim("kn", "K9 reduced H2 over q is nonzero", True, b9[2] != 0))
    return claims


def suite_k7_primes() -> list[Claim]:
    cx = matching_complex(complete(7))
    claims = []
    for p in PRIMES_TO_50:
        b = reduced_betti(cx, GF(p))
        claims.append(Claim("k7_primes", f"K7 (b0, b1) over gf:{p}", (0, 1 if p == 3 else 0), (b[0], b[1])))
    b = reduced_betti(cx, QQ)
    claims.append(Claim("k7_primes", "K7 (b0, b1) over q", (0, 0), (b[0], b[1])))
    return claims


def suite_kmn() -> list[Claim]:
    claims = []
    for m, n in ((2, 3), (3, 5), (4, 7)):
        claims.append(Claim("kmn", f"K{m},{n} vertex decomposable", True,
                            is_vertex_decomposable(matching_complex(complete_bipartite(m, n)))))
    for m in range(2, 5):
        for n in range(m, 2 * m - 1):
            claims.append(Claim("kmn", f"K{m},{n} CM over q", False,
                                is_cohen_macaulay(matching_complex(complete_bipartite(m, n)), QQ)))
    for m in range(1, 4):
        for n in range(max(m, 2 * m - 1), 2 * m + 2):
            cx = matching_complex(complete_bipartite(m, n))
            observed = (is_cohen_macaulay(cx, QQ), is_shellable(cx).verdict, is_vertex_decomposable(cx))
            claims.append(Claim("kmn", f"K{m},{n} (CM, shellable, VD)", (True, True, True), observed))
    for m, expected in ((1, 2), (2, 3), (3, 5)):
        claims.append(Claim("kmn", f"a_{m} for vd", expected, classify.a_m_search(m, "vd", 2 * m + 1)))
    for m in range(2, 7):
        for n in range(m, 7):
            claims.append(Claim("kmn", f"K{m},{n} strongly connected",
                                classify.kmn_predicates(m, n)["strongly_connected"],
                                is_strongly_connected(matching_complex(complete_bipartite(m, n)))))
    return claims


def suite_gorenstein_small(max_n: int = 6) -> list[Claim]:
    graphs = list(connected_graphs(max_n))

    def disagreements(f):
        bad = []
        for H in graphs:
            if classify.gorenstein_classifier(H) != is_gorenstein(matching_complex(H), f):
                bad.append(H.edges)
        return bad

    results = _pmap(disagreements, FIELDS)
    return [Claim("gorenstein_small", f"classifier vs oracle over {f} ({len(graphs)} graphs)", [], bad)
            for f, bad in zip(FIELDS, results)]


def girth5_conditions(H) -> tuple[bool, bool, bool, bool]:
    cx = matching_complex(H)
    pure = is_pure(cx)
    vd = pure and bool(is_vertex_decomposable(cx))
    sh = pure and bool(is_shellable(cx).verdict)
    return vd, sh, is_cohen_macaulay(cx, QQ), classify.girth5_cm_classifier(H)


def suite_girth5(max_n: int = 8) -> list[Claim]:
    graphs = list(connected_graphs(max_n, hereditary="girth5"))
    rows = _pmap(girth5_conditions, graphs)
    bad = [H.edges for H, r in zip(graphs, rows) if len(set(r)) != 1]
    return [Claim("girth5", f"four conditions agree ({len(graphs)} graphs)", [], bad)]


def suite_euler_sign() -> list[Claim]:
    H = paper_fig2_rightmost()
    G = line_graph(H)[0]
    poly = independence_polynomial(G)
    return [
        Claim("euler_sign", "I(L(fig2-rightmost), x)", FIG2_RIGHTMOST_POLY, poly.coefficients),
        Claim("euler_sign", "I(L(fig2-rightmost), -1)", 1, poly(-1)),
        Claim("euler_sign", "sign test on L(fig2-rightmost)", SignTest.FAILS, euler_sign_test(G)),
        Claim("euler_sign", "sign test on L(C5)", SignTest.PASSES, euler_sign_test(line_graph(cycle(5))[0])),
        Claim("euler_sign", "sign test on K1", SignTest.NOT_APPLICABLE, euler_sign_test(complete(1))),
    ]


def im_eq_m_row(H) -> tuple[bool, bool, bool, bool]:
    """(has_im_eq_m, structural, pure, vd) with the last two only checked when im = m."""
    brute = classify.has_im_eq_m(H)
    structural = classify.im_eq_m_structural(H)
    if not brute:
        return brute, structural, True, True
    cx = matching_complex(H)
    pure = is_pure(cx)
    cw = classify.cameron_walker_decompose(H)
    if cw is not None:
        pure = pure and cx.dim + 1 == len(cw.X) + cw.triangle_count
    return brute, structural, pure, bool(is_vertex_decomposable(cx))


def suite_im_eq_m(max_n: int = 7) -> list[Claim]:
    graphs = list(connected_graphs(max_n))
    rows = _pmap(im_eq_m_row, graphs)
    mismatched = [H.edges for H, r in zip(graphs, rows) if r[0] != r[1]]
    not_vd = [H.edges for H, r in zip(graphs, rows) if r[0] and not (r[2] and r[3])]
    return [
        Claim("im_eq_m", f"im=m equals star/star-triangle/CW ({len(graphs)} graphs)", [], mismatched),
        Claim("im_eq_m", "im=m graphs have pure VD complexes of size |X|+t", [], not_vd),
    ]


def suite_perfect_matching(max_n: int = 6) -> list[Claim]:
    bad = []
    checked = 0
    for H in all_graphs(max_n):
        if H.m == 0 or not has_perfect_matching(H):
            continue
        cx = matching_complex(H)
        if len(cx.masks) < 2:
            continue
        checked += 1
        if is_strongly_connected(cx):
            bad.append(H.edges)
    return [Claim("perfect_matching", f"never strongly connected ({checked} graphs)", [], bad)]


def suite_figures() -> list[Claim]:
    H = paper_fig3()
    cw = classify.cameron_walker_decompose(H)
    return [
        Claim("figures", "fig3 has a Cameron-Walker decomposition", True, cw is not None),
        Claim("figures", "fig3 im = m", True, classify.has_im_eq_m(H)),
    ]


SUITES: dict[str, Callable[[], list[Claim]]] = {
    "gorenstein_small": suite_gorenstein_small,
    "girth5": suite_girth5,
    "kn": suite_kn,
    "kmn": suite_kmn,
    "k7_primes": suite_k7_primes,
    "euler_sign": suite_euler_sign,
    "im_eq_m": suite_im_eq_m,
    "perfect_matching": suite_perfect_matching,
    "figures": suite_figures,
}
