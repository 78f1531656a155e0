"""Compare the compiled and pure-Python rank kernels on matching-complex boundary matrices.

    python benchmarks/bench_rank.py            # K8..K10
    python benchmarks/bench_rank.py --n 11     # adds the largest case (slow in Python)
"""

import argparse
import json
import time

from matchcx import _rank, graphs, homology
from matchcx.complexes import matching_complex

try:
    from matchcx import _rank_ext
except ImportError:  # extension not built
    _rank_ext = None


def largest_boundary(n):
    cx = matching_complex(graphs.complete(n))
    best = max((homology.boundary_matrix(cx, d) for d in range(1, cx.dim + 1)),
               key=lambda B: B.shape[0] * B.shape[1])
    return best.d, best.shape[0], [list(c) for c in best.columns]


def timed(fn, *args, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t)
    return value, best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10, help="largest K_n to include (default 10)")
    parser.add_argument("--repeat", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    if _rank_ext is None:
        parser.error("compiled kernel not available; build with `pip install -e .`")

    rows = []
    for n in range(8, args.n + 1):
        d, nrows, cols = largest_boundary(n)
        for label, p in (("q", 0), ("gf:3", 3)):
            kernels = {
                "cython": (lambda: _rank_ext.rank_rational(nrows, cols)) if not p
                else (lambda: _rank_ext.rank_mod_p(nrows, cols, p)),
                "python": (lambda: _rank.rank_rational(nrows, cols)) if not p
                else (lambda: _rank.rank_mod_p(nrows, cols, p)),
            }
            r_c, t_c = timed(kernels["cython"], repeat=args.repeat)
            r_p, t_p = timed(kernels["python"], repeat=args.repeat)
            assert r_c == r_p, (n, label, r_c, r_p)
            rows.append({"graph": f"K{n}", "d": d, "shape": [nrows, len(cols)], "field": label,
                         "rank": r_c, "cython_s": round(t_c, 3), "python_s": round(t_p, 3),
                         "speedup": round(t_p / t_c, 1) if t_c else None})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'graph':<6}{'d':>3}{'shape':>16}{'field':>7}{'rank':>8}{'cython s':>10}{'python s':>10}{'x':>7}")
    for r in rows:
        shape = f"{r['shape'][0]}x{r['shape'][1]}"
        print(f"{r['graph']:<6}{r['d']:>3}{shape:>16}{r['field']:>7}{r['rank']:>8}"
              f"{r['cython_s']:>10.3f}{r['python_s']:>10.3f}{r['speedup']:>7}")


if __name__ == "__main__":
    main()
