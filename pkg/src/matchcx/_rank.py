"""Pure-Python rank kernels for sparse integer matrices.

A matrix is ``(nrows, columns)`` where each column is a list of
``(row, value)`` pairs with distinct rows. Both kernels use column
reduction keyed on the largest row index, which keeps boundary matrices
sparse during elimination.
"""

from math import gcd


def rank_mod_p(nrows, columns, p):
    pivots = {}  # leading row -> reduced column normalised to leading entry 1
    rank = 0
    for col in columns:
        c = {}
        for r, x in col:
            x %= p
            if x:
                c[r] = x
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(c[low], p - 2, p)
                pivots[low] = {r: x * inv % p for r, x in c.items()}
                rank += 1
                break
            f = c[low]
            for r, x in piv.items():
                y = (c.get(r, 0) - f * x) % p
                if y:
                    c[r] = y
                else:
                    c.pop(r, None)
    return rank


def rank_rational(nrows, columns):
    """Exact rank over Q using fraction-free integer column reduction.

    Each step replaces ``c`` with ``a*c - b*pivot`` for nonzero integers
    ``a, b`` and then divides out the content, so every intermediate
    column stays integral and rank is preserved.
    """
    pivots = {}
    rank = 0
    for col in columns:
        c = {r: x for r, x in col if x}
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = c
                rank += 1
                break
            a, b = piv[low], c[low]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                c = {r: a * x for r, x in c.items()}
            for r, x in piv.items():
                y = c.get(r, 0) - b * x
                if y:
                    c[r] = y
                else:
                    c.pop(r, None)
            if c:
                g = 0
                for x in c.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    c = {r: x // g for r, x in c.items()}
    return rank
