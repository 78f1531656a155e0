# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled rank kernels; same interface and algorithm as ``matchcx._rank``.

Columns are kept as sorted (row, value) vectors and reduced on their
largest row. The rational kernel works in int64 and raises
OverflowError if an intermediate entry leaves that range; the Python
wrapper then reruns the pure-Python big-integer kernel.
"""

from libcpp.vector cimport vector
from libc.stdlib cimport llabs

cdef extern from *:
    """
    static inline int mc_mul_ovf(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int mc_sub_ovf(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    """
    int mc_mul_ovf(long long a, long long b, long long *r) nogil
    int mc_sub_ovf(long long a, long long b, long long *r) nogil

from . import _rank as _py


cdef long long _gcd(long long a, long long b) noexcept nogil:
    a = llabs(a)
    b = llabs(b)
    while b:
        a, b = b, a % b
    return a


cdef long long _inv_mod(long long a, long long p) noexcept nogil:
    cdef long long result = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


cdef void _load(list col, vector[int]& rows, vector[long long]& vals, long long p):
    # p == 0 means keep integer values as they are
    cdef list pairs = sorted(col)
    cdef long long x
    rows.clear()
    vals.clear()
    for r, v in pairs:
        if p:
            x = v % p
        else:
            x = v
        if x:
            rows.push_back(r)
            vals.push_back(x)


def rank_mod_p(int nrows, list columns, long long p):
    cdef vector[vector[int]] piv_rows
    cdef vector[vector[long long]] piv_vals
    cdef vector[int] rows, out_rows
    cdef vector[long long] vals, out_vals
    cdef int rank = 0, low, i, j, ni, nj
    cdef long long f, inv, y
    if p >= 2 ** 31:
        return _py.rank_mod_p(nrows, columns, p)
    piv_rows.resize(nrows)
    piv_vals.resize(nrows)
    for col in columns:
        _load(col, rows, vals, p)
        while rows.size():
            low = rows.back()
            if piv_rows[low].size() == 0:
                inv = _inv_mod(vals.back(), p)
                for i in range(<int>vals.size()):
                    vals[i] = vals[i] * inv % p
                piv_rows[low] = rows
                piv_vals[low] = vals
                rank += 1
                break
            f = vals.back()
            # rows/vals := c - f * pivot, merged in row order
            out_rows.clear()
            out_vals.clear()
            i = 0
            j = 0
            ni = rows.size()
            nj = piv_rows[low].size()
            while i < ni or j < nj:
                if j >= nj or (i < ni and rows[i] < piv_rows[low][j]):
                    out_rows.push_back(rows[i])
                    out_vals.push_back(vals[i])
                    i += 1
                elif i >= ni or piv_rows[low][j] < rows[i]:
                    y = (p - f * piv_vals[low][j] % p) % p
                    if y:
                        out_rows.push_back(piv_rows[low][j])
                        out_vals.push_back(y)
                    j += 1
                else:
                    y = (vals[i] - f * piv_vals[low][j] % p) % p
                    if y < 0:
                        y += p
                    if y:
                        out_rows.push_back(rows[i])
                        out_vals.push_back(y)
                    i += 1
                    j += 1
            rows.swap(out_rows)
            vals.swap(out_vals)
    return rank


def _rank_rational_int64(int nrows, list columns):
    cdef vector[vector[int]] piv_rows
    cdef vector[vector[long long]] piv_vals
    cdef vector[int] rows, out_rows
    cdef vector[long long] vals, out_vals
    cdef int rank = 0, low, i, j, ni, nj
    cdef long long a, b, g, t1, t2, y
    piv_rows.resize(nrows)
    piv_vals.resize(nrows)
    for col in columns:
        _load(col, rows, vals, 0)
        while rows.size():
            low = rows.back()
            if piv_rows[low].size() == 0:
                piv_rows[low] = rows
                piv_vals[low] = vals
                rank += 1
                break
            a = piv_vals[low].back()
            b = vals.back()
            g = _gcd(a, b)
            a //= g
            b //= g
            # rows/vals := a * c - b * pivot
            out_rows.clear()
            out_vals.clear()
            i = 0
            j = 0
            ni = rows.size()
            nj = piv_rows[low].size()
            while i < ni or j < nj:
                if j >= nj or (i < ni and rows[i] < piv_rows[low][j]):
                    if mc_mul_ovf(a, vals[i], &y):
                        raise OverflowError
                    out_rows.push_back(rows[i])
                    out_vals.push_back(y)
                    i += 1
                elif i >= ni or piv_rows[low][j] < rows[i]:
                    if mc_mul_ovf(b, piv_vals[low][j], &t2) or mc_sub_ovf(0, t2, &y):
                        raise OverflowError
                    out_rows.push_back(piv_rows[low][j])
                    out_vals.push_back(y)
                    j += 1
                else:
                    if (mc_mul_ovf(a, vals[i], &t1) or mc_mul_ovf(b, piv_vals[low][j], &t2)
                            or mc_sub_ovf(t1, t2, &y)):
                        raise OverflowError
                    if y:
                        out_rows.push_back(rows[i])
                        out_vals.push_back(y)
                    i += 1
                    j += 1
            g = 0
            for i in range(<int>out_vals.size()):
                g = _gcd(g, out_vals[i])
                if g == 1:
                    break
            if g > 1:
                for i in range(<int>out_vals.size()):
                    out_vals[i] //= g
            rows.swap(out_rows)
            vals.swap(out_vals)
    return rank


def rank_rational(int nrows, list columns):
    try:
        return _rank_rational_int64(nrows, columns)
    except OverflowError:
        return _py.rank_rational(nrows, columns)
