# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 row kernels with 128-bit overflow checks.

Vectors are array('q') buffers.  Mutating operations write into fresh
buffers and raise OverflowError before publishing anything out of range, so
the caller's vectors stay valid and it can replay the step on the pure
big-int backend.
"""

from cpython cimport array

import array as _array

name = "fast"

cdef extern from *:
    ctypedef long long int128 "__int128_t"

cdef long long LIMIT = 9223372036854775807


def new_vector(coeffs):
    cdef array.array out = _array.array("q", coeffs)
    cdef long long[::1] mv = out
    cdef Py_ssize_t i
    for i in range(mv.shape[0]):
        if mv[i] == -LIMIT - 1:
            raise OverflowError("entry at int64 minimum")
    return out


def tolist(array.array v):
    return list(v)


def lead(array.array v, Py_ssize_t start):
    cdef long long[::1] mv = v
    cdef Py_ssize_t i
    for i in range(start, mv.shape[0]):
        if mv[i] != 0:
            return i
    return -1


def axpy(array.array v, q, array.array w, Py_ssize_t start):
    """Fresh copy of v with v[start:] += q * w[start:]."""
    if q == 0:
        return v
    if q > LIMIT or q < -LIMIT:
        raise OverflowError("multiplier out of int64 range")
    cdef long long qq = q
    cdef array.array out = array.copy(v)
    cdef long long[::1] o = out
    cdef long long[::1] mw = w
    cdef Py_ssize_t i
    cdef int128 t
    for i in range(start, o.shape[0]):
        if mw[i] != 0:
            t = <int128> o[i] + <int128> qq * <int128> mw[i]
            if t > <int128> LIMIT or t < -(<int128> LIMIT):
                raise OverflowError("axpy entry out of int64 range")
            o[i] = <long long> t
    return out


def combine(array.array r, array.array v, a, b, c, d, Py_ssize_t start):
    """Fresh pair (a*r + b*v, c*r + d*v) on the suffix, prefix copied."""
    if max(abs(a), abs(b), abs(c), abs(d)) > LIMIT:
        raise OverflowError("coefficient out of int64 range")
    cdef long long aa = a
    cdef long long bb = b
    cdef long long cc = c
    cdef long long dd = d
    cdef array.array outr = array.copy(r)
    cdef array.array outv = array.copy(v)
    cdef long long[::1] mr = outr
    cdef long long[::1] mv = outv
    cdef Py_ssize_t i
    cdef int128 t1, t2
    for i in range(start, mr.shape[0]):
        t1 = <int128> aa * <int128> mr[i] + <int128> bb * <int128> mv[i]
        t2 = <int128> cc * <int128> mr[i] + <int128> dd * <int128> mv[i]
        if t1 > <int128> LIMIT or t1 < -(<int128> LIMIT):
            raise OverflowError("combine entry out of int64 range")
        if t2 > <int128> LIMIT or t2 < -(<int128> LIMIT):
            raise OverflowError("combine entry out of int64 range")
        mr[i] = <long long> t1
        mv[i] = <long long> t2
    return outr, outv


def neg(array.array v, Py_ssize_t start):
    cdef array.array out = array.copy(v)
    cdef long long[::1] o = out
    cdef Py_ssize_t i
    for i in range(start, o.shape[0]):
        o[i] = -o[i]
    return out
