"""Pure Python row kernels on arbitrary-precision ints.

Vectors are plain lists.  Operations mutate in place and return the vector
they produced; this mirrors the compiled backend, which returns fresh
buffers so a mid-operation overflow cannot corrupt caller state.
"""

name = "pure"


def new_vector(coeffs):
    return list(coeffs)


def tolist(v):
    return list(v)


def clone(v):
    return list(v)


def lead(v, start):
    for i in range(start, len(v)):
        if v[i]:
            return i
    return -1


def axpy(v, q, w, start):
    """v[start:] += q * w[start:]"""
    if q:
        for i in range(start, len(v)):
            if w[i]:
                v[i] += q * w[i]
    return v


def combine(r, v, a, b, c, d, start):
    """(r, v)[start:] <- (a*r + b*v, c*r + d*v)[start:]"""
    for i in range(start, len(r)):
        ri, vi = r[i], v[i]
        r[i] = a * ri + b * vi
        v[i] = c * ri + d * vi
    return r, v


def neg(v, start):
    for i in range(start, len(v)):
        v[i] = -v[i]
    return v
