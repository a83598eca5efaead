"""Exact integer row lattices: incremental Hermite form, Smith form,
canonical coset representatives, 2-saturation.

The row-style Hermite convention used throughout: pivots positive, each
pivot the first nonzero entry of its row, entries above a pivot reduced
into [0, pivot).  A compiled int64 kernel is picked at import when
available; any overflow falls back to big-int arithmetic per lattice.
Set CHOWPROD_PURE=1 to force the pure backend.
"""

import os

from . import _pure

if os.environ.get("CHOWPROD_PURE"):
    _default_backend = _pure
else:
    try:
        from . import _speedups as _default_backend
    except ImportError:
        _default_backend = _pure


def backend_name():
    return _default_backend.name


def xgcd(a, b):
    """g, x, y with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class RowLattice:
    """Integer lattice in ZZ^n accumulated row by row.

    rows maps pivot column -> stored vector whose first nonzero entry sits
    at that column and is positive.
    """

    def __init__(self, n, backend=None):
        self.n = n
        self.backend = backend or _default_backend
        self.rows = {}
        self._normalized = True

    def _go_pure(self):
        if self.backend is _pure:
            raise AssertionError("overflow reported by the pure backend")
        self.rows = {c: _pure.new_vector(self.backend.tolist(r)) for c, r in self.rows.items()}
        self.backend = _pure

    def insert(self, coeffs):
        """Add a vector to the lattice; True when the rank grew."""
        coeffs = list(coeffs)
        assert len(coeffs) == self.n
        try:
            v = self.backend.new_vector(coeffs)
        except OverflowError:
            self._go_pure()
            v = _pure.new_vector(coeffs)
        start = 0
        while True:
            b = self.backend
            c = b.lead(v, start)
            if c < 0:
                return False
            if c not in self.rows:
                if v[c] < 0:
                    v = b.neg(v, c)
                self.rows[c] = v
                self._normalized = False
                return True
            r = self.rows[c]
            p = r[c]
            a = v[c]
            try:
                if a % p == 0:
                    v = b.axpy(v, -(a // p), r, c)
                else:
                    g, x, y = xgcd(p, a)
                    r2, v = b.combine(r, v, x, y, -(a // g), p // g, c)
                    self.rows[c] = r2
                    self._normalized = False
            except OverflowError:
                self._go_pure()
                v = _pure.new_vector(b.tolist(v))
                continue
            start = c + 1

    def insert_all(self, vectors):
        for v in vectors:
            self.insert(v)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def pivot_product(self):
        out = 1
        for c in self.rows:
            out *= self.rows[c][c]
        return out

    def normalize(self):
        """Reduce entries above each pivot into [0, pivot)."""
        if self._normalized:
            return
        pivots = sorted(self.rows)
        for c in pivots:
            row = self.rows[c]
            p = row[c]
            for c2 in pivots:
                if c2 >= c:
                    break
                other = self.rows[c2]
                q = other[c] // p
                if q:
                    try:
                        self.rows[c2] = self.backend.axpy(other, -q, row, c)
                    except OverflowError:
                        self._go_pure()
                        self.rows[c2] = _pure.axpy(self.rows[c2], -q, self.rows[c], c)
        self._normalized = True

    def basis(self):
        """Canonical Hermite basis, rows sorted by pivot column."""
        self.normalize()
        return [self.backend.tolist(self.rows[c]) for c in sorted(self.rows)]

    def reduce_vector(self, coeffs):
        """Canonical coset representative of coeffs modulo the lattice."""
        coeffs = list(coeffs)
        assert len(coeffs) == self.n
        try:
            v = self.backend.new_vector(coeffs)
        except OverflowError:
            self._go_pure()
            v = _pure.new_vector(coeffs)
        for c in sorted(self.rows):
            if v[c]:
                row = self.rows[c]
                q = v[c] // row[c]
                if q:
                    try:
                        v = self.backend.axpy(v, -q, row, c)
                    except OverflowError:
                        self._go_pure()
                        v = _pure.axpy(_pure.new_vector(self.backend.tolist(v)), -q, self.rows[c], c)
        return self.backend.tolist(v)

    def contains(self, coeffs):
        return not any(self.reduce_vector(coeffs))


def hermite_normal_form(rows, width=None):
    """Row-style Hermite normal form with transform.

    Returns (H, U) with U * rows == H, U unimodular; pivot rows first in
    pivot-column order, then zero rows.  Pure big-int arithmetic.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    if width is None:
        width = len(rows[0]) if rows else 0
    n = width
    pivot_rows = {}
    kernel = []
    for i, r in enumerate(rows):
        assert len(r) == n
        v = r + [1 if j == i else 0 for j in range(m)]
        start = 0
        while True:
            c = _pure.lead(v, start)
            if c < 0 or c >= n:
                kernel.append(v)
                break
            if c not in pivot_rows:
                if v[c] < 0:
                    _pure.neg(v, c)
                pivot_rows[c] = v
                break
            row = pivot_rows[c]
            p = row[c]
            a = v[c]
            if a % p == 0:
                _pure.axpy(v, -(a // p), row, c)
            else:
                g, x, y = xgcd(p, a)
                _pure.combine(row, v, x, y, -(a // g), p // g, c)
            start = c + 1
    pivots = sorted(pivot_rows)
    for c in pivots:
        row = pivot_rows[c]
        p = row[c]
        for c2 in pivots:
            if c2 >= c:
                break
            other = pivot_rows[c2]
            q = other[c] // p
            if q:
                _pure.axpy(other, -q, row, c)
    ordered = [pivot_rows[c] for c in pivots] + kernel
    H = [v[:n] for v in ordered]
    U = [v[n:] for v in ordered]
    return H, U


def smith_normal_form(rows, width=None):
    """Smith normal form with transforms: returns (D, U, V) where
    U * rows * V == D, D diagonal with d1 | d2 | ..., U and V unimodular."""
    A = [list(r) for r in rows]
    m = len(A)
    if width is None:
        width = len(A[0]) if A else 0
    n = width
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_axpy(dst, q, src):
        for M in (A, U):
            rd, rs = M[dst], M[src]
            for j in range(len(rd)):
                rd[j] += q * rs[j]

    def col_axpy(dst, q, src):
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]

    def row_swap(i, j):
        for M in (A, U):
            M[i], M[j] = M[j], M[i]

    def col_swap(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def row_neg(i):
        for M in (A, U):
            M[i] = [-x for x in M[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                x = Ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if abs(x) == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        if A[t][t] < 0:
            row_neg(t)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                a = A[i][t]
                if a:
                    q = a // p
                    if q:
                        row_axpy(i, -q, t)
                    if A[i][t]:
                        row_swap(t, i)
                        if A[t][t] < 0:
                            row_neg(t)
                        clean = False
                        break
            if not clean:
                continue
            for j in range(t + 1, n):
                a = A[t][j]
                if a:
                    q = a // p
                    if q:
                        col_axpy(j, -q, t)
                    if A[t][j]:
                        col_swap(t, j)
                        if A[t][t] < 0:
                            row_neg(t)
                        clean = False
                        break
            if not clean:
                continue
            p = A[t][t]
            offender = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, n):
                    if Ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_axpy(t, 1, offender)
        t += 1
    return A, U, V


def invariant_factors(rows, width):
    """Nonzero diagonal of the Smith form of the row lattice."""
    lat = RowLattice(width, backend=_pure)
    lat.insert_all(rows)
    basis = lat.basis()
    if not basis:
        return []
    D, _, _ = smith_normal_form(basis, width)
    out = []
    for t in range(min(len(D), width)):
        if D[t][t]:
            out.append(D[t][t])
    return out


def unimodular_inverse(V):
    """Inverse of a unimodular integer matrix."""
    n = len(V)
    H, W = hermite_normal_form(V, n)
    for i in range(n):
        for j in range(n):
            assert H[i][j] == (1 if i == j else 0), "matrix is not unimodular"
    return W


def saturate_rows(rows, width, prime=2):
    """Canonical Hermite basis of the prime-saturation of the row lattice,
    the set of integer vectors some prime power multiple of which lies in
    the lattice."""
    lat = RowLattice(width, backend=_pure)
    lat.insert_all(rows)
    basis = lat.basis()
    if not basis:
        return []
    D, U, V = smith_normal_form(basis, width)
    Vinv = unimodular_inverse(V)
    sat = RowLattice(width, backend=_pure)
    for t in range(len(basis)):
        d = D[t][t]
        assert d, "rank drop after Hermite reduction"
        while d % prime == 0:
            d //= prime
        sat.insert([d * x for x in Vinv[t]])
    return sat.basis()
