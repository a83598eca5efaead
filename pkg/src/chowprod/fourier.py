"""Fourier dual generators on the hypercube.

F_w = sum over vertices v of (-1)^{<v,w>} C_v indexes the generators by
characters of F_2^d; the change of basis is integral one way and dyadic
the other.  The dual ideal has three families of relations, agreeing
with the standard one after inverting 2.  Words are 0/1 tuples, and
coordinates are 1-based.
"""

from fractions import Fraction
from itertools import combinations

from .complexes import hypercube
from .errors import GraphInputError
from .lattice import RowLattice, saturate_rows
from .poly import Poly
from .ring import (is_nd_monomial, is_rationally_zero, is_simplex_monomial,
                   reduce_mod_I1, relation_generators)


def check_word(d, w):
    if not (isinstance(w, tuple) and len(w) == d and all(b in (0, 1) for b in w)):
        raise GraphInputError("not a length-%d 0/1 word: %r" % (d, w))
    return w


def zero_word(d):
    return (0,) * d


def one_word(d):
    return (1,) * d


def unit_word(d, i):
    if not 1 <= i <= d:
        raise GraphInputError("coordinate %d out of range 1..%d" % (i, d))
    return tuple(1 if j == i - 1 else 0 for j in range(d))


def word_sum(w1, w2):
    return tuple((a + b) % 2 for a, b in zip(w1, w2))


def _dot(v, w):
    return sum(a * b for a, b in zip(v, w)) % 2


def fourier_form(d, w):
    """F_w expanded in the C generators; integral."""
    check_word(d, w)
    return Poly({(v,): (-1) ** _dot(v, w) for v in hypercube(d).vertices()})


def to_fourier(d, p):
    """Rewrite a polynomial in C generators through the F generators;
    coefficients become dyadic fractions."""
    H = hypercube(d)
    for v in p.support_vertices():
        H.check_vertex(v)
    images = {}
    for v in H.vertices():
        images[v] = Poly(
            {(w,): Fraction((-1) ** _dot(v, w), 2 ** d) for w in H.vertices()})
    return p.substitute_vertices(images)


def from_fourier(d, p):
    """Rewrite a polynomial in F generators through the C generators;
    integral on integral input."""
    H = hypercube(d)
    for w in p.support_vertices():
        check_word(d, w)
    images = {w: fourier_form(d, w) for w in H.vertices()}
    out = p.substitute_vertices(images)
    return out.map_coeffs(
        lambda c: int(c) if isinstance(c, Fraction) and c.denominator == 1 else c)


def star_relation(d, kind, params):
    """Relation among the F generators, as a polynomial in F words.

    kind 1, params (w,):         F_0 F_w
    kind 2, params (i, w, z):    F_{e_i} (F_w - F_{w+e_i}) (F_z + F_{z+e_i})
    kind 3, params (i, j, w, z): (F_{w+e_i+e_j} - F_w)(F_{z+e_i+e_j} - F_z)
                                 - (F_{w+e_i} - F_{w+e_j})(F_{z+e_i} - F_{z+e_j})
    """
    F = Poly.variable
    if kind == 1:
        (w,) = params
        check_word(d, w)
        return F(zero_word(d)) * F(w)
    if kind == 2:
        i, w, z = params
        ei = unit_word(d, i)
        check_word(d, w)
        check_word(d, z)
        return (F(ei)
                * (F(w) - F(word_sum(w, ei)))
                * (F(z) + F(word_sum(z, ei))))
    if kind == 3:
        i, j, w, z = params
        if i == j:
            raise GraphInputError("kind 3 needs two distinct coordinates")
        ei, ej = unit_word(d, i), unit_word(d, j)
        eij = word_sum(ei, ej)
        check_word(d, w)
        check_word(d, z)
        return ((F(word_sum(w, eij)) - F(w)) * (F(word_sum(z, eij)) - F(z))
                - (F(word_sum(w, ei)) - F(word_sum(w, ej)))
                * (F(word_sum(z, ei)) - F(word_sum(z, ej))))
    raise GraphInputError("unknown relation kind %r" % (kind,))


def star_generators(d):
    """All (kind, params) pairs generating the dual ideal."""
    words = hypercube(d).vertices()
    out = [(1, (w,)) for w in words]
    for i in range(1, d + 1):
        for w in words:
            for z in words:
                out.append((2, (i, w, z)))
    for i, j in combinations(range(1, d + 1), 2):
        for w in words:
            for z in words:
                out.append((3, (i, j, w, z)))
    return out


def _monomials(vertices, degree):
    from itertools import combinations_with_replacement
    return [tuple(sorted(m)) for m in combinations_with_replacement(vertices, degree)]


def _ideal_rows(basis_index, generator_polys, vertices, degree):
    rows = []
    width = len(basis_index)
    for g in generator_polys:
        gdeg = g.degree()
        if not g or gdeg > degree:
            continue
        for cof in _monomials(vertices, degree - gdeg):
            prod = g * Poly.monomial(cof)
            row = [0] * width
            for m, c in prod.terms.items():
                row[basis_index[m]] = c
            rows.append(row)
    return rows


def presentation_equality_check(d, degree):
    """Compare the degree slice of the standard ideal with the dual one
    inside the full polynomial ring, after saturating both at 2; the
    report also says whether they already agree integrally."""
    if d < 1 or degree < 1:
        raise GraphInputError("need d >= 1 and degree >= 1")
    H = hypercube(d)
    vertices = H.vertices()
    basis = _monomials(vertices, degree)
    basis_index = {m: n for n, m in enumerate(basis)}
    width = len(basis)

    standard = [Poly.monomial(m) for m in basis if not is_simplex_monomial(H, m)]
    for el in relation_generators(H, "R2"):
        standard.append(el.poly)
    for el in relation_generators(H, "R3"):
        standard.append(el.poly)
    rows_std = _ideal_rows(basis_index, standard, vertices, degree)

    dual = []
    for kind, params in star_generators(d):
        p = from_fourier(d, star_relation(d, kind, params))
        assert all(isinstance(c, int) for c in p.terms.values())
        dual.append(p)
    rows_dual = _ideal_rows(basis_index, dual, vertices, degree)

    def canonical(rows):
        lat = RowLattice(width)
        lat.insert_all(rows)
        return lat.rank, [list(r) for r in lat.basis()]

    rank_std, basis_std = canonical(rows_std)
    rank_dual, basis_dual = canonical(rows_dual)
    sat_std = [list(r) for r in saturate_rows(rows_std, width)]
    sat_dual = [list(r) for r in saturate_rows(rows_dual, width)]
    return {
        "d": d,
        "degree": degree,
        "monomials": width,
        "standard_rank": rank_std,
        "dual_rank": rank_dual,
        "integral_equal": basis_std == basis_dual,
        "saturated_equal": sat_std == sat_dual,
    }


def _check_partition(d, partition):
    blocks = [tuple(sorted(set(b))) for b in partition]
    seen = set()
    for b in blocks:
        if not b:
            raise GraphInputError("empty partition block")
        for i in b:
            if not 1 <= i <= d or i in seen:
                raise GraphInputError("blocks must partition 1..%d" % (d,))
            seen.add(i)
    if len(seen) != d:
        raise GraphInputError("blocks must partition 1..%d" % (d,))
    return blocks


def alpha(w, partition):
    """Number of blocks containing a coordinate where the word is 1."""
    return sum(1 for b in partition if any(w[i - 1] == 1 for i in b))


def vanishing_criterion(words, partition):
    """The partition inequality: sum of alphas below d + number of blocks
    forces the product of the F's to vanish."""
    words = list(words)
    d = len(words[0])
    if len(words) != d + 1:
        raise GraphInputError("need d+1 words, got %d" % (len(words),))
    for w in words:
        check_word(d, w)
    blocks = _check_partition(d, partition)
    return sum(alpha(w, blocks) for w in words) < d + len(blocks)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for n in range(len(part)):
            yield part[:n] + [part[n] + [first]] + part[n + 1:]
        yield [[first]] + part


def vanishes_by_partitions(words):
    """Search over all partitions of the coordinates."""
    d = len(words[0])
    for part in _set_partitions(list(range(1, d + 1))):
        if vanishing_criterion(words, part):
            return True
    return False


def vanishes_by_two_blocks(words):
    """Search over partitions with at most two blocks."""
    d = len(words[0])
    if vanishing_criterion(words, [list(range(1, d + 1))]):
        return True
    for size in range(1, d):
        for block in combinations(range(1, d + 1), size):
            if 1 not in block:
                continue
            rest = [i for i in range(1, d + 1) if i not in block]
            if vanishing_criterion(words, [list(block), rest]):
                return True
    return False


def vanishes(words):
    """Connectivity test: the bipartite graph on the d+1 words and the d
    coordinates, with an edge when the word has a 1 there, is
    disconnected exactly when the product of the F's vanishes."""
    words = list(words)
    d = len(words[0])
    if len(words) != d + 1:
        raise GraphInputError("need d+1 words, got %d" % (len(words),))
    for w in words:
        check_word(d, w)
    n = (d + 1) + d
    adj = [[] for _ in range(n)]
    for a, w in enumerate(words):
        for i in range(d):
            if w[i] == 1:
                b = d + 1 + i
                adj[a].append(b)
                adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) < n


def fourier_degree(words):
    """Degree of the product of the F's of d+1 words, expanded through
    the C generators."""
    from .degree import total_degree

    words = list(words)
    d = len(words[0])
    if len(words) != d + 1:
        raise GraphInputError("need d+1 words, got %d" % (len(words),))
    H = hypercube(d)
    prod = Poly.constant(1)
    for w in words:
        check_word(d, w)
        prod = reduce_mod_I1(H, prod * fourier_form(d, w))
        if not prod:
            return 0
    out = total_degree(H, prod)
    assert out == int(out)
    return int(out)


def staircase_monomial(d):
    """Prefix-sum chain 0 < e_1 < e_1+e_2 < ... < 1; the canonical
    nondegenerate top simplex of the d-cube."""
    out = []
    for n in range(d + 1):
        out.append(tuple(1 if i < n else 0 for i in range(d)))
    return tuple(sorted(out))


def u1_check(d):
    """Check F_{e_1}...F_{e_d}F_1 = (-4)^d C_{staircase} as classes, and
    that its degree is (-4)^d."""
    H = hypercube(d)
    words = [unit_word(d, i) for i in range(1, d + 1)] + [one_word(d)]
    prod = Poly.constant(1)
    for w in words:
        prod = reduce_mod_I1(H, prod * fourier_form(d, w))
    target = Poly.monomial(staircase_monomial(d)) * ((-4) ** d)
    assert is_nd_monomial(H, staircase_monomial(d))
    from .degree import total_degree

    return (is_rationally_zero(H, prod - target)
            and total_degree(H, prod) == (-4) ** d)


def inclusion_word(I, d, w):
    """Spread a short word over coordinates I (1-based, increasing)."""
    out = [0] * d
    for b, i in zip(w, I):
        out[i - 1] = b
    return tuple(out)


def _check_subset(I, d):
    I = tuple(I)
    if not I or list(I) != sorted(set(I)) or I[0] < 1 or I[-1] > d:
        raise GraphInputError("coordinate subset must be increasing in 1..%d" % (d,))
    return I


def inclusion_pushforward(I, d, p):
    """Pushforward along the coordinate inclusion: each short F word maps
    to the F word supported on I."""
    I = _check_subset(I, d)
    r = len(I)
    out = {}
    for m, c in p.terms.items():
        for w in m:
            check_word(r, w)
        key = tuple(sorted(inclusion_word(I, d, w) for w in m))
        out[key] = out.get(key, 0) + c
    return Poly({m: c for m, c in out.items() if c})


def inclusion_pullback(I, d, p):
    """Pullback along the coordinate inclusion: restrict each F word to
    the coordinates in I."""
    I = _check_subset(I, d)
    out = {}
    for m, c in p.terms.items():
        for w in m:
            check_word(d, w)
        key = tuple(sorted(tuple(w[i - 1] for i in I) for w in m))
        out[key] = out.get(key, 0) + c
    return Poly({m: c for m, c in out.items() if c})
