"""Localization to cubes.

Restriction keeps the monomials supported inside a cube, the difference
map j compares neighbouring cubes on their shared facet, and glue
reconstructs a global class from a compatible tuple of cube classes by
correcting mismatches with rationally trivial polynomials.  Functorial
maps (pullbacks along per-factor monotone homomorphisms, coordinate
permutations, multiplication by a fixed vertex) act on polynomials.
"""

from .complexes import ProductComplex, sub_complex
from .errors import GraphInputError, KernelConditionError
from .poly import Poly
from .ring import ChowClass, chow_class, nd_presentation


def cached_sub_complex(complex, vertex_lists):
    """Sub-complex on per-factor vertex lists, cached on the parent so
    presentations computed on it are reused."""
    key = ("sub", tuple(tuple(vs) for vs in vertex_lists))
    got = complex._cache.get(key)
    if got is None:
        got = sub_complex(complex, vertex_lists)
        complex._cache[key] = got
    return got


def cube_key(cube):
    """Stable text key of a cube: per-factor edges a-b joined by |."""
    return "|".join("%s-%s" % (a, b) for a, b in cube)


def parse_cube_key(complex, text):
    """Inverse of cube_key against a given product; labels parsed as ints
    when possible."""

    def label(s):
        try:
            return int(s)
        except ValueError:
            return s

    parts = text.split("|")
    if len(parts) != complex.d:
        raise GraphInputError("cube key %r has %d factors, product has %d"
                              % (text, len(parts), complex.d))
    cube = []
    for part, g in zip(parts, complex.factors):
        bits = part.split("-")
        if len(bits) != 2:
            raise GraphInputError("bad cube key component %r" % (part,))
        e = (label(bits[0]), label(bits[1]))
        if e not in g.edges:
            raise GraphInputError("no edge %r in factor" % (part,))
        cube.append(e)
    cube = tuple(cube)
    if cube not in complex.cubes():
        raise GraphInputError("cube %r not in product" % (text,))
    return cube


def _filter_to(p, allowed):
    return p.filter_monomials(lambda m: all(v in allowed for v in m))


def restrict(complex, p, cube):
    """Restriction to a cube: keep the monomials supported inside it."""
    for v in p.support_vertices():
        complex.check_vertex(v)
    if cube not in complex.cubes():
        raise GraphInputError("not a cube of the product: %r" % (cube,))
    return _filter_to(p, set(complex.cube_vertices(cube)))


def restrict_tuple(complex, p):
    """All cube restrictions at once, keyed by cube."""
    for v in p.support_vertices():
        complex.check_vertex(v)
    return {cube: _filter_to(p, set(complex.cube_vertices(cube)))
            for cube in complex.cubes()}


def facet_restrict(complex, cube, i, eps, p):
    """Restriction of a polynomial on a cube to its facet where coordinate
    i (1-based) is frozen at end eps of the i-th edge."""
    d = complex.d
    if not 1 <= i <= d:
        raise GraphInputError("coordinate %d out of range 1..%d" % (i, d))
    if eps not in (0, 1):
        raise GraphInputError("facet end must be 0 or 1")
    fixed = cube[i - 1][eps]
    allowed = set(v for v in complex.cube_vertices(cube) if v[i - 1] == fixed)
    return _filter_to(p, allowed)


def facet_lists(complex, cube, i, eps):
    """Per-factor vertex lists of the facet of a cube."""
    lists = [list(e) for e in cube]
    lists[i - 1] = [cube[i - 1][eps]]
    return tuple(tuple(vs) for vs in lists)


def _common_degree(polys):
    degs = set()
    for p in polys:
        if not p:
            continue
        if not p.is_homogeneous():
            raise GraphInputError("tuple entries must be homogeneous")
        degs.add(p.degree())
    if len(degs) > 1:
        raise GraphInputError("tuple entries have mixed degrees %s" % (sorted(degs),))
    return degs.pop() if degs else None


def _as_cube_dict(complex, t):
    cubes = complex.cubes()
    cube_set = set(cubes)
    out = {}
    for e, p in t.items():
        if e not in cube_set:
            raise GraphInputError("unknown cube %r in tuple" % (e,))
        allowed = set(complex.cube_vertices(e))
        for v in p.support_vertices():
            if v not in allowed:
                raise GraphInputError(
                    "entry for cube %s uses vertex %r outside it" % (cube_key(e), v))
        out[e] = p
    for e in cubes:
        out.setdefault(e, Poly.zero())
    return out


def j_map(complex, t, k=None):
    """Facet comparison of a cube tuple: for every inner adjacency, the
    class of (first restriction minus second restriction) on the shared
    facet.  Returns a list of records with the coordinate (1-based), the
    cube pair, the facet lists and the class."""
    t = _as_cube_dict(complex, t)
    deg = _common_degree(t.values())
    if deg is not None:
        if k is not None and k != deg - 1:
            raise GraphInputError("tuple has degree %d, expected k=%d" % (deg, k))
        k = deg - 1
    if k is None:
        raise GraphInputError("all entries are zero, pass k explicitly")
    out = []
    for i, c1, c2, facet in complex.cube_adjacencies():
        fcx = cached_sub_complex(complex, facet)
        allowed = set(fcx.vertices())
        delta = _filter_to(t[c1], allowed) - _filter_to(t[c2], allowed)
        out.append({
            "coordinate": i + 1,
            "cubes": (c1, c2),
            "facet": facet,
            "class": chow_class(fcx, delta, k),
        })
    return out


def glue(complex, t, k=None):
    """Reconstruct a global class from a tuple of cube polynomials whose
    classes agree on facets.  Each entry is reduced to a canonical cube
    representative, then corrected so the representatives agree exactly on
    all pairwise intersections; a correction whose class is nonzero on
    some intersection means the tuple is not in the kernel of j."""
    for g in complex.factors:
        if not g.edges:
            raise GraphInputError("gluing needs every factor to have an edge")
    t = _as_cube_dict(complex, t)
    deg = _common_degree(t.values())
    if deg is not None:
        if k is not None and k != deg - 1:
            raise GraphInputError("tuple has degree %d, expected k=%d" % (deg, k))
        k = deg - 1
    if k is None:
        raise GraphInputError("all entries are zero, pass k explicitly")

    cubes = complex.cubes()
    gamma = {}
    for e in cubes:
        ccx = cached_sub_complex(complex, tuple(tuple(edge) for edge in e))
        lam = chow_class(ccx, t[e], k).to_poly()
        for e2 in cubes:
            if e2 == e:
                break
            inter = complex.cube_intersection(e, e2)
            if inter is None:
                continue
            icx = cached_sub_complex(complex, inter)
            allowed = set(icx.vertices())
            delta = _filter_to(lam, allowed) - _filter_to(gamma[e2], allowed)
            if delta:
                if not chow_class(icx, delta, k).is_zero:
                    raise KernelConditionError(
                        "cubes %s and %s carry different classes on their "
                        "intersection" % (cube_key(e), cube_key(e2)))
                lam = lam - delta
        gamma[e] = lam

    pres = nd_presentation(complex, k)
    index = {sigma: n for n, sigma in enumerate(pres.basis)}
    for e in cubes:
        for sigma in gamma[e].terms:
            assert sigma in index, "cube representative left the global basis"
    cube_sets = {e: set(complex.cube_vertices(e)) for e in cubes}
    coeffs = [0] * len(pres.basis)
    for idx, sigma in enumerate(pres.basis):
        vals = [gamma[e].terms.get(sigma, 0)
                for e in cubes if all(v in cube_sets[e] for v in sigma)]
        assert vals, "basis simplex not covered by any cube"
        assert all(c == vals[0] for c in vals), "corrected representatives disagree"
        coeffs[idx] = vals[0]
    return ChowClass(pres, tuple(pres.lattice.reduce_vector(coeffs)))


class GraphHom:
    """Per-factor monotone graph homomorphism between products of equal
    arity.  Each factor map sends vertices to vertices, respects the
    orders, and sends edges to edges or collapses them."""

    __slots__ = ("source", "target", "maps")

    def __init__(self, source, target, vertex_maps):
        if source.d != target.d:
            raise GraphInputError("products have different arity")
        vertex_maps = tuple(dict(m) for m in vertex_maps)
        if len(vertex_maps) != source.d:
            raise GraphInputError("need one vertex map per factor")
        for g, h, m in zip(source.factors, target.factors, vertex_maps):
            if set(m) != set(g.vertices):
                raise GraphInputError("map domain differs from factor vertex set")
            for v in m.values():
                if not h.has_vertex(v):
                    raise GraphInputError("map image %r not in target factor" % (v,))
            last = None
            for v in g.vertices:
                pos = h.pos(m[v])
                if last is not None and pos < last:
                    raise GraphInputError("map violates the vertex order")
                last = pos
            for a, b in g.edges:
                ia, ib = m[a], m[b]
                if ia != ib and not h.has_edge(ia, ib):
                    raise GraphInputError(
                        "edge %r-%r maps to a non-edge %r-%r" % (a, b, ia, ib))
        self.source = source
        self.target = target
        self.maps = vertex_maps

    def apply(self, v):
        return tuple(m[x] for m, x in zip(self.maps, v))


def pullback(hom, p):
    """Pullback of a polynomial along a homomorphism: each C_v pulls back
    to the sum of C_u over the fiber of v."""
    fibers = {v: Poly.zero() for v in hom.target.vertices()}
    for u in hom.source.vertices():
        fibers[hom.apply(u)] += Poly.variable(u)
    for v in p.support_vertices():
        hom.target.check_vertex(v)
    return p.substitute_vertices(fibers)


def permute(complex, sigma, p):
    """Reorder the factors by a permutation sigma of 1..d (new factor j is
    old factor sigma[j]); returns the permuted product and polynomial."""
    d = complex.d
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, d + 1)):
        raise GraphInputError("not a permutation of 1..%d: %r" % (d, sigma))
    new_complex = ProductComplex([complex.factors[s - 1] for s in sigma])
    for v in p.support_vertices():
        complex.check_vertex(v)
    images = {}
    for v in p.support_vertices():
        images[v] = Poly.variable(tuple(v[s - 1] for s in sigma))
    return new_complex, p.substitute_vertices(images)


def moving_vertex_set(complex, v, i):
    """Vertices u with u <= v coordinatewise and u_i strictly below v_i
    (coordinate i 1-based): the support allowed when multiplying by C_v
    along coordinate i."""
    complex.check_vertex(v)
    if not 1 <= i <= complex.d:
        raise GraphInputError("coordinate %d out of range 1..%d" % (i, complex.d))
    out = []
    for u in complex.vertices():
        pu = complex.pos_tuple(u)
        pv = complex.pos_tuple(v)
        if all(a <= b for a, b in zip(pu, pv)) and pu[i - 1] < pv[i - 1]:
            out.append(u)
    return tuple(out)


def multiply_by_vertex(complex, v, i, p):
    """Multiply by C_v a polynomial supported on the moving set of (v, i);
    the product then behaves functorially under pullbacks."""
    allowed = set(moving_vertex_set(complex, v, i))
    for u in p.support_vertices():
        if u not in allowed:
            raise GraphInputError(
                "support vertex %r not in the moving set of %r along %d" % (u, v, i))
    return Poly.variable(v) * p
