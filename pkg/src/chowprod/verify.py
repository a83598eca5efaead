"""Named verification suites.

Every algebraic claim the library makes is re-checked here against an
independent route: closed degree formulas against the integer-lattice
oracle, the nondegenerate presentation against the brute-force quotient,
gluing against direct class computation, and the dual presentation
against the standard one.  Each check returns a dict with a stable name,
a boolean, and a detail string; the CLI and the test suite share them.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .complexes import hypercube, product
from .degree import (ChainMonomial, dirichlet_pairing_d1, hypercube_degree,
                     monomial_degree, pairing, total_degree)
from .errors import GraphInputError
from .fourier import (fourier_degree, fourier_form, from_fourier, one_word,
                      presentation_equality_check, star_generators,
                      star_relation, u1_check, unit_word, vanishes,
                      vanishes_by_partitions, vanishes_by_two_blocks)
from .graphs import build_graph, complete_graph, path_graph
from .localize import glue, j_map, restrict_tuple
from .oracle import (DEFAULT_MAX_CELLS, degree_oracle, graded_quotient,
                     ideal_membership)
from .poly import Poly
from .ring import (certificate_poly, chow_class, is_nd_monomial,
                   is_rationally_zero, is_simplex_monomial, nd_presentation,
                   reduce_mod_I1, relation_generators, rewrite_to_nd)

_products = None


def product_list():
    """The fixed family of small products the suites run over."""
    global _products
    if _products is None:
        _products = (
            ("K2xK2", product([complete_graph(2), complete_graph(2)])),
            ("K2xK3", product([complete_graph(2), complete_graph(3)])),
            ("K3xK3", product([complete_graph(3), complete_graph(3)])),
            ("path3xK3", product([path_graph(3), complete_graph(3)])),
            ("K2xK2xK2", product([complete_graph(2)] * 3)),
        )
    return _products


def _result(name, ok, details, bad=None):
    if not ok and bad:
        details = "%s; first failures: %r" % (details, bad[:3])
    return {"check": name, "pass": bool(ok), "details": details}


# ---- random inputs ----


def _random_connected_graph(rng, n):
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in edges and rng.random() < 0.3:
                edges.append((a, b))
    return build_graph(list(range(n)), edges)


def _random_monomial(rng, complex, degree):
    if rng.random() < 0.5:
        weak = complex.enumerate_simplices(degree - 1, nondegenerate=False)
        if weak:
            return tuple(sorted(rng.choice(weak)))
    verts = complex.vertices()
    return tuple(sorted(rng.choice(verts) for _ in range(degree)))


def _random_poly(rng, complex, degree, nterms):
    p = Poly.zero()
    for _ in range(nterms):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        p = p + Poly.monomial(_random_monomial(rng, complex, degree)) * c
    return p


def _ideal_generators(complex):
    """Relation generators with a few non-simplex monomials thrown in."""
    key = "verify_gens"
    if key in complex._cache:
        return complex._cache[key]
    gens = [el.poly for el in relation_generators(complex, "R2")]
    gens += [el.poly for el in relation_generators(complex, "R3")]
    verts = complex.vertices()
    for u in verts:
        for w in verts:
            m = tuple(sorted((u, w)))
            if not is_simplex_monomial(complex, m):
                gens.append(Poly.monomial(m))
    complex._cache[key] = gens
    return gens


def _random_ideal_element(rng, complex, degree):
    gens = [g for g in _ideal_generators(complex) if g.degree() <= degree]
    verts = complex.vertices()
    out = Poly.zero()
    for _ in range(rng.randint(1, 3)):
        g = rng.choice(gens)
        cof = tuple(sorted(rng.choice(verts)
                           for _ in range(degree - g.degree())))
        out = out + g * Poly.monomial(cof) * rng.choice([-2, -1, 1, 2])
    return out


# ---- degree suite ----


def _check_power_degree(max_cells):
    bad = []
    for d in range(1, 6):
        sign = -1 if d % 2 else 1
        for v in hypercube(d).vertices():
            cm = ChainMonomial(d, (v,), (d + 1,))
            if hypercube_degree(cm) != sign * comb(d, sum(v)):
                bad.append(("formula", d, v))
    for d in range(1, 4):
        H = hypercube(d)
        for v in H.vertices():
            m = (v,) * (d + 1)
            if degree_oracle(H, m, max_cells) != monomial_degree(d, m):
                bad.append(("oracle", d, v))
    return _result("power-degree-formula", not bad,
                   "62 vertex powers for d<=5, 14 re-checked by the oracle", bad)


def _check_oracle_exhaustive(max_cells):
    bad = []
    total = 0
    for d in range(1, 4):
        H = hypercube(d)
        for m in combinations_with_replacement(H.vertices(), d + 1):
            m = tuple(sorted(m))
            total += 1
            if monomial_degree(d, m) != degree_oracle(H, m, max_cells):
                bad.append((d, m))
    return _result("degree-formula-vs-oracle-exhaustive", not bad,
                   "%d monomials, all degree-(d+1) multisets for d<=3" % total, bad)


def _check_oracle_random_d4(seed, max_cells):
    rng = random.Random(seed)
    d = 4
    H = hypercube(d)
    verts = H.vertices()
    weak = H.enumerate_simplices(d, nondegenerate=False)
    bad = []
    for n in range(500):
        if n % 2:
            m = tuple(sorted(rng.choice(verts) for _ in range(d + 1)))
        else:
            m = tuple(sorted(rng.choice(weak)))
        if monomial_degree(d, m) != degree_oracle(H, m, max_cells):
            bad.append(m)
    return _result("degree-formula-vs-oracle-random-d4", not bad,
                   "500 seeded degree-5 monomials on the 4-cube", bad)


def _pairing_graphs(seed):
    rng = random.Random(seed + 17)
    return (("K3", complete_graph(3)), ("K4", complete_graph(4)),
            ("rand5", _random_connected_graph(rng, 5)),
            ("rand6", _random_connected_graph(rng, 6)))


def _check_classical_pairing(seed):
    bad = []
    for name, g in _pairing_graphs(seed):
        cx = product([g])
        for u in g.vertices:
            for v in g.vertices:
                m = tuple(sorted(((u,), (v,))))
                got = total_degree(cx, Poly.monomial(m))
                want = -g.valence(u) if u == v else (1 if g.has_edge(u, v) else 0)
                if got != want:
                    bad.append((name, u, v, got, want))
    return _result("pairing-classical-d1", not bad,
                   "edge counts and valences on K3, K4 and two random graphs", bad)


def _check_dirichlet(seed):
    rng = random.Random(seed + 18)
    bad = []
    for name, g in _pairing_graphs(seed):
        cx = product([g])
        for n in range(50):
            f = {v: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for v in g.vertices}
            h = {v: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for v in g.vertices}
            lhs = pairing(cx, [{(v,): c for v, c in f.items()},
                               {(v,): c for v, c in h.items()}])
            if lhs != dirichlet_pairing_d1(g, f, h):
                bad.append((name, n))
    return _result("pairing-matches-dirichlet", not bad,
                   "50 seeded rational function pairs per graph", bad)


def degree_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return [
        _check_power_degree(max_cells),
        _check_oracle_exhaustive(max_cells),
        _check_oracle_random_d4(seed, max_cells),
        _check_classical_pairing(seed),
        _check_dirichlet(seed),
    ]


# ---- structure suite ----


def _check_presentation_vs_oracle(max_cells):
    bad = []
    cases = 0
    for name, cx in product_list():
        for k in range(cx.d + 1):
            cases += 1
            pres = nd_presentation(cx, k)
            orac = graded_quotient(cx, k + 1, max_cells)
            pf = sorted(f for f in pres.invariant_factors() if f != 1)
            of = sorted(f for f in orac.invariant_factors() if f != 1)
            if pres.free_rank != orac.rank or pf != of:
                bad.append((name, k, pres.free_rank, orac.rank, pf, of))
    return _result("presentation-matches-oracle", not bad,
                   "rank and invariant factors in %d graded pieces" % cases, bad)


def _check_top_rank():
    bad = []
    for name, cx in product_list():
        pres = nd_presentation(cx, cx.d)
        if pres.free_rank != len(cx.cubes()) or pres.torsion():
            bad.append((name, pres.free_rank, len(cx.cubes()), pres.torsion()))
    return _result("top-degree-free-rank-cubes", not bad,
                   "top piece is free of rank = number of cubes", bad)


def _check_above_top(max_cells):
    bad = []
    for d in range(1, 4):
        q = graded_quotient(hypercube(d), d + 2, max_cells)
        if q.rank != 0:
            bad.append((d, q.rank))
    return _result("above-top-vanishes", not bad,
                   "degree d+2 quotient has rank 0 on the d-cube, d<=3", bad)


def structure_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return [
        _check_presentation_vs_oracle(max_cells),
        _check_top_rank(),
        _check_above_top(max_cells),
    ]


# ---- localization suite ----


def _localization_checks(seed, max_cells):
    rng = random.Random(seed + 2)
    inj_bad, glue_bad, j_bad = [], [], []
    nonvacuous = 0
    for name, cx in product_list():
        d = cx.d
        for n in range(200):
            degree = rng.randint(2, d + 1)
            k = degree - 1
            mode = rng.random()
            if mode < 0.4:
                p = _random_ideal_element(rng, cx, degree)
            elif mode < 0.7:
                p = _random_ideal_element(rng, cx, degree)
                basis = nd_presentation(cx, k).basis
                if basis:
                    p = p + Poly.monomial(rng.choice(basis)) * rng.choice([-2, -1, 1, 2])
            else:
                p = _random_poly(rng, cx, degree, rng.randint(1, 3))
            t = restrict_tuple(cx, p)
            cls = chow_class(cx, p, k)
            if any(not r["class"].is_zero for r in j_map(cx, t, k)):
                j_bad.append((name, n))
            if glue(cx, t, k) != cls:
                glue_bad.append((name, n))
            if all(chow_class(cx.cube_complex(e), q, k).is_zero
                   for e, q in t.items()):
                nonvacuous += 1
                if not cls.is_zero:
                    inj_bad.append((name, n))
    return [
        _result("restriction-injectivity", not inj_bad,
                "200 seeded samples per product; %d with all cube classes zero"
                % nonvacuous, inj_bad),
        _result("glue-restrict-identity", not glue_bad,
                "glue of the restriction tuple returns the class of p", glue_bad),
        _result("j-map-kills-restrictions", not j_bad,
                "facet difference classes of restriction tuples vanish", j_bad),
    ]


def localization_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return _localization_checks(seed, max_cells)


# ---- fourier suite ----


def _check_dual_presentation(max_cells):
    bad = []
    integral = []
    for d in (1, 2):
        for degree in range(1, d + 2):
            rep = presentation_equality_check(d, degree)
            if not rep["saturated_equal"]:
                bad.append((d, degree))
            integral.append(rep["integral_equal"])
    return _result("dual-presentation-2-saturated", not bad,
                   "d<=2, every graded degree <= d+1; integral agreement %d/%d"
                   % (sum(integral), len(integral)), bad)


def _check_star_relations():
    bad = []
    count = 0
    for d in range(1, 4):
        H = hypercube(d)
        for kind, params in star_generators(d):
            count += 1
            p = from_fourier(d, star_relation(d, kind, params))
            if not is_rationally_zero(H, p):
                bad.append((d, kind, params))
    return _result("star-relations-class-zero", not bad,
                   "%d dual relations over full parameter grids, d<=3" % count, bad)


def _check_u1():
    bad = []
    for d in range(1, 4):
        words = [unit_word(d, i) for i in range(1, d + 1)] + [one_word(d)]
        if not u1_check(d) or fourier_degree(words) != (-4) ** d:
            bad.append(d)
    return _result("u1-identity", not bad,
                   "unit-word product equals (-4)^d times the staircase, d<=3", bad)


def fourier_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return [
        _check_dual_presentation(max_cells),
        _check_star_relations(),
        _check_u1(),
    ]


# ---- vanishing suite ----


def _vanishing_scan(d):
    H = hypercube(d)
    words = H.vertices()
    forms = {w: fourier_form(d, w) for w in words}
    state = {"agree": True, "flagged": 0, "flagged_bad": [], "agree_bad": [],
             "total": 0}

    def leaf(ws, prod):
        state["total"] += 1
        va = vanishes(ws)
        if not (va == vanishes_by_partitions(ws) == vanishes_by_two_blocks(ws)):
            state["agree"] = False
            state["agree_bad"].append(tuple(ws))
        if va:
            state["flagged"] += 1
            zero = (not prod) or is_rationally_zero(H, prod)
            deg = total_degree(H, prod) if prod else 0
            if not zero or deg != 0:
                state["flagged_bad"].append(tuple(ws))

    def rec(level, ws, prod):
        if level == d + 1:
            leaf(ws, prod)
            return
        for w in words:
            rec(level + 1, ws + [w], reduce_mod_I1(H, prod * forms[w]))

    rec(0, [], Poly.constant(1))
    return state


def vanishing_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    agree_bad, flagged_bad = [], []
    total = flagged = 0
    for d in range(1, 4):
        state = _vanishing_scan(d)
        total += state["total"]
        flagged += state["flagged"]
        agree_bad += state["agree_bad"]
        flagged_bad += state["flagged_bad"]
    return [
        _result("vanishing-criteria-agree", not agree_bad,
                "partition search, two-block search and connectivity agree on "
                "%d word tuples" % total, agree_bad),
        _result("flagged-words-vanish", not flagged_bad,
                "%d flagged tuples have class-zero product of degree 0" % flagged,
                flagged_bad),
    ]


# ---- moving suite ----


def _moving_checks(seed, max_cells):
    rng = random.Random(seed + 3)
    cert_bad, member_bad = [], []
    total = 0
    for name, cx in product_list():
        d = cx.d
        for n in range(100):
            degree = rng.randint(2, d + 1)
            p = _random_poly(rng, cx, degree, rng.randint(1, 4))
            nd, cert = rewrite_to_nd(cx, p)
            total += 1
            ok = certificate_poly(cert) == p - nd
            ok = ok and all(is_nd_monomial(cx, m) for m in nd.terms)
            if not ok:
                cert_bad.append((name, n))
            if not ideal_membership(cx, p - nd, max_cells):
                member_bad.append((name, n))
    return [
        _result("rewrite-certificates-exact", not cert_bad,
                "%d rewrites expand back to p - nd exactly" % total, cert_bad),
        _result("rewrite-difference-in-ideal", not member_bad,
                "oracle confirms p - nd lies in the relation ideal", member_bad),
    ]


def moving_suite(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return _moving_checks(seed, max_cells)


# ---- registry ----


SUITES = {
    "degree": degree_suite,
    "structure": structure_suite,
    "localization": localization_suite,
    "fourier": fourier_suite,
    "vanishing": vanishing_suite,
    "moving": moving_suite,
}

CRITERIA = (
    (1, "degree of vertex powers matches the binomial formula",
     ("power-degree-formula",)),
    (2, "degree formula matches the lattice oracle",
     ("degree-formula-vs-oracle-exhaustive", "degree-formula-vs-oracle-random-d4")),
    (3, "nd presentation matches the oracle quotient",
     ("presentation-matches-oracle", "top-degree-free-rank-cubes")),
    (4, "graded pieces above the top degree vanish",
     ("above-top-vanishes",)),
    (5, "restriction to cubes is injective with section glue",
     ("restriction-injectivity", "glue-restrict-identity",
      "j-map-kills-restrictions")),
    (6, "d=1 degrees reduce to the classical graph pairing",
     ("pairing-classical-d1", "pairing-matches-dirichlet")),
    (7, "dual presentation agrees after saturation at 2",
     ("dual-presentation-2-saturated", "star-relations-class-zero")),
    (8, "vanishing criteria agree and flagged products vanish",
     ("vanishing-criteria-agree", "flagged-words-vanish")),
    (9, "unit-word identity with degree (-4)^d",
     ("u1-identity",)),
    (10, "moving lemma certificates are exact ideal members",
     ("rewrite-certificates-exact", "rewrite-difference-in-ideal")),
)


def run_suite(name, seed=0, max_cells=DEFAULT_MAX_CELLS):
    if name not in SUITES:
        raise GraphInputError("unknown suite %r, have %s"
                              % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](seed=seed, max_cells=max_cells)


def run_all(seed=0, max_cells=DEFAULT_MAX_CELLS):
    return {name: SUITES[name](seed=seed, max_cells=max_cells)
            for name in sorted(SUITES)}
