"""Command line entry point.

Products of ordered graphs are described by a JSON file; polynomials use
the C(...) expression syntax of the library, and Fourier words are given
as bitstrings with the leftmost character at coordinate 1.  All
structured output is JSON with sorted keys, so runs are reproducible
byte for byte.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .complexes import product
from .degree import pairing, total_degree
from .errors import ChowprodError, GraphInputError
from .fourier import (fourier_degree, from_fourier, presentation_equality_check,
                      star_generators, star_relation, to_fourier, vanishes,
                      vanishes_by_partitions, vanishes_by_two_blocks)
from .graphs import build_graph, complete_graph, cycle_graph, path_graph
from .localize import cube_key, glue, parse_cube_key, restrict_tuple
from .oracle import DEFAULT_MAX_CELLS
from .poly import format_poly, parse_poly
from .ring import chow_class, is_rationally_zero, nd_presentation, rewrite_to_nd
from .verify import run_all, run_suite

_NAMED = re.compile(r"^(K|path|cycle)(\d+)$")


def _parse_factor(desc):
    if isinstance(desc, str):
        m = _NAMED.match(desc)
        if not m:
            raise GraphInputError("unknown factor name %r" % (desc,))
        kind, n = m.group(1), int(m.group(2))
        if kind == "K":
            return complete_graph(n)
        if kind == "path":
            return path_graph(n)
        return cycle_graph(n)
    if isinstance(desc, dict):
        try:
            vertices = desc["vertices"]
            edges = [tuple(e) for e in desc["edges"]]
        except (KeyError, TypeError):
            raise GraphInputError("factor objects need vertices and edges")
        return build_graph(vertices, edges)
    raise GraphInputError("factor must be a name or an object")


def _load_json(path, what):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise GraphInputError("cannot read %s file: %s" % (what, e))
    except ValueError as e:
        raise GraphInputError("malformed JSON in %s file: %s" % (what, e))


def load_product(path):
    data = _load_json(path, "product")
    if not isinstance(data, dict) or "factors" not in data:
        raise GraphInputError("product file needs a top-level factors list")
    return product([_parse_factor(s) for s in data["factors"]])


def _read_expr(args, letter="C"):
    if getattr(args, "expr", None) is not None:
        return parse_poly(args.expr, letter)
    if getattr(args, "expr_file", None) is not None:
        try:
            with open(args.expr_file) as fh:
                return parse_poly(fh.read(), letter)
        except OSError as e:
            raise GraphInputError("cannot read expression file: %s" % (e,))
    raise GraphInputError("need --expr or --expr-file")


def _parse_words(text):
    words = []
    for part in text.split(","):
        part = part.strip()
        if not part or any(ch not in "01" for ch in part):
            raise GraphInputError("words are comma-separated 0/1 strings")
        words.append(tuple(int(ch) for ch in part))
    if len({len(w) for w in words}) != 1:
        raise GraphInputError("words must have equal length")
    return words


def _scalar(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    return value


def _emit(args, data, text_lines):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_deg(args):
    cx = load_product(args.product)
    p = _read_expr(args)
    value = _scalar(total_degree(cx, p))
    _emit(args, {"degree": value}, [str(value)])
    return 0


def _cmd_basis(args):
    cx = load_product(args.product)
    if not 0 <= args.k <= cx.d:
        raise GraphInputError("k must be between 0 and %d" % (cx.d,))
    pres = nd_presentation(cx, args.k)
    data = {
        "k": args.k,
        "basis_size": len(pres.basis),
        "rank": pres.free_rank,
        "invariant_factors": pres.torsion(),
    }
    _emit(args, data, [
        "rank %d" % data["rank"],
        "invariant_factors %s" % (data["invariant_factors"],),
        "basis_size %d" % data["basis_size"],
    ])
    return 0


def _cmd_reduce(args):
    cx = load_product(args.product)
    p = _read_expr(args)
    nd, _cert = rewrite_to_nd(cx, p, args.k)
    cls = chow_class(cx, p, args.k)
    data = {
        "k": cls.k,
        "nd": format_poly(nd),
        "class": list(cls.coords),
        "canonical": format_poly(cls.to_poly()),
    }
    _emit(args, data, [
        "k %d" % data["k"],
        "nd %s" % data["nd"],
        "class %s" % (data["class"],),
        "canonical %s" % data["canonical"],
    ])
    return 0


def _cmd_restrict(args):
    cx = load_product(args.product)
    p = _read_expr(args)
    t = restrict_tuple(cx, p)
    data = {cube_key(e): format_poly(q) for e, q in t.items()}
    _emit(args, data, ["%s %s" % (k, v) for k, v in sorted(data.items())])
    return 0


def _cmd_glue(args):
    cx = load_product(args.product)
    data = _load_json(args.tuple_file, "tuple")
    if not isinstance(data, dict):
        raise GraphInputError("tuple file must map cube keys to expressions")
    t = {}
    for key, expr in data.items():
        t[parse_cube_key(cx, key)] = parse_poly(expr)
    cls = glue(cx, t, args.k)
    out = {
        "k": cls.k,
        "class": list(cls.coords),
        "poly": format_poly(cls.to_poly()),
    }
    _emit(args, out, [
        "k %d" % out["k"],
        "class %s" % (out["class"],),
        "poly %s" % out["poly"],
    ])
    return 0


def _parse_vertex_key(text):
    parts = [s.strip() for s in text.split(",")]
    out = []
    for s in parts:
        try:
            out.append(int(s))
        except ValueError:
            out.append(s)
    return tuple(out)


def _parse_value(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return Fraction(v)
    raise GraphInputError("function values must be ints or 'p/q' strings")


def _cmd_pairing(args):
    cx = load_product(args.product)
    data = _load_json(args.functions_file, "functions")
    if not isinstance(data, list) or len(data) != cx.d + 1:
        raise GraphInputError("functions file must list d+1 vertex maps")
    fs = []
    for entry in data:
        fs.append({_parse_vertex_key(k): _parse_value(v) for k, v in entry.items()})
    value = _scalar(pairing(cx, fs))
    _emit(args, {"pairing": value}, [str(value)])
    return 0


def _cmd_fourier(args):
    d = args.d
    if args.action == "convert":
        if args.from_dual:
            p = _read_expr(args, "F")
            out = from_fourier(d, p)
            text = format_poly(out)
        else:
            p = _read_expr(args, "C")
            out = to_fourier(d, p)
            text = format_poly(out, "F")
        _emit(args, {"poly": text}, [text])
        return 0
    if args.action == "deg":
        words = _parse_words(args.words)
        if len(words[0]) != d:
            raise GraphInputError("words have length %d, need %d" % (len(words[0]), d))
        value = fourier_degree(words)
        _emit(args, {"degree": value}, [str(value)])
        return 0
    if args.action == "vanish":
        words = _parse_words(args.words)
        if len(words[0]) != d:
            raise GraphInputError("words have length %d, need %d" % (len(words[0]), d))
        data = {
            "vanishes": vanishes(words),
            "by_partitions": vanishes_by_partitions(words),
            "by_two_blocks": vanishes_by_two_blocks(words),
            "fourier_degree": fourier_degree(words),
        }
        _emit(args, data, ["%s %s" % (k, data[k]) for k in sorted(data)])
        return 0
    if args.action == "check-relations":
        from .complexes import hypercube

        H = hypercube(d)
        bad = []
        gens = star_generators(d)
        for kind, params in gens:
            p = from_fourier(d, star_relation(d, kind, params))
            if not is_rationally_zero(H, p):
                bad.append([kind, [list(x) if isinstance(x, tuple) else x
                                   for x in params]])
        data = {"d": d, "relations": len(gens), "all_zero": not bad, "failures": bad}
        _emit(args, data, ["checked %d relations, all_zero %s"
                           % (len(gens), not bad)])
        return 0 if not bad else 1
    if args.action == "check-iso":
        rep = presentation_equality_check(d, args.degree)
        _emit(args, rep, ["%s %s" % (k, rep[k]) for k in sorted(rep)])
        return 0 if rep["saturated_equal"] else 1
    raise GraphInputError("unknown fourier action %r" % (args.action,))


def _cmd_verify(args):
    if args.suite:
        results = {args.suite: run_suite(args.suite, seed=args.seed,
                                         max_cells=args.max_cells)}
    else:
        results = run_all(seed=args.seed, max_cells=args.max_cells)
    ok = all(r["pass"] for checks in results.values() for r in checks)
    lines = []
    for suite in sorted(results):
        for r in results[suite]:
            lines.append("[%s] %s/%s: %s"
                         % ("PASS" if r["pass"] else "FAIL", suite, r["check"],
                            r["details"]))
    lines.append("all checks passed" if ok else "some checks FAILED")
    _emit(args, {"results": results, "pass": ok}, lines)
    return 0 if ok else 1


def build_parser():
    top = argparse.ArgumentParser(
        prog="chowprod",
        description="Combinatorial Chow rings of products of ordered graphs.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_product=True):
        if needs_product:
            p.add_argument("--product", required=True,
                           help="JSON file describing the product")
        p.add_argument("--json", action="store_true", help="JSON output")

    def expr_flags(p):
        p.add_argument("--expr", help="polynomial expression")
        p.add_argument("--expr-file", help="file containing the expression")

    p = sub.add_parser("deg", help="total degree of a top graded polynomial")
    common(p)
    expr_flags(p)
    p.set_defaults(func=_cmd_deg)

    p = sub.add_parser("basis", help="rank and torsion of a graded piece")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("reduce", help="nondegenerate normal form and class")
    common(p)
    expr_flags(p)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("restrict", help="all cube restrictions")
    common(p)
    expr_flags(p)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("glue", help="glue a tuple of cube polynomials")
    common(p)
    p.add_argument("--tuple-file", required=True,
                   help="JSON file mapping cube keys to expressions")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("pairing", help="degree pairing of d+1 vertex functions")
    common(p)
    p.add_argument("--functions-file", required=True,
                   help="JSON list of d+1 vertex->value maps")
    p.set_defaults(func=_cmd_pairing)

    p = sub.add_parser("fourier", help="dual generators on the hypercube")
    fsub = p.add_subparsers(dest="action", required=True)
    for action in ("convert", "deg", "vanish", "check-relations", "check-iso"):
        q = fsub.add_parser(action)
        q.add_argument("--d", type=int, required=True)
        q.add_argument("--json", action="store_true")
        if action == "convert":
            expr_flags(q)
            q.add_argument("--from-dual", action="store_true",
                           help="expression uses F generators")
        if action in ("deg", "vanish"):
            q.add_argument("--words", required=True,
                           help="comma-separated bitstrings")
        if action == "check-iso":
            q.add_argument("--degree", type=int, required=True)
        q.set_defaults(func=_cmd_fourier)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChowprodError as e:
        print(str(e), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
