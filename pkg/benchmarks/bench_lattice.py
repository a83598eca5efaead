"""Timing comparison of the compiled and pure lattice backends.

The workload is the real one: relation lattices of graded quotients and
canonical class reduction on products of small graphs.  Run with

    python benchmarks/bench_lattice.py

Pass --quick for a smaller workload.
"""

import argparse
import random
import sys
import time

from chowprod.complexes import hypercube, product
from chowprod.graphs import complete_graph, path_graph
from chowprod.lattice import RowLattice, _pure, backend_name
from chowprod.oracle import monomial_basis
from chowprod.poly import Poly
from chowprod.ring import relation_generators

try:
    from chowprod.lattice import _speedups
except ImportError:
    _speedups = None


def ideal_rows(complex, degree):
    """Degree slice of the relation ideal as integer rows."""
    basis = monomial_basis(complex, degree)
    index = {m: i for i, m in enumerate(basis)}
    gens = [g.poly for g in relation_generators(complex, "R2")]
    gens += [g.poly for g in relation_generators(complex, "R3")]
    rows = []
    for g in gens:
        gdeg = g.degree()
        if gdeg > degree:
            continue
        for cof in monomial_basis(complex, degree - gdeg) if gdeg < degree else [()]:
            p = g * Poly.monomial(cof) if cof != () else g
            row = [0] * len(basis)
            for m, c in p.terms.items():
                i = index.get(m)
                if i is not None:
                    row[i] = c
            rows.append(row)
    return rows, len(basis)


def run_backend(backend, rows, width, reduce_count, seed):
    rng = random.Random(seed)
    t0 = time.perf_counter()
    lat = RowLattice(width, backend=backend)
    lat.insert_all(rows)
    lat.normalize()
    t_insert = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reduce_count):
        v = [rng.randrange(-50, 51) for _ in range(width)]
        lat.reduce_vector(v)
    t_reduce = time.perf_counter() - t0
    return lat.rank, t_insert, t_reduce


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    cases = [
        ("K3xK3 deg 3", product([complete_graph(3), complete_graph(3)]), 3),
        ("cube3 deg 3", hypercube(3), 3),
        ("cube3 deg 4", hypercube(3), 4),
        ("path3xK3 deg 3", product([path_graph(3), complete_graph(3)]), 3),
    ]
    if not args.quick:
        cases.append(("cube4 deg 4", hypercube(4), 4))
    reduce_count = 200 if args.quick else 1000

    print("default backend:", backend_name())
    if _speedups is None:
        print("compiled backend unavailable, timing pure only")
    header = "%-16s %8s %8s  %10s %10s  %10s %10s  %7s"
    print(header % ("case", "rows", "width", "fast ins", "fast red",
                    "pure ins", "pure red", "speedup"))
    for name, cx, degree in cases:
        rows, width = ideal_rows(cx, degree)
        pure_rank, p_ins, p_red = run_backend(_pure, rows, width, reduce_count, args.seed)
        if _speedups is not None:
            fast_rank, f_ins, f_red = run_backend(_speedups, rows, width,
                                                  reduce_count, args.seed)
            assert fast_rank == pure_rank, "backends disagree on rank"
            speedup = (p_ins + p_red) / max(f_ins + f_red, 1e-9)
            print(header % (name, len(rows), width,
                            "%.4fs" % f_ins, "%.4fs" % f_red,
                            "%.4fs" % p_ins, "%.4fs" % p_red,
                            "%.1fx" % speedup))
        else:
            print(header % (name, len(rows), width, "-", "-",
                            "%.4fs" % p_ins, "%.4fs" % p_red, "-"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
