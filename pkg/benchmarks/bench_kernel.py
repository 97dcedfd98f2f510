#!/usr/bin/env python3
"""Compare the compiled and pure search kernels on a range of holomorphs.

Each row enumerates the regular subgroups of Hol(N) once per backend and
reports wall-clock times (best of --repeat runs) plus the speedup.  The
two backends must return identical subgroup lists; a mismatch is a bug
and exits nonzero.

Usage:
    python3 benchmarks/bench_kernel.py [--repeat K] [--heavy] [--base EXPR ...]
"""

import argparse
import sys
import time

from holoscreen._kernel import HAVE_COMPILED, pure
from holoscreen.corpus import construct
from holoscreen.holomorph import enumerate_regular_subgroups, holomorph

DEFAULT_BASES = [
    "cyclic(12)",
    "cyclic(20)",
    "dihedral(12)",
    "alternating(4)",
    "dihedral(20)",
    "direct(symmetric(3),cyclic(4))",
    "abelian(2,2,2)",
]

HEAVY_BASES = [
    "dihedral(60)",
    "direct(alternating(4),cyclic(5))",
]


def time_backend(hol, backend, repeat):
    best = None
    enum = None
    for _ in range(repeat):
        start = time.perf_counter()
        enum = enumerate_regular_subgroups(hol, backend=backend)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return enum, best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per backend; the best time is reported")
    parser.add_argument("--heavy", action="store_true",
                        help="add larger bases (takes a few minutes pure)")
    parser.add_argument("--base", action="append", default=None,
                        metavar="EXPR",
                        help="benchmark this constructor expression instead "
                             "of the default list (repeatable)")
    args = parser.parse_args(argv)

    bases = args.base if args.base else list(DEFAULT_BASES)
    if args.heavy and not args.base:
        bases += HEAVY_BASES

    if not HAVE_COMPILED:
        print("compiled kernel not available; timing the pure backend only")

    header = (f"{'base':34s} {'|Hol|':>6s} {'regs':>5s} {'nodes':>7s} "
              f"{'pure':>9s} {'compiled':>9s} {'speedup':>8s}")
    print(header)
    print("-" * len(header))
    mismatch = False
    for expr in bases:
        hol = holomorph(construct(expr).table)
        enum_pure, t_pure = time_backend(hol, pure, args.repeat)
        row = (f"{expr:34s} {hol.order:6d} {len(enum_pure.records):5d} "
               f"{enum_pure.nodes:7d} {t_pure:8.3f}s")
        if HAVE_COMPILED:
            enum_comp, t_comp = time_backend(hol, None, args.repeat)
            same = ([r.codes for r in enum_pure.records]
                    == [r.codes for r in enum_comp.records]
                    and enum_pure.nodes == enum_comp.nodes)
            if not same:
                mismatch = True
            ratio = t_pure / t_comp if t_comp > 0 else float("inf")
            row += f" {t_comp:8.3f}s {ratio:7.1f}x"
            if not same:
                row += "  MISMATCH"
        print(row)

    if mismatch:
        print("backend disagreement detected", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
