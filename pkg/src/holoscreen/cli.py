"""Command-line interface.

Exit codes are shared by all subcommands: 0 means the requested property
holds (or the command simply succeeded), 1 is an error, 2 means the
verdict holds conditionally on a smaller order, and 3 means undecided
(budget or cap exhausted, needs-screening classification, or an
incomplete corpus preventing an order-level claim).  A verdict of
``holds`` is never emitted when any budget or cap was exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from ._kernel import BACKEND_NAME, HAVE_COMPILED
from .automorphisms import AUT_TABLE_CAP, automorphism_group, inner_and_outer
from .corpus import construct, load_group, load_manifest, validate_corpus
from .errors import HoloscreenError
from .holomorph import (DEFAULT_NODE_BUDGET, HOL_ORDER_CAP,
                        enumerate_regular_subgroups, holomorph)
from .lattice import SUBGROUP_CAP
from .numbers import (classify_order, default_table, doubling_family_conditions,
                      is_solvable_number, suzuki_exponent_check, suzuki_order,
                      wieferich_scan)
from .screening import render_report, screen_order

EXIT_HOLDS = 0
EXIT_ERROR = 1
EXIT_CONDITIONAL = 2
EXIT_UNDECIDED = 3


@dataclass
class Config:
    """Caps and run settings shared by the corpus-driven commands."""

    subgroup_cap: int = SUBGROUP_CAP
    aut_cap: int = AUT_TABLE_CAP
    order_cap: int = HOL_ORDER_CAP
    node_budget: int = DEFAULT_NODE_BUDGET
    jobs: int = 1
    text_out: str | None = None
    json_out: str | None = None
    timings: bool = False

    def __post_init__(self) -> None:
        for name in ("subgroup_cap", "aut_cap", "order_cap", "node_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def _emit(text: str, path: str | None) -> None:
    sys.stdout.write(text)
    if path:
        Path(path).write_text(text)


def _load_target(target: str):
    """A group given either as a file path or a constructor expression."""
    if "(" in target:
        record = construct(target)
    else:
        record = load_group(target)
    return record


def cmd_screen(args) -> int:
    config = Config(subgroup_cap=args.subgroup_cap, aut_cap=args.aut_cap,
                    jobs=args.jobs, text_out=args.out, json_out=args.json,
                    timings=args.timings)
    report = screen_order(args.corpus, args.order, jobs=config.jobs,
                          skip_outer=args.skip_outer,
                          subgroup_cap=config.subgroup_cap,
                          aut_cap=config.aut_cap, timings=config.timings)
    _emit(render_report(report), config.text_out)
    if config.json_out:
        Path(config.json_out).write_text(report.to_json())
    if report.verdict == "holds":
        return EXIT_HOLDS
    if report.verdict.startswith("holds-conditional-on"):
        return EXIT_CONDITIONAL
    return EXIT_UNDECIDED


def _pick_backend(name: str):
    from . import _kernel

    if name == "auto":
        return None
    if name == "pure":
        from ._kernel import pure

        return pure
    if not HAVE_COMPILED:
        raise HoloscreenError("compiled kernel not available in this install")
    return _kernel.backend


def cmd_direct(args) -> int:
    config = Config(order_cap=args.order_cap, node_budget=args.budget,
                    json_out=args.json, timings=args.timings)
    backend = _pick_backend(args.backend)
    manifest = load_manifest(args.corpus)
    if args.order is not None and args.order != manifest.order:
        raise HoloscreenError(
            f"corpus has order {manifest.order}, requested {args.order}")

    lines = [f"direct check: order {manifest.order} "
             f"(kernel backend: {BACKEND_NAME if backend is None else args.backend})"]
    doc = {"schema": "holoscreen.direct/1", "order": manifest.order,
           "complete_claim": manifest.complete, "groups": []}
    exhausted_any = False
    insolvable_found = []
    for record in manifest.records:
        if not record.is_solvable():
            lines.append(f"  {record.name}: skipped (insolvable, not a "
                         "candidate base group)")
            doc["groups"].append({"name": record.name, "skipped": True})
            continue
        hol = holomorph(record.table)
        enum = enumerate_regular_subgroups(hol, node_budget=config.node_budget,
                                           order_cap=config.order_cap,
                                           backend=backend)
        enum.classify()
        bad = enum.insolvable_records()
        note = "search budget exhausted" if enum.exhausted else "complete"
        lines.append(
            f"  {record.name}: |Hol|={hol.order}, regular subgroups="
            f"{len(enum.records)} in {len(enum.class_reps)} iso classes, "
            f"insolvable={len(bad)}, nodes={enum.nodes} ({note})")
        doc["groups"].append({
            "name": record.name, "hol_order": hol.order,
            "regular_count": len(enum.records),
            "iso_classes": len(enum.class_reps),
            "insolvable_count": len(bad), "nodes": enum.nodes,
            "exhausted": enum.exhausted})
        exhausted_any = exhausted_any or enum.exhausted
        if bad:
            insolvable_found.append(record.name)

    if insolvable_found:
        verdict, code = "counterexample-candidate", EXIT_UNDECIDED
        lines.append("  !! insolvable regular subgroup reported over: "
                     + ", ".join(insolvable_found))
        lines.append("  !! this contradicts the expected outcome; verify "
                     "the corpus and report the find")
    elif exhausted_any:
        verdict, code = "undecided", EXIT_UNDECIDED
    elif manifest.complete:
        verdict, code = "holds", EXIT_HOLDS
    else:
        verdict, code = "undecided", EXIT_UNDECIDED
        lines.append("  note: corpus does not claim completeness, so no "
                     "order-level conclusion")
    lines.append(f"verdict: {verdict}")
    doc["verdict"] = verdict
    _emit("\n".join(lines) + "\n", None)
    if config.json_out:
        Path(config.json_out).write_text(json.dumps(doc, indent=2) + "\n")
    return code


def cmd_classify(args) -> int:
    result = classify_order(args.n)
    gloss = {
        "trivial-solvable": "every group of this order is solvable",
        "doubling-family": "a 2-power multiple of a recognized base order",
        "cube-free": "no prime cube divides the order",
        "needs-screening": "no arithmetic criterion applies; screen a corpus",
    }
    lines = [f"order {result.n}"]
    lines.append(f"solvable number: {'yes' if result.solvable_number else 'no'}")
    lines.append(f"cube-free: {'yes' if result.cube_free else 'no'}")
    if result.doubling_family is not None:
        n0, r = result.doubling_family
        lines.append(f"doubling family: 2^{r} * {n0}")
    lines.append(f"verdict: {result.verdict} ({gloss[result.verdict]})")
    _emit("\n".join(lines) + "\n", None)
    return EXIT_UNDECIDED if result.verdict == "needs-screening" else EXIT_HOLDS


def cmd_numtheory(args) -> int:
    if args.nt_command == "wieferich":
        primes = wieferich_scan(args.limit)
        print(" ".join(str(p) for p in primes) if primes else "none")
        return EXIT_HOLDS
    if args.nt_command == "suzuki":
        print(suzuki_order(args.ell))
        return EXIT_HOLDS
    if args.nt_command == "base-check":
        check = suzuki_exponent_check(args.ell)
        if check.status == "eligible":
            print(f"eligible: base order {check.base_order}")
            return EXIT_HOLDS
        print(f"{check.status}: {check.reason}")
        return EXIT_HOLDS if check.status == "ineligible" else EXIT_UNDECIDED
    if args.nt_command == "solvable":
        table = default_table()
        if is_solvable_number(args.n, table):
            print(f"{args.n} is a solvable number")
        else:
            witness = table.nonsolvable_witness(args.n)
            print(f"{args.n} is non-solvable (divisible by the simple group "
                  f"order {witness})")
        return EXIT_HOLDS
    if args.nt_command == "conditions":
        conditions = doubling_family_conditions(args.n0, r_max=args.r_max)
        flag = {True: "yes", False: "no", None: "unknown"}
        print(f"base order {conditions.n0}, doubling exponents up to "
              f"{conditions.r_checked}")
        print(f"no doubled order is simple: "
              f"{flag[conditions.no_simple_doubled_order]}")
        print(f"half is a solvable number: {flag[conditions.half_solvable]}")
        print(f"odd-prime quotients solvable: "
              f"{flag[conditions.prime_quotients_solvable]}")
        if conditions.failure:
            print(f"failure: {conditions.failure}")
        print(f"all hold: {'yes' if conditions.all_hold else 'no'}")
        if conditions.all_hold or conditions.failure:
            return EXIT_HOLDS
        return EXIT_UNDECIDED
    raise HoloscreenError(f"unknown numtheory command {args.nt_command!r}")


def cmd_group(args) -> int:
    record = _load_target(args.target)
    table = record.table
    if args.group_command == "info":
        spectrum = " ".join(f"{o}^{c}" for o, c in table.order_spectrum)
        print(f"group {record.name}")
        print(f"order {record.order}")
        if record.degree is not None:
            print(f"degree {record.degree} with {len(record.generators)} "
                  "generators")
        print(f"abelian: {'yes' if table.is_abelian else 'no'}")
        print(f"solvable: {'yes' if table.is_solvable() else 'no'}")
        print(f"nilpotent: {'yes' if table.is_nilpotent() else 'no'}")
        print(f"center order: {len(table.center)}")
        print(f"conjugacy classes: {len(table.conjugacy_classes)}")
        print(f"element order spectrum: {spectrum}")
        return EXIT_HOLDS
    if args.group_command == "aut":
        aut = automorphism_group(table, cap=args.aut_cap)
        inner, outer = inner_and_outer(table, aut)
        print(f"|Aut| = {aut.order}")
        print(f"inner = {inner}, outer = {outer}")
        print(f"Aut solvable: {'yes' if aut.is_solvable() else 'no'}")
        return EXIT_HOLDS
    if args.group_command == "hol":
        hol = holomorph(table)
        print(f"|Hol| = {hol.order} (= {table.n} * {hol.aut.order})")
        print(f"Hol solvable: "
              f"{'yes' if hol.perm_group.is_solvable() else 'no'}")
        return EXIT_HOLDS
    if args.group_command == "regulars":
        hol = holomorph(table)
        enum = enumerate_regular_subgroups(hol, node_budget=args.budget,
                                           order_cap=args.order_cap)
        reps = enum.classify()
        print(f"|Hol| = {hol.order}")
        print(f"regular subgroups: {len(enum.records)} "
              f"({'complete' if enum.complete else 'search budget exhausted'}, "
              f"nodes={enum.nodes})")
        counts: dict[int, int] = {}
        for rec in enum.records:
            counts[rec.iso_type] = counts.get(rec.iso_type, 0) + 1
        for i, rep in enumerate(reps):
            spectrum = " ".join(f"{o}^{c}" for o, c in rep.order_spectrum)
            solvable = "solvable" if rep.is_solvable() else "insolvable"
            print(f"  class {i}: {counts[i]} subgroups, {solvable}, "
                  f"element orders {spectrum}")
        return EXIT_HOLDS if enum.complete else EXIT_UNDECIDED
    raise HoloscreenError(f"unknown group command {args.group_command!r}")


def cmd_corpus(args) -> int:
    report = validate_corpus(args.directory, strict=not args.lax)
    print(f"corpus {report.directory}")
    if report.order is not None:
        print(f"order {report.order}, {report.count} groups, "
              f"complete={'yes' if report.complete else 'no'}")
    if report.hash:
        print(f"sha256 {report.hash}")
    for warning in report.warnings:
        print(f"warning: {warning}")
    for error in report.errors:
        print(f"error: {error}")
    print("result: " + ("ok" if report.ok else "failed"))
    return EXIT_HOLDS if report.ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holoscreen",
        description="Screen group orders for insolvable regular subgroups "
                    "of holomorphs of solvable groups.")
    parser.add_argument("--version", action="version",
                        version=f"holoscreen {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("screen", help="run the screening pipeline on a corpus")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--corpus", required=True)
    p.add_argument("--jobs", type=int, default=max(os.cpu_count() or 1, 1))
    p.add_argument("--skip-outer", action="store_true",
                   help="skip the gcd(n, |Out|) filter")
    p.add_argument("--subgroup-cap", type=int, default=SUBGROUP_CAP)
    p.add_argument("--aut-cap", type=int, default=AUT_TABLE_CAP)
    p.add_argument("--out", default=None, help="also write the text report here")
    p.add_argument("--json", default=None, help="write a JSON report here")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock fields (not deterministic)")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("direct",
                       help="enumerate regular subgroups of each holomorph")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--corpus", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--order-cap", type=int, default=HOL_ORDER_CAP)
    p.add_argument("--backend", choices=["auto", "pure", "compiled"],
                   default="auto")
    p.add_argument("--json", default=None)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_direct)

    p = sub.add_parser("classify", help="arithmetic classification of an order")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("numtheory", help="arithmetic helpers")
    nt = p.add_subparsers(dest="nt_command", required=True)
    q = nt.add_parser("wieferich")
    q.add_argument("--limit", type=int, required=True)
    q = nt.add_parser("suzuki")
    q.add_argument("--ell", type=int, required=True)
    q = nt.add_parser("base-check")
    q.add_argument("--ell", type=int, required=True)
    q = nt.add_parser("solvable")
    q.add_argument("n", type=int)
    q = nt.add_parser("conditions")
    q.add_argument("--n0", type=int, required=True)
    q.add_argument("--r-max", type=int, default=None)
    p.set_defaults(func=cmd_numtheory)

    p = sub.add_parser("group", help="inspect one group")
    g = p.add_subparsers(dest="group_command", required=True)
    for name in ("info", "aut", "hol", "regulars"):
        q = g.add_parser(name)
        q.add_argument("target",
                       help="a .grp file or a constructor expression")
        if name == "aut":
            q.add_argument("--aut-cap", type=int, default=AUT_TABLE_CAP)
        if name == "regulars":
            q.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
            q.add_argument("--order-cap", type=int, default=HOL_ORDER_CAP)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("corpus", help="corpus handling")
    c = p.add_subparsers(dest="corpus_command", required=True)
    q = c.add_parser("validate")
    q.add_argument("directory")
    q.add_argument("--lax", action="store_true",
                   help="skip the pairwise isomorphism scan")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HoloscreenError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
