"""Per-order screening: rule out solvable partners for insolvable groups.

For a fixed order n, ask whether some insolvable group G of order n could
be a regular subgroup of the holomorph of a solvable group N of order n.
Several necessary conditions depend only on N and on subgroup orders of
the insolvable groups, so candidates N can be discarded wholesale:

* a regular embedding forces a solvable subgroup of G whose order is
  |Fit(N)|, the order of the Fitting subgroup of N;
* if Aut(N) is solvable the whole holomorph is solvable and contains no
  insolvable subgroup at all;
* every characteristic subgroup order of N must occur among the subgroup
  orders of some insolvable G;
* a characteristic subgroup of index two would force an index-two, hence
  insolvable, subgroup of G of order n/2, reducing the question to n/2;
* gcd(n, |Out(N)|) must be a non-solvable number.

The filters run cheapest first (Fitting, then Aut, then the
characteristic-subgroup and outer-order tests).  A verdict of ``holds``
means no solvable N survives the unconditional tests; the index-two
reduction yields ``holds-conditional-on(n/2)``; anything else, including
any cap violation, is ``undecided``.  Corpus completeness is a recorded
claim that the report repeats; it is never proven here.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .automorphisms import (AUT_TABLE_CAP, automorphism_group,
                            characteristic_subgroups, inner_and_outer)
from .corpus import CorpusManifest, GroupRecord, corpus_hash, load_manifest
from .errors import CapExceeded
from .lattice import SUBGROUP_CAP, all_subgroups, fitting_subgroup
from .numbers import default_table, is_solvable_number

__all__ = [
    "SubgroupOrderSets",
    "build_order_sets",
    "fitting_filter",
    "aut_filter",
    "half_index_filter",
    "char_orders_filter",
    "outer_gcd_filter",
    "characteristic_orders",
    "GroupTrace",
    "ScreenReport",
    "screen_order",
    "render_report",
    "PairTestResult",
    "pair_test",
]

REPORT_SCHEMA = "holoscreen.screen/1"


@dataclass(frozen=True)
class SubgroupOrderSets:
    """Subgroup orders collected from the insolvable groups of order n.

    ``solvable_orders`` collects |H| over solvable subgroups H of any
    insolvable group of order n; ``all_orders`` drops the solvability
    restriction.
    """

    n: int
    solvable_orders: frozenset[int]
    all_orders: frozenset[int]

    def __post_init__(self) -> None:
        if not self.solvable_orders <= self.all_orders:
            raise ValueError("solvable orders must be a subset of all orders")


def build_order_sets(records, n: int | None = None, *,
                     cap: int = SUBGROUP_CAP) -> SubgroupOrderSets:
    """Exhaustively enumerate subgroups of each insolvable record.

    The records must all be insolvable and share one order.  An empty
    sequence is legal (solvable orders have no insolvable groups) and
    yields empty sets.
    """
    records = list(records)
    if records:
        orders = {rec.order for rec in records}
        if len(orders) != 1:
            raise ValueError(f"mixed orders in input: {sorted(orders)}")
        if n is None:
            n = records[0].order
        elif n != records[0].order:
            raise ValueError(f"records have order {records[0].order}, not {n}")
    elif n is None:
        n = 0
    solvable: set[int] = set()
    every: set[int] = set()
    for rec in records:
        if rec.is_solvable():
            raise ValueError(f"{rec.name} is solvable; expected insolvable input")
        try:
            subs = all_subgroups(rec.table, cap=cap)
        except CapExceeded as exc:
            raise CapExceeded(f"subgroup enumeration for {rec.name}: {exc}")
        for sub in subs:
            every.add(sub.order)
            if sub.is_solvable():
                solvable.add(sub.order)
    sets = SubgroupOrderSets(n, frozenset(solvable), frozenset(every))
    if records and (1 not in sets.solvable_orders or n not in sets.all_orders):
        raise RuntimeError("subgroup enumeration missed a trivial subgroup")
    return sets


def fitting_filter(record: GroupRecord, sets: SubgroupOrderSets) -> bool:
    """Keep N only if |Fit(N)| occurs as a solvable subgroup order."""
    return fitting_subgroup(record.table).order in sets.solvable_orders


def aut_filter(record: GroupRecord, aut=None) -> bool:
    """Keep N only if Aut(N) is insolvable."""
    aut = aut if aut is not None else automorphism_group(record.table)
    return not aut.is_solvable()


def characteristic_orders(record: GroupRecord, aut=None) -> tuple[int, ...]:
    aut = aut if aut is not None else automorphism_group(record.table)
    subs = characteristic_subgroups(record.table, aut)
    return tuple(sorted({sub.order for sub in subs}))


def half_index_filter(record: GroupRecord, aut=None) -> bool:
    """Keep N only if no characteristic subgroup has index two."""
    n = record.order
    if n % 2:
        return True
    return n // 2 not in characteristic_orders(record, aut)


def char_orders_filter(record: GroupRecord, sets: SubgroupOrderSets,
                       aut=None) -> bool:
    """Keep N only if its characteristic subgroup orders all lie in the
    subgroup orders of the insolvable groups."""
    return set(characteristic_orders(record, aut)) <= sets.all_orders


def outer_gcd_filter(record: GroupRecord, aut=None) -> bool:
    """Keep N only if gcd(n, |Out(N)|) is a non-solvable number."""
    aut = aut if aut is not None else automorphism_group(record.table)
    _, outer = inner_and_outer(record.table, aut)
    return not is_solvable_number(math.gcd(record.order, outer))


@dataclass
class GroupTrace:
    """Filter-by-filter outcome for one solvable group.

    Later fields are None when an earlier filter already dropped the
    group, when the outer test was skipped, or when an error occurred.
    """

    name: str
    fitting_order: int = 0
    passed_fitting: bool | None = None
    aut_order: int | None = None
    aut_insolvable: bool | None = None
    char_orders: tuple[int, ...] | None = None
    passed_half_index: bool | None = None
    passed_char_orders: bool | None = None
    outer_order: int | None = None
    passed_outer_gcd: bool | None = None
    seconds: float | None = None
    error: str | None = None

    @property
    def in_stage2(self) -> bool:
        return bool(self.passed_fitting) and bool(self.aut_insolvable)


def _trace_one(args) -> GroupTrace:
    record, sets, skip_outer, aut_cap, timed = args
    start = time.monotonic() if timed else None
    trace = GroupTrace(name=record.name)
    try:
        trace.fitting_order = fitting_subgroup(record.table).order
        trace.passed_fitting = trace.fitting_order in sets.solvable_orders
        if trace.passed_fitting:
            aut = automorphism_group(record.table, cap=aut_cap)
            trace.aut_order = aut.order
            trace.aut_insolvable = not aut.is_solvable()
            if trace.aut_insolvable:
                trace.char_orders = characteristic_orders(record, aut)
                n = record.order
                trace.passed_half_index = (n % 2 == 1
                                           or n // 2 not in trace.char_orders)
                trace.passed_char_orders = (
                    set(trace.char_orders) <= sets.all_orders)
                if not skip_outer:
                    _, outer = inner_and_outer(record.table, aut)
                    trace.outer_order = outer
                    trace.passed_outer_gcd = not is_solvable_number(
                        math.gcd(n, outer))
    except (CapExceeded, ValueError) as exc:
        trace.error = str(exc)
    if timed:
        trace.seconds = time.monotonic() - start
    return trace


@dataclass
class ScreenReport:
    """Everything screen_order computed, in corpus order."""

    n: int
    corpus_dir: str
    corpus_hash: str
    complete: bool
    solvable_number: bool | None
    insolvable_names: tuple[str, ...]
    order_sets: SubgroupOrderSets | None
    traces: tuple[GroupTrace, ...]
    skip_outer: bool
    verdict: str
    problems: tuple[str, ...] = ()
    seconds: float | None = None

    def stage_names(self, stage: str) -> tuple[str, ...]:
        """Names surviving a given stage: one of fitting, aut, half-index,
        char-orders, outer-gcd, unconditional, conditional."""
        out = []
        for t in self.traces:
            if t.error:
                continue
            if stage == "fitting":
                keep = bool(t.passed_fitting)
            elif stage == "aut":
                keep = t.in_stage2
            elif stage == "half-index":
                keep = t.in_stage2 and bool(t.passed_half_index)
            elif stage == "char-orders":
                keep = t.in_stage2 and bool(t.passed_char_orders)
            elif stage == "outer-gcd":
                keep = t.in_stage2 and bool(t.passed_outer_gcd)
            elif stage == "unconditional":
                keep = (t.in_stage2 and bool(t.passed_char_orders)
                        and (self.skip_outer or bool(t.passed_outer_gcd)))
            elif stage == "conditional":
                keep = (t.in_stage2 and bool(t.passed_char_orders)
                        and (self.skip_outer or bool(t.passed_outer_gcd))
                        and bool(t.passed_half_index))
            else:
                raise ValueError(f"unknown stage {stage!r}")
            if keep:
                out.append(t.name)
        return tuple(out)

    def to_json_dict(self) -> dict:
        doc = {
            "schema": REPORT_SCHEMA,
            "order": self.n,
            "corpus": self.corpus_dir,
            "corpus_sha256": self.corpus_hash,
            "complete_claim": self.complete,
            "solvable_number": self.solvable_number,
            "insolvable_groups": list(self.insolvable_names),
            "order_sets": None,
            "traces": [],
            "skip_outer": self.skip_outer,
            "survivors_unconditional": list(self.stage_names("unconditional")),
            "survivors_conditional": list(self.stage_names("conditional")),
            "verdict": self.verdict,
            "problems": list(self.problems),
        }
        if self.order_sets is not None:
            doc["order_sets"] = {
                "solvable_subgroup_orders": sorted(self.order_sets.solvable_orders),
                "subgroup_orders": sorted(self.order_sets.all_orders),
            }
        for t in self.traces:
            entry = {
                "name": t.name,
                "fitting_order": t.fitting_order,
                "passed_fitting": t.passed_fitting,
                "aut_order": t.aut_order,
                "aut_insolvable": t.aut_insolvable,
                "char_orders": list(t.char_orders) if t.char_orders is not None else None,
                "passed_half_index": t.passed_half_index,
                "passed_char_orders": t.passed_char_orders,
                "outer_order": t.outer_order,
                "passed_outer_gcd": t.passed_outer_gcd,
                "error": t.error,
            }
            if t.seconds is not None:
                entry["seconds"] = round(t.seconds, 6)
            doc["traces"].append(entry)
        if self.seconds is not None:
            doc["seconds"] = round(self.seconds, 6)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def screen_order(corpus, n: int | None = None, *, jobs: int = 1,
                 skip_outer: bool = False, subgroup_cap: int = SUBGROUP_CAP,
                 aut_cap: int = AUT_TABLE_CAP, timings: bool = False) -> ScreenReport:
    """Run the screening pipeline over a complete corpus of order n.

    ``corpus`` is a directory or a loaded manifest whose completeness
    claim must be true, since the verdict quantifies over all groups of
    the order.  ``jobs`` parallelizes the per-group filter evaluation
    without affecting the output.  ``skip_outer`` disables the
    gcd(n, |Out|) filter, leaving the remaining (still sound) tests.
    """
    start = time.monotonic() if timings else None
    manifest = corpus if isinstance(corpus, CorpusManifest) else load_manifest(corpus)
    if n is None:
        n = manifest.order
    elif n != manifest.order:
        raise ValueError(f"corpus has order {manifest.order}, requested {n}")
    if not manifest.complete:
        raise ValueError(
            "screening needs a corpus that claims completeness; "
            f"{manifest.directory} does not")

    digest = corpus_hash(manifest)
    solvable_records = [r for r in manifest.records if r.is_solvable()]
    insolvable_records = [r for r in manifest.records if not r.is_solvable()]
    table = default_table()
    solvable_number = (is_solvable_number(n, table) if n <= table.bound else None)

    problems: list[str] = []
    try:
        sets = build_order_sets(insolvable_records, n, cap=subgroup_cap)
    except CapExceeded as exc:
        sets = None
        problems.append(str(exc))

    if sets is None:
        traces = tuple(GroupTrace(name=r.name, error="order sets unavailable")
                       for r in solvable_records)
    else:
        work = [(r, sets, skip_outer, aut_cap, timings) for r in solvable_records]
        if jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                traces = tuple(pool.map(_trace_one, work, chunksize=1))
        else:
            traces = tuple(map(_trace_one, work))

    for t in traces:
        if t.error:
            problems.append(f"{t.name}: {t.error}")

    report = ScreenReport(
        n=n, corpus_dir=str(manifest.directory), corpus_hash=digest,
        complete=manifest.complete, solvable_number=solvable_number,
        insolvable_names=tuple(r.name for r in insolvable_records),
        order_sets=sets, traces=traces, skip_outer=skip_outer,
        verdict="undecided", problems=tuple(problems))
    if not problems:
        if not report.stage_names("unconditional"):
            report.verdict = "holds"
        elif not report.stage_names("conditional"):
            report.verdict = f"holds-conditional-on({n // 2})"
    if timings:
        report.seconds = time.monotonic() - start
    return report


def _yesno(flag: bool | None) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "no"


def render_report(report: ScreenReport) -> str:
    """Deterministic human-readable rendering of a ScreenReport."""
    lines = [f"screen: order {report.n}"]
    lines.append(f"corpus: {report.corpus_dir} "
                 f"({len(report.traces) + len(report.insolvable_names)} groups, "
                 f"complete={'yes' if report.complete else 'no'})")
    lines.append(f"corpus sha256: {report.corpus_hash}")
    lines.append("note: the verdict relies on the corpus completeness claim")
    if report.solvable_number is not None:
        lines.append(f"solvable number: {_yesno(report.solvable_number)}")
    names = ", ".join(report.insolvable_names) or "none"
    lines.append(f"insolvable groups ({len(report.insolvable_names)}): {names}")
    if report.order_sets is not None:
        solv = " ".join(str(k) for k in sorted(report.order_sets.solvable_orders))
        allo = " ".join(str(k) for k in sorted(report.order_sets.all_orders))
        lines.append(f"solvable subgroup orders: {solv or '-'}")
        lines.append(f"subgroup orders: {allo or '-'}")
    lines.append("trace (solvable groups, corpus order):")
    width = max((len(t.name) for t in report.traces), default=4)
    for t in report.traces:
        if t.error:
            lines.append(f"  {t.name:<{width}} error: {t.error}")
            continue
        parts = [f"fit={t.fitting_order}"]
        if not t.passed_fitting:
            parts.append("dropped: fitting order not a solvable subgroup order")
        else:
            parts.append(f"|Aut|={t.aut_order}")
            if not t.aut_insolvable:
                parts.append("dropped: Aut solvable")
            else:
                chars = ",".join(str(k) for k in t.char_orders)
                parts.append(f"char orders={chars}")
                parts.append(f"half-index={_yesno(t.passed_half_index)}")
                parts.append(f"char-orders={_yesno(t.passed_char_orders)}")
                if not report.skip_outer:
                    parts.append(f"|Out|={t.outer_order}")
                    parts.append(f"outer-gcd={_yesno(t.passed_outer_gcd)}")
        if t.seconds is not None:
            parts.append(f"t={t.seconds:.3f}s")
        lines.append(f"  {t.name:<{width}} " + "  ".join(parts))
    for stage, label in [("fitting", "past fitting"), ("aut", "past aut"),
                         ("half-index", "past half-index"),
                         ("char-orders", "past char-orders"),
                         ("outer-gcd", "past outer-gcd")]:
        if report.skip_outer and stage == "outer-gcd":
            lines.append("past outer-gcd: skipped")
            continue
        names = report.stage_names(stage)
        lines.append(f"{label} ({len(names)}): " + (", ".join(names) or "-"))
    uncond = report.stage_names("unconditional")
    cond = report.stage_names("conditional")
    lines.append(f"survivors, unconditional path ({len(uncond)}): "
                 + (", ".join(uncond) or "-"))
    lines.append(f"survivors, conditional path ({len(cond)}): "
                 + (", ".join(cond) or "-"))
    for problem in report.problems:
        lines.append(f"problem: {problem}")
    if report.seconds is not None:
        lines.append(f"elapsed: {report.seconds:.3f}s")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PairTestResult:
    verdict: str  # "excluded" | "possible"
    reason: str | None = None


def pair_test(G: GroupRecord, N: GroupRecord, *,
              cap: int = SUBGROUP_CAP) -> PairTestResult:
    """Necessary-condition test for one (insolvable G, solvable N) pair.

    ``excluded`` means G cannot occur as a regular subgroup of the
    holomorph of N: either G has no solvable subgroup of order |Fit(N)|,
    or some characteristic subgroup order of N is missing from the
    subgroup orders of G.  ``possible`` only means these tests did not
    rule the pair out; it claims nothing further.
    """
    if G.order != N.order:
        raise ValueError(f"orders differ: {G.order} vs {N.order}")
    if G.is_solvable():
        raise ValueError(f"{G.name} is solvable; the first argument must be "
                         "insolvable")
    if not N.is_solvable():
        raise ValueError(f"{N.name} is insolvable; the second argument must "
                         "be solvable")
    subs = all_subgroups(G.table, cap=cap)
    sub_orders = {s.order for s in subs}
    solvable_orders = {s.order for s in subs if s.is_solvable()}
    fit = fitting_subgroup(N.table).order
    if fit not in solvable_orders:
        return PairTestResult(
            "excluded",
            f"{G.name} has no solvable subgroup of order |Fit({N.name})| = {fit}")
    aut = automorphism_group(N.table)
    char = set(characteristic_orders(N, aut))
    missing = sorted(char - sub_orders)
    if missing:
        return PairTestResult(
            "excluded",
            f"characteristic subgroup orders {missing} of {N.name} are not "
            f"subgroup orders of {G.name}")
    return PairTestResult("possible")
