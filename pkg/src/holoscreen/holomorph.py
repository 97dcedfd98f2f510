"""Holomorphs, regular subgroups, and the paired fixed-point search.

The holomorph of N is the permutation group on the elements of N generated by
the right translations together with all automorphisms.  Every element
decomposes uniquely as a left translation followed by an automorphism, so the
package works with coded pairs ``(a, phi)`` meaning ``x -> a * phi(x)``,
multiplied by

    (a, phi) * (b, psi) = (a * phi(b), phi o psi).

The image of the identity under ``(a, phi)`` is ``a``, so the coded pairs
sharing a first component form the fiber over ``a``; a subgroup is regular
exactly when it hits every fiber once.

Two independent searches live here.  ``enumerate_regular_subgroups`` finds
all regular subgroups by fiber-transversal backtracking (the compiled kernel
does the closure work).  ``has_regular_embedding`` instead fixes an abstract group
G and hunts for a pair of maps (f, g) from G into Aut(N) and N obeying

    f(s*t) = f(s) o f(t)         (f a homomorphism)
    g(s*t) = g(s) * f(s)(g(t))   (g a bijective crossed map)

which is precisely a regular subgroup {(g(t), f(t))} isomorphic to G.  The
two routes must agree, and the tests hold them to that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from .automorphisms import AutGroup, automorphism_group, inner_automorphism
from .errors import CapExceeded
from .isomorphism import GeneratorTower, are_isomorphic, hom_images
from .perms import Perm, PermutationGroup
from .tables import GroupTable

HOL_ORDER_CAP = 64
DEFAULT_NODE_BUDGET = 50_000_000


def left_translation(N: GroupTable, a: int) -> Perm:
    """x -> a*x."""
    return tuple(N.mul[a])


def right_translation(N: GroupTable, a: int) -> Perm:
    """x -> x * a^-1."""
    ia = N.inv[a]
    return tuple(N.mul[x][ia] for x in range(N.n))


def left_regular(N: GroupTable) -> PermutationGroup:
    return PermutationGroup(
        N.n, [left_translation(N, g) for g in N.generating_sequence()])


def right_regular(N: GroupTable) -> PermutationGroup:
    return PermutationGroup(
        N.n, [right_translation(N, g) for g in N.generating_sequence()])


class HolomorphGroup:
    """Holomorph of a table group, with the coded-pair tables for searching."""

    def __init__(self, base: GroupTable, aut: AutGroup):
        if aut.base is not base:
            raise ValueError("automorphism group belongs to a different table")
        self.base = base
        self.aut = aut
        self.n = base.n
        self.na = aut.order
        self.order = self.n * self.na
        n, na = self.n, self.na
        self.nmul = np.fromiter(
            (v for row in base.mul for v in row), dtype=np.int32, count=n * n)
        self.amul = np.fromiter(
            (v for row in aut.table.mul for v in row), dtype=np.int32,
            count=na * na)
        self.act = np.fromiter(
            (v for p in aut.elements for v in p), dtype=np.int32, count=na * n)
        self._orders: list[int] | None = None
        self.perm_group = PermutationGroup(
            n,
            [right_translation(base, g) for g in base.generating_sequence()]
            + list(aut.generators))
        if self.perm_group.order() != self.order:
            raise RuntimeError(
                "holomorph order %d does not match |N|*|Aut| = %d"
                % (self.perm_group.order(), self.order))

    # -- coded pairs -----------------------------------------------------

    def encode(self, a: int, phi: int) -> int:
        return a * self.na + phi

    def decode(self, code: int) -> tuple[int, int]:
        return divmod(code, self.na)

    def code_mul(self, x: int, y: int) -> int:
        na, n = self.na, self.n
        a, f = divmod(x, na)
        b, g = divmod(y, na)
        return (int(self.nmul[a * n + self.act[f * n + b]]) * na
                + int(self.amul[f * na + g]))

    def code_inv(self, x: int) -> int:
        a, f = divmod(x, self.na)
        fi = self.aut.table.inv[f]
        return self.encode(int(self.act[fi * self.n + self.base.inv[a]]), fi)

    def perm_of_code(self, code: int) -> Perm:
        """The permutation x -> a * phi(x)."""
        a, f = divmod(code, self.na)
        phi = self.aut.elements[f]
        return tuple(self.base.mul[a][phi[x]] for x in range(self.n))

    def code_of_perm(self, p: Sequence[int]) -> int:
        """Inverse of perm_of_code; raises for maps outside the holomorph."""
        a = p[0]
        ia = self.base.inv[a]
        phi = tuple(self.base.mul[ia][p[x]] for x in range(self.n))
        idx = self.aut.index.get(phi)
        if idx is None:
            raise ValueError("permutation is not in the holomorph")
        return self.encode(a, idx)

    def element_orders(self) -> list[int]:
        """Order of every coded element, cached."""
        if self._orders is None:
            n, na = self.n, self.na
            nmul = self.nmul.tolist()
            amul = self.amul.tolist()
            act = self.act.tolist()
            total = n * na
            orders = [1] * total
            for code in range(1, total):
                b, g = divmod(code, na)
                k = 1
                x = code
                while x != 0:
                    a, f = divmod(x, na)
                    x = nmul[a * n + act[f * n + b]] * na + amul[f * na + g]
                    k += 1
                orders[code] = k
            self._orders = orders
        return self._orders

    def left_regular_codes(self) -> tuple[int, ...]:
        return tuple(self.encode(a, 0) for a in range(self.n))

    def right_regular_codes(self) -> tuple[int, ...]:
        out = []
        for a in range(self.n):
            inn = inner_automorphism(self.base, a)
            out.append(self.encode(self.base.inv[a], self.aut.index[inn]))
        return tuple(sorted(out))

    def __repr__(self) -> str:
        return "HolomorphGroup(n=%d, aut=%d, order=%d)" % (
            self.n, self.na, self.order)


def holomorph(N: GroupTable, aut: AutGroup | None = None) -> HolomorphGroup:
    return HolomorphGroup(N, aut if aut is not None else automorphism_group(N))


@dataclass
class RegularSubgroupRecord:
    """One regular subgroup, as sorted element codes plus derived data.

    ``fibers`` lists the image of the identity under each element in
    code order; for a regular subgroup it is a permutation of 0..n-1.
    """

    codes: tuple[int, ...]
    fibers: tuple[int, ...]
    iso_type: int | None = None
    solvable: bool | None = None

    @property
    def order(self) -> int:
        return len(self.codes)


@dataclass
class RegularEnumeration:
    """Result of enumerating the regular subgroups of one holomorph."""

    hol: HolomorphGroup
    records: list[RegularSubgroupRecord]
    nodes: int
    exhausted: bool
    budget: int | None
    class_reps: list[GroupTable] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.exhausted

    def classify(self) -> list[GroupTable]:
        """Partition the records into isomorphism classes.

        Fills ``iso_type`` on every record with an index into the returned
        list of class representative tables (discovery order)."""
        if self.class_reps and all(r.iso_type is not None
                                   for r in self.records):
            return self.class_reps
        reps: list[GroupTable] = []
        for rec in self.records:
            table = subgroup_table(self.hol, rec.codes)
            rec.solvable = table.is_solvable()
            for i, rep in enumerate(reps):
                ok, _ = are_isomorphic(table, rep)
                if ok:
                    rec.iso_type = i
                    break
            else:
                rec.iso_type = len(reps)
                reps.append(table)
        self.class_reps = reps
        return reps

    def insolvable_records(self) -> list[RegularSubgroupRecord]:
        out = []
        for rec in self.records:
            if rec.solvable is None:
                rec.solvable = subgroup_table(self.hol, rec.codes).is_solvable()
            if not rec.solvable:
                out.append(rec)
        return out


def subgroup_table(hol: HolomorphGroup, codes: Sequence[int]) -> GroupTable:
    """Multiplication table of a set of codes closed under the product."""
    codes = tuple(codes)
    pos = {c: i for i, c in enumerate(codes)}
    if codes[0] != 0:
        raise ValueError("code set must be sorted with the identity first")
    mul = [[pos[hol.code_mul(x, y)] for y in codes] for x in codes]
    return GroupTable(mul, validate=False)


def enumerate_regular_subgroups(
    hol: HolomorphGroup,
    *,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    order_cap: int = HOL_ORDER_CAP,
    backend=None,
) -> RegularEnumeration:
    """All regular subgroups of the holomorph, by fiber backtracking.

    When the node budget runs out the result carries ``exhausted=True`` and
    possibly a partial record list; callers must treat that as undecided,
    never as proof of absence.
    """
    n, na = hol.n, hol.na
    if n > order_cap:
        raise CapExceeded("base order %d exceeds holomorph search cap %d"
                          % (n, order_cap))
    orders = hol.element_orders()
    allowed = [[] for _ in range(n)]
    for a in range(1, n):
        allowed[a] = [phi for phi in range(na)
                      if n % orders[a * na + phi] == 0]
    search = (backend or _kernel).search_regular
    subgroups, nodes, exhausted = search(
        n, na, hol.nmul, hol.amul, hol.act, allowed, node_budget)
    records = []
    for codes in subgroups:
        codes = tuple(codes)
        fibers = tuple(c // na for c in codes)
        records.append(RegularSubgroupRecord(codes=codes, fibers=fibers))
    return RegularEnumeration(hol=hol, records=records, nodes=nodes,
                              exhausted=exhausted, budget=node_budget)


def is_regular_subgroup(perms: Iterable[Perm], degree: int) -> bool:
    """Replay check on raw permutations: a subgroup acting regularly.

    Independent of the coded search; used to verify enumeration output."""
    elems = set(tuple(p) for p in perms)
    if len(elems) != degree:
        return False
    if tuple(range(degree)) not in elems:
        return False
    for p in elems:
        for q in elems:
            if tuple(p[x] for x in q) not in elems:
                return False
    images = {p[0] for p in elems}
    return len(images) == degree


def record_permutations(hol: HolomorphGroup,
                        rec: RegularSubgroupRecord) -> list[Perm]:
    return [hol.perm_of_code(c) for c in rec.codes]


# -- the (f, g) fixed-point search --------------------------------------


@dataclass
class EmbeddingSearchResult:
    """Outcome of the crossed-map search for one (G, N) pair."""

    found: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    nodes: int
    exhausted: bool
    pair_count: int | None = None


def verify_crossed_pair(G: GroupTable, N: GroupTable, aut: AutGroup,
                        f: Sequence[int], g: Sequence[int]) -> bool:
    """Full replay of the two defining equations plus bijectivity of g."""
    if len(f) != G.n or len(g) != G.n:
        return False
    if sorted(g) != list(range(N.n)):
        return False
    atab = aut.table
    for s in range(G.n):
        for t in range(G.n):
            st = G.mul[s][t]
            if f[st] != atab.mul[f[s]][f[t]]:
                return False
            if g[st] != N.mul[g[s]][aut.elements[f[s]][g[t]]]:
                return False
    return True


def has_regular_embedding(
    G: GroupTable,
    N: GroupTable,
    *,
    aut: AutGroup | None = None,
    count_all: bool = False,
    node_budget: int | None = None,
) -> EmbeddingSearchResult:
    """Search for a crossed pair (f, g) realizing G as a regular subgroup.

    Enumerates homomorphisms f from G into Aut(N) lazily; for each one,
    backtracks over the images of G's generators under g, propagating g
    through the crossed relation and pruning on collisions.  A found witness
    is replay-verified before being reported.  With ``count_all`` the search
    keeps going and reports how many (f, g) pairs exist in total (each
    regular subgroup isomorphic to G is counted |Aut(G)| times).
    """
    if G.n != N.n:
        raise ValueError("order mismatch: |G|=%d, |N|=%d" % (G.n, N.n))
    if aut is None:
        aut = automorphism_group(N)
    tower = GeneratorTower(G)
    gens = tower.gens
    nodes = 0
    exhausted = False
    pair_count = 0
    witness = None

    nmul = N.mul
    aels = aut.elements
    g_img = [-1] * G.n
    g_img[0] = 0
    used = [False] * N.n
    used[0] = True

    prefix = [1]
    for seg in tower.segments:
        prefix.append(prefix[-1] + len(seg))

    def assign(level: int, cand: int, f: Sequence[int]) -> int:
        """Propagate g over tower segment ``level``; count placed or -1.

        Besides injectivity, the crossed relation is checked on every pair
        touching the new segment, which keeps wrong branches shallow."""
        placed = 0
        for e in tower.segments[level]:
            pair = tower.expr[e]
            if pair is None:
                t = cand
            else:
                u, v = pair
                t = nmul[g_img[u]][aels[f[u]][g_img[v]]]
            if used[t]:
                for ee in tower.segments[level][:placed]:
                    used[g_img[ee]] = False
                    g_img[ee] = -1
                return -1
            g_img[e] = t
            used[t] = True
            placed += 1
        known = tower.order[: prefix[level + 1]]
        gmul = G.mul
        for u in tower.segments[level]:
            gu = g_img[u]
            fu = aels[f[u]]
            for v in known:
                if (g_img[gmul[u][v]] != nmul[gu][fu[g_img[v]]]
                        or g_img[gmul[v][u]]
                        != nmul[g_img[v]][aels[f[v]][gu]]):
                    undo(level)
                    return -1
        return placed

    def undo(level: int) -> None:
        for e in tower.segments[level]:
            used[g_img[e]] = False
            g_img[e] = -1

    def rec(level: int, f: Sequence[int]) -> bool:
        nonlocal nodes, exhausted, pair_count, witness
        if level == len(gens):
            if verify_crossed_pair(G, N, aut, f, tuple(g_img)):
                pair_count += 1
                if witness is None:
                    witness = (tuple(f), tuple(g_img))
                return not count_all
            return False
        for cand in range(N.n):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                exhausted = True
                return False
            if assign(level, cand, f) >= 0:
                hit = rec(level + 1, f)
                undo(level)
                if hit or exhausted:
                    return hit
        return False

    for f in hom_images(G, aut.table,
                        order_of=lambda x: aut.element_orders[x]):
        if rec(0, f):
            break
        if exhausted:
            break
    found = witness is not None
    return EmbeddingSearchResult(found=found, witness=witness, nodes=nodes,
                        exhausted=exhausted,
                        pair_count=pair_count if count_all else None)
