"""Finite groups as multiplication tables, plus structural predicates.

A GroupTable stores an n-by-n table over element indices 0..n-1 with the
identity always at index 0.  Tables produced from permutation groups list
elements in breadth-first closure order (identity first, then products with
generators in listed order), which makes every derived table reproducible
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded
from .perms import PermutationGroup, Perm

# Full associativity validation is cubic; beyond this size we rely on tables
# being built from permutation closures, which are associative by construction.
ASSOC_CHECK_LIMIT = 200
TABLE_CAP = 10_000


class GroupTable:
    """Multiplication table of a finite group, identity at index 0."""

    def __init__(self, mul: Sequence[Sequence[int]], *, validate: bool = True,
                 name: str | None = None):
        self.mul: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mul)
        self.n = len(self.mul)
        self.name = name
        if validate:
            self._validate()
        inv = [-1] * self.n
        for a in range(self.n):
            row = self.mul[a]
            for b in range(self.n):
                if row[b] == 0:
                    inv[a] = b
                    break
            if inv[a] < 0 or self.mul[inv[a]][a] != 0:
                raise ValueError("element %d has no two-sided inverse" % (a,))
        self.inv: tuple[int, ...] = tuple(inv)

    def _validate(self) -> None:
        n = self.n
        if n == 0:
            raise ValueError("empty table")
        for a, row in enumerate(self.mul):
            if len(row) != n:
                raise ValueError("row %d has length %d, expected %d"
                                 % (a, len(row), n))
            if sorted(row) != list(range(n)):
                raise ValueError("row %d is not a permutation of 0..%d"
                                 % (a, n - 1))
        cols = list(zip(*self.mul))
        for b, col in enumerate(cols):
            if sorted(col) != list(range(n)):
                raise ValueError("column %d is not a permutation of 0..%d"
                                 % (b, n - 1))
        for a in range(n):
            if self.mul[0][a] != a or self.mul[a][0] != a:
                raise ValueError("index 0 is not a two-sided identity")
        if n <= ASSOC_CHECK_LIMIT:
            m = np.array(self.mul, dtype=np.int64)
            for a in range(n):
                # (a*b)*c vs a*(b*c) for all b, c
                if not np.array_equal(m[m[a], :], m[a][m]):
                    raise ValueError("table is not associative (row %d)" % (a,))

    # -- basic operations ------------------------------------------------

    def conjugate(self, g: int, a: int) -> int:
        """g * a * g^-1."""
        return self.mul[self.mul[g][a]][self.inv[g]]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 * b^-1 * a * b."""
        m = self.mul
        return m[m[m[self.inv[a]][self.inv[b]]][a]][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[a], -k)
        out = 0
        base = a
        while k:
            if k & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            k >>= 1
        return out

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = [1] * self.n
        for a in range(1, self.n):
            k = 1
            x = a
            while x != 0:
                x = self.mul[x][a]
                k += 1
            orders[a] = k
        return tuple(orders)

    @cached_property
    def order_spectrum(self) -> tuple[tuple[int, int], ...]:
        """Sorted (element order, count) pairs; a cheap isomorphism invariant."""
        counts: dict[int, int] = {}
        for o in self.element_orders:
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a]
                   for a in range(self.n) for b in range(a + 1, self.n))

    @cached_property
    def center(self) -> tuple[int, ...]:
        m = self.mul
        return tuple(a for a in range(self.n)
                     if all(m[a][b] == m[b][a] for b in range(self.n)))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugacy classes as sorted tuples, ordered by smallest member."""
        seen = [False] * self.n
        out = []
        for a in range(self.n):
            if seen[a]:
                continue
            cls = {self.conjugate(g, a) for g in range(self.n)}
            for x in cls:
                seen[x] = True
            out.append(tuple(sorted(cls)))
        return tuple(out)

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        """Index of each element's conjugacy class in ``conjugacy_classes``."""
        idx = [0] * self.n
        for ci, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                idx[x] = ci
        return tuple(idx)

    # -- closures and generation ----------------------------------------

    def closure(self, seed: Iterable[int]) -> tuple[int, ...]:
        """Subgroup generated by ``seed``, as a sorted element tuple."""
        gens = [s for s in seed if s != 0]
        members = {0}
        frontier = []
        for s in gens:
            if s not in members:
                members.add(s)
                frontier.append(s)
        order = [0] + frontier[:]
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            for g in gens:
                y = self.mul[x][g]
                if y not in members:
                    members.add(y)
                    order.append(y)
        return tuple(sorted(members))

    def generating_sequence(self) -> tuple[int, ...]:
        """Greedy generating sequence: repeatedly adjoin the smallest element
        not yet generated.  Deterministic; used by the search modules."""
        gens: list[int] = []
        have = {0}
        while len(have) < self.n:
            gens.append(next(a for a in range(1, self.n) if a not in have))
            have = set(self.closure(gens))
        return tuple(gens)

    def subgroup(self, elements: Iterable[int], **flags) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(elements))), **flags)

    # -- structure -------------------------------------------------------

    def commutator_elements(self, a_set: Sequence[int], b_set: Sequence[int]) -> tuple[int, ...]:
        """Subgroup generated by all commutators [a, b], a in a_set, b in b_set."""
        comms = {self.commutator(a, b) for a in a_set for b in b_set}
        comms.discard(0)
        return self.closure(comms)

    def derived_series(self) -> list["Subgroup"]:
        series = [self.subgroup(range(self.n), normal=True)]
        while True:
            cur = series[-1].elements
            nxt = self.commutator_elements(cur, cur)
            if len(nxt) == len(cur):
                break
            series.append(self.subgroup(nxt, normal=True))
            if len(nxt) == 1:
                break
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order == 1

    def lower_central_series(self) -> list["Subgroup"]:
        everything = tuple(range(self.n))
        series = [self.subgroup(everything, normal=True)]
        while True:
            cur = series[-1].elements
            nxt = self.commutator_elements(everything, cur)
            if len(nxt) == len(cur):
                break
            series.append(self.subgroup(nxt, normal=True))
            if len(nxt) == 1:
                break
        return series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].order == 1

    def quotient(self, sub: "Subgroup") -> tuple["GroupTable", "Homomorphism"]:
        """Quotient by a normal subgroup, with the projection map.

        Cosets are indexed by their smallest member, in increasing order, so
        the identity coset gets index 0.
        """
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different table")
        members = set(sub.elements)
        if not self._is_normal_set(members):
            raise ValueError("subgroup is not normal; quotient undefined")
        coset_of = [-1] * self.n
        reps = []
        for a in range(self.n):
            if coset_of[a] >= 0:
                continue
            idx = len(reps)
            reps.append(a)
            for h in members:
                coset_of[self.mul[a][h]] = idx
        k = len(reps)
        qmul = [[coset_of[self.mul[reps[i]][reps[j]]] for j in range(k)]
                for i in range(k)]
        q = GroupTable(qmul, validate=False)
        proj = Homomorphism(self, q, tuple(coset_of))
        return q, proj

    def _is_normal_set(self, members: set[int]) -> bool:
        return all(self.conjugate(g, h) in members
                   for h in members for g in range(self.n))

    def __repr__(self) -> str:
        label = " %r" % (self.name,) if self.name else ""
        return "GroupTable(n=%d%s)" % (self.n, label)


@dataclass
class Subgroup:
    """A subgroup of a GroupTable, stored as a sorted element tuple.

    The three flags are tri-state caches: None means not yet determined.
    """

    parent: GroupTable
    elements: tuple[int, ...]
    normal: bool | None = None
    characteristic: bool | None = None
    solvable: bool | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in set(self.elements)

    def validate(self) -> None:
        els = set(self.elements)
        if 0 not in els:
            raise ValueError("subgroup does not contain the identity")
        if self.parent.n % len(els) != 0:
            raise ValueError("order %d does not divide %d"
                             % (len(els), self.parent.n))
        for a in els:
            if self.parent.inv[a] not in els:
                raise ValueError("subgroup not closed under inverses")
            for b in els:
                if self.parent.mul[a][b] not in els:
                    raise ValueError("subgroup not closed under products")

    def is_normal(self) -> bool:
        if self.normal is None:
            self.normal = self.parent._is_normal_set(set(self.elements))
        return self.normal

    def to_table(self) -> tuple["GroupTable", dict[int, int]]:
        """Reindexed table of this subgroup plus the parent-to-local index map."""
        local = {a: i for i, a in enumerate(self.elements)}
        if local.get(0) != 0:
            raise ValueError("subgroup does not contain the identity")
        mul = [[local[self.parent.mul[a][b]] for b in self.elements]
               for a in self.elements]
        return GroupTable(mul, validate=False), local

    def is_solvable(self) -> bool:
        if self.solvable is None:
            table, _ = self.to_table()
            self.solvable = table.is_solvable()
        return self.solvable


@dataclass
class Homomorphism:
    """A map between group tables given by the image of every source element."""

    source: GroupTable
    target: GroupTable
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def verify(self) -> bool:
        s, t, im = self.source, self.target, self.images
        if len(im) != s.n or im[0] != 0:
            return False
        return all(im[s.mul[a][b]] == t.mul[im[a]][im[b]]
                   for a in range(s.n) for b in range(s.n))

    def is_bijective(self) -> bool:
        return (len(self.images) == self.target.n
                and len(set(self.images)) == self.target.n)

    def kernel(self) -> Subgroup:
        return self.source.subgroup(
            (a for a in range(self.source.n) if self.images[a] == 0),
            normal=True)


def from_permutation_group(group: PermutationGroup, *, cap: int = TABLE_CAP,
                           name: str | None = None) -> tuple[GroupTable, list[Perm]]:
    """Convert a permutation group to a table by breadth-first closure.

    Returns the table and the element list in table order (index i of the
    table is ``elements[i]``).  Deterministic, so repeated conversions agree.
    """
    elements = group.elements(cap=cap)
    index = {p: i for i, p in enumerate(elements)}
    from .perms import compose

    mul = [[index[compose(p, q)] for q in elements] for p in elements]
    return GroupTable(mul, validate=False, name=name), elements
