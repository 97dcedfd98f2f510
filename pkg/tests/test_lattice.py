"""Subgroup lattices, Sylow subgroups, p-cores, Fitting subgroups."""

import pytest

from holoscreen.corpus import construct
from holoscreen.errors import CapExceeded
from holoscreen.lattice import (all_subgroups, fitting_subgroup,
                                normal_subgroups, p_core, sylow_subgroup)
from holoscreen.perms import PermutationGroup
from holoscreen.tables import from_permutation_group

A5_GENS = [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]]


def table_of(degree, gens):
    group = PermutationGroup(degree, [tuple(g) for g in gens])
    table, _ = from_permutation_group(group)
    return table


def test_subgroup_counts():
    # Counts are classical; each enumeration is exhaustive.
    cases = [
        (table_of(6, [[1, 2, 3, 4, 5, 0]]), 4),                      # C6
        (table_of(3, [[1, 0, 2], [1, 2, 0]]), 6),                    # S3
        (table_of(8, [[1, 2, 3, 0, 5, 6, 7, 4],
                      [4, 7, 6, 5, 2, 1, 0, 3]]), 6),                # Q8
        (table_of(4, [[1, 2, 3, 0], [0, 3, 2, 1]]), 10),             # D8
        (table_of(4, [[1, 2, 0, 3], [0, 2, 3, 1]]), 10),             # A4
        (table_of(6, [[1, 0, 2, 3, 4, 5], [0, 1, 3, 2, 4, 5],
                      [0, 1, 2, 3, 5, 4]]), 16),                     # C2^3
        (table_of(4, [[1, 0, 2, 3], [1, 2, 3, 0]]), 30),             # S4
        (table_of(5, A5_GENS), 59),                                  # A5
    ]
    for table, count in cases:
        subs = all_subgroups(table)
        assert len(subs) == count
        orders = {s.order for s in subs}
        assert 1 in orders and table.n in orders
        for s in subs:
            s.validate()


def test_subgroups_are_distinct():
    a5 = table_of(5, A5_GENS)
    subs = all_subgroups(a5)
    assert len({s.elements for s in subs}) == len(subs)


def test_a5_subgroup_order_profile():
    a5 = table_of(5, A5_GENS)
    by_order = {}
    for s in all_subgroups(a5):
        by_order[s.order] = by_order.get(s.order, 0) + 1
    assert by_order == {1: 1, 2: 15, 3: 10, 4: 5, 5: 6, 6: 10, 10: 6,
                        12: 5, 60: 1}


def test_sl25_has_no_subgroup_of_order_60():
    sl25 = construct("sl(2,5)").table
    subs = all_subgroups(sl25)
    assert len(subs) == 76
    assert 60 not in {s.order for s in subs}


def test_normal_subgroups():
    s4 = table_of(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    assert sorted(s.order for s in normal_subgroups(s4)) == [1, 4, 12, 24]
    s3 = table_of(3, [[1, 0, 2], [1, 2, 0]])
    assert sorted(s.order for s in normal_subgroups(s3)) == [1, 3, 6]
    q8 = table_of(8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]])
    assert len(normal_subgroups(q8)) == 6  # every subgroup of Q8 is normal
    a5 = table_of(5, A5_GENS)
    assert sorted(s.order for s in normal_subgroups(a5)) == [1, 60]


def test_sylow_subgroups():
    s4 = table_of(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    assert sylow_subgroup(s4, 2).order == 8
    assert sylow_subgroup(s4, 3).order == 3
    assert sylow_subgroup(s4, 5).order == 1
    a5 = table_of(5, A5_GENS)
    for p, size in [(2, 4), (3, 3), (5, 5)]:
        syl = sylow_subgroup(a5, p)
        assert syl.order == size
        syl.validate()


def test_sylow_is_deterministic():
    a5 = table_of(5, A5_GENS)
    assert (sylow_subgroup(a5, 2).elements
            == sylow_subgroup(a5, 2).elements)


def test_p_core():
    s4 = table_of(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    assert p_core(s4, 2).order == 4
    assert p_core(s4, 3).order == 1
    a4 = table_of(4, [[1, 2, 0, 3], [0, 2, 3, 1]])
    assert p_core(a4, 2).order == 4


def test_fitting_subgroup():
    cases = [
        (table_of(3, [[1, 0, 2], [1, 2, 0]]), 3),       # S3
        (table_of(4, [[1, 2, 0, 3], [0, 2, 3, 1]]), 4),  # A4
        (table_of(4, [[1, 0, 2, 3], [1, 2, 3, 0]]), 4),  # S4
        (table_of(4, [[1, 2, 3, 0], [0, 3, 2, 1]]), 8),  # D8, nilpotent
        (table_of(5, A5_GENS), 1),                       # A5
        (table_of(6, [[1, 2, 3, 4, 5, 0]]), 6),          # C6
    ]
    for table, order in cases:
        fit = fitting_subgroup(table)
        assert fit.order == order
        assert fit.is_normal()
        fit_table, _ = fit.to_table()
        assert fit_table.is_nilpotent()


def test_subgroup_cap():
    a5 = table_of(5, A5_GENS)
    with pytest.raises(CapExceeded):
        all_subgroups(a5, cap=10)
