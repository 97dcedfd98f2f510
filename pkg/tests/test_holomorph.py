"""Holomorph construction, regular-subgroup enumeration, crossed-pair search."""

import pytest

from holoscreen.automorphisms import automorphism_group
from holoscreen.corpus import construct
from holoscreen.errors import CapExceeded
from holoscreen.holomorph import (EmbeddingSearchResult, enumerate_regular_subgroups,
                                  has_regular_embedding, holomorph,
                                  is_regular_subgroup, left_regular,
                                  left_translation, record_permutations,
                                  right_regular, right_translation,
                                  subgroup_table, verify_crossed_pair)
from holoscreen.isomorphism import are_isomorphic
from holoscreen.perms import compose, identity_perm, perm_order


def T(expr):
    return construct(expr).table


def test_translations():
    n = T("symmetric(3)")
    for a in range(n.n):
        assert left_translation(n, a)[0] == a
        assert right_translation(n, a)[a] == 0
    # Left and right translations commute with each other.
    for a in range(n.n):
        for b in range(n.n):
            lam, rho = left_translation(n, a), right_translation(n, b)
            assert compose(lam, rho) == compose(rho, lam)


def test_regular_representations():
    n = T("symmetric(3)")
    lam, rho = left_regular(n), right_regular(n)
    assert lam.order() == 6 and rho.order() == 6
    assert is_regular_subgroup(lam.elements(), 6)
    assert is_regular_subgroup(rho.elements(), 6)


def test_holomorph_orders():
    assert holomorph(T("cyclic(12)")).order == 48
    assert holomorph(T("cyclic(5)")).order == 20
    assert holomorph(T("abelian(2,2)")).order == 24
    assert holomorph(T("symmetric(3)")).order == 36
    assert holomorph(T("abelian(2,2,2)")).order == 1344


def test_holomorph_of_c4_is_d8():
    hol = holomorph(T("cyclic(4)"))
    assert hol.order == 8
    whole = subgroup_table(hol, range(8))
    found, _ = are_isomorphic(whole, T("dihedral(8)"))
    assert found


def test_code_arithmetic_matches_permutations():
    hol = holomorph(T("symmetric(3)"))
    for x in range(hol.order):
        assert hol.code_of_perm(hol.perm_of_code(x)) == x
        assert hol.code_mul(x, hol.code_inv(x)) == 0
        assert hol.code_mul(0, x) == x and hol.code_mul(x, 0) == x
    for x in range(hol.order):
        px = hol.perm_of_code(x)
        for y in range(0, hol.order, 7):
            py = hol.perm_of_code(y)
            assert (hol.perm_of_code(hol.code_mul(x, y))
                    == compose(px, py))


def test_code_of_perm_rejects_outsiders():
    hol = holomorph(T("cyclic(6)"))
    with pytest.raises(ValueError):
        hol.code_of_perm((1, 0, 2, 3, 4, 5))  # a transposition, not affine


def test_element_orders_match_permutation_orders():
    hol = holomorph(T("cyclic(6)"))
    orders = hol.element_orders()
    for code in range(hol.order):
        assert orders[code] == perm_order(hol.perm_of_code(code))


def test_encode_decode():
    hol = holomorph(T("cyclic(8)"))
    for a in range(hol.n):
        for f in range(hol.na):
            assert hol.decode(hol.encode(a, f)) == (a, f)


def test_left_and_right_regular_codes():
    hol = holomorph(T("symmetric(3)"))
    for codes in (hol.left_regular_codes(), hol.right_regular_codes()):
        perms = [hol.perm_of_code(c) for c in codes]
        assert is_regular_subgroup(perms, hol.n)
    left = subgroup_table(hol, sorted(hol.left_regular_codes()))
    assert are_isomorphic(left, hol.base)[0]


def test_enumerate_hol_c4():
    hol = holomorph(T("cyclic(4)"))
    enum = enumerate_regular_subgroups(hol)
    assert enum.complete
    assert len(enum.records) == 2
    reps = enum.classify()
    assert len(reps) == 2
    spectra = sorted(rep.order_spectrum for rep in reps)
    assert spectra == [((1, 1), (2, 1), (4, 2)),   # C4
                       ((1, 1), (2, 3))]           # Klein four-group
    assert enum.insolvable_records() == []


def test_enumerate_hol_c6():
    hol = holomorph(T("cyclic(6)"))
    enum = enumerate_regular_subgroups(hol)
    assert enum.complete
    assert len(enum.records) == 2
    reps = enum.classify()
    assert len(reps) == 2
    kinds = sorted(rep.is_abelian for rep in reps)
    assert kinds == [False, True]  # one S3, one C6


def test_enumerate_hol_c8():
    hol = holomorph(T("cyclic(8)"))
    enum = enumerate_regular_subgroups(hol)
    assert enum.complete
    assert len(enum.records) == 6
    reps = enum.classify()
    assert len(reps) == 4
    sizes = sorted(sum(1 for r in enum.records if r.iso_type == i)
                   for i in range(len(reps)))
    assert sizes == [1, 1, 2, 2]
    # The quaternion group shows up as a regular subgroup of Hol(C8).
    assert any(rep.order_spectrum == ((1, 1), (2, 1), (4, 6))
               for rep in reps)


def test_every_record_replays_as_regular():
    for expr in ("cyclic(4)", "cyclic(6)", "cyclic(8)", "abelian(2,2)",
                 "symmetric(3)"):
        hol = holomorph(T(expr))
        enum = enumerate_regular_subgroups(hol)
        assert enum.complete
        for rec in enum.records:
            assert rec.codes[0] == 0
            assert list(rec.codes) == sorted(rec.codes)
            assert sorted(rec.fibers) == list(range(hol.n))
            assert is_regular_subgroup(record_permutations(hol, rec), hol.n)
        # Both canonical regular representations occur among the records.
        code_sets = {rec.codes for rec in enum.records}
        assert tuple(sorted(hol.left_regular_codes())) in code_sets
        assert tuple(sorted(hol.right_regular_codes())) in code_sets


def test_enumeration_is_deterministic():
    hol = holomorph(T("cyclic(8)"))
    first = enumerate_regular_subgroups(hol)
    second = enumerate_regular_subgroups(hol)
    assert [r.codes for r in first.records] == [r.codes for r in second.records]
    assert first.nodes == second.nodes


def test_budget_exhaustion_is_reported():
    hol = holomorph(T("cyclic(8)"))
    enum = enumerate_regular_subgroups(hol, node_budget=1)
    assert enum.exhausted
    assert not enum.complete


def test_order_cap():
    hol = holomorph(T("cyclic(8)"))
    with pytest.raises(CapExceeded):
        enumerate_regular_subgroups(hol, order_cap=4)


def test_has_regular_embedding_same_group():
    for expr in ("cyclic(4)", "cyclic(6)", "symmetric(3)", "cyclic(8)"):
        table = T(expr)
        result = has_regular_embedding(table, table)
        assert result.found
        f, g = result.witness
        assert verify_crossed_pair(table, table, automorphism_group(table),
                                   f, g)


def test_has_regular_embedding_quaternion_in_hol_c8():
    q8 = subgroup_table_for_q8()
    c8 = T("cyclic(8)")
    result = has_regular_embedding(q8, c8)
    assert result.found
    f, g = result.witness
    assert verify_crossed_pair(q8, c8, automorphism_group(c8), f, g)


def subgroup_table_for_q8():
    from holoscreen.perms import PermutationGroup
    from holoscreen.tables import from_permutation_group

    group = PermutationGroup(8, [(1, 2, 3, 0, 5, 6, 7, 4),
                                 (4, 7, 6, 5, 2, 1, 0, 3)])
    table, _ = from_permutation_group(group)
    return table


def test_has_regular_embedding_counts():
    c4, v4 = T("cyclic(4)"), T("abelian(2,2)")
    # Counts are (number of regular subgroups isomorphic to G) * |Aut(G)|.
    assert has_regular_embedding(c4, c4, count_all=True).pair_count == 2
    assert has_regular_embedding(v4, c4, count_all=True).pair_count == 6
    assert has_regular_embedding(c4, v4, count_all=True).pair_count == 6
    assert has_regular_embedding(v4, v4, count_all=True).pair_count == 6


def test_has_regular_embedding_agrees_with_enumeration():
    groups4 = [T("cyclic(4)"), T("abelian(2,2)")]
    groups6 = [T("cyclic(6)"), T("symmetric(3)")]
    for family in (groups4, groups6):
        for N in family:
            enum = enumerate_regular_subgroups(holomorph(N))
            reps = enum.classify()
            for G in family:
                expected = any(are_isomorphic(G, rep)[0] for rep in reps)
                assert has_regular_embedding(G, N).found == expected


def test_has_regular_embedding_rejects_order_mismatch():
    with pytest.raises(ValueError):
        has_regular_embedding(T("cyclic(4)"), T("cyclic(6)"))


def test_has_regular_embedding_budget():
    c8 = T("cyclic(8)")
    result = has_regular_embedding(subgroup_table_for_q8(), c8, node_budget=0)
    assert isinstance(result, EmbeddingSearchResult)
    assert result.exhausted
    assert not result.found


def test_subgroup_table_requires_identity_first():
    hol = holomorph(T("cyclic(4)"))
    with pytest.raises(ValueError):
        subgroup_table(hol, (1, 0, 2, 3))


def test_identity_perm_roundtrip():
    hol = holomorph(T("cyclic(6)"))
    assert hol.perm_of_code(0) == identity_perm(6)
