"""Arithmetic order criteria: solvable numbers, families, classification."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holoscreen.numbers import (SimpleOrderTable, classify_order,
                                default_table, doubling_family_base,
                                doubling_family_conditions, gl_is_solvable,
                                is_cube_free, is_solvable_number,
                                mersenne_gcd_property,
                                nonsolvable_orders_up_to, square_free_status,
                                suzuki_exponent_check, suzuki_order,
                                wieferich_scan)


def test_default_table_shape():
    table = default_table()
    assert table.bound == 10**6
    assert len(table.orders) == 55
    assert table.orders[0] == 60
    assert table.orders[-1] <= 10**6
    for known in (60, 168, 360, 504, 660, 1092, 2448, 5616, 6048, 7920,
                  20160, 29120, 979200):
        assert known in table
    for absent in (1, 2, 59, 61, 120, 720, 29121):
        assert absent not in table


def test_table_validation():
    with pytest.raises(ValueError):
        SimpleOrderTable(bound=100, orders=(50, 60))
    with pytest.raises(ValueError):
        SimpleOrderTable(bound=1000, orders=(60, 60))
    with pytest.raises(ValueError):
        SimpleOrderTable(bound=100, orders=(60, 168))
    SimpleOrderTable(bound=200, orders=(60, 168))


def test_nonsolvable_witness():
    table = default_table()
    assert table.nonsolvable_witness(60) == 60
    assert table.nonsolvable_witness(120) == 60
    assert table.nonsolvable_witness(59) is None
    assert table.nonsolvable_witness(336) == 168
    assert table.nonsolvable_witness(840) == 60
    assert table.nonsolvable_witness(2448) == 2448


def test_is_solvable_number():
    solvable = [1, 2, 12, 59, 100, 1000, 2047, 59 * 61]
    nonsolvable = [60, 120, 168, 180, 300, 336, 360, 504, 660, 1008, 1092]
    for n in solvable:
        assert is_solvable_number(n)
    for n in nonsolvable:
        assert not is_solvable_number(n)
    with pytest.raises(ValueError):
        is_solvable_number(0)
    with pytest.raises(ValueError):
        is_solvable_number(10**7)  # beyond the table bound


def test_nonsolvable_orders_up_to():
    listed = nonsolvable_orders_up_to(360)
    assert listed == [60, 120, 168, 180, 240, 300, 336, 360]
    assert nonsolvable_orders_up_to(59) == []


def test_is_cube_free():
    assert is_cube_free(1)
    assert is_cube_free(60)
    assert is_cube_free(180)
    assert is_cube_free(2 * 2 * 3 * 3 * 5 * 5)
    assert not is_cube_free(8)
    assert not is_cube_free(120)
    assert not is_cube_free(27 * 1000003)
    with pytest.raises(ValueError):
        is_cube_free(0)


def test_gl_is_solvable():
    assert gl_is_solvable(1, 2) and gl_is_solvable(1, 97)
    assert gl_is_solvable(2, 2) and gl_is_solvable(2, 3)
    assert not gl_is_solvable(2, 5)
    assert not gl_is_solvable(3, 2)
    assert not gl_is_solvable(4, 3)
    with pytest.raises(ValueError):
        gl_is_solvable(0, 2)
    with pytest.raises(ValueError):
        gl_is_solvable(2, 4)


def test_suzuki_order():
    assert suzuki_order(3) == 29120
    assert suzuki_order(5) == 32537600
    assert suzuki_order(7) == 34093383680
    with pytest.raises(ValueError):
        suzuki_order(2)
    with pytest.raises(ValueError):
        suzuki_order(4)


def test_square_free_status():
    assert square_free_status(1) == (True, None)
    assert square_free_status(30) == (True, None)
    assert square_free_status(4) == (False, 2)
    assert square_free_status(45) == (False, 3)
    assert square_free_status(2**61 - 1) == (True, None)  # Mersenne prime
    status, witness = square_free_status(3**4 * (2**61 - 1))
    assert status is False and witness == 3
    # A square of a large prime, found past the trial bound.
    p = 2**61 - 1
    status, witness = square_free_status(p * p, trial_bound=100)
    assert status is False


def test_suzuki_exponent_check():
    three = suzuki_exponent_check(3)
    assert three.status == "eligible"
    assert three.base_order == 29120

    five = suzuki_exponent_check(5)
    assert five.status == "ineligible"
    assert five.reason == "5^2 divides 4^5+1"

    seven = suzuki_exponent_check(7)
    assert seven.status == "eligible"
    assert seven.base_order == 34093383680

    nine = suzuki_exponent_check(9)
    assert nine.status == "ineligible"
    assert nine.reason == "9 is not prime"

    with pytest.raises(ValueError):
        suzuki_exponent_check(1)


def test_wieferich_scan():
    assert wieferich_scan(1000) == []
    assert wieferich_scan(1093) == [1093]
    assert wieferich_scan(10**4) == [1093, 3511]
    with pytest.raises(ValueError):
        wieferich_scan(10**9)


def test_mersenne_gcd_property_small():
    for a in range(1, 65):
        for b in range(1, 65):
            assert mersenne_gcd_property(a, b)
    with pytest.raises(ValueError):
        mersenne_gcd_property(0, 3)


@given(st.integers(1, 300), st.integers(1, 300))
@settings(max_examples=50, deadline=None)
def test_mersenne_gcd_matches_math_gcd(a, b):
    assert math.gcd(2**a - 1, 2**b - 1) == 2 ** math.gcd(a, b) - 1


def test_doubling_family_conditions_hold():
    for n0 in (60, 2448, 29120):
        conditions = doubling_family_conditions(n0)
        assert conditions.all_hold, n0
        assert conditions.failure is None


def test_doubling_family_conditions_fail():
    result = doubling_family_conditions(360)
    assert not result.all_hold
    assert result.half_solvable is False

    result = doubling_family_conditions(504)
    assert not result.all_hold
    assert result.prime_quotients_solvable is False
    assert "168" in result.failure


def test_doubling_family_conditions_unknown_past_bound():
    tiny = SimpleOrderTable(bound=200, orders=(60, 168))
    result = doubling_family_conditions(60, table=tiny, r_max=5)
    assert result.no_simple_doubled_order is None


def test_doubling_family_base():
    assert doubling_family_base(60) == (60, 0)
    assert doubling_family_base(120) == (60, 1)
    assert doubling_family_base(240) == (60, 2)
    assert doubling_family_base(1920) == (60, 5)
    assert doubling_family_base(983040) == (60, 14)
    assert doubling_family_base(2448) == (2448, 0)
    assert doubling_family_base(4896) == (2448, 1)
    assert doubling_family_base(29120) == (29120, 0)
    assert doubling_family_base(58240) == (29120, 1)
    assert doubling_family_base(100) is None
    assert doubling_family_base(180) is None
    assert doubling_family_base(30) is None  # 60/2 is not in the family
    assert doubling_family_base(1224) is None  # 2448/2 neither


def test_classify_order():
    assert classify_order(100).verdict == "trivial-solvable"
    assert classify_order(1).verdict == "trivial-solvable"
    assert classify_order(300).verdict == "cube-free"
    assert classify_order(660).verdict == "cube-free"
    for n in (60, 120, 240, 480, 960, 1920):
        assert classify_order(n).verdict == "doubling-family", n
    assert classify_order(1008).verdict == "needs-screening"
    assert classify_order(480).doubling_family == (60, 3)
    assert classify_order(2448).verdict == "doubling-family"
    record = classify_order(60)
    assert record.solvable_number is False
    assert record.cube_free is True
    assert record.doubling_family == (60, 0)


def test_classify_order_bounds():
    with pytest.raises(ValueError):
        classify_order(0)
    with pytest.raises(ValueError):
        classify_order(10**7)
