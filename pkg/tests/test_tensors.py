"""Tribracket tensors: axioms, constructors, conversion, enumeration."""

from itertools import product

import pytest

from triblink.tensors import (HORIZONTAL, VERTICAL, KindError, OperationTensor,
                              alexander, biquasile_to_vertical, check_axioms,
                              check_horizontal_exchange, check_quasigroup,
                              check_vertical_exchange, dehn,
                              enumerate_horizontal, horizontal_to_vertical,
                              vertical_to_horizontal)

TWO_ELEMENT = [
    (((1, 2), (2, 1)), ((2, 1), (1, 2))),
    (((2, 1), (1, 2)), ((1, 2), (2, 1))),
]

S3_TABLE = [  # symmetric group on 3 letters, 1 = identity
    [1, 2, 3, 4, 5, 6],
    [2, 1, 5, 6, 3, 4],
    [3, 4, 1, 2, 6, 5],
    [4, 3, 6, 5, 1, 2],
    [5, 6, 2, 1, 4, 3],
    [6, 5, 4, 3, 2, 1],
]


def test_two_element_tensors_pass_all_axioms():
    for entries in TWO_ELEMENT:
        t = OperationTensor(2, HORIZONTAL, entries)
        assert check_quasigroup(t).passed
        assert check_horizontal_exchange(t).passed


def test_constant_tensor_fails_quasigroup():
    t = OperationTensor(2, HORIZONTAL, [[[1, 1], [1, 1]], [[1, 1], [1, 1]]])
    rep = check_quasigroup(t)
    assert not rep.passed
    assert rep.violations


def test_alexander_spot_values_mod5():
    t = alexander(5, 3, 2)
    assert t(1, 3, 4) == (3 * 3 + 2 * 4 - 3 * 2 * 1) % 5 == 1
    assert check_axioms(t).passed


def test_alexander_mod3_is_a_plus_b_minus_c():
    t = alexander(3, 1, 2)  # y = -1 mod 3
    for a, b, c in product(range(1, 4), repeat=3):
        v = (a + b - c) % 3
        assert t(a, b, c) == (v if v else 3)


def test_alexander_rejects_non_units():
    with pytest.raises(ValueError):
        alexander(4, 2, 1)


def test_dehn_on_z3_matches_alexander_1_1():
    z3 = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    assert dehn(z3).entries == alexander(3, 1, 1).entries


def test_dehn_trivial_group():
    t = dehn([[1]])
    assert t.size == 1 and t(1, 1, 1) == 1


def test_dehn_on_s3_passes_exchange():
    t = dehn(S3_TABLE)
    assert check_quasigroup(t).passed
    assert check_horizontal_exchange(t).passed


def test_dehn_rejects_non_group():
    with pytest.raises(ValueError):
        dehn([[1, 2], [1, 2]])


def test_biquasile_example_tensor():
    star = [[1, 2], [2, 1]]
    dot = [[2, 1], [1, 2]]
    v = biquasile_to_vertical(star, dot)
    assert check_vertical_exchange(v).passed
    h = vertical_to_horizontal(v)
    assert h.entries == (((2, 1), (1, 2)), ((1, 2), (2, 1)))


def test_biquasile_group_addition_z2():
    add = [[2, 1], [1, 2]]  # Z_2 written with labels 1=0, 2=1
    v = biquasile_to_vertical(add, add)
    for a, b, c in product((1, 2), repeat=3):
        s = ((a - 1) + (b - 1) + (c - 1)) % 2
        assert v(a, b, c) == s + 1


def test_biquasile_rejects_non_latin():
    with pytest.raises(ValueError):
        biquasile_to_vertical([[1, 1], [2, 2]], [[1, 2], [2, 1]])


def test_kind_mismatch_raises():
    t = alexander(3, 1, 1)
    with pytest.raises(KindError):
        check_vertical_exchange(t)
    with pytest.raises(KindError):
        check_horizontal_exchange(horizontal_to_vertical(t))


def test_conversion_round_trip_on_all_small(all_small_tribrackets):
    for t in all_small_tribrackets:
        v = horizontal_to_vertical(t)
        assert check_vertical_exchange(v).passed
        assert vertical_to_horizontal(v).entries == t.entries


def test_conversion_alexander_closed_form():
    t = alexander(5, 3, 2)
    v = horizontal_to_vertical(t)
    yinv = 3  # 2^-1 mod 5
    for a, b, c in product(range(1, 6), repeat=3):
        want = (yinv * (c - 3 * b + 3 * 2 * a)) % 5
        assert v(a, b, c) == (want if want else 5)


def test_self_corresponding_tribracket():
    t = alexander(3, 1, 2)  # [a,b,c] = a+b-c is its own vertical partner
    assert horizontal_to_vertical(t).entries == t.entries


def test_lemma_slot_inverse_identities(all_small_tribrackets):
    # c = <a,b,[a,b,c]> and d = [a,b,<a,b,d>]
    for t in all_small_tribrackets:
        v = horizontal_to_vertical(t)
        for a, b, c in product(t.elements, repeat=3):
            assert v(a, b, t(a, b, c)) == c
            assert t(a, b, v(a, b, c)) == c


def test_exchange_chain_identities_n_le_3(all_small_tribrackets):
    # the two displayed chains of equalities relating mixed brackets
    for t in all_small_tribrackets:
        v = horizontal_to_vertical(t)
        for a, b, c, d in product(t.elements, repeat=4):
            abd_v = v(a, b, d)
            lhs = t(b, d, t(a, b, c))
            assert lhs == t(abd_v, d, t(a, abd_v, c))
            assert lhs == t(c, t(a, b, c), t(a, abd_v, c))
            mid = t(a, abd_v, c)
            assert mid == v(c, t(a, b, c), t(b, d, t(a, b, c)))
            assert mid == v(abd_v, d, t(b, d, t(a, b, c)))


def test_enumeration_counts_and_order():
    found2 = enumerate_horizontal(2)
    assert [t.entries for t in found2] == TWO_ELEMENT
    found3 = enumerate_horizontal(3)
    assert len(found3) == 12
    flats = [t.flat() for t in found3]
    assert flats == sorted(flats)
    for t in found3:
        assert check_quasigroup(t).passed
        assert check_horizontal_exchange(t).passed


def test_enumeration_n1():
    found = enumerate_horizontal(1)
    assert len(found) == 1


def test_enumeration_cap():
    with pytest.raises(ValueError, match="cap"):
        enumerate_horizontal(5)


def test_latin_cube_failing_exchange_detected():
    # a Latin cube on 3 elements that is not a tribracket (24 cubes, 12 pass)
    import triblink.tensors as T
    orig = T.check_horizontal_exchange
    T.check_horizontal_exchange = lambda t: T.AxiomReport(True, ())
    try:
        cubes = enumerate_horizontal(3)
    finally:
        T.check_horizontal_exchange = orig
    assert len(cubes) == 24
    failing = [t for t in cubes if not check_horizontal_exchange(t).passed]
    assert len(failing) == 12
    assert all(check_quasigroup(t).passed for t in failing)


def test_json_round_trip():
    t = alexander(3, 1, 1)
    assert OperationTensor.from_json(t.to_json()).entries == t.entries


def test_violation_list_is_capped():
    n = 4
    t = OperationTensor(n, HORIZONTAL,
                        [[[1] * n for _ in range(n)] for _ in range(n)])
    rep = check_quasigroup(t)
    assert not rep.passed
    assert len(rep.violations) <= 100
