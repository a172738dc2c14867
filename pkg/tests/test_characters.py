from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from hsnum.characters import (
    border_strips, central_char_transposition, central_char_via_characters, mn_character,
    transposition_class,
)
from hsnum.partitions import class_size, conjugate, content_sum, dimension, partitions_of, sign

from oracles import cycle_type


def test_trivial_character():
    for d in range(1, 8):
        for mu in partitions_of(d):
            assert mn_character((d,), mu) == 1


@pytest.mark.parametrize("shape, cls, expected", [
    ((2, 1), (2, 1), 0),
    ((1, 1, 1), (2, 1), -1),
    ((), (), 1),
])
def test_examples(shape, cls, expected):
    assert mn_character(shape, cls) == expected


def test_standard_rep_is_fixed_points_minus_one():
    # trace of the natural permutation representation minus the trivial summand
    for d in range(2, 7):
        seen = {}
        for perm in permutations(range(d)):
            ct = cycle_type(perm)
            seen.setdefault(ct, sum(1 for i in range(d) if perm[i] == i) - 1)
        for ct, value in seen.items():
            assert mn_character((d - 1, 1), ct) == value


def test_sign_character():
    for d in range(1, 9):
        for mu in partitions_of(d):
            assert mn_character((1,) * d, mu) == sign(mu)


def test_identity_column_is_dimension():
    for d in range(9):
        for lam in partitions_of(d):
            assert mn_character(lam, (1,) * d) == dimension(lam)
        assert sum(mn_character(lam, (1,) * d) ** 2 for lam in partitions_of(d)) == factorial(d)


def test_row_orthogonality():
    for d in range(1, 8):
        classes = partitions_of(d)
        for lam in classes:
            for nu in classes:
                s = sum(class_size(mu) * mn_character(lam, mu) * mn_character(nu, mu)
                        for mu in classes)
                assert s == (factorial(d) if lam == nu else 0)


def test_conjugate_twists_by_sign():
    for d in range(1, 11):
        for lam in partitions_of(d):
            for mu in partitions_of(d):
                assert mn_character(conjugate(lam), mu) == sign(mu) * mn_character(lam, mu)


def test_class_order_does_not_matter():
    assert mn_character((3, 2), (1, 2, 2)) == mn_character((3, 2), (2, 2, 1))


def test_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def test_border_strip_heights():
    assert dict(border_strips((2, 2), 2)) == {(2,): 0, (1, 1): 1}
    # only the bottom row of (3,2) is a removable domino
    assert dict(border_strips((3, 2), 2)) == {(3,): 0}
    assert dict(border_strips((3, 2), 4)) == {(1,): 1}


@pytest.mark.parametrize("shape, expected", [((3,), 3), ((2, 1), 0), ((1, 1, 1), -3)])
def test_central_character_examples(shape, expected):
    assert central_char_transposition(shape) == expected
    assert central_char_via_characters(shape) == expected


def test_central_character_small_degrees():
    assert central_char_transposition(()) == 0
    assert central_char_transposition((1,)) == 0


def test_content_sum_equals_character_path_up_to_15():
    for d in range(2, 16):
        tau = transposition_class(d)
        for lam in partitions_of(d):
            assert content_sum(lam) * dimension(lam) == comb(d, 2) * mn_character(lam, tau)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=2, max_value=12).flatmap(
    lambda d: st.sampled_from(partitions_of(d))))
def test_two_central_character_paths_agree(lam):
    assert central_char_transposition(lam) == central_char_via_characters(lam)
