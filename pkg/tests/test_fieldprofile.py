"""Field profiles, division algebra classes and Brauer arithmetic."""

import itertools

import pytest

from modcat.fieldprofile import (BASE, COMPLEXIFICATION, QUATERNION,
                                 DivisionLabel,
                                 NotInBrauerGroup, SeparableClosureKind,
                                 UnsupportedProfile, alg_closed, brauer_add,
                                 classify_finite_separable_closure,
                                 division_algebra_classes, finite, finite_ext,
                                 profile_from_code, rationals, real_closed,
                                 separably_closed_nonperfect)


def test_closure_classification():
    assert classify_finite_separable_closure(real_closed()) == SeparableClosureKind.REAL_CLOSED
    assert classify_finite_separable_closure(finite(5)) == \
        SeparableClosureKind.INFINITE_SEPARABLE_CLOSURE
    assert classify_finite_separable_closure(alg_closed(0)) == \
        SeparableClosureKind.SEPARABLY_CLOSED
    assert classify_finite_separable_closure(rationals()) == \
        SeparableClosureKind.INFINITE_SEPARABLE_CLOSURE
    assert classify_finite_separable_closure(
        separably_closed_nonperfect("Fp(x)^sep", 2)) == SeparableClosureKind.SEPARABLY_CLOSED


def test_division_algebra_classes_real_closed():
    assert division_algebra_classes(real_closed(), 4) == [BASE, COMPLEXIFICATION, QUATERNION]
    assert division_algebra_classes(real_closed(), 1) == [BASE]
    assert division_algebra_classes(real_closed(), 2) == [BASE, COMPLEXIFICATION]
    assert division_algebra_classes(real_closed(), 3) == [BASE, COMPLEXIFICATION]
    assert division_algebra_classes(real_closed(), 100) == [BASE, COMPLEXIFICATION, QUATERNION]


def test_division_algebra_classes_alg_closed_and_finite():
    assert division_algebra_classes(alg_closed(0), 10) == [BASE]
    assert division_algebra_classes(finite(2), 3) == [finite_ext(1), finite_ext(2), finite_ext(3)]


def test_division_algebra_classes_refuses_rationals():
    with pytest.raises(UnsupportedProfile):
        division_algebra_classes(rationals(), 4)


def test_brauer_add_examples():
    rc = real_closed()
    assert brauer_add(rc, QUATERNION, QUATERNION) == BASE
    assert brauer_add(rc, BASE, QUATERNION) == QUATERNION
    assert brauer_add(finite(3), finite_ext(1), finite_ext(1)) == BASE


def test_brauer_add_rejects_complexification():
    with pytest.raises(NotInBrauerGroup):
        brauer_add(real_closed(), COMPLEXIFICATION, BASE)


def test_brauer_group_is_z2_over_real_closed():
    rc = real_closed()
    elements = [BASE, QUATERNION]
    for a, b, c in itertools.product(elements, repeat=3):
        assert brauer_add(rc, a, b) == brauer_add(rc, b, a)
        assert brauer_add(rc, brauer_add(rc, a, b), c) == brauer_add(rc, a, brauer_add(rc, b, c))
    for a in elements:
        assert brauer_add(rc, BASE, a) == a
        assert brauer_add(rc, a, a) == BASE  # every element is its own inverse


def test_profile_codes_round_trip():
    for code in ["ac0", "ac5", "rc", "fp7", "q", "sep:Fp(x)^sep"]:
        assert profile_from_code(code).code == code
    with pytest.raises(ValueError):
        profile_from_code("zzz")


def test_profile_invariants():
    assert alg_closed(7).char == 7
    assert real_closed().char == 0
    with pytest.raises(ValueError):
        finite(4)
    with pytest.raises(ValueError):
        alg_closed(6)


def test_division_class_dims():
    assert BASE.dim_over_base == 1
    assert COMPLEXIFICATION.dim_over_base == 2
    assert QUATERNION.dim_over_base == 4
    assert finite_ext(9).dim_over_base == 9
    assert QUATERNION.brauer_order == 2
    assert BASE.brauer_order == 1
    assert finite_ext(3).label == DivisionLabel.FINITE_EXT
    assert finite_ext(3).name == "FINITE_EXT(3)"


def test_only_supported_profiles_have_brauer_arithmetic():
    with pytest.raises(UnsupportedProfile):
        brauer_add(rationals(), BASE, BASE)
