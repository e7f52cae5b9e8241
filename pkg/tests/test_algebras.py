"""Structure-constant algebras and commutative splitting."""

from fractions import Fraction

import pytest

from modcat.algebras import (NoUnit, NotAssociative, NotCommutative,
                             StructureConstantAlgebra, split_commutative_algebra)
from modcat.fields import CyclotomicField, PrimeField, QQ


def cyclic_group_algebra(field, n):
    mult = [[[1 if k == (i + j) % n else 0 for k in range(n)] for j in range(n)]
            for i in range(n)]
    return StructureConstantAlgebra.from_int_constants(field, mult, [1] + [0] * (n - 1))


def test_validation_catches_broken_associativity():
    # e1 * e1 = e1, e1 * e0 = e0 but e0 * anything = 0: no unit, and the
    # constants below are also non-associative
    mult = [[[0, 0], [0, 0]], [[1, 0], [0, 0]]]
    with pytest.raises((NotAssociative, NoUnit)):
        StructureConstantAlgebra.from_int_constants(QQ, mult, [1, 0])


def test_validation_catches_bad_unit():
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]  # e1*e1 = e1: associative
    with pytest.raises(NoUnit):
        StructureConstantAlgebra.from_int_constants(QQ, mult, [1, 1])


def test_not_commutative_reported():
    # 2x2 upper triangular matrices: associative, unital, not commutative
    # basis: E11, E12, E22
    mult = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 1, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
    ]
    algebra = StructureConstantAlgebra.from_int_constants(QQ, mult, [1, 0, 1])
    with pytest.raises(NotCommutative):
        split_commutative_algebra(algebra)


def test_split_z3_over_cyclotomic_matches_fourier_idempotents():
    field = CyclotomicField(3)
    algebra = cyclic_group_algebra(field, 3)
    blocks = split_commutative_algebra(algebra)
    assert [d for d, _ in blocks] == [1, 1, 1]
    # independent oracle: the Fourier idempotents (1/3) sum_k zeta^{-jk} g^k
    third = Fraction(1, 3)
    expected = set()
    for j in range(3):
        vec = []
        for k in range(3):
            z = field.zeta((-j * k) % 3)
            vec.append(field.from_fractions([third * c for c in z.coeffs]))
        expected.add(tuple(vec))
    assert {tuple(e) for _, e in blocks} == expected


def test_split_z3_over_q_gives_two_blocks():
    blocks = split_commutative_algebra(cyclic_group_algebra(QQ, 3))
    assert sorted(d for d, _ in blocks) == [1, 2]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_split_modular_group_algebra_is_local(p):
    blocks = split_commutative_algebra(cyclic_group_algebra(PrimeField(p), p))
    assert [d for d, _ in blocks] == [p]
    # the only idempotent is the unit
    assert blocks[0][1] == list(cyclic_group_algebra(PrimeField(p), p).unit)


@pytest.mark.parametrize("field,n,expected_dims", [
    (QQ, 4, [1, 1, 2]),            # x^4 - 1 = (x-1)(x+1)(x^2+1)
    (CyclotomicField(4), 4, [1, 1, 1, 1]),
    (QQ, 6, [1, 1, 2, 2]),         # factors of x^6 - 1 over Q
    (PrimeField(3), 4, [1, 1, 2]),  # x^4 - 1 = (x-1)(x+1)(x^2+1) over F_3
    (PrimeField(2), 6, [2, 4]),     # F_2[Z/2] (x) (F_2 x F_4): two local blocks
    (PrimeField(5), 4, [1, 1, 1, 1]),
])
def test_split_cyclic_group_algebras(field, n, expected_dims):
    blocks = split_commutative_algebra(cyclic_group_algebra(field, n))
    assert sorted(d for d, _ in blocks) == sorted(expected_dims)


def idempotent_properties(algebra, blocks):
    zero = [algebra.field.zero()] * algebra.dim
    total = list(zero)
    for _, e in blocks:
        square = algebra.mul_vec(e, e)
        assert square == list(e)
        total = [a + b for a, b in zip(total, e)]
    assert total == list(algebra.unit)
    for i, (_, e1) in enumerate(blocks):
        for j, (_, e2) in enumerate(blocks):
            if i != j:
                assert algebra.mul_vec(e1, e2) == zero
    assert sum(d for d, _ in blocks) == algebra.dim


@pytest.mark.parametrize("field", [QQ, CyclotomicField(3), PrimeField(2), PrimeField(3)])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_idempotent_completeness_on_group_algebras(field, n):
    algebra = cyclic_group_algebra(field, n)
    idempotent_properties(algebra, split_commutative_algebra(algebra))


def test_split_nonsemisimple_truncated_polynomials():
    # Q[x]/(x^2): local, one block, despite the nilpotent
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    algebra = StructureConstantAlgebra.from_int_constants(QQ, mult, [1, 0])
    blocks = split_commutative_algebra(algebra)
    assert [d for d, _ in blocks] == [2]


def test_split_product_of_truncated_polynomials():
    # Q[x]/(x^2) x Q[y]/(y^2): two blocks found through the nilradical
    mult = [
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
    ]
    # basis: 1, x, f, fy where f is the idempotent of the second factor
    algebra = StructureConstantAlgebra.from_int_constants(QQ, mult, [1, 0, 0, 0])
    blocks = split_commutative_algebra(algebra)
    assert sorted(d for d, _ in blocks) == [2, 2]
    idempotent_properties(algebra, blocks)


def test_split_f4_style_extension_field_stays_simple():
    # F_2[t]/(t^2 + t + 1) = F_4: no splitting over F_2
    mult = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]
    algebra = StructureConstantAlgebra.from_int_constants(PrimeField(2), mult, [1, 0])
    blocks = split_commutative_algebra(algebra)
    assert [d for d, _ in blocks] == [2]


def test_split_f4_x_f4_over_f2():
    # F_2[Z/3 x Z/3] = (F_2 x F_4) (x) (F_2 x F_4), and F_4 (x) F_4 is two
    # copies of F_4, so the blocks are 1, 2, 2, 2, 2
    field = PrimeField(2)
    n = 9
    elements = [(a, b) for a in range(3) for b in range(3)]
    index = {g: i for i, g in enumerate(elements)}
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            k = index[((g[0] + h[0]) % 3, (g[1] + h[1]) % 3)]
            mult[i][j][k] = 1
    unit = [0] * n
    unit[index[(0, 0)]] = 1
    algebra = StructureConstantAlgebra.from_int_constants(field, mult, unit)
    blocks = split_commutative_algebra(algebra)
    assert sorted(d for d, _ in blocks) == [1, 2, 2, 2, 2]
    idempotent_properties(algebra, blocks)
