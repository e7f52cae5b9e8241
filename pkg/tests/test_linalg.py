"""Exact rank, kernel and echelon conventions."""

import random
from fractions import Fraction

import pytest

from modcat.fields import CyclotomicField, PrimeField, QQ
from modcat.linalg import Matrix, kernel_basis, rank, rref, solve


def test_rank_equal_rows_rational():
    assert rank(Matrix.from_ints(QQ, [[1, 1], [1, 1]])) == 1


def test_rank_two_mod_two_is_zero():
    assert rank(Matrix.from_ints(PrimeField(2), [[2]])) == 0


def _dy_delta1_matrix(field):
    # (d f)(g0, g1) = f(g1) - f(g0 g1) + f(g0) on Z/2 = {e, g}, written by
    # hand on the basis (f(e), f(g)); rows ordered (e,e), (e,g), (g,e), (g,g)
    return Matrix.from_ints(field, [[1, 0], [1, 0], [1, 0], [-1, 2]])


def test_dy_delta1_rank_over_f2():
    # over F_2 the last row becomes (1, 0) as well
    assert rank(_dy_delta1_matrix(PrimeField(2))) == 1


def test_dy_delta1_rank_over_q():
    # over Q the rows (1,0) and (-1,2) are independent
    assert rank(_dy_delta1_matrix(QQ)) == 2


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(QQ, 3)) == []


def test_kernel_zero_matrix_full():
    basis = kernel_basis(Matrix.zero(QQ, 2, 3))
    assert len(basis) == 3
    assert basis[0] == [Fraction(1), Fraction(0), Fraction(0)]


def test_kernel_one_relation_canonical_form():
    # documented convention: the free column carries 1, pivot columns carry
    # the negated echelon entries, so [[1, 1]] gives (-1, 1)
    basis = kernel_basis(Matrix.from_ints(QQ, [[1, 1]]))
    assert basis == [[Fraction(-1), Fraction(1)]]


def test_rref_pivots_normalized():
    reduced, pivots = rref(Matrix.from_ints(QQ, [[2, 4], [1, 3]]))
    assert pivots == [0, 1]
    assert reduced.rows[0][0] == Fraction(1)
    assert reduced.rows[1][1] == Fraction(1)


@pytest.mark.parametrize("field", [QQ, PrimeField(3), CyclotomicField(4)])
def test_rank_nullity_random(field):
    rng = random.Random(hash(getattr(field, "tag", "q")) % 10_000)
    for _ in range(60):
        nrows = rng.randint(0, 5)
        ncols = rng.randint(1, 5)
        m = Matrix(field, [[field.from_int(rng.randint(-4, 4)) for _ in range(ncols)]
                           for _ in range(nrows)], ncols=ncols)
        assert rank(m) + len(kernel_basis(m)) == ncols
        for vec in kernel_basis(m):
            image = [sum((a * x for a, x in zip(row, vec)), field.zero())
                     for row in m.rows]
            assert all(entry == field.zero() for entry in image)


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_ints(QQ, [[1, 1], [0, 1]])
    x = solve(m, [QQ.from_int(3), QQ.from_int(1)])
    assert x == [Fraction(2), Fraction(1)]
    m2 = Matrix.from_ints(QQ, [[1, 1], [1, 1]])
    assert solve(m2, [QQ.from_int(0), QQ.from_int(1)]) is None


def test_matrix_product_shapes_and_values():
    a = Matrix.from_ints(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_ints(QQ, [[0, 1], [1, 0]])
    assert (a * b).rows == Matrix.from_ints(QQ, [[2, 1], [4, 3]]).rows
    with pytest.raises(ValueError):
        _ = a * Matrix.from_ints(QQ, [[1, 2, 3]])
