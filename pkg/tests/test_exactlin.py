from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumposet import FieldSpec, InputError, Matrix, kernel_basis, rank, rref

QQ = FieldSpec()
F2 = FieldSpec("prime", 2)
F5 = FieldSpec("prime", 5)


def M(field, rows, cols=None):
    return Matrix.from_rows(field, rows, cols=cols)


def test_field_validation():
    with pytest.raises(InputError):
        FieldSpec("prime", 4)
    with pytest.raises(InputError):
        FieldSpec("prime", None)
    with pytest.raises(InputError):
        FieldSpec("real")
    with pytest.raises(InputError):
        FieldSpec("rational", 7)


def test_coerce_exactness():
    assert QQ.coerce("2/4") == Fraction(1, 2)
    assert F5.coerce(7) == 2
    assert F5.coerce(Fraction(1, 2)) == 3  # 1/2 = 3 mod 5
    with pytest.raises(InputError):
        QQ.coerce(0.5)
    with pytest.raises(InputError):
        F2.coerce(Fraction(1, 2))


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    red, rk, piv = rref(m)
    assert red == m and rk == 2 and piv == (0, 1)


def test_rref_all_ones_rank1():
    m = M(QQ, [[1, 1], [1, 1]])
    red, rk, piv = rref(m)
    assert rk == 1 and piv == (0,)
    assert red.row(0) == (Fraction(1), Fraction(1))
    assert red.row(1) == (Fraction(0), Fraction(0))


def test_rref_all_ones_f2():
    assert rref(M(F2, [[1, 1], [1, 1]])).rank == 1


def test_kernel_zero_matrix():
    k = kernel_basis(Matrix.zero(QQ, 2, 3))
    assert k.cols == 3 and k.rows == 3


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(QQ, 2)).cols == 0


def test_kernel_row_vector():
    k = kernel_basis(M(QQ, [[1, 1]]))
    assert k.cols == 1
    v = k.col(0)
    assert v[0] == -v[1] != 0


def test_rank_examples():
    assert rank(Matrix.identity(QQ, 3)) == 3
    assert rank(M(QQ, [[1, 2], [2, 4]])) == 1
    assert rank(M(F2, [[1, 1], [1, 1]])) == 1


def test_mixed_field_operations_rejected():
    a = Matrix.identity(QQ, 2)
    b = Matrix.identity(F2, 2)
    with pytest.raises(InputError):
        a.matmul(b)
    with pytest.raises(InputError):
        a.stack(b)


def test_zero_row_matrices():
    m = M(QQ, [], cols=4)
    assert rank(m) == 0
    assert kernel_basis(m).cols == 4


@st.composite
def small_matrix(draw):
    field = draw(st.sampled_from([QQ, F2, F5]))
    r = draw(st.integers(0, 4))
    c = draw(st.integers(1, 4))
    rows = [[draw(st.integers(-4, 4)) for _ in range(c)] for _ in range(r)]
    return M(field, rows, cols=c)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rref_idempotent(m):
    red = rref(m).reduced
    assert rref(red).reduced == red


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_kernel_columns_are_killed(m):
    k = kernel_basis(m)
    if m.rows and k.cols:
        assert m.matmul(k).is_zero()


@settings(max_examples=40, deadline=None)
@given(small_matrix())
def test_row_and_column_rank_agree(m):
    assert rank(m) == rank(m.transpose())
