from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maninalg.linalg import (AmbientMismatch, QMatrix, SparseEchelon, Subspace,
                             invert, kernel, rref, solve_right, subspace_equal)


def F(x):
    return Fraction(x)


def test_rref_already_echelon():
    e, rank = rref(QMatrix.from_rows([[0, 1], [0, 0]]))
    assert e.data == [[F(0), F(1)], [F(0), F(0)]]
    assert rank == 1


def test_rref_identity():
    e, rank = rref(QMatrix.identity(3))
    assert e == QMatrix.identity(3)
    assert rank == 3


def test_rref_hand_elimination():
    e, rank = rref(QMatrix.from_rows([[1, 2], [2, 4]]))
    assert e.data == [[F(1), F(2)], [F(0), F(0)]]
    assert rank == 1


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_dim=4):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    data = draw(st.lists(
        st.lists(small_rationals, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return QMatrix.from_rows(data)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    once, rank1 = rref(m)
    twice, rank2 = rref(once)
    assert once == twice
    assert rank1 == rank2


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_of_transpose(m):
    assert rref(m)[1] == rref(m.transpose())[1]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rref(m)[1] + kernel(m).dim == m.cols


def test_kernel_zero_matrix():
    assert kernel(QMatrix.zero(2, 2)).dim == 2


def test_kernel_identity():
    assert kernel(QMatrix.identity(3)).dim == 0


def test_kernel_hand_solved():
    k = kernel(QMatrix.from_rows([[1, 1]]))
    assert k.basis.data == [[F(1), F(-1)]]


def test_subspace_equality_up_to_scaling():
    a = Subspace.from_rows([[1, 0]], 2)
    b = Subspace.from_rows([[2, 0]], 2)
    c = Subspace.from_rows([[0, 1]], 2)
    assert subspace_equal(a, b)
    assert not subspace_equal(a, c)


def test_subspace_ambient_mismatch():
    a = Subspace.from_rows([[1, 0]], 2)
    b = Subspace.from_rows([[1, 0, 0]], 3)
    with pytest.raises(AmbientMismatch):
        subspace_equal(a, b)


def test_hecke_rowspace_matches_q_antisymmetrizer():
    # the Hecke minus idempotent and the q-antisymmetrizer present the same
    # quadratic algebra, so their row spaces coincide
    from maninalg.idempotents import hecke_minus, q_antisymmetrizer
    a = Subspace.from_matrix(q_antisymmetrizer(2, 2).matrix)
    b = Subspace.from_matrix(hecke_minus(2, 2).matrix)
    assert subspace_equal(a, b)


def test_solve_and_invert():
    m = QMatrix.from_rows([[1, 2], [3, 5]])
    x = solve_right(m, [1, 2])
    assert m.matvec(x) == [F(1), F(2)]
    inv = invert(m)
    assert inv * m == QMatrix.identity(2)
    assert invert(QMatrix.from_rows([[1, 2], [2, 4]])) is None


def test_solve_inconsistent():
    m = QMatrix.from_rows([[1, 1], [1, 1]])
    assert solve_right(m, [0, 1]) is None


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_sparse_echelon_matches_dense_rank(m):
    ech = SparseEchelon()
    for row in m.data:
        ech.insert({j: x for j, x in enumerate(row) if x})
    assert ech.rank == rref(m)[1]
    assert ech.dense_basis(m.cols) == Subspace.from_matrix(m)


def test_sparse_echelon_membership():
    ech = SparseEchelon()
    ech.insert({0: F(1), 1: F(2)})
    ech.insert({1: F(1), 2: F(1)})
    assert ech.contains({0: F(1), 2: F(-2)})  # row1 - 2*row2
    assert not ech.contains({0: F(1)})


def test_rational_substrate_invariants():
    # Fraction keeps gcd(|num|, den) = 1 and den > 0, the exact contract
    # the scalar substrate relies on
    x = Fraction(6, -4)
    assert x.numerator == -3 and x.denominator == 2
    from maninalg.linalg import format_rat, rat
    assert rat("-3/2") == x and format_rat(x) == "-3/2"
    assert format_rat(rat("7")) == "7"
