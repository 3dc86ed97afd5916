"""Exact linear algebra: frozen examples and algebraic invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superverma.linalg import (
    SparseRationalMatrix,
    as_vector,
    image_basis,
    kernel_basis,
    quotient_basis,
    rank,
)

F = Fraction


def test_rank_identity():
    assert rank(SparseRationalMatrix.identity(2)) == 2


def test_rank_zero_matrix():
    assert rank(SparseRationalMatrix.zero(3, 4)) == 0


def test_rank_one_matrix():
    m = SparseRationalMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1


def test_kernel_basis_canonical():
    m = SparseRationalMatrix.from_rows([[1, 2], [2, 4]])
    assert kernel_basis(m) == [(F(-2), F(1))]


def test_image_basis_canonical():
    m = SparseRationalMatrix.from_rows([[1, 2], [2, 4]])
    assert image_basis(m) == [(F(1), F(2))]


def test_kernel_of_identity_is_empty():
    assert kernel_basis(SparseRationalMatrix.identity(3)) == []


def test_kernel_of_zero_is_full():
    ker = kernel_basis(SparseRationalMatrix.zero(2, 3))
    assert len(ker) == 3
    assert ker[0] == (F(1), F(0), F(0))


def test_matvec_and_matmul():
    m = SparseRationalMatrix.from_rows([[1, 2], [3, 4]])
    assert m.mul_vector([1, 0]) == (F(1), F(3))
    sq = m @ m
    assert sq.to_dense() == [[F(7), F(10)], [F(15), F(22)]]


def test_quotient_basis_reports_dependent_input():
    with pytest.raises(ValueError, match="2 vectors span only 1"):
        quotient_basis(2, [[1, 2], [2, 4]])


def test_quotient_basis_projection():
    reps, proj = quotient_basis(3, [[1, 0, 1]])
    assert len(reps) == 2
    # a subspace vector projects to zero
    assert proj([2, 0, 2]) == (F(0), F(0))
    # coset coordinates are exact
    assert proj([0, 5, 7]) == (F(5), F(7))
    # projection constant on cosets
    assert proj([1, 5, 8]) == proj([0, 5, 7])


def test_rejects_bad_shapes():
    with pytest.raises(ValueError):
        SparseRationalMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(ValueError):
        SparseRationalMatrix.from_rows([[1], [1, 2]])
    with pytest.raises(ValueError):
        quotient_basis(2, [[1, 2, 3]])


def test_no_stored_zeros():
    m = SparseRationalMatrix(2, 2, {(0, 0): 0, (0, 1): 1})
    assert (0, 0) not in m.entries
    assert m[(0, 1)] == F(1)


small_matrices = st.integers(1, 5).flatmap(
    lambda nr: st.integers(1, 5).flatmap(
        lambda nc: st.lists(
            st.lists(st.integers(-4, 4), min_size=nc, max_size=nc),
            min_size=nr,
            max_size=nr,
        )
    )
)


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_rank_nullity_and_exact_kernel(rows):
    m = SparseRationalMatrix.from_rows(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    zero = tuple(F(0) for _ in range(m.nrows))
    for v in ker:
        assert m.mul_vector(v) == zero


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_image_dimension_matches_rank(rows):
    m = SparseRationalMatrix.from_rows(rows)
    img = image_basis(m)
    assert len(img) == rank(m)
    # every column lies in the span of the image basis
    if img:
        _, proj = quotient_basis(m.nrows, img)
        zero = tuple(F(0) for _ in range(m.nrows - len(img)))
        for col in m.columns():
            assert proj(col) == zero
    else:
        assert m.is_zero()


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_determinism(rows):
    m1 = SparseRationalMatrix.from_rows(rows)
    m2 = SparseRationalMatrix.from_rows(rows)
    assert kernel_basis(m1) == kernel_basis(m2)
    assert image_basis(m1) == image_basis(m2)


def test_as_vector_coerces():
    assert as_vector([1, F(1, 2)]) == (F(1), F(1, 2))
