from fractions import Fraction

import pytest
from totguild.exactla import SparseMatrix, block_diagonal
from totguild.response import DimensionMismatchError, InputError


class TestSparseMatrix:
    """Test cases for SparseMatrix construction and algebra."""

    def test_zero_entries_are_dropped(self):
        """Test that explicit zeros are not stored."""
        m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 3})
        assert m.nnz == 1
        assert m.get(1, 1) == Fraction(3)
        assert m.get(0, 0) == 0

    def test_entries_become_fractions(self):
        """Test that integer and string entries are stored exactly."""
        m = SparseMatrix(1, 2, {(0, 0): 2, (0, 1): "1/3"})
        assert m.get(0, 1) == Fraction(1, 3)
        assert isinstance(m.get(0, 0), Fraction)

    def test_floats_rejected(self):
        """Test that floating point entries raise an input error."""
        with pytest.raises(InputError):
            SparseMatrix(1, 1, {(0, 0): 0.5})

    def test_out_of_range_entry(self):
        """Test that entries outside the shape are rejected."""
        with pytest.raises(DimensionMismatchError):
            SparseMatrix(2, 2, {(2, 0): 1})

    def test_from_dense_round_trip(self):
        """Test dense construction and conversion back."""
        rows = [[1, 0, 2], [0, 0, -1]]
        m = SparseMatrix.from_dense(rows)
        assert m.shape == (2, 3)
        assert m.to_dense() == [[Fraction(x) for x in r] for r in rows]

    def test_ragged_dense_rejected(self):
        """Test that ragged dense input is rejected."""
        with pytest.raises(DimensionMismatchError):
            SparseMatrix.from_dense([[1, 2], [3]])

    def test_matmul(self):
        """Test matrix multiplication."""
        a = SparseMatrix.from_dense([[1, 2], [0, 1]])
        b = SparseMatrix.from_dense([[1, 0], [3, 1]])
        assert (a @ b).to_dense() == [[7, 2], [3, 1]]

    def test_matmul_shape_mismatch(self):
        """Test that incompatible products raise."""
        with pytest.raises(DimensionMismatchError):
            SparseMatrix.zeros(2, 3) @ SparseMatrix.zeros(2, 3)

    def test_add_sub_neg_scale(self):
        """Test the linear operations."""
        a = SparseMatrix.from_dense([[1, 2]])
        b = SparseMatrix.from_dense([[1, -2]])
        assert (a + b).to_dense() == [[2, 0]]
        assert (a - b).to_dense() == [[0, 4]]
        assert (-a).to_dense() == [[-1, -2]]
        assert a.scale(Fraction(1, 2)).to_dense() == [[Fraction(1, 2), 1]]

    def test_apply(self):
        """Test matrix times column vector."""
        m = SparseMatrix.from_dense([[1, 1], [0, 1]])
        assert m.apply([2, 1]) == [3, 1]

    def test_transpose(self):
        """Test transposition."""
        m = SparseMatrix.from_dense([[1, 2, 3]])
        assert m.transpose().to_dense() == [[1], [2], [3]]

    def test_kron(self):
        """Test the Kronecker product shape and an entry."""
        a = SparseMatrix.from_dense([[1, 2]])
        b = SparseMatrix.identity(2)
        k = a.kron(b)
        assert k.shape == (2, 4)
        assert k.get(1, 3) == 2

    def test_hstack_vstack(self):
        """Test horizontal and vertical stacking."""
        a = SparseMatrix.identity(2)
        h = SparseMatrix.hstack(a, a)
        v = SparseMatrix.vstack(a, a)
        assert h.shape == (2, 4)
        assert v.shape == (4, 2)
        assert h.get(1, 3) == 1
        assert v.get(3, 1) == 1

    def test_block(self):
        """Test block assembly with a zero block."""
        one = SparseMatrix.identity(1)
        m = SparseMatrix.block([[one, None], [None, one.scale(2)]], [1, 1], [1, 1])
        assert m.to_dense() == [[1, 0], [0, 2]]

    def test_block_diagonal(self):
        """Test block_diagonal."""
        m = block_diagonal(SparseMatrix.identity(1), SparseMatrix.from_dense([[5]]))
        assert m.to_dense() == [[1, 0], [0, 5]]

    def test_equality_and_hash(self):
        """Test that equal content gives equal matrices and hashes."""
        a = SparseMatrix(2, 2, {(0, 1): 1})
        b = SparseMatrix.from_dense([[0, 1], [0, 0]])
        assert a == b
        assert hash(a) == hash(b)
        assert a != SparseMatrix(2, 3, {(0, 1): 1})
