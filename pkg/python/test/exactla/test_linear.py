from fractions import Fraction

import pytest
from totguild.exactla import (SparseMatrix, Solver, Subspace, rank,
                              rank_kernel_image, solve_linear,
                              subquotient_basis)
from totguild.response import DimensionMismatchError, SubspaceError


def _random_matrix(rng, rows, cols, density=0.5):
    entries = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                entries[(r, c)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return SparseMatrix(rows, cols, entries)


class TestRankKernelImage:
    """Test cases for rank, kernel and image."""

    def test_rank_one_matrix(self):
        """Test the rank-one example and its kernel direction."""
        A = SparseMatrix.from_dense([[1, 2], [2, 4]])
        r, kernel, image = rank_kernel_image(A)
        assert r == 1
        assert kernel.dim == 1
        assert kernel.contains([2, -1])
        assert image.dim == 1
        assert image.contains([1, 2])

    def test_rank_only(self):
        """Test the rank-only routine agrees on a few shapes."""
        assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
        assert rank(SparseMatrix.identity(3)) == 3
        assert rank(SparseMatrix.zeros(2, 5)) == 0

    def test_rank_nullity_random(self, rng):
        """Test rank + nullity = columns and A k = 0 on random matrices."""
        for _ in range(20):
            A = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            r, kernel, image = rank_kernel_image(A)
            assert r + kernel.dim == A.cols
            assert image.dim == r == rank(A)
            for v in kernel.vectors():
                assert not any(A.apply(v))

    def test_empty_matrix(self):
        """Test a 0 x 3 matrix has full kernel."""
        r, kernel, image = rank_kernel_image(SparseMatrix.zeros(0, 3))
        assert r == 0
        assert kernel.dim == 3
        assert image.dim == 0


class TestSolveLinear:
    """Test cases for exact linear solving."""

    def test_unique_solution(self):
        """Test the upper triangular example."""
        A = SparseMatrix.from_dense([[1, 1], [0, 1]])
        assert solve_linear(A, [3, 1]) == [2, 1]

    def test_inconsistent(self):
        """Test that an inconsistent system returns None."""
        A = SparseMatrix.from_dense([[1, 2], [2, 4]])
        assert solve_linear(A, [1, 0]) is None

    def test_wrong_length(self):
        """Test that a mismatched right-hand side raises."""
        with pytest.raises(DimensionMismatchError):
            solve_linear(SparseMatrix.identity(2), [1])

    def test_solver_reuse(self, rng):
        """Test that one Solver answers many right-hand sides exactly."""
        A = _random_matrix(rng, 4, 3, density=0.7)
        solver = Solver(A)
        for _ in range(10):
            x = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
            b = A.apply(x)
            y = solver.solve(b)
            assert y is not None
            assert A.apply(y) == b


class TestSubspace:
    """Test cases for Subspace operations."""

    def test_span_drops_dependent_vectors(self):
        """Test that span keeps an independent basis."""
        S = Subspace.span(3, [[1, 0, 0], [2, 0, 0], [0, 1, 0]])
        assert S.dim == 2

    def test_dependent_basis_rejected(self):
        """Test that a dependent basis raises."""
        with pytest.raises(SubspaceError):
            Subspace(2, SparseMatrix.from_dense([[1, 2], [1, 2]]))

    def test_coordinates(self):
        """Test coordinates in a basis and membership."""
        S = Subspace.span(3, [[1, 1, 0], [0, 1, 1]])
        assert S.coordinates([1, 2, 1]) == [1, 1]
        assert S.coordinates([1, 0, 0]) is None

    def test_sum_and_intersection(self):
        """Test the dimension formula on two planes in Q^3."""
        U = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
        W = Subspace.span(3, [[0, 1, 0], [0, 0, 1]])
        assert U.sum(W).dim == 3
        meet = U.intersection(W)
        assert meet.dim == 1
        assert meet.contains([0, 1, 0])

    def test_subspace_of_line_in_plane(self):
        """Test the one-dimensional intersection example."""
        U = Subspace.span(2, [[1, 1]])
        W = Subspace.full(2)
        assert U.intersection(W).dim == 1
        assert W.contains_subspace(U)


class TestSubquotient:
    """Test cases for subquotient_basis."""

    def test_quotient_dimension_and_projection(self):
        """Test W/U for a plane modulo a line."""
        W = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
        U = Subspace.span(3, [[1, 1, 0]])
        Q = subquotient_basis(W, U)
        assert Q.dim == 1
        assert Q.is_zero_class([2, 2, 0])
        assert not Q.is_zero_class([1, 0, 0])
        assert Q.project([1, 0, 0]) == [-Q.project([0, 1, 0])[0]]

    def test_denominator_not_contained(self):
        """Test that U outside W raises."""
        W = Subspace.span(2, [[1, 0]])
        U = Subspace.span(2, [[0, 1]])
        with pytest.raises(SubspaceError):
            subquotient_basis(W, U)

    def test_vector_outside_numerator(self):
        """Test projecting a vector outside W raises."""
        Q = subquotient_basis(Subspace.span(2, [[1, 0]]), Subspace.zero(2))
        with pytest.raises(SubspaceError):
            Q.project([0, 1])

    def test_projection_matrix_shape(self):
        """Test the projection matrix on W-coordinates."""
        Q = subquotient_basis(Subspace.full(3), Subspace.span(3, [[1, 0, 0]]))
        P = Q.projection_matrix()
        assert P.shape == (2, 3)
        assert not any(P.apply([1, 0, 0]))
