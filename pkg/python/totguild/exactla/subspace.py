"""Subspaces, subquotients and the three linear-algebra entry points."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from totguild.logs import logger
from totguild.response import DimensionMismatchError, SubspaceError

from .elimination import Solver, eliminate_matrix, kernel_columns
from .matrix import SparseMatrix, Vector


class Subspace:
    """A subspace of ``Q^ambient_dim`` given by independent basis columns."""

    __slots__ = ("ambient_dim", "basis", "_solver")

    def __init__(
        self, ambient_dim: int, basis: SparseMatrix, check: bool = True
    ):
        if basis.rows != ambient_dim:
            raise DimensionMismatchError(
                f"basis has {basis.rows} rows, ambient dimension is "
                f"{ambient_dim}"
            )
        if check and basis.cols and _rank(basis) != basis.cols:
            raise SubspaceError("basis columns are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._solver: Optional[Solver] = None

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, SparseMatrix.zeros(ambient_dim, 0), check=False)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, SparseMatrix.identity(ambient_dim), check=False)

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Sequence[int]) -> "Subspace":
        """Span of the standard basis vectors at ``indices``."""
        entries = {(i, j): 1 for j, i in enumerate(indices)}
        return cls(
            ambient_dim,
            SparseMatrix(ambient_dim, len(indices), entries),
            check=False,
        )

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence[object]]) -> "Subspace":
        """Span of arbitrary (possibly dependent) vectors."""
        return cls.from_matrix(SparseMatrix.from_columns(ambient_dim, vectors))

    @classmethod
    def from_matrix(cls, matrix: SparseMatrix) -> "Subspace":
        """Column space of ``matrix``, keeping its pivot columns."""
        if matrix.cols == 0 or matrix.is_zero():
            return cls.zero(matrix.rows)
        pivots = _pivot_columns(matrix)
        return cls(
            matrix.rows,
            matrix.submatrix(range(matrix.rows), pivots),
            check=False,
        )

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> List[Vector]:
        return self.basis.columns()

    def _get_solver(self) -> Solver:
        if self._solver is None:
            self._solver = Solver(self.basis)
        return self._solver

    def coordinates(self, vector: Sequence[object]) -> Optional[List[Fraction]]:
        """Coordinates of ``vector`` in this basis, or None if outside."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} in ambient dimension "
                f"{self.ambient_dim}"
            )
        if self.dim == 0:
            return [] if not any(vector) else None
        return self._get_solver().solve(vector)

    def contains(self, vector: Sequence[object]) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.from_matrix(SparseMatrix.hstack(self.basis, other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = SparseMatrix.hstack(self.basis, -other.basis)
        _, kernel, _ = rank_kernel_image(stacked)
        vectors = [self.basis.apply(v[: self.dim]) for v in kernel.vectors()]
        return Subspace.span(self.ambient_dim, vectors)

    def _check_ambient(self, other: "Subspace") -> None:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions {self.ambient_dim} and "
                f"{other.ambient_dim} differ"
            )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


@dataclass
class Subquotient:
    """The quotient ``W/U`` with lifts of a basis and a projection.

    ``lifts`` are vectors of W whose classes form a basis of W/U;
    ``project`` sends a vector of W to its coordinates in that basis.
    """

    W: Subspace
    U: Subspace
    dim: int
    lifts: List[Vector]
    _u_coords: SparseMatrix = field(repr=False)
    _complement: List[int] = field(repr=False)
    _solver: Optional[Solver] = field(default=None, repr=False)

    def project(self, vector: Sequence[object]) -> List[Fraction]:
        coords = self.W.coordinates(vector)
        if coords is None:
            raise SubspaceError("vector does not lie in the numerator subspace")
        return self.project_coordinates(coords)

    def project_coordinates(self, coords: Sequence[object]) -> List[Fraction]:
        """Project a vector given by its W-coordinates."""
        if self.dim == 0:
            return []
        if self._solver is None:
            n = self.W.dim
            unit = SparseMatrix(
                n, len(self._complement),
                {(i, j): 1 for j, i in enumerate(self._complement)},
            )
            self._solver = Solver(SparseMatrix.hstack(self._u_coords, unit))
        x = self._solver.solve(coords)
        return x[self.U.dim:]

    def is_zero_class(self, vector: Sequence[object]) -> bool:
        return not any(self.project(vector))

    def projection_matrix(self) -> SparseMatrix:
        """Matrix sending W-coordinates to W/U-coordinates."""
        cols = []
        for i in range(self.W.dim):
            e = [Fraction(0)] * self.W.dim
            e[i] = Fraction(1)
            cols.append(self.project_coordinates(e))
        return SparseMatrix.from_columns(self.dim, cols)


def _rank(matrix: SparseMatrix) -> int:
    from .elimination import rank

    return rank(matrix)


def _pivot_columns(matrix: SparseMatrix) -> List[int]:
    # leftmost independent columns, whatever the pivot rows
    elim = eliminate_matrix(matrix, reduce=False)
    return sorted(elim.pivots)


def rank_kernel_image(A: SparseMatrix) -> Tuple[int, Subspace, Subspace]:
    """Rank, kernel and image of ``A`` in exact arithmetic.

    The image basis consists of the original columns of ``A`` at the pivot
    positions; the kernel basis has one vector per free column.
    """
    elim = eliminate_matrix(A, reduce=True)
    pivots = sorted(elim.pivots)
    kernel_vectors = kernel_columns(elim, A.cols)
    kernel = Subspace(
        A.cols, SparseMatrix.from_columns(A.cols, kernel_vectors), check=False
    )
    image = Subspace(A.rows, A.submatrix(range(A.rows), pivots), check=False)
    logger.debug(f"rank_kernel_image {A.shape}: rank {len(pivots)}")
    return len(pivots), kernel, image


def solve_linear(
    A: SparseMatrix, b: Sequence[object]
) -> Optional[List[Fraction]]:
    """Some ``x`` with ``A x = b`` exactly, or None when ``b`` is not in the image."""
    if len(b) != A.rows:
        raise DimensionMismatchError(
            f"right-hand side of length {len(b)} for a {A.rows}x{A.cols} matrix"
        )
    return Solver(A).solve(b)


def subquotient_basis(W: Subspace, U: Subspace) -> Subquotient:
    """Basis of ``W/U`` for ``U`` contained in ``W`` (checked)."""
    if W.ambient_dim != U.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions {W.ambient_dim} and {U.ambient_dim} differ"
        )
    u_coords = []
    for i, u in enumerate(U.vectors()):
        c = W.coordinates(u)
        if c is None:
            raise SubspaceError(
                f"denominator basis vector {i} does not lie in the numerator"
            )
        u_coords.append(c)
    n = W.dim
    u_matrix = SparseMatrix.from_columns(n, u_coords)
    # extend U's coordinates by standard vectors; the standard pivots
    # pick the complement
    stacked = SparseMatrix.hstack(u_matrix, SparseMatrix.identity(n))
    pivots = sorted(eliminate_matrix(stacked, reduce=False).pivots)
    complement = [p - U.dim for p in pivots if p >= U.dim]
    w_vectors = W.vectors()
    lifts = [w_vectors[i] for i in complement]
    return Subquotient(
        W=W,
        U=U,
        dim=len(complement),
        lifts=lifts,
        _u_coords=u_matrix,
        _complement=complement,
    )
