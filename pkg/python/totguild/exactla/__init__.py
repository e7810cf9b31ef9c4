"""Exact sparse linear algebra over the rationals."""

from .elimination import Solver, rank
from .matrix import Rational, SparseMatrix, Vector, block_diagonal
from .subspace import (Subquotient, Subspace, rank_kernel_image, solve_linear,
                       subquotient_basis)

__all__ = [
    "Rational",
    "Vector",
    "SparseMatrix",
    "block_diagonal",
    "Solver",
    "rank",
    "Subspace",
    "Subquotient",
    "rank_kernel_image",
    "solve_linear",
    "subquotient_basis",
]
