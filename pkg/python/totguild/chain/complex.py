"""Bounded chain complexes of finite-dimensional rational vector spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from totguild.exactla import (SparseMatrix, Subquotient, Subspace, Vector,
                              rank, rank_kernel_image, subquotient_basis)
from totguild.logs import logger
from totguild.response import DimensionMismatchError, NotAChainComplexError


class ChainComplex:
    """A complex ``C_n`` with differentials ``d_n: C_n -> C_{n-1}``.

    ``dims`` maps degrees to dimensions (missing degrees are zero);
    ``differentials`` maps ``n`` to the ``dim(n-1) x dim(n)`` matrix of
    ``d_n`` (missing ones are zero). ``d_{n-1} d_n = 0`` is checked.
    """

    def __init__(
        self,
        dims: Mapping[int, int],
        differentials: Optional[Mapping[int, SparseMatrix]] = None,
        check: bool = True,
    ):
        self._dims: Dict[int, int] = {}
        for n, k in dims.items():
            if k < 0:
                raise DimensionMismatchError(f"negative dimension in degree {n}")
            if k:
                self._dims[int(n)] = int(k)
        self._d: Dict[int, SparseMatrix] = {}
        for n, m in (differentials or {}).items():
            expected = (self.dim(n - 1), self.dim(n))
            if m.shape != expected:
                raise DimensionMismatchError(
                    f"d_{n} has shape {m.shape}, expected {expected}"
                )
            if not m.is_zero():
                self._d[int(n)] = m
        if check:
            self._check_square_zero()

    def _check_square_zero(self) -> None:
        for n in self._d:
            if (n - 1) in self._d and not (self._d[n - 1] @ self._d[n]).is_zero():
                raise NotAChainComplexError(f"d_{n - 1} d_{n} is not zero")

    @classmethod
    def zero(cls) -> "ChainComplex":
        return cls({})

    @classmethod
    def concentrated(cls, degree: int, dim: int = 1) -> "ChainComplex":
        return cls({degree: dim})

    def dim(self, n: int) -> int:
        return self._dims.get(n, 0)

    def d(self, n: int) -> SparseMatrix:
        m = self._d.get(n)
        if m is None:
            return SparseMatrix.zeros(self.dim(n - 1), self.dim(n))
        return m

    @property
    def dims(self) -> Dict[int, int]:
        return dict(self._dims)

    @property
    def differentials(self) -> Dict[int, SparseMatrix]:
        return dict(self._d)

    @property
    def support(self) -> Tuple[int, int]:
        if not self._dims:
            return (0, -1)
        return (min(self._dims), max(self._dims))

    def degrees(self) -> range:
        lo, hi = self.support
        return range(lo, hi + 1)

    @property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return not self._dims

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._dims == other._dims and self._d == other._d

    def __hash__(self) -> int:
        return hash((frozenset(self._dims.items()), frozenset(self._d.items())))

    def __repr__(self) -> str:
        lo, hi = self.support
        dims = [self.dim(n) for n in self.degrees()]
        return f"ChainComplex(support=[{lo}, {hi}], dims={dims})"


@dataclass
class Homology:
    degree: int
    dim: int
    representatives: List[Vector]
    quotient: Subquotient

    def class_of(self, cycle: Vector) -> List:
        """Coordinates of a cycle's class in the representative basis."""
        return self.quotient.project(cycle)


def cycles(C: ChainComplex, n: int) -> Subspace:
    if C.dim(n) == 0:
        return Subspace.zero(0)
    _, kernel, _ = rank_kernel_image(C.d(n))
    return kernel


def boundaries(C: ChainComplex, n: int) -> Subspace:
    if C.dim(n) == 0 or C.dim(n + 1) == 0:
        return Subspace.zero(C.dim(n))
    _, _, image = rank_kernel_image(C.d(n + 1))
    return image


def homology(C: ChainComplex, n: int) -> Homology:
    """``H_n(C)`` with representative cycles spanning it."""
    quotient = subquotient_basis(cycles(C, n), boundaries(C, n))
    logger.debug(f"H_{n}: dim {quotient.dim}")
    return Homology(
        degree=n, dim=quotient.dim, representatives=quotient.lifts,
        quotient=quotient,
    )


def betti(C: ChainComplex, n: int) -> int:
    """``dim H_n(C)`` from ranks alone."""
    if C.dim(n) == 0:
        return 0
    return C.dim(n) - rank(C.d(n)) - rank(C.d(n + 1))


def homology_dims(C: ChainComplex) -> Dict[int, int]:
    """Betti numbers over the support; zeros included."""
    ranks = {n: rank(C.d(n)) for n in C.degrees()}
    return {
        n: C.dim(n) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        for n in C.degrees()
    }


def is_acyclic(C: ChainComplex) -> bool:
    return all(v == 0 for v in homology_dims(C).values())


def suspend(C: ChainComplex, k: int) -> ChainComplex:
    """``(Σ^k C)_n = C_{n-k}`` with differential ``(-1)^k d``."""
    if k == 0:
        return C
    sign = -1 if k % 2 else 1
    return ChainComplex(
        {n + k: v for n, v in C.dims.items()},
        {n + k: m.scale(sign) for n, m in C.differentials.items()},
        check=False,
    )


def direct_sum(*complexes: ChainComplex) -> ChainComplex:
    """Blockwise direct sum, summands in argument order."""
    from totguild.exactla import block_diagonal

    degrees = set()
    for C in complexes:
        degrees.update(C.dims)
    dims = {n: sum(C.dim(n) for C in complexes) for n in degrees}
    diffs = {
        n: block_diagonal(*(C.d(n) for C in complexes))
        for n in degrees
        if any(not C.d(n).is_zero() for C in complexes)
    }
    return ChainComplex(dims, diffs, check=False)
