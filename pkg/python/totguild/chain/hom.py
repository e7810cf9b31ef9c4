"""The Hom-complex ``Hom(C, D)``, nullhomotopies and homotopy classes.

``Hom(C, D)_k = ∏_n Hom(C_n, D_{n+k})`` with differential
``φ ↦ d φ - (-1)^k φ d``. A degree-k vector lists the components by
ascending ``n``, each matrix flattened row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from totguild.exactla import (SparseMatrix, Subquotient, Subspace, Vector,
                              rank_kernel_image, solve_linear,
                              subquotient_basis)
from totguild.logs import logger
from totguild.response import DimensionMismatchError, SubspaceError

from .complex import ChainComplex
from .maps import ChainHomotopy, ChainMap, GradedMap

# (source degree n, offset, target rows, source cols)
Block = Tuple[int, int, int, int]


class HomComplex:
    def __init__(self, source: ChainComplex, target: ChainComplex):
        self.source = source
        self.target = target
        self._layouts: Dict[int, Tuple[List[Block], int]] = {}
        self._diffs: Dict[int, SparseMatrix] = {}

    @property
    def support(self) -> Tuple[int, int]:
        slo, shi = self.source.support
        tlo, thi = self.target.support
        if self.source.is_zero() or self.target.is_zero():
            return (0, -1)
        return (tlo - shi, thi - slo)

    def layout(self, k: int) -> Tuple[List[Block], int]:
        if k not in self._layouts:
            blocks, offset = [], 0
            for n in self.source.degrees():
                rows, cols = self.target.dim(n + k), self.source.dim(n)
                if rows and cols:
                    blocks.append((n, offset, rows, cols))
                    offset += rows * cols
            self._layouts[k] = (blocks, offset)
        return self._layouts[k]

    def dim(self, k: int) -> int:
        return self.layout(k)[1]

    def _offsets(self, k: int) -> Dict[int, Block]:
        return {b[0]: b for b in self.layout(k)[0]}

    def index(self, k: int, n: int, i: int, j: int) -> int:
        """Vector index of the matrix unit ``E_ij`` in component ``n``."""
        _, offset, _, cols = self._offsets(k)[n]
        return offset + i * cols + j

    def coordinates(self, k: int) -> List[Tuple[int, int, int]]:
        """``(n, i, j)`` for every index of a degree-k vector."""
        out = []
        for n, _, rows, cols in self.layout(k)[0]:
            out.extend((n, i, j) for i in range(rows) for j in range(cols))
        return out

    def vectorize(self, phi: GradedMap) -> Vector:
        k = phi.degree
        vec = [Fraction(0)] * self.dim(k)
        blocks = self._offsets(k)
        for n, m in phi.components.items():
            if n not in blocks:
                raise DimensionMismatchError(f"no Hom block for degree {n}")
            _, offset, _, cols = blocks[n]
            for (i, j), v in m.items():
                vec[offset + i * cols + j] = v
        return vec

    def devectorize(self, vec: Sequence[object], k: int) -> GradedMap:
        if len(vec) != self.dim(k):
            raise DimensionMismatchError(
                f"vector of length {len(vec)} for Hom degree {k} of "
                f"dimension {self.dim(k)}"
            )
        comps = {}
        for n, offset, rows, cols in self.layout(k)[0]:
            entries = {}
            for i in range(rows):
                base = offset + i * cols
                for j in range(cols):
                    v = vec[base + j]
                    if v:
                        entries[(i, j)] = v
            if entries:
                comps[n] = SparseMatrix(rows, cols, entries)
        return GradedMap(self.source, self.target, k, comps)

    def differential(self, k: int) -> SparseMatrix:
        """Matrix of ``Hom_k -> Hom_{k-1}``."""
        if k in self._diffs:
            return self._diffs[k]
        sign = -1 if k % 2 else 1
        low = self._offsets(k - 1)
        entries: Dict[Tuple[int, int], Fraction] = {}
        for n, offset, rows, cols in self.layout(k)[0]:
            # d^D_{n+k} ∘ E_ij = Σ_r d[r, i] E_rj in component n
            if n in low:
                _, loff, _, lcols = low[n]
                for (r, i), v in self.target.d(n + k).items():
                    for j in range(cols):
                        entries[(loff + r * lcols + j, offset + i * cols + j)] = v
            # -(-1)^k E_ij ∘ d^C_{n+1} = Σ_c d[j, c] E_ic in component n+1
            if (n + 1) in low:
                _, loff, _, lcols = low[n + 1]
                for (j, c), v in self.source.d(n + 1).items():
                    for i in range(rows):
                        entries[(loff + i * lcols + c, offset + i * cols + j)] = -sign * v
        matrix = SparseMatrix(self.dim(k - 1), self.dim(k), entries)
        self._diffs[k] = matrix
        logger.debug(f"Hom differential in degree {k}: {matrix.shape}")
        return matrix

    def as_complex(self) -> ChainComplex:
        lo, hi = self.support
        dims = {k: self.dim(k) for k in range(lo, hi + 1)}
        diffs = {k: self.differential(k) for k in range(lo + 1, hi + 1)}
        return ChainComplex(dims, diffs, check=False)

    def boundary_preimage(self, phi: GradedMap) -> Optional[GradedMap]:
        """Some ``ψ`` with ``D ψ = φ``, or None."""
        k = phi.degree
        x = solve_linear(self.differential(k + 1), self.vectorize(phi))
        if x is None:
            return None
        return self.devectorize(x, k + 1)

    def cycles(self, k: int) -> Subspace:
        _, kernel, _ = rank_kernel_image(self.differential(k))
        return kernel

    def boundaries(self, k: int) -> Subspace:
        _, _, image = rank_kernel_image(self.differential(k + 1))
        return image


@dataclass
class HomotopyClassSpace:
    """``H_shift(Hom(C, D))``: homotopy classes of maps ``Σ^shift C -> D``."""

    hom: HomComplex
    shift: int
    dim: int
    representatives: List[GradedMap]
    quotient: Subquotient

    @property
    def source(self) -> ChainComplex:
        return self.hom.source

    @property
    def target(self) -> ChainComplex:
        return self.hom.target

    def class_of(self, phi: GradedMap) -> List[Fraction]:
        """Coordinates of the class of a cycle ``φ``."""
        if phi.degree != self.shift:
            raise DimensionMismatchError(
                f"map of degree {phi.degree} in classes of degree {self.shift}"
            )
        try:
            return self.quotient.project(self.hom.vectorize(phi))
        except SubspaceError:
            raise SubspaceError("map is not a cycle of the Hom-complex")

    def is_nullhomotopic(self, phi: GradedMap) -> bool:
        return not any(self.class_of(phi))


def homotopy_classes(
    C: ChainComplex, D: ChainComplex, shift: int = 0
) -> HomotopyClassSpace:
    hom = HomComplex(C, D)
    quotient = subquotient_basis(hom.cycles(shift), hom.boundaries(shift))
    reps = [hom.devectorize(v, shift) for v in quotient.lifts]
    logger.debug(f"[Σ^{shift} C, D] has dimension {quotient.dim}")
    return HomotopyClassSpace(
        hom=hom, shift=shift, dim=quotient.dim, representatives=reps,
        quotient=quotient,
    )


def nullhomotopy(f: ChainMap) -> Optional[ChainHomotopy]:
    """A witness ``s`` with ``f = d s + s d``, or None when none exists."""
    s = HomComplex(f.source, f.target).boundary_preimage(f)
    if s is None:
        return None
    return ChainHomotopy(f, ChainMap.zero(f.source, f.target), s)
