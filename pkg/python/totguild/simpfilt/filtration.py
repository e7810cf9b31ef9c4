"""Coordinate filtrations, their subquotients and filtered maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

from totguild.chain import ChainComplex, ChainMap
from totguild.exactla import SparseMatrix, Subquotient, Subspace, subquotient_basis
from totguild.logs import logger
from totguild.response import (DimensionMismatchError, IndexRangeError,
                               InputError)


class FilteredComplex:
    """A complex whose basis vectors carry filtration levels.

    ``F_p`` in degree ``m`` is spanned by the basis vectors of level ``<= p``;
    the differential must not raise levels.
    """

    def __init__(
        self,
        total: ChainComplex,
        levels: Mapping[int, Sequence[int]],
        check: bool = True,
    ):
        self.total = total
        self.levels: Dict[int, List[int]] = {}
        for m in total.dims:
            lv = list(levels.get(m, ()))
            if len(lv) != total.dim(m):
                raise DimensionMismatchError(
                    f"{len(lv)} levels for a degree-{m} space of dimension "
                    f"{total.dim(m)}"
                )
            self.levels[m] = lv
        if check:
            self._check_preserved()

    def _check_preserved(self) -> None:
        for m, d in self.total.differentials.items():
            src, tgt = self.levels[m], self.levels[m - 1]
            for (r, c), _ in d.items():
                if tgt[r] > src[c]:
                    raise InputError(
                        f"differential raises filtration in degree {m}"
                    )

    def level(self, m: int, i: int) -> int:
        return self.levels[m][i]

    @property
    def bounds(self) -> tuple:
        values = [v for lv in self.levels.values() for v in lv]
        if not values:
            return (0, -1)
        return (min(values), max(values))

    @property
    def length(self) -> int:
        lo, hi = self.bounds
        return hi - lo

    def indices(self, p: int, m: int) -> List[int]:
        return [i for i, v in enumerate(self.levels.get(m, ())) if v <= p]

    def stage(self, p: int, m: int) -> Subspace:
        """``F_p`` in degree ``m``."""
        return Subspace.coordinate(self.total.dim(m), self.indices(p, m))

    def subcomplex(self, p: int) -> ChainComplex:
        """``F_p`` as a complex in its own coordinates."""
        keep = {m: self.indices(p, m) for m in self.total.dims}
        dims = {m: len(ix) for m, ix in keep.items()}
        diffs = {
            m: d.submatrix(keep.get(m - 1, []), keep[m])
            for m, d in self.total.differentials.items()
        }
        return ChainComplex(dims, diffs, check=False)

    def shifted(self, delta: int) -> "FilteredComplex":
        return FilteredComplex(
            self.total,
            {m: [v + delta for v in lv] for m, lv in self.levels.items()},
            check=False,
        )

    def __repr__(self) -> str:
        lo, hi = self.bounds
        return f"FilteredComplex(levels=[{lo}, {hi}], total={self.total!r})"


@dataclass
class FilteredQuotient:
    """``F_n / F_{n-l}`` with the data to move between it and the total."""

    filtration: FilteredComplex
    top: int
    length: int
    complex: ChainComplex
    quotients: Dict[int, Subquotient]

    def lift_matrix(self, m: int) -> SparseMatrix:
        """Columns are lifts of the quotient basis in degree ``m``."""
        q = self.quotients.get(m)
        if q is None:
            return SparseMatrix.zeros(self.filtration.total.dim(m), 0)
        return SparseMatrix.from_columns(self.filtration.total.dim(m), q.lifts)

    def project(self, m: int, vector: Sequence[object]) -> List:
        """Class of a vector of ``F_n`` in degree ``m``."""
        q = self.quotients.get(m)
        if q is None:
            return []
        return q.project(vector)

    def basis_indices(self, m: int) -> List[int]:
        """Total-complex indices of the (standard) lifts in degree ``m``."""
        lv = self.filtration.levels.get(m, ())
        low = self.top - self.length
        return [i for i, v in enumerate(lv) if low < v <= self.top]


def gr_subquotient(filt: FilteredComplex, l: int, n: int) -> FilteredQuotient:
    """``Gr^l_n = F_n / F_{n-l}`` as an explicit complex."""
    lo, hi = filt.bounds
    if l < 1 or n - l < lo - 1 or n > hi:
        raise IndexRangeError(
            f"Gr^{l}_{n} is outside the filtration range [{lo}, {hi}]"
        )
    quotients: Dict[int, Subquotient] = {}
    for m in filt.total.dims:
        quotients[m] = subquotient_basis(filt.stage(n, m), filt.stage(n - l, m))
    dims = {m: q.dim for m, q in quotients.items()}
    diffs = {}
    for m, d in filt.total.differentials.items():
        if not dims.get(m) or not dims.get(m - 1):
            continue
        columns = [quotients[m - 1].project(d.apply(v)) for v in quotients[m].lifts]
        diffs[m] = SparseMatrix.from_columns(dims[m - 1], columns)
    complex_ = ChainComplex(dims, diffs, check=False)
    logger.debug(f"Gr^{l}_{n}: dims {complex_.dims}")
    return FilteredQuotient(
        filtration=filt, top=n, length=l, complex=complex_, quotients=quotients
    )


class FilteredMap:
    """A filtration-preserving degree-0 map between filtered complexes.

    It need not be a chain map: ``order`` is how far the defect
    ``D F - F D`` drops filtration (``None`` when the defect is zero). Such a
    map induces chain maps on every ``Gr^l`` with ``l <= order``.
    """

    def __init__(
        self,
        source: FilteredComplex,
        target: FilteredComplex,
        components: Mapping[int, SparseMatrix],
        order: Optional[int] = None,
    ):
        self.source = source
        self.target = target
        self._components: Dict[int, SparseMatrix] = {}
        for m, mat in components.items():
            expected = (target.total.dim(m), source.total.dim(m))
            if mat.shape != expected:
                raise DimensionMismatchError(
                    f"component {m} has shape {mat.shape}, expected {expected}"
                )
            for (r, c), _ in mat.items():
                if target.levels[m][r] > source.levels[m][c]:
                    raise InputError(
                        f"map raises filtration in degree {m}"
                    )
            if not mat.is_zero():
                self._components[int(m)] = mat
        self.defect_order = self._defect_order()
        if order is not None and self.defect_order is not None and order > self.defect_order:
            raise InputError(
                f"declared order {order} exceeds the defect order "
                f"{self.defect_order}"
            )
        self.order = order if order is not None else self.defect_order

    @classmethod
    def from_chain_map(
        cls, f: ChainMap, source: FilteredComplex, target: FilteredComplex
    ) -> "FilteredMap":
        return cls(source, target, f.components)

    @classmethod
    def identity(cls, filt: FilteredComplex) -> "FilteredMap":
        return cls(
            filt, filt,
            {m: SparseMatrix.identity(v) for m, v in filt.total.dims.items()},
        )

    def component(self, m: int) -> SparseMatrix:
        mat = self._components.get(m)
        if mat is None:
            return SparseMatrix.zeros(
                self.target.total.dim(m), self.source.total.dim(m)
            )
        return mat

    @property
    def components(self) -> Dict[int, SparseMatrix]:
        return dict(self._components)

    def defect(self, m: int) -> SparseMatrix:
        """``D F - F D`` from degree ``m`` to ``m - 1``."""
        return (
            self.target.total.d(m) @ self.component(m)
            - self.component(m - 1) @ self.source.total.d(m)
        )

    def _defect_order(self) -> Optional[int]:
        best = None
        for m in self.source.total.dims:
            if not self.target.total.dim(m - 1):
                continue
            for (r, c), _ in self.defect(m).items():
                drop = self.source.levels[m][c] - self.target.levels[m - 1][r]
                best = drop if best is None else min(best, drop)
        return best

    def is_chain_map(self) -> bool:
        return self.defect_order is None

    def as_chain_map(self) -> ChainMap:
        return ChainMap(self.source.total, self.target.total, self._components)

    def on_quotients(
        self, source: FilteredQuotient, target: FilteredQuotient
    ) -> ChainMap:
        """The induced chain map ``Gr^l_n`` of source to that of target."""
        if source.length != target.length or source.top != target.top:
            raise IndexRangeError("subquotients of different shape")
        if self.order is not None and self.order < source.length:
            raise InputError(
                f"map of order {self.order} does not act on Gr^{source.length}"
            )
        comps = {}
        for m, q in source.quotients.items():
            if not q.dim or not target.complex.dim(m):
                continue
            columns = [
                target.project(m, self.component(m).apply(v)) for v in q.lifts
            ]
            comps[m] = SparseMatrix.from_columns(target.complex.dim(m), columns)
        return ChainMap(source.complex, target.complex, comps)

    def __repr__(self) -> str:
        return f"FilteredMap(order={self.order})"
