"""Bicomplexes of chain complexes and their totalization."""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Tuple

from totguild.chain import ChainComplex, ChainMap
from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import (DimensionMismatchError, IndexRangeError,
                               NotAChainComplexError)

# (column p, offset in Tot_m, size of C_{p, m-p})
Block = Tuple[int, int, int]


class Bicomplex:
    """Columns ``C_p`` joined by horizontal chain maps ``h_p: C_p -> C_{p-1}``.

    Missing columns are zero. ``h_{p-1} h_p = 0`` is checked exactly.
    """

    def __init__(
        self,
        columns: Mapping[int, ChainComplex],
        horizontal: Optional[Mapping[int, ChainMap]] = None,
        check: bool = True,
    ):
        self._columns: Dict[int, ChainComplex] = {
            int(p): C for p, C in columns.items() if not C.is_zero()
        }
        self._h: Dict[int, ChainMap] = {}
        for p, h in (horizontal or {}).items():
            if h.source != self.column(p) or h.target != self.column(p - 1):
                raise DimensionMismatchError(
                    f"horizontal map h_{p} does not run C_{p} -> C_{p - 1}"
                )
            if not h.is_zero():
                self._h[int(p)] = h
        if check:
            for p in self._h:
                if (p - 1) in self._h and not (self._h[p - 1] @ self._h[p]).is_zero():
                    raise NotAChainComplexError(f"h_{p - 1} h_{p} is not zero")

    def column(self, p: int) -> ChainComplex:
        return self._columns.get(p) or ChainComplex.zero()

    def h(self, p: int) -> ChainMap:
        m = self._h.get(p)
        if m is None:
            return ChainMap.zero(self.column(p), self.column(p - 1))
        return m

    @property
    def columns(self) -> Dict[int, ChainComplex]:
        return dict(self._columns)

    @property
    def horizontal(self) -> Dict[int, ChainMap]:
        return dict(self._h)

    @property
    def column_range(self) -> Tuple[int, int]:
        if not self._columns:
            return (0, -1)
        return (min(self._columns), max(self._columns))

    def cell_dim(self, p: int, q: int) -> int:
        return self.column(p).dim(q)

    def total_degrees(self) -> range:
        if not self._columns:
            return range(0)
        lo = min(p + C.support[0] for p, C in self._columns.items())
        hi = max(p + C.support[1] for p, C in self._columns.items())
        return range(lo, hi + 1)

    def layout(self, m: int) -> List[Block]:
        blocks, offset = [], 0
        for p in sorted(self._columns):
            size = self.cell_dim(p, m - p)
            if size:
                blocks.append((p, offset, size))
                offset += size
        return blocks

    def offsets(self, m: int) -> Dict[int, int]:
        return {p: off for p, off, _ in self.layout(m)}

    def window(self, lo: int, hi: int) -> "Bicomplex":
        """Columns ``lo..hi``, keeping their original indices."""
        if lo > hi:
            raise IndexRangeError(f"empty column window [{lo}, {hi}]")
        return Bicomplex(
            {p: C for p, C in self._columns.items() if lo <= p <= hi},
            {p: h for p, h in self._h.items() if lo < p <= hi},
            check=False,
        )

    def rows(self, upto: int) -> "Bicomplex":
        """Sub-bicomplex of internal degrees ``<= upto``."""
        cut = {p: _truncate_above(C, upto) for p, C in self._columns.items()}
        horizontal = {}
        for p, h in self._h.items():
            comps = {q: m for q, m in h.components.items() if q <= upto}
            horizontal[p] = ChainMap(
                cut[p], cut.get(p - 1, ChainComplex.zero()), comps, check=False
            )
        return Bicomplex(cut, horizontal, check=False)

    def __repr__(self) -> str:
        lo, hi = self.column_range
        return f"Bicomplex(columns=[{lo}, {hi}])"


def _truncate_above(C: ChainComplex, upto: int) -> ChainComplex:
    return ChainComplex(
        {q: v for q, v in C.dims.items() if q <= upto},
        {q: m for q, m in C.differentials.items() if q <= upto},
        check=False,
    )


def total_differential(B: Bicomplex, m: int) -> SparseMatrix:
    """``D = h + (-1)^p d`` on ``Tot_m``."""
    high, low = B.layout(m), B.offsets(m - 1)
    rows = sum(size for _, _, size in B.layout(m - 1))
    cols = sum(size for _, _, size in high)
    entries = {}
    for p, off, _ in high:
        q = m - p
        if (p - 1) in low:
            for (r, c), v in B.h(p).component(q).items():
                entries[(low[p - 1] + r, off + c)] = v
        if p in low:
            sign = -1 if p % 2 else 1
            for (r, c), v in B.column(p).d(q).items():
                entries[(low[p] + r, off + c)] = sign * v
    return SparseMatrix(rows, cols, entries)


def totalize(B: Bicomplex, by: str = "columns"):
    """``(Tot B, filtration)``; the filtration is by column or by row."""
    from .filtration import FilteredComplex

    if by not in ("columns", "rows"):
        raise IndexRangeError(f"unknown filtration {by!r}")
    dims, diffs, levels = {}, {}, {}
    for m in B.total_degrees():
        blocks = B.layout(m)
        dims[m] = sum(size for _, _, size in blocks)
        levels[m] = [
            p if by == "columns" else m - p
            for p, _, size in blocks
            for _ in range(size)
        ]
    for m in B.total_degrees():
        if dims.get(m) and dims.get(m - 1):
            diffs[m] = total_differential(B, m)
    tot = ChainComplex(dims, diffs, check=False)
    logger.debug(f"totalized {B!r} by {by}: dims {tot.dims}")
    return tot, FilteredComplex(tot, levels, check=False)
