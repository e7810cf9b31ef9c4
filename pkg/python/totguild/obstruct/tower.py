"""Extending a homotopy simplicial map across ``Gr^k`` layer by layer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from totguild.chain import ChainMap, GradedMap, HomComplex, homotopy_classes
from totguild.exactla import SparseMatrix, Solver
from totguild.logs import logger
from totguild.response import IndexRangeError
from totguild.simpfilt import FilteredMap

from .bracket import ObstructionClass, toda_bracket
from .layers import Layers, layered_map
from .simplicial_map import HomotopySimplicialMap


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass
class ExtensionResult:
    """Outcome of ``extend_tower``: a chain map, or the first failing bracket."""

    order: int
    start: int
    layers: Layers
    map: Optional[ChainMap] = None
    filtered: Optional[FilteredMap] = None
    failure: Optional[ObstructionClass] = None

    @property
    def ok(self) -> bool:
        return self.map is not None


class _LayerSystem:
    """Joint linear system for layer ``j`` over columns ``first..last``.

    Unknowns are the layer ``j`` maps followed by coefficients of cycle
    shifts of layer ``j - 1``; equations are ordered by column.
    """

    def __init__(self, layers: Layers, j: int, first: int, last: int):
        fmap = layers.fmap
        self.layers = layers
        self.j = j
        self.columns = list(range(first, last + 1))
        self.homs: Dict[int, HomComplex] = {
            p: HomComplex(fmap.source.column(p), fmap.target.column(p - j))
            for p in self.columns
        }
        # cycle shifts of G_{j-1}(p') feed the equations at p' and p' + 1
        self.shifts: List[Tuple[int, GradedMap]] = []
        for p in range(first - 1, last + 1):
            reps = homotopy_classes(
                fmap.source.column(p), fmap.target.column(p - j + 1), j - 1
            ).representatives
            self.shifts.extend((p, z) for z in reps)

        self.row_offsets: Dict[int, int] = {}
        self.col_offsets: Dict[int, int] = {}
        rows = cols = 0
        for p in self.columns:
            self.row_offsets[p] = rows
            self.col_offsets[p] = cols
            rows += self.homs[p].dim(j - 1)
            cols += self.homs[p].dim(j)
        self.nrows, self.nlayer = rows, cols

        entries = {}
        for p in self.columns:
            ro, co = self.row_offsets[p], self.col_offsets[p]
            for (r, c), v in self.homs[p].differential(j).items():
                entries[(ro + r, co + c)] = v
        for t, (p, z) in enumerate(self.shifts):
            for target, term in self._shift_terms(p, z):
                ro = self.row_offsets[target]
                for i, v in enumerate(self.homs[target].vectorize(term)):
                    if v:
                        # D(G_j) = rhs + shift terms, so shifts move left
                        entries[(ro + i, self.nlayer + t)] = -v
        self.matrix = SparseMatrix(
            self.nrows, self.nlayer + len(self.shifts), entries
        )

    def _shift_terms(self, p: int, z: GradedMap):
        fmap, j = self.layers.fmap, self.j
        if p + 1 in self.row_offsets:
            yield p + 1, (z @ fmap.source.h(p + 1)).scale(_sign(p + 1 - j))
        if p in self.row_offsets:
            yield p, (fmap.target.h(p - j + 1) @ z).scale(-_sign(p - j))

    def rhs(self) -> List:
        out = []
        for p in self.columns:
            out.extend(self.homs[p].vectorize(self.layers.rhs(self.j, p)))
        return out

    def first_failure(self, rhs: List) -> int:
        """Smallest column whose equations make the prefix system infeasible."""
        for p in self.columns:
            end = self.row_offsets[p] + self.homs[p].dim(self.j - 1)
            prefix = self.matrix.submatrix(range(end), range(self.matrix.cols))
            if Solver(prefix).solve(rhs[:end]) is None:
                return p
        return self.columns[-1]

    def apply(self, x: List) -> None:
        j = self.j
        for p in self.columns:
            co = self.col_offsets[p]
            chunk = x[co: co + self.homs[p].dim(j)]
            self.layers.set(j, p, self.homs[p].devectorize(chunk, j))
        for t, (p, z) in enumerate(self.shifts):
            c = x[self.nlayer + t]
            if c:
                self.layers.set(j - 1, p, self.layers.get(j - 1, p) + z.scale(c))


def extend_tower(
    fmap: HomotopySimplicialMap, k: int, n: int
) -> ExtensionResult:
    """Extend ``f`` to a chain map on the totalization of columns ``n..n+k-1``.

    Layers ``2..k-1`` are solved one order at a time, each jointly over all
    columns and allowing cycle shifts of the previous layer. When a layer
    has no solution the bracket at the first infeasible column is returned.
    """
    if k < 1:
        raise IndexRangeError(f"order must be at least 1, got {k}")
    last = n + k - 1
    layers = Layers(fmap)
    for j in range(2, k):
        system = _LayerSystem(layers, j, n + j, last)
        rhs = system.rhs()
        x = Solver(system.matrix).solve(rhs) if system.nrows else []
        if x is None:
            p = system.first_failure(rhs)
            failure = toda_bracket(fmap, j, p - j, layers)
            logger.info(f"extension of order {k} at {n} fails at T({j},{p - j})")
            return ExtensionResult(k, n, layers, failure=failure)
        system.apply(x)
    filtered = layered_map(layers, n, last)
    logger.info(f"extended map over columns [{n}, {last}]")
    return ExtensionResult(
        k, n, layers, map=filtered.as_chain_map(), filtered=filtered
    )


def assemble_filtered_map(
    fmap: HomotopySimplicialMap, layers: Optional[Layers] = None
) -> FilteredMap:
    """All available layers as one filtered map of the full totalizations."""
    lo, hi = fmap.column_range
    return layered_map(layers or Layers(fmap), lo, hi)
