"""Layer calculus for filtered maps of totalizations.

A filtered map ``Tot C -> Tot D`` is a family of layers ``G_j`` sending
column ``p`` to column ``p - j`` and raising internal degree by ``j``.
Layer 0 is ``f``; layer 1 is ``(-1)^{p-1} s_p``. With the column sign
convention of ``totalize`` the family is a chain map iff

    D(G_j(p)) = (-1)^{p-j} (G_{j-1}(p-1) h^C_p - h^D_{p-j+1} G_{j-1}(p))

for every ``j >= 1``.
"""

from __future__ import annotations

from typing import Dict, Iterator, Optional, Tuple

from totguild.chain import ChainMap, GradedMap
from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import IndexRangeError, InvalidWitnessError
from totguild.simpfilt import FilteredMap, totalize

from .simplicial_map import HomotopySimplicialMap


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


class Layers:
    def __init__(
        self,
        fmap: HomotopySimplicialMap,
        higher: Optional[Dict[Tuple[int, int], GradedMap]] = None,
    ):
        self.fmap = fmap
        self._layers: Dict[Tuple[int, int], GradedMap] = {}
        for p, f in fmap.maps.items():
            self._layers[(0, p)] = f
        for p in fmap.witnesses:
            self._layers[(1, p)] = fmap.s(p).scale(_sign(p - 1))
        for (j, p), g in (higher or {}).items():
            if j < 2:
                raise IndexRangeError("layers 0 and 1 come from the map itself")
            self.set(j, p, g)

    def copy(self) -> "Layers":
        out = Layers.__new__(Layers)
        out.fmap = self.fmap
        out._layers = dict(self._layers)
        return out

    def has(self, j: int, p: int) -> bool:
        return (j, p) in self._layers

    def get(self, j: int, p: int) -> GradedMap:
        g = self._layers.get((j, p))
        if g is None:
            return GradedMap(
                self.fmap.source.column(p), self.fmap.target.column(p - j), j
            )
        return g

    def set(self, j: int, p: int, g: GradedMap) -> None:
        if (
            g.degree != j
            or g.source != self.fmap.source.column(p)
            or g.target != self.fmap.target.column(p - j)
        ):
            raise IndexRangeError(f"layer ({j}, {p}) has the wrong shape")
        self._layers[(j, p)] = g

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._layers))

    @property
    def max_order(self) -> int:
        return max((j for j, _ in self._layers), default=0)

    def rhs(self, j: int, p: int) -> GradedMap:
        """What ``D(G_j(p))`` has to equal, a cycle of degree ``j - 1``."""
        hC = self.fmap.source.h(p)
        hD = self.fmap.target.h(p - j + 1)
        value = self.get(j - 1, p - 1) @ hC - hD @ self.get(j - 1, p)
        return value.scale(_sign(p - j))

    def defect(self, j: int, p: int) -> GradedMap:
        return self.get(j, p).boundary() - self.rhs(j, p)

    def check(self, j: int, p: int) -> None:
        if not self.defect(j, p).is_zero():
            raise InvalidWitnessError(f"layer ({j}, {p}) fails its condition")


def layered_map(layers: Layers, lo: int, hi: int) -> FilteredMap:
    """The filtered map on the totalizations of columns ``lo..hi``."""
    fmap = layers.fmap
    C = fmap.source.window(lo, hi)
    D = fmap.target.window(lo, hi)
    _, filtC = totalize(C)
    _, filtD = totalize(D)
    comps = {}
    for m in filtC.total.dims:
        target = D.offsets(m)
        if not target:
            continue
        entries = {}
        for p, off, _ in C.layout(m):
            q = m - p
            for j in range(0, p - lo + 1):
                if not layers.has(j, p) or (p - j) not in target:
                    continue
                for (r, c), v in layers.get(j, p).component(q).items():
                    entries[(target[p - j] + r, off + c)] = v
        comps[m] = SparseMatrix(filtD.total.dim(m), filtC.total.dim(m), entries)
    result = FilteredMap(filtC, filtD, comps)
    logger.debug(f"layered map on columns [{lo}, {hi}]: order {result.order}")
    return result


def gr2_map(fmap: HomotopySimplicialMap, n: int) -> ChainMap:
    """``Tot Gr^2_n C -> Tot Gr^2_n D``: ``(x1, x2) -> (f x1 + G_1 x2, f x2)``.

    The map is assembled from the stage-1 witnesses and checked to be a
    chain map.
    """
    lo, hi = fmap.column_range
    if not lo <= n <= hi:
        raise IndexRangeError(f"column {n} outside [{lo}, {hi}]")
    layers = Layers(fmap)
    return layered_map(layers, max(lo, n - 1), n).as_chain_map()
