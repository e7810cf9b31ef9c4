"""Burghelea's decomposition of the cyclic bar construction of a finite group."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Sequence, Tuple

from totguild.chain import (ChainComplex, ChainMap, homology_dims,
                            induced_rank)
from totguild.exactla import SparseMatrix
from totguild.logs import logger

from .cyclic import CyclicSetTrunc
from .finite import FiniteGroup
from .hochschild import hochschild_complex


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def bar_cells(elements: Sequence[int], n: int) -> List[Tuple[int, ...]]:
    return list(product(elements, repeat=n))


def bar_complex(G: FiniteGroup, subgroup: Sequence[int], N: int) -> ChainComplex:
    """Chains on the nerve ``B H`` of a subgroup, degrees ``0..N``."""
    cells = [bar_cells(subgroup, n) for n in range(N + 1)]
    index = [{c: i for i, c in enumerate(cs)} for cs in cells]
    diffs = {}
    for n in range(1, N + 1):
        entries: Dict[Tuple[int, int], int] = {}
        for col, c in enumerate(cells[n]):
            for i in range(n + 1):
                if i == 0:
                    face = c[1:]
                elif i == n:
                    face = c[:-1]
                else:
                    face = c[: i - 1] + (G.mul(c[i - 1], c[i]),) + c[i + 1:]
                key = (index[n - 1][face], col)
                entries[key] = entries.get(key, 0) + _sign(i)
        diffs[n] = SparseMatrix(len(cells[n - 1]), len(cells[n]), entries)
    return ChainComplex({n: len(c) for n, c in enumerate(cells)}, diffs)


def decompose(G: FiniteGroup, cell: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """``(g_0, ..., g_n) -> (g_1 ... g_n g_0; [g_1, ..., g_n])``."""
    rest = tuple(cell[1:])
    return G.mul(G.product(rest), cell[0]), rest


def compose(G: FiniteGroup, x: int, bar: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of ``decompose``."""
    g0 = G.mul(G.inv(G.product(bar)), x)
    return (g0,) + tuple(bar)


def coset_map(G: FiniteGroup, y: int) -> Dict[FrozenSet[int], int]:
    """``C_y g -> g⁻¹ y g``, a bijection onto the conjugacy class of ``y``."""
    C = G.centralizer(y)
    out = {}
    for g in range(G.order):
        coset = frozenset(G.mul(c, g) for c in C)
        out.setdefault(coset, G.conjugate(y, g))
    return out


@dataclass
class BurgheleaMaps:
    group: FiniteGroup
    y: int
    N: int
    centralizer: List[int]
    cosets: Dict[FrozenSet[int], int]
    bar: ChainComplex
    component: ChainComplex
    chain_map: ChainMap
    cell_maps: Dict[int, Dict[Tuple[int, ...], Tuple[int, ...]]]

    def is_injective(self) -> bool:
        return all(len(set(m.values())) == len(m) for m in self.cell_maps.values())

    def homology_ranks(self) -> List[int]:
        return [induced_rank(self.chain_map, n) for n in range(self.N)]

    def is_homology_isomorphism(self) -> bool:
        """Rank of the induced map equals both homology dimensions below ``N``."""
        bar = homology_dims(self.bar)
        comp = homology_dims(self.component)
        return all(
            r == bar.get(n, 0) == comp.get(n, 0)
            for n, r in enumerate(self.homology_ranks())
        )


def burghelea_maps(G: FiniteGroup, y: int, N: int) -> BurgheleaMaps:
    """``B C_y -> N^cy(G)_<y>``, ``[c_1..c_n] -> (y (c_1...c_n)⁻¹, c_1, ..., c_n)``."""
    X = CyclicSetTrunc(G, N)
    key = G.class_of(y)
    comp_cells = [
        [X.cells(n)[i] for i in X.components(n).get(key, [])] for n in range(N + 1)
    ]
    comp_index = [{c: i for i, c in enumerate(cs)} for cs in comp_cells]
    C = G.centralizer(y)
    bar = bar_complex(G, C, N)
    component = hochschild_complex(X, component=key)
    cell_maps = {}
    comps = {}
    for n in range(N + 1):
        cells = bar_cells(C, n)
        mapping = {c: compose(G, y, c) for c in cells}
        cell_maps[n] = mapping
        comps[n] = SparseMatrix(
            len(comp_cells[n]), len(cells),
            {(comp_index[n][mapping[c]], col): 1 for col, c in enumerate(cells)},
        )
    chain_map = ChainMap(bar, component, comps)
    logger.debug(f"Burghelea map for y={G.names[y]} up to degree {N}")
    return BurgheleaMaps(
        group=G, y=y, N=N, centralizer=C, cosets=coset_map(G, y), bar=bar,
        component=component, chain_map=chain_map, cell_maps=cell_maps,
    )


def conjugation_map(G: FiniteGroup, h: int, N: int, component: int) -> ChainMap:
    """Conjugation by ``h`` on the Hochschild complex of one component."""
    X = CyclicSetTrunc(G, N)
    C = hochschild_complex(X, component=component)
    comps = {}
    for n in range(N + 1):
        idx = X.components(n).get(component, [])
        local = {X.cells(n)[i]: k for k, i in enumerate(idx)}
        entries = {}
        for k, i in enumerate(idx):
            image = tuple(G.conjugate(g, h) for g in X.cells(n)[i])
            entries[(local[image], k)] = 1
        comps[n] = SparseMatrix(len(idx), len(idx), entries)
    return ChainMap(C, C, comps)
