"""Hochschild and cyclic complexes of cell algebras, and Connes' operator."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple, Union

from totguild.chain import ChainComplex, homology_dims
from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import IndexRangeError

from .cells import Cell, CellAlgebra
from .cyclic import CyclicSetTrunc
from .finite import FiniteGroup


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _as_cyclic(source, N: int) -> CyclicSetTrunc:
    if isinstance(source, CyclicSetTrunc):
        return source
    return CyclicSetTrunc(source, N)


def hochschild_boundary(X: CyclicSetTrunc, n: int, cells: Optional[List[int]] = None,
                        targets: Optional[Dict[Cell, int]] = None) -> SparseMatrix:
    """``b = Σ (-1)^i ∂_i`` from degree ``n``, optionally on a subset of cells."""
    src = cells if cells is not None else range(X.count(n))
    if targets is None:
        targets = {c: i for i, c in enumerate(X.cells(n - 1))}
    entries: Dict[Tuple[int, int], int] = {}
    for col, idx in enumerate(src):
        c = X.cells(n)[idx]
        for i in range(n + 1):
            key = (targets[X.face(i, c)], col)
            entries[key] = entries.get(key, 0) + _sign(i)
    return SparseMatrix(len(targets), len(src), entries)


def hochschild_complex(
    source: Union[CyclicSetTrunc, CellAlgebra, FiniteGroup],
    N: int = 0,
    component: Optional[Hashable] = None,
) -> ChainComplex:
    """``C_n = Q[cells_n]`` with ``b``, on one component when one is given."""
    X = _as_cyclic(source, N)
    picks = [_pick(X, n, component) for n in range(X.N + 1)]
    dims = {n: len(p) for n, p in enumerate(picks)}
    diffs = {}
    for n in range(1, X.N + 1):
        targets = {X.cells(n - 1)[j]: k for k, j in enumerate(picks[n - 1])}
        diffs[n] = hochschild_boundary(X, n, picks[n], targets)
    return ChainComplex(dims, diffs, check=False)


def _pick(X: CyclicSetTrunc, n: int, component: Optional[Hashable]) -> List[int]:
    if component is None:
        return list(range(X.count(n)))
    return X.components(n).get(component, [])


@dataclass
class ConnesQuotient:
    """``C^λ_n = C_n / (1 - λ)``, ``λ = (-1)^n t``, one basis vector per surviving orbit."""

    orbits: Dict[int, List[int]]
    # cell index -> (orbit position, sign of the cell's class)
    classes: Dict[int, Dict[int, Tuple[int, int]]]
    complex: ChainComplex


def _orbits(X: CyclicSetTrunc, n: int, cells: List[int]):
    reps: List[int] = []
    where: Dict[int, Tuple[int, int]] = {}
    seen = set()
    for idx in cells:
        if idx in seen:
            continue
        # walk the t-orbit; the class of t^j e is (-1)^{nj} [e]
        orbit = []
        c = X.cells(n)[idx]
        for j in range(n + 1):
            k = X.index(n, c)
            if k in seen:
                break
            seen.add(k)
            orbit.append((k, j))
            c = X.t(c)
        size = len(orbit)
        if (n * size) % 2:
            for k, _ in orbit:
                where[k] = (-1, 0)
            continue
        pos = len(reps)
        reps.append(idx)
        for k, j in orbit:
            where[k] = (pos, _sign(n * j))
    return reps, where


def connes_complex(
    source: Union[CyclicSetTrunc, CellAlgebra, FiniteGroup],
    N: int = 0,
    component: Optional[Hashable] = None,
) -> ConnesQuotient:
    X = _as_cyclic(source, N)
    orbits, classes = {}, {}
    for n in range(X.N + 1):
        orbits[n], classes[n] = _orbits(X, n, _pick(X, n, component))
    dims = {n: len(r) for n, r in orbits.items()}
    diffs = {}
    for n in range(1, X.N + 1):
        entries: Dict[Tuple[int, int], int] = {}
        for col, idx in enumerate(orbits[n]):
            c = X.cells(n)[idx]
            for i in range(n + 1):
                pos, sign = classes[n - 1][X.index(n - 1, X.face(i, c))]
                if pos < 0:
                    continue
                key = (pos, col)
                entries[key] = entries.get(key, 0) + _sign(i) * sign
        diffs[n] = SparseMatrix(dims[n - 1], dims[n], entries)
    return ConnesQuotient(orbits, classes, ChainComplex(dims, diffs, check=False))


def _lambda(X: CyclicSetTrunc, n: int, vec: Dict[Cell, int]) -> Dict[Cell, int]:
    out: Dict[Cell, int] = {}
    for c, v in vec.items():
        tc = X.t(c)
        out[tc] = out.get(tc, 0) + _sign(n) * v
    return out


def connes_operator(X: CyclicSetTrunc, n: int) -> SparseMatrix:
    """``B = (1 - λ) s N`` from degree ``n`` to ``n + 1``."""
    if n + 1 > X.N:
        raise IndexRangeError(f"B from degree {n} leaves the truncation {X.N}")
    entries: Dict[Tuple[int, int], int] = {}
    for col, c in enumerate(X.cells(n)):
        norm: Dict[Cell, int] = {c: 1}
        term = {c: 1}
        for _ in range(n):
            term = _lambda(X, n, term)
            for k, v in term.items():
                norm[k] = norm.get(k, 0) + v
        lifted = {X.extra_degeneracy(k): v for k, v in norm.items() if v}
        rotated = _lambda(X, n + 1, lifted)
        for k, v in list(lifted.items()) + [(k, -v) for k, v in rotated.items()]:
            key = (X.index(n + 1, k), col)
            entries[key] = entries.get(key, 0) + v
    return SparseMatrix(X.count(n + 1), X.count(n), entries)


@dataclass
class CyclicHomology:
    N: int
    hochschild: ChainComplex
    connes: ConnesQuotient
    B: Dict[int, SparseMatrix] = field(default_factory=dict)

    @property
    def hh_dims(self) -> List[int]:
        """``dim HH_n`` for ``n < N``; degree ``N`` is cut off by the truncation."""
        dims = homology_dims(self.hochschild)
        return [dims.get(n, 0) for n in range(self.N)]

    @property
    def hc_dims(self) -> List[int]:
        dims = homology_dims(self.connes.complex)
        return [dims.get(n, 0) for n in range(self.N)]


def cyclic_homology(
    source: Union[CyclicSetTrunc, CellAlgebra, FiniteGroup],
    N: int = 0,
    component: Optional[Hashable] = None,
    with_B: bool = False,
) -> CyclicHomology:
    """Hochschild and cyclic homology in degrees ``< N`` through the Connes quotient."""
    X = _as_cyclic(source, N)
    result = CyclicHomology(
        N=X.N,
        hochschild=hochschild_complex(X, component=component),
        connes=connes_complex(X, component=component),
    )
    if with_B:
        result.B = {n: connes_operator(X, n) for n in range(X.N)}
    logger.info(
        f"cyclic bar to degree {X.N - 1}: Hochschild dims {result.hochschild.dims}, "
        f"Connes dims {result.connes.complex.dims}"
    )
    return result


def component_dims(X: CyclicSetTrunc) -> Dict[Hashable, List[int]]:
    """Hochschild homology dimensions per component, degrees ``< N``."""
    out = {}
    for key in X.component_keys():
        dims = homology_dims(hochschild_complex(X, component=key))
        out[key] = [dims.get(n, 0) for n in range(X.N)]
    return out
