"""Totalizing a homotopy chain complex of complexes by iterated cones.

``T_0 = C_0`` and ``T_n = cone(a_n)`` for an attaching map
``a_n: Σ^{n-1} C_n -> T_{n-1}``. Its top component is ``d_n``; the part into
``T_{n-2}`` is a degree-1 map ``y`` from ``Σ^{n-2} C_n`` with
``D(y) = -a_{n-1} d_n``, built from ``h_n`` and corrected in ``T_{n-3}``.
When no correction exists the stage is obstructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from totguild.chain import (ChainComplex, ChainMap, Cone, GradedMap,
                            homotopy_classes, mapping_cone, suspend)
from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import InvalidWitnessError

from .bracket import ObstructionClass, bracket_vanishes
from .simplicial_map import HomotopyChainObject


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass
class TowerStage:
    index: int
    complex: ChainComplex
    cone: Optional[Cone] = None
    attaching: Optional[ChainMap] = None
    phi: Optional[ChainMap] = None

    @property
    def inclusion(self) -> Optional[ChainMap]:
        """``T_{n-1} -> T_n``."""
        return None if self.cone is None else self.cone.inclusion

    @property
    def projection(self) -> Optional[ChainMap]:
        """``T_n -> Σ^n C_n``."""
        return None if self.cone is None else self.cone.projection


@dataclass
class BNTower:
    stages: List[TowerStage]
    brackets: Dict[int, ObstructionClass] = field(default_factory=dict)
    obstruction: Optional[ObstructionClass] = None

    @property
    def totalizable(self) -> bool:
        return self.obstruction is None

    @property
    def final(self) -> ChainComplex:
        return self.stages[-1].complex


def _top_blocks(T: ChainComplex, low: ChainComplex, top: ChainComplex):
    """Inclusion of ``top`` and projection onto ``low`` for ``T = low ⊕ top``."""
    embed, project = {}, {}
    for m in T.dims:
        sizes = [low.dim(m), top.dim(m)]
        if top.dim(m):
            embed[m] = SparseMatrix.block(
                [[None], [SparseMatrix.identity(top.dim(m))]], sizes, [top.dim(m)]
            )
        if low.dim(m):
            project[m] = SparseMatrix.block(
                [[SparseMatrix.identity(low.dim(m)), None]], [low.dim(m)], sizes
            )
    return GradedMap(top, T, 0, embed), GradedMap(T, low, 0, project)


def _attaching_map(
    n: int, C_n: ChainComplex, d_n: ChainMap, y: GradedMap, T_prev: ChainComplex,
    T_prev2: ChainComplex,
) -> ChainMap:
    source = suspend(C_n, n - 1)
    C_prev = d_n.target
    comps = {}
    for m in source.dims:
        q = m - n + 1
        comps[m] = SparseMatrix.block(
            [[y.component(m - 1)], [d_n.component(q)]],
            [T_prev2.dim(m), C_prev.dim(q)],
            [C_n.dim(q)],
        )
    return ChainMap(source, T_prev, comps)


def bn_totalization_tower(X: HomotopyChainObject) -> BNTower:
    """Build ``T_0, T_1, ...`` until the top object or the first obstruction."""
    C0 = X.objects[0]
    stages = [TowerStage(0, C0)]
    tower = BNTower(stages)
    if X.N == 0:
        return tower
    a = X.d(1)
    cone = mapping_cone(a)
    stages.append(TowerStage(1, cone.cone, cone=cone, attaching=a))

    for n in range(2, X.N + 1):
        C_n = X.objects[n]
        P = suspend(C_n, n - 2)
        d_n = X.d(n)
        phi = stages[n - 1].attaching @ d_n.suspend(n - 2)
        T2 = stages[n - 2].complex
        top_complex = suspend(X.objects[n - 2], n - 2)
        y_top = X.h(n).suspend(n - 2, _sign(n + 1))
        target = GradedMap(P, T2, 0, (-phi).components)

        if n == 2:
            y = GradedMap(P, T2, 1, y_top.components)
            if y.boundary() != target:
                raise InvalidWitnessError("h_2 does not witness d_1 d_2 ≃ 0")
        else:
            T3 = stages[n - 3].complex
            embed_top, project_low = _top_blocks(T2, T3, top_complex)
            embed_low = stages[n - 2].inclusion
            y_fixed = embed_top @ y_top
            remainder = target - y_fixed.boundary()
            if not (remainder - embed_low @ (project_low @ remainder)).is_zero():
                raise InvalidWitnessError(f"h_{n} does not witness d_{n - 1} d_{n} ≃ 0")
            shifts = homotopy_classes(P, top_complex, 1).representatives
            generators = [project_low @ (embed_top @ z).boundary() for z in shifts]
            obstruction = ObstructionClass.build(
                n, n, project_low @ remainder, generators
            )
            tower.brackets[n] = obstruction
            vanishes, witness = bracket_vanishes(obstruction)
            if not vanishes:
                logger.info(f"totalization tower obstructed at stage {n}")
                tower.obstruction = obstruction
                return tower
            y = y_fixed + embed_low @ witness.layer
            for c, z in zip(witness.coefficients, shifts):
                if c:
                    y = y + embed_top @ z.scale(c)
            y = GradedMap(P, T2, 1, y.components)

        a = _attaching_map(n, C_n, d_n, y, stages[n - 1].complex, T2)
        cone = mapping_cone(a)
        stages.append(
            TowerStage(n, cone.cone, cone=cone, attaching=a, phi=phi)
        )
        logger.debug(f"stage {n}: dims {cone.cone.dims}")
    return tower
