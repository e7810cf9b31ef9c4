"""Toda brackets of a homotopy simplicial map and their vanishing."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from totguild.chain import (ChainComplex, ChainMap, GradedMap, HomComplex,
                            HomotopyClassSpace, homotopy_classes, suspend)
from totguild.exactla import (SparseMatrix, Solver, Subspace,
                              subquotient_basis)
from totguild.logs import logger
from totguild.response import (IndexRangeError, InvalidWitnessError,
                               PreconditionError)

from .layers import Layers
from .simplicial_map import HomotopySimplicialMap


@dataclass
class BracketWitness:
    """``D(layer) + Σ c_i g_i = representative`` for the indeterminacy generators ``g_i``."""

    layer: GradedMap
    coefficients: List[Fraction]


@dataclass
class ObstructionClass:
    """A class in ``[Σ^degree C, D]`` modulo the span of ``generators``."""

    order: int
    position: int
    representative: GradedMap
    generators: List[GradedMap]
    classes: HomotopyClassSpace = field(repr=False)
    indeterminacy: Subspace = field(repr=False)
    coordinates: List[Fraction] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.representative.degree

    @property
    def hom(self) -> HomComplex:
        return self.classes.hom

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def representative_map(self) -> ChainMap:
        """The representative as a chain map ``Σ^degree C -> D``."""
        k = self.degree
        source = suspend(self.representative.source, k)
        return ChainMap(
            source,
            self.representative.target,
            {n + k: m for n, m in self.representative.components.items()},
        )

    @classmethod
    def build(
        cls,
        order: int,
        position: int,
        representative: GradedMap,
        generators: List[GradedMap],
    ) -> "ObstructionClass":
        if not representative.is_cycle():
            raise InvalidWitnessError(
                f"bracket representative at ({order}, {position}) is not a cycle"
            )
        k = representative.degree
        classes = homotopy_classes(representative.source, representative.target, k)
        gens = [classes.class_of(g) for g in generators]
        indeterminacy = (
            Subspace.span(classes.dim, gens) if gens else Subspace.zero(classes.dim)
        )
        quotient = subquotient_basis(Subspace.full(classes.dim), indeterminacy)
        coordinates = quotient.project(classes.class_of(representative))
        logger.debug(
            f"class at ({order}, {position}): {classes.dim} classes, "
            f"indeterminacy {indeterminacy.dim}"
        )
        return cls(
            order=order,
            position=position,
            representative=representative,
            generators=generators,
            classes=classes,
            indeterminacy=indeterminacy,
            coordinates=coordinates,
        )


def _cycle_reps(C: ChainComplex, D: ChainComplex, k: int) -> List[GradedMap]:
    return homotopy_classes(C, D, k).representatives


def toda_bracket(
    fmap: HomotopySimplicialMap,
    k: int,
    n: int,
    layers: Optional[Layers] = None,
) -> ObstructionClass:
    """``T(k, n; f)`` in ``[Σ^{k-1} C_{n+k}, D_n]``.

    For ``k = 2`` the stage-1 witnesses suffice. Higher brackets need the
    layer ``k - 1`` at columns ``n+k-1`` and ``n+k``, as produced by
    ``extend_tower``.
    """
    if k < 2:
        raise IndexRangeError(f"brackets start at order 2, got {k}")
    layers = layers or Layers(fmap)
    if k > 2:
        missing = [p for p in (n + k - 1, n + k) if not layers.has(k - 1, p)]
        if missing:
            raise PreconditionError(
                f"T({k},{n}) needs order-{k - 1} layers at columns {missing}"
            )
    top = n + k
    representative = layers.rhs(k, top)
    hC = fmap.source.h(top)
    hD = fmap.target.h(n + 1)
    generators = [z @ hC for z in _cycle_reps(fmap.source.column(top - 1), fmap.target.column(n), k - 1)]
    generators += [hD @ z for z in _cycle_reps(fmap.source.column(top), fmap.target.column(n + 1), k - 1)]
    return ObstructionClass.build(k, n, representative, generators)


def bracket_vanishes(T: ObstructionClass) -> Tuple[bool, Optional[BracketWitness]]:
    """Decide ``[T] = 0`` modulo indeterminacy; the witness solves it exactly."""
    hom = T.hom
    k = T.degree
    rhs = hom.vectorize(T.representative)
    if not any(rhs):
        return True, BracketWitness(
            GradedMap(hom.source, hom.target, k + 1), [Fraction(0)] * len(T.generators)
        )
    width = hom.dim(k + 1)
    gens = [hom.vectorize(g) for g in T.generators]
    system = SparseMatrix.hstack(
        hom.differential(k + 1),
        SparseMatrix.from_columns(hom.dim(k), gens),
    )
    x = Solver(system).solve(rhs)
    if x is None:
        logger.info(f"bracket ({T.order}, {T.position}) does not vanish")
        return False, None
    witness = BracketWitness(hom.devectorize(x[:width], k + 1), x[width:])
    return True, witness
