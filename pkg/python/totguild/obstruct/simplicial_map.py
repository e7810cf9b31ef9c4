"""Homotopy-commutative maps of simplicial chain objects and the stage-1 data."""

from __future__ import annotations

from typing import Dict, Mapping, Optional, Union

from totguild.chain import (ChainComplex, ChainHomotopy, ChainMap, GradedMap,
                            nullhomotopy)
from totguild.logs import logger
from totguild.response import (DimensionMismatchError, InvalidWitnessError,
                               PreconditionError)
from totguild.simpfilt import (Bicomplex, SimplicialChainObject,
                               alternating_sum)


def as_bicomplex(X: Union[Bicomplex, SimplicialChainObject]) -> Bicomplex:
    if isinstance(X, SimplicialChainObject):
        return alternating_sum(X)
    return X


def solve_stage1(
    f_n: ChainMap, f_prev: ChainMap, dC: ChainMap, dD: ChainMap
) -> Optional[ChainHomotopy]:
    """A homotopy from ``f_{n-1} d^C`` to ``d^D f_n``, or None.

    The square commutes up to homotopy exactly when the difference is
    nullhomotopic.
    """
    top = f_prev @ dC
    bottom = dD @ f_n
    if top.source != bottom.source or top.target != bottom.target:
        raise DimensionMismatchError("square does not close up")
    witness = nullhomotopy(ChainMap.from_graded(top - bottom, check=False))
    if witness is None:
        logger.debug("square does not commute up to homotopy")
        return None
    return ChainHomotopy(top, bottom, witness.s)


class HomotopySimplicialMap:
    """Maps ``f_p: C_p -> D_p`` with homotopies ``s_p`` for every square.

    ``witnesses[p]`` is a ChainHomotopy from ``f_{p-1} h^C_p`` to
    ``h^D_p f_p``, where ``h`` are the horizontal maps. Missing witnesses are
    solved for; a square that does not homotopy-commute is a precondition
    failure.
    """

    def __init__(
        self,
        source: Union[Bicomplex, SimplicialChainObject],
        target: Union[Bicomplex, SimplicialChainObject],
        maps: Mapping[int, ChainMap],
        witnesses: Optional[Mapping[int, ChainHomotopy]] = None,
    ):
        self.source = as_bicomplex(source)
        self.target = as_bicomplex(target)
        lo, hi = self._range()
        self.maps: Dict[int, ChainMap] = {}
        for p in range(lo, hi + 1):
            f = maps.get(p)
            if f is None:
                f = ChainMap.zero(self.source.column(p), self.target.column(p))
            elif f.source != self.source.column(p) or f.target != self.target.column(p):
                raise DimensionMismatchError(f"f_{p} has the wrong ends")
            self.maps[p] = f
        self.witnesses: Dict[int, ChainHomotopy] = {}
        given = dict(witnesses or {})
        for p in range(lo + 1, hi + 1):
            w = given.get(p)
            if w is None:
                w = solve_stage1(
                    self.f(p), self.f(p - 1), self.source.h(p), self.target.h(p)
                )
                if w is None:
                    raise PreconditionError(
                        f"square at column {p} does not commute up to homotopy"
                    )
            else:
                self._check_witness(p, w)
            self.witnesses[p] = w

    def _range(self):
        slo, shi = self.source.column_range
        tlo, thi = self.target.column_range
        if self.source.columns and self.target.columns:
            return (min(slo, tlo), max(shi, thi))
        return (slo, shi) if self.source.columns else (tlo, thi)

    @property
    def column_range(self):
        return self._range()

    def _check_witness(self, p: int, w: ChainHomotopy) -> None:
        expected_from = self.f(p - 1) @ self.source.h(p)
        expected_to = self.target.h(p) @ self.f(p)
        if w.from_map != expected_from or w.to_map != expected_to:
            raise InvalidWitnessError(f"witness at column {p} is for another square")
        if not w.defect().is_zero():
            raise InvalidWitnessError(f"witness at column {p} fails the homotopy identity")

    def f(self, p: int) -> ChainMap:
        m = self.maps.get(p)
        if m is None:
            return ChainMap.zero(self.source.column(p), self.target.column(p))
        return m

    def s(self, p: int) -> GradedMap:
        w = self.witnesses.get(p)
        if w is None:
            return GradedMap(self.source.column(p), self.target.column(p - 1), 1)
        return w.s

    def is_strict(self) -> bool:
        return all(w.s.is_zero() for w in self.witnesses.values())

    @classmethod
    def identity(cls, B: Union[Bicomplex, SimplicialChainObject]) -> "HomotopySimplicialMap":
        B = as_bicomplex(B)
        return cls(B, B, {p: ChainMap.identity(C) for p, C in B.columns.items()})


class HomotopyChainObject:
    """Complexes ``C_n`` with maps ``d_n`` and homotopies ``h_n: d_{n-1} d_n ≃ 0``."""

    def __init__(
        self,
        objects: Mapping[int, ChainComplex],
        maps: Mapping[int, ChainMap],
        homotopies: Optional[Mapping[int, GradedMap]] = None,
        check: bool = True,
    ):
        if not objects:
            raise DimensionMismatchError("a homotopy chain object needs objects")
        if min(objects) < 0:
            raise DimensionMismatchError("objects are indexed from 0")
        self.N = max(objects)
        self.objects = {n: objects.get(n, ChainComplex.zero()) for n in range(self.N + 1)}
        self.maps: Dict[int, ChainMap] = {}
        for n in range(1, self.N + 1):
            d = maps.get(n)
            if d is None:
                d = ChainMap.zero(self.objects[n], self.objects[n - 1])
            elif d.source != self.objects[n] or d.target != self.objects[n - 1]:
                raise DimensionMismatchError(f"d_{n} has the wrong ends")
            self.maps[n] = d
        self.homotopies: Dict[int, GradedMap] = {}
        given = dict(homotopies or {})
        for n in range(2, self.N + 1):
            h = given.get(n)
            if h is None:
                h = GradedMap(self.objects[n], self.objects[n - 2], 1)
            if h.degree != 1 or h.source != self.objects[n] or h.target != self.objects[n - 2]:
                raise DimensionMismatchError(f"h_{n} has the wrong shape")
            self.homotopies[n] = h
            if check:
                self.witness(n)

    def d(self, n: int) -> ChainMap:
        return self.maps[n]

    def h(self, n: int) -> GradedMap:
        return self.homotopies[n]

    def witness(self, n: int) -> ChainHomotopy:
        """``h_n`` as a homotopy from ``d_{n-1} d_n`` to zero (checked)."""
        composite = self.maps[n - 1] @ self.maps[n]
        return ChainHomotopy(
            composite, ChainMap.zero(composite.source, composite.target),
            self.homotopies[n],
        )

    @classmethod
    def from_bicomplex(cls, B: Bicomplex) -> "HomotopyChainObject":
        """A strict chain complex of complexes, all ``h_n = 0``."""
        lo, _ = B.column_range
        if lo < 0:
            raise DimensionMismatchError("columns must be indexed from 0")
        return cls(B.columns or {0: ChainComplex.zero()}, B.horizontal)

    @classmethod
    def solve(
        cls, objects: Mapping[int, ChainComplex], maps: Mapping[int, ChainMap]
    ) -> "HomotopyChainObject":
        """Find some ``h_n`` for each ``d_{n-1} d_n``; fails if one is not nullhomotopic."""
        partial = cls(objects, maps, check=False)
        homotopies = {}
        for n in range(2, partial.N + 1):
            w = nullhomotopy(partial.maps[n - 1] @ partial.maps[n])
            if w is None:
                raise PreconditionError(f"d_{n - 1} d_{n} is not nullhomotopic")
            homotopies[n] = w.s
        return cls(partial.objects, partial.maps, homotopies)
