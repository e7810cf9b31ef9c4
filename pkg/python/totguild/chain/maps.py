"""Graded maps, chain maps and chain homotopies."""

from __future__ import annotations

from typing import Dict, Mapping, Optional

from totguild.exactla import SparseMatrix, rank
from totguild.response import (DimensionMismatchError, InvalidWitnessError,
                               NotAChainMapError)

from .complex import ChainComplex, homology


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _same(a: ChainComplex, b: ChainComplex) -> bool:
    return a is b or a == b


class GradedMap:
    """A degree-``k`` element of ``Hom(C, D)``: components ``C_n -> D_{n+k}``.

    Every component is a ``D.dim(n+k) x C.dim(n)`` matrix; missing ones are
    zero. No compatibility with differentials is assumed.
    """

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        degree: int,
        components: Optional[Mapping[int, SparseMatrix]] = None,
    ):
        self.source = source
        self.target = target
        self.degree = degree
        self._components: Dict[int, SparseMatrix] = {}
        for n, m in (components or {}).items():
            expected = (target.dim(n + degree), source.dim(n))
            if m.shape != expected:
                raise DimensionMismatchError(
                    f"component {n} has shape {m.shape}, expected {expected}"
                )
            if not m.is_zero():
                self._components[int(n)] = m

    def component(self, n: int) -> SparseMatrix:
        m = self._components.get(n)
        if m is None:
            return SparseMatrix.zeros(
                self.target.dim(n + self.degree), self.source.dim(n)
            )
        return m

    @property
    def components(self) -> Dict[int, SparseMatrix]:
        return dict(self._components)

    def is_zero(self) -> bool:
        return not self._components

    def _like(self, components: Mapping[int, SparseMatrix]) -> "GradedMap":
        return GradedMap(self.source, self.target, self.degree, components)

    def _check_parallel(self, other: "GradedMap") -> None:
        if (
            other.degree != self.degree
            or not _same(other.source, self.source)
            or not _same(other.target, self.target)
        ):
            raise DimensionMismatchError("maps are not parallel")

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._check_parallel(other)
        keys = set(self._components) | set(other._components)
        return self._like(
            {n: self.component(n) + other.component(n) for n in keys}
        )

    def __neg__(self) -> "GradedMap":
        return self._like({n: -m for n, m in self._components.items()})

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def scale(self, factor) -> "GradedMap":
        return self._like(
            {n: m.scale(factor) for n, m in self._components.items()}
        )

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """``self ∘ other``; degrees add."""
        if not isinstance(other, GradedMap):
            return NotImplemented
        if not _same(other.target, self.source):
            raise DimensionMismatchError("composition of incompatible maps")
        k = other.degree
        comps = {}
        for n, m in other._components.items():
            left = self._components.get(n + k)
            if left is not None:
                comps[n] = left @ m
        return GradedMap(other.source, self.target, self.degree + k, comps)

    def boundary(self) -> "GradedMap":
        """Hom-complex differential ``d φ - (-1)^k φ d`` (degree ``k-1``)."""
        k = self.degree
        sign = _sign(k)
        comps: Dict[int, SparseMatrix] = {}
        for n, m in self._components.items():
            # d^D ∘ φ_n lands in component n
            term = self.target.d(n + k) @ m
            comps[n] = comps[n] + term if n in comps else term
            # φ_n ∘ d^C_{n+1} lands in component n+1
            term = (m @ self.source.d(n + 1)).scale(-sign)
            comps[n + 1] = comps[n + 1] + term if (n + 1) in comps else term
        return GradedMap(self.source, self.target, k - 1, comps)

    def is_cycle(self) -> bool:
        return self.boundary().is_zero()

    def suspend(self, k: int, sign: int = 1) -> "GradedMap":
        """The same matrices between ``Σ^k`` of source and target."""
        from .complex import suspend

        return GradedMap(
            suspend(self.source, k),
            suspend(self.target, k),
            self.degree,
            {n + k: m.scale(sign) for n, m in self._components.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.source == other.source
            and self.target == other.target
            and self._components == other._components
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(degree={self.degree}, "
            f"components={sorted(self._components)})"
        )


class ChainMap(GradedMap):
    """A degree-0 map commuting with the differentials (checked)."""

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        components: Optional[Mapping[int, SparseMatrix]] = None,
        check: bool = True,
    ):
        super().__init__(source, target, 0, components)
        if check and not self.boundary().is_zero():
            bad = sorted(self.boundary().components)
            raise NotAChainMapError(
                f"square fails to commute in degree {bad[0]}"
            )

    @classmethod
    def identity(cls, C: ChainComplex) -> "ChainMap":
        return cls(
            C, C, {n: SparseMatrix.identity(C.dim(n)) for n in C.dims},
            check=False,
        )

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> "ChainMap":
        return cls(source, target, {}, check=False)

    @classmethod
    def from_graded(cls, g: GradedMap, check: bool = True) -> "ChainMap":
        if g.degree != 0:
            raise DimensionMismatchError("a chain map has degree 0")
        return cls(g.source, g.target, g.components, check=check)

    def _like(self, components):
        return ChainMap(self.source, self.target, components, check=False)

    def __matmul__(self, other):
        result = super().__matmul__(other)
        if result is NotImplemented or not isinstance(other, ChainMap):
            return result
        return ChainMap(result.source, result.target, result.components, check=False)

    def suspend(self, k: int, sign: int = 1) -> "ChainMap":
        g = super().suspend(k, sign)
        return ChainMap(g.source, g.target, g.components, check=False)


class ChainHomotopy:
    """Witness ``s`` with ``from - to = d s + s d``.

    ``s`` is a degree-1 graded map between the common source and target.
    """

    def __init__(
        self,
        from_map: GradedMap,
        to_map: GradedMap,
        s: GradedMap,
        check: bool = True,
    ):
        if s.degree != from_map.degree + 1 or to_map.degree != from_map.degree:
            raise DimensionMismatchError("homotopy has the wrong degree")
        self.from_map = from_map
        self.to_map = to_map
        self.s = s
        if check and not self.defect().is_zero():
            bad = sorted(self.defect().components)
            raise InvalidWitnessError(
                f"homotopy identity fails in degree {bad[0]}"
            )

    def defect(self) -> GradedMap:
        # D(s) = d s + s d in degree 1
        return (self.from_map - self.to_map) - self.s.boundary()

    @classmethod
    def zero_between(cls, f: GradedMap) -> "ChainHomotopy":
        return cls(
            f, f, GradedMap(f.source, f.target, f.degree + 1), check=False
        )

    def suspend(self, k: int) -> "ChainHomotopy":
        return ChainHomotopy(
            self.from_map.suspend(k),
            self.to_map.suspend(k),
            self.s.suspend(k, _sign(k)),
            check=False,
        )

    def __repr__(self) -> str:
        return f"ChainHomotopy(s={self.s!r})"


def induced_map_on_homology(f: ChainMap, n: int) -> SparseMatrix:
    """Matrix of ``H_n(f)`` in the representative bases of both sides."""
    source = homology(f.source, n)
    target = homology(f.target, n)
    columns = [
        target.class_of(f.component(n).apply(v))
        for v in source.representatives
    ]
    if not columns:
        return SparseMatrix.zeros(target.dim, 0)
    return SparseMatrix.from_columns(target.dim, columns)


def is_quasi_isomorphism(f: ChainMap) -> bool:
    """True when the mapping cone of ``f`` is acyclic."""
    from .complex import is_acyclic
    from .cone import mapping_cone

    return is_acyclic(mapping_cone(f).cone)


def induced_rank(f: ChainMap, n: int) -> int:
    return rank(induced_map_on_homology(f, n))

