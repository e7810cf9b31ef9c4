"""The free simplicial group Γ(m) on one generator in degree m-1, and A(m)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from totguild.chain import ChainComplex, ChainMap
from totguild.exactla import SparseMatrix
from totguild.groupcyc import FreeWord
from totguild.logs import logger
from totguild.response import (IndexRangeError, InputError,
                               SimplicialIdentityError)
from totguild.simpfilt import SimplicialChainObject


@dataclass(frozen=True, order=True)
class SurjectionGenerator:
    """The generator ``s_α(ι)`` for a monotone surjection ``α: [n] -> [k]``.

    ``values`` lists ``α(0), ..., α(n)``.
    """

    values: tuple

    def __post_init__(self):
        v = self.values
        if not v or v[0] != 0:
            raise InputError(f"surjection must start at 0: {v}")
        for a, b in zip(v, v[1:]):
            if b - a not in (0, 1):
                raise InputError(f"not a monotone surjection: {v}")

    @property
    def degree(self) -> int:
        return len(self.values) - 1

    @property
    def codomain(self) -> int:
        return self.values[-1]

    def is_identity(self) -> bool:
        return self.values == tuple(range(len(self.values)))

    def face(self, i: int) -> Optional["SurjectionGenerator"]:
        """``α ∘ δ_i``; None when it is no longer onto (the generator dies)."""
        v = self.values[:i] + self.values[i + 1:]
        if not v or set(v) != set(range(self.codomain + 1)):
            return None
        return SurjectionGenerator(v)

    def degeneracy(self, j: int) -> "SurjectionGenerator":
        """``α ∘ σ_j``."""
        v = self.values
        return SurjectionGenerator(v[: j + 1] + (v[j],) + v[j + 1:])

    def __str__(self) -> str:
        if self.is_identity():
            return f"ι{self.codomain}"
        return "s(" + "".join(str(a) for a in self.values) + ")"


def surjections(n: int, k: int) -> List[SurjectionGenerator]:
    """Monotone surjections ``[n] -> [k]``, ordered by their jump positions."""
    out = []
    for jumps in combinations(range(1, n + 1), k):
        values, level = [], 0
        for t in range(n + 1):
            if t in jumps:
                level += 1
            values.append(level)
        out.append(SurjectionGenerator(tuple(values)))
    return out


_Hom = List[Optional[int]]


class FreeSimplicialGroupTrunc:
    """``Γ(m)_n`` for ``n <= N``: free on the surjections ``[n] -> [m-1]``.

    Faces and degeneracies are the homomorphisms given on generators; a
    generator whose face is not onto goes to the identity element.
    """

    def __init__(self, m: int, N: int):
        self.m = m
        self.N = N
        self.generators: List[List[SurjectionGenerator]] = [
            surjections(n, m - 1) for n in range(N + 1)
        ]
        self._index: List[Dict[SurjectionGenerator, int]] = [
            {g: i for i, g in enumerate(gs)} for gs in self.generators
        ]
        self._faces: Dict[int, List[_Hom]] = {}
        self._degeneracies: Dict[int, List[_Hom]] = {}
        for n in range(1, N + 1):
            self._faces[n] = [
                [self._lookup(n - 1, g.face(i)) for g in self.generators[n]]
                for i in range(n + 1)
            ]
        for n in range(N):
            self._degeneracies[n] = [
                [self._lookup(n + 1, g.degeneracy(j)) for g in self.generators[n]]
                for j in range(n + 1)
            ]
        logger.debug(f"Γ({m}) truncated at {N}: ranks {self.ranks}")

    def _lookup(self, n: int, g: Optional[SurjectionGenerator]) -> Optional[int]:
        return None if g is None else self._index[n][g]

    @property
    def ranks(self) -> List[int]:
        return [len(g) for g in self.generators]

    def rank(self, n: int) -> int:
        return len(self.generators[n])

    def generator(self, n: int, g: int) -> FreeWord:
        return FreeWord.generator(self.rank(n), g)

    def face_on_generators(self, n: int, i: int) -> _Hom:
        return self._faces[n][i]

    def degeneracy_on_generators(self, n: int, j: int) -> _Hom:
        return self._degeneracies[n][j]

    def _apply(self, hom: _Hom, rank: int, word: FreeWord) -> FreeWord:
        return FreeWord(rank, [(hom[g], e) for g, e in word if hom[g] is not None])

    def face(self, n: int, i: int, word: FreeWord) -> FreeWord:
        return self._apply(self._faces[n][i], self.rank(n - 1), word)

    def degeneracy(self, n: int, j: int, word: FreeWord) -> FreeWord:
        return self._apply(self._degeneracies[n][j], self.rank(n + 1), word)

    def check_identities(self) -> int:
        """Every simplicial identity on every generator up to degree ``N``.

        Returns the number of identities compared.
        """
        N = self.N
        checked = 0

        def then(first: _Hom, second: _Hom) -> _Hom:
            return [None if x is None else second[x] for x in first]

        def fail(what: str, n: int):
            raise SimplicialIdentityError(f"Γ({self.m}): {what} fails in degree {n}")

        identity = {n: list(range(self.rank(n))) for n in range(N + 1)}
        for n in range(2, N + 1):
            d, e = self._faces[n], self._faces[n - 1]
            for j in range(n + 1):
                for i in range(j):
                    checked += 1
                    if then(d[j], e[i]) != then(d[i], e[j - 1]):
                        fail(f"∂_{i}∂_{j} = ∂_{j - 1}∂_{i}", n)
        for n in range(N):
            s = self._degeneracies[n]
            d = self._faces[n + 1]
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = then(s[j], d[i])
                    if i in (j, j + 1):
                        rhs = identity[n]
                    elif i < j:
                        rhs = then(self._faces[n][i], self._degeneracies[n - 1][j - 1])
                    else:
                        rhs = then(self._faces[n][i - 1], self._degeneracies[n - 1][j])
                    checked += 1
                    if lhs != rhs:
                        fail(f"∂_{i}s_{j}", n)
        for n in range(N - 1):
            s, t = self._degeneracies[n], self._degeneracies[n + 1]
            for j in range(n + 1):
                for i in range(j + 1):
                    checked += 1
                    if then(s[j], t[i]) != then(s[i], t[j + 1]):
                        fail(f"s_{i}s_{j} = s_{j + 1}s_{i}", n)
        logger.debug(f"Γ({self.m}): {checked} simplicial identities hold to degree {N}")
        return checked


def gamma_truncation(m: int, N: int, check: bool = True) -> FreeSimplicialGroupTrunc:
    """``Γ(m)`` in degrees ``0..N`` for even ``m >= 2``."""
    if m < 2 or m % 2:
        raise InputError(f"Γ(m) needs m even and at least 2, got {m}")
    if N < m:
        raise IndexRangeError(f"truncation {N} must reach degree m = {m}")
    gamma = FreeSimplicialGroupTrunc(m, N)
    if check:
        gamma.check_identities()
    return gamma


class AbelianizedTrunc:
    """``A(m)_n = Z^{rank}`` with the abelianized structure matrices."""

    def __init__(self, gamma: FreeSimplicialGroupTrunc):
        self.gamma = gamma
        self.ranks = gamma.ranks
        self.faces: Dict[int, List[SparseMatrix]] = {
            n: [self._matrix(gamma.face_on_generators(n, i), self.ranks[n - 1])
                for i in range(n + 1)]
            for n in range(1, gamma.N + 1)
        }
        self.degeneracies: Dict[int, List[SparseMatrix]] = {
            n: [self._matrix(gamma.degeneracy_on_generators(n, j), self.ranks[n + 1])
                for j in range(n + 1)]
            for n in range(gamma.N)
        }

    @staticmethod
    def _matrix(hom: Sequence[Optional[int]], rows: int) -> SparseMatrix:
        return SparseMatrix(
            rows, len(hom), {(t, g): 1 for g, t in enumerate(hom) if t is not None}
        )

    @property
    def N(self) -> int:
        return self.gamma.N

    def quotient(self, word: FreeWord) -> List[int]:
        return word.abelianization()

    def chain_complex(self) -> ChainComplex:
        """The alternating-face complex ``Σ (-1)^i ∂_i``."""
        diffs = {}
        for n, faces in self.faces.items():
            total = SparseMatrix.zeros(self.ranks[n - 1], self.ranks[n])
            for i, f in enumerate(faces):
                total = total + (f if i % 2 == 0 else -f)
            diffs[n] = total
        return ChainComplex(dict(enumerate(self.ranks)), diffs)

    def as_simplicial_object(self) -> SimplicialChainObject:
        """Each ``A(m)_n ⊗ Q`` as a complex concentrated in degree 0."""
        objects = [ChainComplex({0: r}) for r in self.ranks]
        faces = [[]] + [
            [ChainMap(objects[n], objects[n - 1], {0: f}) for f in self.faces[n]]
            for n in range(1, self.N + 1)
        ]
        degeneracies = [
            [ChainMap(objects[n], objects[n + 1], {0: s}) for s in self.degeneracies[n]]
            for n in range(self.N)
        ]
        return SimplicialChainObject(objects, faces, degeneracies)


def abelianize(gamma: FreeSimplicialGroupTrunc) -> AbelianizedTrunc:
    return AbelianizedTrunc(gamma)
