"""Truncated simplicial objects in chain complexes."""

from __future__ import annotations

from typing import List, Optional, Sequence

from totguild.chain import ChainComplex, ChainMap
from totguild.logs import logger
from totguild.response import DimensionMismatchError, SimplicialIdentityError


def _same(a: ChainComplex, b: ChainComplex) -> bool:
    return a is b or a == b


class SimplicialChainObject:
    """Objects ``C_0..C_N`` with face maps and optional degeneracies.

    ``faces[n][i]`` is ``∂_i: C_n -> C_{n-1}`` for ``1 <= n <= N`` (the list
    for ``n = 0`` is empty); ``degeneracies[n][j]`` is ``s_j: C_n -> C_{n+1}``
    for ``n < N``. The simplicial identities are checked on construction.
    """

    def __init__(
        self,
        objects: Sequence[ChainComplex],
        faces: Sequence[Sequence[ChainMap]],
        degeneracies: Optional[Sequence[Sequence[ChainMap]]] = None,
        check: bool = True,
    ):
        if not objects:
            raise DimensionMismatchError("a simplicial object needs C_0")
        self.objects: List[ChainComplex] = list(objects)
        self.faces: List[List[ChainMap]] = [list(fs) for fs in faces]
        self.degeneracies: Optional[List[List[ChainMap]]] = (
            None if degeneracies is None else [list(ds) for ds in degeneracies]
        )
        self._check_shapes()
        if check:
            self.validate()

    @property
    def N(self) -> int:
        return len(self.objects) - 1

    def face(self, n: int, i: int) -> ChainMap:
        return self.faces[n][i]

    def degeneracy(self, n: int, j: int) -> ChainMap:
        if self.degeneracies is None:
            raise SimplicialIdentityError("object carries no degeneracies")
        return self.degeneracies[n][j]

    def _check_shapes(self) -> None:
        N = self.N
        if len(self.faces) != N + 1 or self.faces[0]:
            raise DimensionMismatchError(
                f"expected face lists for degrees 0..{N}, degree 0 empty"
            )
        for n in range(1, N + 1):
            if len(self.faces[n]) != n + 1:
                raise DimensionMismatchError(
                    f"degree {n} needs {n + 1} faces, got {len(self.faces[n])}"
                )
            for i, f in enumerate(self.faces[n]):
                if not (_same(f.source, self.objects[n])
                        and _same(f.target, self.objects[n - 1])):
                    raise DimensionMismatchError(f"face ∂_{i} on C_{n} has wrong ends")
        if self.degeneracies is None:
            return
        if len(self.degeneracies) != N:
            raise DimensionMismatchError(
                f"expected degeneracy lists for degrees 0..{N - 1}"
            )
        for n in range(N):
            if len(self.degeneracies[n]) != n + 1:
                raise DimensionMismatchError(
                    f"degree {n} needs {n + 1} degeneracies"
                )
            for j, s in enumerate(self.degeneracies[n]):
                if not (_same(s.source, self.objects[n])
                        and _same(s.target, self.objects[n + 1])):
                    raise DimensionMismatchError(
                        f"degeneracy s_{j} on C_{n} has wrong ends"
                    )

    def validate(self) -> None:
        """Check every simplicial identity inside the truncation."""
        N = self.N
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    # ∂_i ∂_j = ∂_{j-1} ∂_i
                    lhs = self.face(n - 1, i) @ self.face(n, j)
                    rhs = self.face(n - 1, j - 1) @ self.face(n, i)
                    if lhs != rhs:
                        raise SimplicialIdentityError(
                            f"∂_{i}∂_{j} != ∂_{j - 1}∂_{i} on C_{n}"
                        )
        if self.degeneracies is None:
            return
        for n in range(N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    # s_i s_j = s_{j+1} s_i
                    lhs = self.degeneracy(n + 1, i) @ self.degeneracy(n, j)
                    rhs = self.degeneracy(n + 1, j + 1) @ self.degeneracy(n, i)
                    if lhs != rhs:
                        raise SimplicialIdentityError(
                            f"s_{i}s_{j} != s_{j + 1}s_{i} on C_{n}"
                        )
        for n in range(N):
            identity = ChainMap.identity(self.objects[n])
            for j in range(n + 1):
                s = self.degeneracy(n, j)
                for i in range(n + 2):
                    lhs = self.face(n + 1, i) @ s
                    if i in (j, j + 1):
                        rhs = identity
                    elif i < j:
                        rhs = self.degeneracy(n - 1, j - 1) @ self.face(n, i)
                    else:
                        rhs = self.degeneracy(n - 1, j) @ self.face(n, i - 1)
                    if lhs != rhs:
                        raise SimplicialIdentityError(
                            f"∂_{i}s_{j} fails on C_{n}"
                        )
        logger.debug(f"simplicial identities hold up to degree {N}")

    def truncate(self, N: int) -> "SimplicialChainObject":
        if not 0 <= N <= self.N:
            raise DimensionMismatchError(f"cannot truncate at {N}")
        degeneracies = None
        if self.degeneracies is not None:
            degeneracies = self.degeneracies[:N]
        return SimplicialChainObject(
            self.objects[: N + 1], self.faces[: N + 1], degeneracies,
            check=False,
        )


def alternating_sum(X: SimplicialChainObject):
    """The bicomplex with horizontal differential ``Σ (-1)^i ∂_i``."""
    from .bicomplex import Bicomplex

    horizontal = {}
    for n in range(1, X.N + 1):
        total = None
        for i, face in enumerate(X.faces[n]):
            term = face if i % 2 == 0 else face.scale(-1)
            total = term if total is None else total + term
        horizontal[n] = ChainMap.from_graded(total, check=False)
    return Bicomplex(dict(enumerate(X.objects)), horizontal)
