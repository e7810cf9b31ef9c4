"""The cyclic bar construction ``N^cy`` truncated at degree ``N``."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Hashable, List, Union

from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import IndexRangeError, SimplicialIdentityError

from .cells import Cell, CellAlgebra, FiniteGroupCells
from .finite import FiniteGroup


class CyclicSetTrunc:
    """Cells ``(g_0, ..., g_n)`` for ``n <= N`` with the cyclic structure

    ``∂_i`` multiplies ``g_i g_{i+1}`` for ``i < n`` and ``∂_n`` gives
    ``(g_n g_0, g_1, ..., g_{n-1})``; ``s_j`` inserts the unit after
    ``g_j``; ``t`` sends the last entry to the front.
    """

    def __init__(self, algebra: Union[CellAlgebra, FiniteGroup], N: int):
        if isinstance(algebra, FiniteGroup):
            algebra = FiniteGroupCells(algebra)
        if N < 0:
            raise IndexRangeError(f"truncation must be nonnegative, got {N}")
        self.algebra = algebra
        self.N = N
        self._cells: List[List[Cell]] = []
        self._index: List[Dict[Cell, int]] = []
        for n in range(N + 1):
            cells = list(algebra.cells(n))
            self._cells.append(cells)
            self._index.append({c: i for i, c in enumerate(cells)})
        logger.debug(
            f"N^cy truncated at {N}: cells {[len(c) for c in self._cells]}"
        )

    def cells(self, n: int) -> List[Cell]:
        return self._cells[n]

    def index(self, n: int, cell: Cell) -> int:
        return self._index[n][cell]

    def count(self, n: int) -> int:
        return len(self._cells[n])

    def face(self, i: int, cell: Cell) -> Cell:
        n = len(cell) - 1
        mul = self.algebra.mul
        if i < n:
            return cell[:i] + (mul(cell[i], cell[i + 1]),) + cell[i + 2:]
        return (mul(cell[n], cell[0]),) + cell[1:n]

    def degeneracy(self, j: int, cell: Cell) -> Cell:
        return cell[: j + 1] + (self.algebra.unit,) + cell[j + 1:]

    def extra_degeneracy(self, cell: Cell) -> Cell:
        return (self.algebra.unit,) + cell

    def t(self, cell: Cell) -> Cell:
        return (cell[-1],) + cell[:-1]

    def component(self, cell: Cell) -> Hashable:
        return self.algebra.component_key(self.algebra.product(cell))

    def components(self, n: int) -> Dict[Hashable, List[int]]:
        """Cell indices of degree ``n`` grouped by component."""
        out: Dict[Hashable, List[int]] = defaultdict(list)
        for i, c in enumerate(self._cells[n]):
            out[self.component(c)].append(i)
        return dict(out)

    def component_keys(self) -> List[Hashable]:
        keys: Dict[Hashable, None] = {}
        for n in range(self.N + 1):
            for k in self.components(n):
                keys.setdefault(k, None)
        return list(keys)

    def face_matrix(self, n: int, i: int) -> SparseMatrix:
        """``∂_i`` from degree ``n`` to ``n-1`` as a 0/1 matrix."""
        entries = {
            (self.index(n - 1, self.face(i, c)), col): 1
            for col, c in enumerate(self._cells[n])
        }
        return SparseMatrix(self.count(n - 1), self.count(n), entries)

    def check_identities(self) -> None:
        """Every simplicial and cyclic identity on every cell up to ``N``."""
        for n in range(self.N + 1):
            for c in self._cells[n]:
                self._check_cell(n, c)

    def _check_cell(self, n: int, c: Cell) -> None:
        d, s, t = self.face, self.degeneracy, self.t

        def fail(what: str):
            raise SimplicialIdentityError(f"{what} fails on {c!r}")

        key = self.component(c)
        for j in range(n + 1):
            for i in range(j):
                if n >= 2 and d(i, d(j, c)) != d(j - 1, d(i, c)):
                    fail(f"∂_{i}∂_{j} = ∂_{j - 1}∂_{i}")
        if n + 1 <= self.N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d(i, s(j, c))
                    if i in (j, j + 1):
                        rhs = c
                    elif i < j:
                        rhs = s(j - 1, d(i, c))
                    else:
                        rhs = s(j, d(i - 1, c))
                    if lhs != rhs:
                        fail(f"∂_{i}s_{j}")
                for i in range(j + 1):
                    if s(i, s(j, c)) != s(j + 1, s(i, c)):
                        fail(f"s_{i}s_{j} = s_{j + 1}s_{i}")
        x = c
        for _ in range(n + 1):
            x = t(x)
        if x != c:
            fail(f"t^{n + 1} = 1")
        if n >= 1:
            if d(0, t(c)) != d(n, c):
                fail("∂_0 t = ∂_n")
            for i in range(1, n + 1):
                if d(i, t(c)) != t(d(i - 1, c)):
                    fail(f"∂_{i} t = t ∂_{i - 1}")
        for i in range(n + 1):
            if n >= 1 and self.component(d(i, c)) != key:
                fail(f"∂_{i} preserves components")
        if self.component(t(c)) != key:
            fail("t preserves components")


def ncy_truncated(G: Union[CellAlgebra, FiniteGroup], N: int) -> CyclicSetTrunc:
    X = CyclicSetTrunc(G, N)
    X.check_identities()
    return X
