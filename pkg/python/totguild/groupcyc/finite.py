"""Finite groups given by multiplication tables."""

from __future__ import annotations

from itertools import permutations
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from totguild.logs import logger
from totguild.response import GroupTableError


class FiniteGroup:
    """Elements ``0..order-1`` with ``table[a][b] = ab``.

    The group axioms are checked on construction; the identity is found,
    not assumed.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        n = len(table)
        if n == 0:
            raise GroupTableError("a group has at least one element")
        self.table: List[List[int]] = [list(row) for row in table]
        for row in self.table:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise GroupTableError("table is not a square table of element indices")
        self.order = n
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        if len(self.names) != n:
            raise GroupTableError(f"{len(self.names)} names for {n} elements")
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self._check_associative()
        self._classes: Optional[List[List[int]]] = None

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(self.order)):
                return e
        raise GroupTableError("table has no identity element")

    def _find_inverses(self) -> List[int]:
        inverses = []
        for a in range(self.order):
            match = [b for b in range(self.order) if self.table[a][b] == self.identity]
            if len(match) != 1 or self.table[match[0]][a] != self.identity:
                raise GroupTableError(f"element {self.names[a]} has no two-sided inverse")
            inverses.append(match[0])
        return inverses

    def _check_associative(self) -> None:
        t = self.table
        for a in range(self.order):
            for b in range(self.order):
                ab = t[a][b]
                for c in range(self.order):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise GroupTableError(
                            f"({self.names[a]}{self.names[b]}){self.names[c]} != "
                            f"{self.names[a]}({self.names[b]}{self.names[c]})"
                        )

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if n < 1:
            raise GroupTableError(f"cyclic group of order {n}")
        names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], names)

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.cyclic(1)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        """``S_n`` with ``(στ)(i) = σ(τ(i))``; the identity permutation is element 0."""
        perms = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms
        ]
        names = ["".join(str(x + 1) for x in p) for p in perms]
        return cls(table, names)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None) -> "FiniteGroup":
        return cls(table, names)

    @classmethod
    def load_table(cls, path: Union[str, Path]) -> "FiniteGroup":
        """Read a ``.tbl`` file: optional ``# names: ...`` line, then one row per element."""
        names = None
        rows = []
        for raw in Path(path).read_text().splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("names:"):
                    names = body[len("names:"):].split()
                continue
            try:
                rows.append([int(x) for x in line.split()])
            except ValueError:
                raise GroupTableError(f"non-integer entry in {path}: {line!r}")
        logger.debug(f"loaded group table of order {len(rows)} from {path}")
        return cls(rows, names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def product(self, elements: Sequence[int]) -> int:
        out = self.identity
        for g in elements:
            out = self.table[out][g]
        return out

    def conjugate(self, g: int, h: int) -> int:
        """``h⁻¹ g h``."""
        return self.table[self.table[self.inverses[h]][g]][h]

    def conjugacy_classes(self) -> List[List[int]]:
        if self._classes is None:
            seen: Dict[int, int] = {}
            classes: List[List[int]] = []
            for g in range(self.order):
                if g in seen:
                    continue
                cls_ = sorted({self.conjugate(g, h) for h in range(self.order)})
                for x in cls_:
                    seen[x] = len(classes)
                classes.append(cls_)
            self._classes = classes
        return self._classes

    def class_of(self, g: int) -> int:
        """Index of the conjugacy class containing ``g``."""
        for i, c in enumerate(self.conjugacy_classes()):
            if g in c:
                return i
        raise GroupTableError(f"element {g} outside the group")

    def centralizer(self, g: int) -> List[int]:
        return [h for h in range(self.order) if self.table[g][h] == self.table[h][g]]

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"
