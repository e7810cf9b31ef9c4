"""Monoid-like cell data feeding the cyclic bar construction.

A ``CellAlgebra`` supplies a unit, a multiplication, a weight that never
grows under multiplication and a conjugation-stable component key. Cells of
degree ``n`` are the ``(n+1)``-tuples whose total weight fits the window;
every structure map of the cyclic bar construction keeps them inside it.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from itertools import product
from typing import Hashable, Iterator, List, Optional, Sequence, Tuple

from .finite import FiniteGroup
from .words import FreeWord, canonical_form, words_up_to

Cell = Tuple


class CellAlgebra(ABC):
    window: Optional[int] = None

    @property
    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def elements(self) -> List: ...

    def weight(self, a) -> int:
        return 0

    @abstractmethod
    def component_key(self, a) -> Hashable:
        """Invariant of the conjugacy class of ``a``."""

    def product(self, elements: Sequence):
        out = self.unit
        for g in elements:
            out = self.mul(out, g)
        return out

    def label(self, a) -> str:
        return str(a)

    def cells(self, n: int) -> Iterator[Cell]:
        """All ``(n+1)``-tuples within the window, in a fixed order."""
        elements = self.elements()
        if self.window is None:
            yield from product(elements, repeat=n + 1)
            return
        weights = [(a, self.weight(a)) for a in elements]

        def extend(prefix: Tuple, room: int, left: int) -> Iterator[Cell]:
            if left == 0:
                yield prefix
                return
            for a, w in weights:
                if w <= room:
                    yield from extend(prefix + (a,), room - w, left - 1)

        yield from extend((), self.window, n + 1)


class FiniteGroupCells(CellAlgebra):
    def __init__(self, group: FiniteGroup):
        self.group = group

    @property
    def unit(self) -> int:
        return self.group.identity

    def mul(self, a: int, b: int) -> int:
        return self.group.mul(a, b)

    def elements(self) -> List[int]:
        return list(range(self.group.order))

    def component_key(self, a: int) -> int:
        return self.group.class_of(a)

    def label(self, a: int) -> str:
        return self.group.names[a]


class FreeGroupWindow(CellAlgebra):
    """Cells of the free group whose entries have total length ``<= window``."""

    def __init__(self, rank: int, window: int):
        self.rank = rank
        self.window = window
        self._elements = words_up_to(rank, window)

    @property
    def unit(self) -> FreeWord:
        return FreeWord.identity(self.rank)

    def mul(self, a: FreeWord, b: FreeWord) -> FreeWord:
        return a * b

    def elements(self) -> List[FreeWord]:
        return self._elements

    def weight(self, a: FreeWord) -> int:
        return len(a)

    def component_key(self, a: FreeWord) -> FreeWord:
        return canonical_form(a)[0]


class FreeAbelianWindow(CellAlgebra):
    """Cells of ``Z^rank`` whose entries have total ℓ¹-norm ``<= window``."""

    def __init__(self, rank: int, window: int):
        self.rank = rank
        self.window = window
        self._elements = sorted(
            (v for v in product(range(-window, window + 1), repeat=rank)
             if sum(abs(x) for x in v) <= window),
            key=lambda v: (sum(abs(x) for x in v), v),
        )

    @property
    def unit(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def elements(self) -> List[Tuple[int, ...]]:
        return self._elements

    def weight(self, a) -> int:
        return sum(abs(x) for x in a)

    def component_key(self, a):
        return a
