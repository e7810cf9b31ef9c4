"""Immutable sparse matrices over the rationals."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import (Dict, Iterable, Iterator, List, Mapping, Optional,
                    Sequence, Tuple)

from totguild.response import DimensionMismatchError, InputError

Rational = Fraction
Vector = List[Fraction]
Entries = Dict[Tuple[int, int], Fraction]


class SparseMatrix:
    """A ``rows x cols`` matrix storing only its nonzero entries.

    Parameters
    ----------
    rows, cols : int
        Shape of the matrix.
    entries : mapping (row, col) -> number, optional
        Values are converted to ``Fraction``; zeros are dropped.
    """

    __slots__ = ("_rows", "_cols", "_entries", "_by_row", "_hash")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[Tuple[int, int], object]] = None,
    ):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"negative shape {rows}x{cols}")
        self._rows = rows
        self._cols = cols
        clean: Entries = {}
        for (r, c), value in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatchError(
                    f"entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )
            if isinstance(value, float):
                raise InputError("floating point entries are not exact")
            value = Fraction(value)
            if value:
                clean[(r, c)] = value
        self._entries = clean
        self._by_row: Optional[Dict[int, Dict[int, Fraction]]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: Entries) -> "SparseMatrix":
        # entries already nonzero Fractions within range
        m = cls.__new__(cls)
        m._rows, m._cols, m._entries = rows, cols, entries
        m._by_row = None
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls._trusted(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls._trusted(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def from_dense(
        cls, rows: Sequence[Sequence[object]], cols: Optional[int] = None
    ) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else (cols or 0)
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError("ragged dense matrix")
            for c, value in enumerate(row):
                if value:
                    entries[(r, c)] = value
        return cls(n_rows, n_cols, entries)

    @classmethod
    def from_columns(
        cls, rows: int, columns: Sequence[Sequence[object]]
    ) -> "SparseMatrix":
        entries = {}
        for c, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatchError(
                    f"column {c} has {len(column)} entries, expected {rows}"
                )
            for r, value in enumerate(column):
                if value:
                    entries[(r, c)] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def block(
        cls,
        grid: Sequence[Sequence[Optional["SparseMatrix"]]],
        row_sizes: Sequence[int],
        col_sizes: Sequence[int],
    ) -> "SparseMatrix":
        """Assemble a block matrix; ``None`` blocks are zero."""
        row_offsets = _offsets(row_sizes)
        col_offsets = _offsets(col_sizes)
        entries: Entries = {}
        for i, grid_row in enumerate(grid):
            for j, blk in enumerate(grid_row):
                if blk is None:
                    continue
                if blk.shape != (row_sizes[i], col_sizes[j]):
                    raise DimensionMismatchError(
                        f"block ({i}, {j}) has shape {blk.shape}, expected "
                        f"{(row_sizes[i], col_sizes[j])}"
                    )
                ro, co = row_offsets[i], col_offsets[j]
                for (r, c), v in blk._entries.items():
                    entries[(ro + r, co + c)] = v
        return cls._trusted(sum(row_sizes), sum(col_sizes), entries)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def items(self) -> Iterable[Tuple[Tuple[int, int], Fraction]]:
        return self._entries.items()

    def get(self, r: int, c: int) -> Fraction:
        return self._entries.get((r, c), Fraction(0))

    def is_zero(self) -> bool:
        return not self._entries

    def row_dicts(self) -> Dict[int, Dict[int, Fraction]]:
        if self._by_row is None:
            by_row: Dict[int, Dict[int, Fraction]] = defaultdict(dict)
            for (r, c), v in self._entries.items():
                by_row[r][c] = v
            self._by_row = dict(by_row)
        return self._by_row

    def column(self, c: int) -> Vector:
        out = [Fraction(0)] * self._rows
        for (r, cc), v in self._entries.items():
            if cc == c:
                out[r] = v
        return out

    def columns(self) -> List[Vector]:
        cols = [[Fraction(0)] * self._rows for _ in range(self._cols)]
        for (r, c), v in self._entries.items():
            cols[c][r] = v
        return cols

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self._cols for _ in range(self._rows)]
        for (r, c), v in self._entries.items():
            dense[r][c] = v
        return dense

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        return iter(sorted(self._entries.items()))

    def apply(self, vector: Sequence[object]) -> Vector:
        """Matrix times a dense column vector."""
        if len(vector) != self._cols:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} against {self._cols} columns"
            )
        out = [Fraction(0)] * self._rows
        for (r, c), v in self._entries.items():
            x = vector[c]
            if x:
                out[r] += v * x
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        right = other.row_dicts()
        acc: Dict[Tuple[int, int], Fraction] = defaultdict(Fraction)
        for (r, k), a in self._entries.items():
            row = right.get(k)
            if row is None:
                continue
            for c, b in row.items():
                acc[(r, c)] += a * b
        return SparseMatrix._trusted(
            self._rows, other._cols, {k: v for k, v in acc.items() if v}
        )

    def _check_same_shape(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"shape mismatch {self.shape} vs {other.shape}"
            )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        self._check_same_shape(other)
        entries = dict(self._entries)
        for k, v in other._entries.items():
            s = entries.get(k, 0) + v
            if s:
                entries[k] = s
            else:
                entries.pop(k, None)
        return SparseMatrix._trusted(self._rows, self._cols, entries)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix._trusted(
            self._rows, self._cols, {k: -v for k, v in self._entries.items()}
        )

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: object) -> "SparseMatrix":
        factor = Fraction(factor)
        if not factor:
            return SparseMatrix.zeros(self._rows, self._cols)
        return SparseMatrix._trusted(
            self._rows,
            self._cols,
            {k: v * factor for k, v in self._entries.items()},
        )

    def __mul__(self, factor: object) -> "SparseMatrix":
        if isinstance(factor, SparseMatrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix._trusted(
            self._cols,
            self._rows,
            {(c, r): v for (r, c), v in self._entries.items()},
        )

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product; row index ``i * other.rows + k``."""
        entries: Entries = {}
        for (i, j), a in self._entries.items():
            for (k, l), b in other._entries.items():
                entries[(i * other._rows + k, j * other._cols + l)] = a * b
        return SparseMatrix._trusted(
            self._rows * other._rows, self._cols * other._cols, entries
        )

    def submatrix(
        self, row_index: Sequence[int], col_index: Sequence[int]
    ) -> "SparseMatrix":
        rmap = {r: i for i, r in enumerate(row_index)}
        cmap = {c: j for j, c in enumerate(col_index)}
        entries = {
            (rmap[r], cmap[c]): v
            for (r, c), v in self._entries.items()
            if r in rmap and c in cmap
        }
        return SparseMatrix._trusted(len(row_index), len(col_index), entries)

    @staticmethod
    def hstack(*blocks: "SparseMatrix", rows: Optional[int] = None) -> "SparseMatrix":
        if not blocks:
            return SparseMatrix.zeros(rows or 0, 0)
        return SparseMatrix.block(
            [list(blocks)], [blocks[0].rows], [b.cols for b in blocks]
        )

    @staticmethod
    def vstack(*blocks: "SparseMatrix", cols: Optional[int] = None) -> "SparseMatrix":
        if not blocks:
            return SparseMatrix.zeros(0, cols or 0)
        return SparseMatrix.block(
            [[b] for b in blocks], [b.rows for b in blocks], [blocks[0].cols]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self._rows, self._cols, frozenset(self._entries.items()))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"SparseMatrix({self._rows}x{self._cols}, nnz={self.nnz})"


def _offsets(sizes: Sequence[int]) -> List[int]:
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def block_diagonal(*blocks: SparseMatrix) -> SparseMatrix:
    n = len(blocks)
    grid = [[blocks[i] if i == j else None for j in range(n)] for i in range(n)]
    return SparseMatrix.block(
        grid, [b.rows for b in blocks], [b.cols for b in blocks]
    )
