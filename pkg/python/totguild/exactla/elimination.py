"""Fraction-free Gauss-Jordan elimination on sparse integer rows.

Rows are dicts ``col -> int``. Combining two rows is ``a*r - b*p`` followed by
division by the row content, so entries stay integral and small. The pivot
for each column is the sparsest row holding it; ties go to the lowest row id.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from totguild.logs import logger

from .matrix import SparseMatrix

IntRow = Dict[int, int]


def integer_row(row: Dict[int, Fraction]) -> IntRow:
    """Scale a rational row to a primitive integer row."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    return _primitive(ints)


def _primitive(row: IntRow) -> IntRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _combine(r: IntRow, p: IntRow, col: int) -> IntRow:
    """Eliminate ``col`` from ``r`` using pivot row ``p``."""
    a, b = p[col], r[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {c: a * v for c, v in r.items()}
    for c, v in p.items():
        s = out.get(c, 0) - b * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return _primitive(out)


class Elimination:
    """Result of eliminating a set of rows over a chosen column order.

    Attributes
    ----------
    pivots : dict col -> row id
        Pivot row chosen for each pivot column.
    rows : dict row id -> IntRow
        Final rows. Pivot rows are reduced: each holds exactly one pivot column.
    residual : list of row ids
        Nonzero rows that found no pivot among the eliminated columns.
    """

    def __init__(
        self,
        rows: Sequence[IntRow],
        columns: Iterable[int],
        reduce: bool = True,
    ):
        self.rows: Dict[int, IntRow] = {}
        index: Dict[int, Set[int]] = defaultdict(set)
        for rid, row in enumerate(rows):
            if row:
                self.rows[rid] = dict(row)
                for c in row:
                    index[c].add(rid)
        self.pivots: Dict[int, int] = {}
        pivot_rows: Set[int] = set()

        for col in columns:
            holders = index.get(col)
            if not holders:
                continue
            candidates = [rid for rid in holders if rid not in pivot_rows]
            if not candidates:
                continue
            pid = min(candidates, key=lambda rid: (len(self.rows[rid]), rid))
            prow = self.rows[pid]
            targets = holders if reduce else candidates
            for rid in list(targets):
                if rid == pid:
                    continue
                old = self.rows[rid]
                new = _combine(old, prow, col)
                for c in old:
                    if c not in new:
                        index[c].discard(rid)
                for c in new:
                    if c not in old:
                        index[c].add(rid)
                self.rows[rid] = new
            self.pivots[col] = pid
            pivot_rows.add(pid)

        self.residual: List[int] = sorted(
            rid for rid, row in self.rows.items()
            if row and rid not in pivot_rows
        )

    @property
    def rank(self) -> int:
        return len(self.pivots)


def eliminate_matrix(
    matrix: SparseMatrix,
    columns: Optional[Iterable[int]] = None,
    augment_identity: bool = False,
    reduce: bool = True,
) -> Elimination:
    """Eliminate the rows of ``matrix`` (optionally ``[matrix | I]``)."""
    by_row = matrix.row_dicts()
    rows = []
    for r in range(matrix.rows):
        row = dict(by_row.get(r, {}))
        if augment_identity:
            row[matrix.cols + r] = Fraction(1)
        rows.append(integer_row(row))
    order = range(matrix.cols) if columns is None else columns
    result = Elimination(rows, order, reduce=reduce)
    logger.debug(
        f"eliminated {matrix.rows}x{matrix.cols} matrix: rank {result.rank}"
    )
    return result


def rank(matrix: SparseMatrix) -> int:
    """Rank only; no back-substitution. Works on the thinner orientation."""
    if matrix.rows > matrix.cols:
        matrix = matrix.transpose()
    if matrix.is_zero():
        return 0
    return eliminate_matrix(matrix, reduce=False).rank


def kernel_columns(
    elimination: Elimination, ncols: int
) -> List[List[Fraction]]:
    """Kernel basis from a reduced elimination over columns ``0..ncols-1``.

    One vector per free column ``f``: ``x_f = 1`` and, for each pivot column
    ``c`` with row ``p``, ``x_c = -p[f] / p[c]``.
    """
    pivot_of_row = {rid: c for c, rid in elimination.pivots.items()}
    free = [c for c in range(ncols) if c not in elimination.pivots]
    free_set = set(free)
    basis: Dict[int, List[Fraction]] = {
        f: [Fraction(0)] * ncols for f in free
    }
    for f in free:
        basis[f][f] = Fraction(1)
    for rid, c in pivot_of_row.items():
        row = elimination.rows[rid]
        pv = row[c]
        for f, v in row.items():
            if f in free_set:
                basis[f][c] = Fraction(-v, pv)
    return [basis[f] for f in free]


class Solver:
    """One elimination of ``[A | I]`` reused for many right-hand sides.

    For each row of the reduced system the identity block records which
    combination of the original equations it is, so ``A x = b`` is decided
    by applying those combinations to ``b``.
    """

    def __init__(self, matrix: SparseMatrix):
        self.matrix = matrix
        self._ncols = matrix.cols
        self._elim = eliminate_matrix(
            matrix, columns=range(matrix.cols), augment_identity=True
        )
        n = matrix.cols
        self._pivot_rows: List[Tuple[int, int, IntRow]] = []
        for c, rid in sorted(self._elim.pivots.items()):
            row = self._elim.rows[rid]
            combo = {k - n: v for k, v in row.items() if k >= n}
            self._pivot_rows.append((c, row[c], combo))
        self._checks: List[IntRow] = []
        for rid in self._elim.residual:
            row = self._elim.rows[rid]
            self._checks.append({k - n: v for k, v in row.items() if k >= n})

    @property
    def rank(self) -> int:
        return self._elim.rank

    def solve(self, b: Sequence[object]) -> Optional[List[Fraction]]:
        if len(b) != self.matrix.rows:
            from totguild.response import DimensionMismatchError

            raise DimensionMismatchError(
                f"right-hand side of length {len(b)} for a system with "
                f"{self.matrix.rows} equations"
            )
        support = {i: Fraction(v) for i, v in enumerate(b) if v}
        for combo in self._checks:
            if _dot(combo, support):
                return None
        x = [Fraction(0)] * self._ncols
        for c, pv, combo in self._pivot_rows:
            value = _dot(combo, support)
            if value:
                x[c] = value / pv
        return x

    def contains(self, b: Sequence[object]) -> bool:
        return self.solve(b) is not None


def _dot(row: IntRow, support: Dict[int, Fraction]) -> Fraction:
    if len(row) < len(support):
        return sum(
            (v * support[k] for k, v in row.items() if k in support),
            Fraction(0),
        )
    return sum(
        (row[k] * v for k, v in support.items() if k in row), Fraction(0)
    )
