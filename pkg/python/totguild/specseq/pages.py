"""Pages of the spectral sequence of a bounded filtered complex.

With ``F_p`` increasing and ``d`` of degree -1,

    Z^r_p = {x in F_p : dx in F_{p-r}}
    E^r_p = Z^r_p / (Z^{r-1}_{p-1} + d Z^{r-1}_{p+r-1})

and ``d_r: E^r_p(m) -> E^r_{p-r}(m-1)`` is induced by ``d``. Cells are keyed
homologically by ``(s, t) = (p, m - p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from totguild.chain import homology_dims
from totguild.exactla import (SparseMatrix, Subquotient, Subspace,
                              rank_kernel_image, subquotient_basis)
from totguild.logs import logger
from totguild.response import IndexRangeError
from totguild.simpfilt import FilteredComplex

from .probe import ProbeComplex, ProbedComplex, apply_probe

Cell = Tuple[int, int]


@dataclass
class SpectralSequencePage:
    r: int
    cells: Dict[Cell, Subquotient]
    differentials: Dict[Cell, SparseMatrix]

    def dim(self, s: int, t: int) -> int:
        q = self.cells.get((s, t))
        return 0 if q is None else q.dim

    def dims(self) -> Dict[Cell, int]:
        return {cell: q.dim for cell, q in self.cells.items() if q.dim}

    def target(self, s: int, t: int) -> Cell:
        return (s - self.r, t + self.r - 1)

    def differential(self, s: int, t: int) -> SparseMatrix:
        m = self.differentials.get((s, t))
        if m is None:
            tgt = self.target(s, t)
            return SparseMatrix.zeros(self.dim(*tgt), self.dim(s, t))
        return m

    def is_degenerate(self) -> bool:
        """True when every ``d_r`` on this page vanishes."""
        return all(m.is_zero() for m in self.differentials.values())


class _Cycles:
    """Cached ``Z^r_p`` and ``E^r_p`` for one filtered complex."""

    def __init__(self, filt: FilteredComplex):
        self.filt = filt
        self.lo, self.hi = filt.bounds
        self._z: Dict[Tuple[int, int, int], Subspace] = {}
        self._e: Dict[Tuple[int, int, int], Subquotient] = {}

    def Z(self, r: int, p: int, m: int) -> Subspace:
        key = (r, p, m)
        if key in self._z:
            return self._z[key]
        X = self.filt.total
        n = X.dim(m)
        cols = self.filt.indices(p, m)
        if not cols:
            result = Subspace.zero(n)
        else:
            below = self.filt.levels.get(m - 1, [])
            rows = [i for i, v in enumerate(below) if v > p - r]
            if not rows:
                result = Subspace.coordinate(n, cols)
            else:
                _, kernel, _ = rank_kernel_image(X.d(m).submatrix(rows, cols))
                vectors = []
                for v in kernel.vectors():
                    full = [Fraction(0)] * n
                    for c, x in zip(cols, v):
                        full[c] = x
                    vectors.append(full)
                result = Subspace(
                    n, SparseMatrix.from_columns(n, vectors), check=False
                )
        self._z[key] = result
        return result

    def E(self, r: int, p: int, m: int) -> Subquotient:
        key = (r, p, m)
        if key not in self._e:
            X = self.filt.total
            W = self.Z(r, p, m)
            U = self.Z(r - 1, p - 1, m)
            higher = self.Z(r - 1, p + r - 1, m + 1)
            if higher.dim and X.dim(m):
                d = X.d(m + 1)
                U = U.sum(Subspace.span(X.dim(m), [d.apply(v) for v in higher.vectors()]))
            self._e[key] = subquotient_basis(W, U)
        return self._e[key]


@dataclass
class SpectralSequence:
    """Pages ``E^1..E^{r_max}`` of a probed filtered complex."""

    probed: ProbedComplex
    pages: List[SpectralSequencePage] = field(default_factory=list)
    _cycles: Optional[_Cycles] = field(default=None, repr=False)

    @property
    def filtered(self) -> FilteredComplex:
        return self.probed.filtered

    def page(self, r: int) -> SpectralSequencePage:
        for page in self.pages:
            if page.r == r:
                return page
        raise IndexRangeError(f"page {r} was not computed")

    @property
    def infinity(self) -> SpectralSequencePage:
        """The last computed page; it is ``E^∞`` once ``r`` exceeds the length."""
        return self.pages[-1]

    @property
    def stable(self) -> bool:
        return bool(self.pages) and self.pages[-1].r > self.filtered.length

    def cohomological_table(self, r: int) -> Dict[Cell, int]:
        """Dimensions re-indexed as ``E_r^{s,t}`` with ``s = -p``."""
        return {(-s, t): d for (s, t), d in self.page(r).dims().items()}


def _page(cycles: _Cycles, r: int, degrees: Iterable[int]) -> SpectralSequencePage:
    X = cycles.filt.total
    lo, hi = cycles.lo, cycles.hi
    cells: Dict[Cell, Subquotient] = {}
    for m in degrees:
        if not X.dim(m):
            continue
        for p in range(lo, hi + 1):
            q = cycles.E(r, p, m)
            if q.dim:
                cells[(p, m - p)] = q
    differentials: Dict[Cell, SparseMatrix] = {}
    for (s, t), q in cells.items():
        m = s + t
        tgt = (s - r, t + r - 1)
        if tgt not in cells:
            continue
        d = X.d(m)
        target = cells[tgt]
        columns = [target.project(d.apply(v)) for v in q.lifts]
        differentials[(s, t)] = SparseMatrix.from_columns(target.dim, columns)
    return SpectralSequencePage(r, cells, differentials)


def pages(
    filt: FilteredComplex,
    probe: Optional[ProbeComplex] = None,
    r_max: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> SpectralSequence:
    """Pages ``E^1 .. E^{r_max}``; by default up to the first stable page."""
    probed = apply_probe(filt, probe)
    F = probed.filtered
    if r_max is None:
        r_max = max(1, F.length + 1)
    if r_max < 1:
        raise IndexRangeError(f"r_max must be at least 1, got {r_max}")
    wanted = list(F.total.dims) if degrees is None else list(degrees)
    # d_r needs the neighbouring degree too
    span = sorted(set(wanted) | {m - 1 for m in wanted})
    cycles = _Cycles(F)
    ss = SpectralSequence(probed, _cycles=cycles)
    for r in range(1, r_max + 1):
        page = _page(cycles, r, span)
        page.cells = {c: q for c, q in page.cells.items() if c[0] + c[1] in wanted}
        page.differentials = {
            c: m for c, m in page.differentials.items()
            if c in page.cells and page.target(*c) in page.cells
        }
        ss.pages.append(page)
        logger.debug(f"E^{r}: {sum(page.dims().values())} total dimension")
    return ss


@dataclass
class AbutmentReport:
    """Per total degree: (E^∞ total, dim H of the probed complex)."""

    totals: Dict[int, Tuple[int, int]]

    @property
    def mismatches(self) -> Dict[int, Tuple[int, int]]:
        return {m: v for m, v in self.totals.items() if v[0] != v[1]}

    @property
    def ok(self) -> bool:
        return not self.mismatches


def abutment_check(ss: SpectralSequence) -> AbutmentReport:
    """Compare ``Σ_s dim E^∞_{s, m-s}`` with ``dim H_m`` degree by degree."""
    if not ss.stable:
        raise IndexRangeError(
            f"pages stop at {ss.pages[-1].r if ss.pages else 0}, "
            f"need more than {ss.filtered.length}"
        )
    infinity = ss.infinity.dims()
    homology = homology_dims(ss.filtered.total)
    totals = {}
    for m in set(homology) | {s + t for s, t in infinity}:
        e = sum(d for (s, t), d in infinity.items() if s + t == m)
        totals[m] = (e, homology.get(m, 0))
    report = AbutmentReport(totals)
    if not report.ok:
        logger.warning(f"abutment mismatch in degrees {sorted(report.mismatches)}")
    return report


def track_class(
    ss: SpectralSequence, s: int, t: int, vector: Sequence[object]
) -> Dict[int, List[Fraction]]:
    """Coordinates of ``vector`` on every page where it is still a cycle.

    Tracking stops at the first page where ``vector`` leaves ``Z^r``, that is,
    where it supports a nonzero differential.
    """
    cycles = ss._cycles
    out: Dict[int, List[Fraction]] = {}
    for page in ss.pages:
        q = cycles.E(page.r, s, s + t)
        if not q.W.contains(vector):
            break
        out[page.r] = q.project(vector)
    return out


def render_page(page: SpectralSequencePage, cohomological: bool = False) -> str:
    """A text grid of cell dimensions, filtration across and ``t`` down."""
    dims = page.dims()
    if cohomological:
        dims = {(-s, t): d for (s, t), d in dims.items()}
    if not dims:
        return f"E^{page.r}: zero"
    columns = range(min(s for s, _ in dims), max(s for s, _ in dims) + 1)
    ts = range(max(t for _, t in dims), min(t for _, t in dims) - 1, -1)
    width = max(3, max(len(str(v)) for v in dims.values()) + 1)
    lines = [f"E^{page.r}"]
    lines.append("t\\s".ljust(5) + "".join(str(s).rjust(width) for s in columns))
    for t in ts:
        row = "".join(
            (str(dims[(s, t)]) if (s, t) in dims else ".").rjust(width) for s in columns
        )
        lines.append(str(t).ljust(5) + row)
    return "\n".join(lines)
