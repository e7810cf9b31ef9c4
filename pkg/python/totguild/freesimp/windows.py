"""Letter-count windows of the bicomplex pair built from Γ(m) and A(m).

Column ``n`` of the D-window is the Connes complex of ``Q[Γ(m)_n]`` on the
cells whose entries have total length at most ``L``, cut at internal degree
``rows``. Column ``n`` of the C-window is the rational small model over the
conjugacy classes with canonical representative of length at most ``L``.
``φ_n`` sends ``1 -> (1)``, ``e_a -> (a⁻¹, a)``, ``u -> (1, 1, 1)`` and
``<x> -> (x)``.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from totguild.chain import (ChainComplex, ChainHomotopy, ChainMap, GradedMap,
                            homology_dims, induced_rank)
from totguild.exactla import SparseMatrix
from totguild.groupcyc import (CellAlgebra, ConnesQuotient, CyclicSetTrunc,
                               FreeAbelianWindow, FreeGroupWindow, FreeWord,
                               canonical_form, conjugacy_classes_up_to,
                               connes_complex, small_model_labels,
                               wtcc_small_model)
from totguild.logs import logger
from totguild.obstruct import HomotopySimplicialMap, assemble_filtered_map
from totguild.response import (IndexRangeError, InvalidWitnessError,
                               WindowTooSmallError)
from totguild.simpfilt import (Bicomplex, SimplicialChainObject, alternating_sum,
                               totalize)

from .gamma import AbelianizedTrunc, FreeSimplicialGroupTrunc, abelianize, gamma_truncation


class _Columns(ABC):
    """Group data of one simplicial group, column by column."""

    rows_allowed: Tuple[int, ...] = (1, 2)

    def __init__(self, gamma: FreeSimplicialGroupTrunc, L: int):
        self.gamma = gamma
        self.L = L

    @property
    def N(self) -> int:
        return self.gamma.N

    def rank(self, n: int) -> int:
        return self.gamma.rank(n)

    def face_gen(self, n: int, i: int, a: int) -> Optional[int]:
        return self.gamma.face_on_generators(n, i)[a]

    @abstractmethod
    def algebra(self, n: int) -> CellAlgebra:
        ...

    @abstractmethod
    def face(self, n: int, i: int, g):
        ...

    @abstractmethod
    def classes(self, n: int) -> list:
        ...

    @abstractmethod
    def canonical(self, g) -> Tuple[object, object]:
        """``(c, h)``: the class basepoint of ``g`` and a conjugator, ``g^h = c``."""
        ...

    @abstractmethod
    def generator(self, n: int, a: int):
        ...

    @abstractmethod
    def inverse(self, g):
        ...

    @abstractmethod
    def mul(self, g, h):
        ...

    @abstractmethod
    def is_unit(self, g) -> bool:
        ...


class _FreeColumns(_Columns):
    def algebra(self, n: int) -> CellAlgebra:
        return FreeGroupWindow(self.rank(n), self.L)

    def face(self, n: int, i: int, g: FreeWord) -> FreeWord:
        return self.gamma.face(n, i, g)

    def classes(self, n: int) -> List[FreeWord]:
        return [c.representative for c in conjugacy_classes_up_to(self.rank(n), self.L)]

    def canonical(self, g: FreeWord):
        return canonical_form(g)

    def generator(self, n: int, a: int) -> FreeWord:
        return FreeWord.generator(self.rank(n), a)

    def inverse(self, g: FreeWord) -> FreeWord:
        return g.inverse()

    def mul(self, g: FreeWord, h: FreeWord) -> FreeWord:
        return g * h

    def is_unit(self, g: FreeWord) -> bool:
        return g.is_identity()


class _AbelianColumns(_Columns):
    rows_allowed = (1,)

    def __init__(self, abelian: AbelianizedTrunc, L: int):
        super().__init__(abelian.gamma, L)
        self.abelian = abelian

    def algebra(self, n: int) -> CellAlgebra:
        return FreeAbelianWindow(self.rank(n), self.L)

    def face(self, n: int, i: int, g: tuple) -> tuple:
        return tuple(int(x) for x in self.abelian.faces[n][i].apply(list(g)))

    def classes(self, n: int) -> List[tuple]:
        elements = FreeAbelianWindow(self.rank(n), self.L).elements()
        return [g for g in elements if any(g)]

    def canonical(self, g: tuple):
        return g, (0,) * len(g)

    def generator(self, n: int, a: int) -> tuple:
        return tuple(1 if b == a else 0 for b in range(self.rank(n)))

    def inverse(self, g: tuple) -> tuple:
        return tuple(-x for x in g)

    def mul(self, g: tuple, h: tuple) -> tuple:
        return tuple(x + y for x, y in zip(g, h))

    def is_unit(self, g: tuple) -> bool:
        return not any(g)


@dataclass
class _DColumn:
    cyclic: CyclicSetTrunc
    connes: ConnesQuotient

    @property
    def complex(self) -> ChainComplex:
        return self.connes.complex

    def class_of(self, q: int, cell: tuple) -> Optional[Tuple[int, int]]:
        """``(basis position, sign)`` of the class of ``cell``, or None when it is zero."""
        try:
            idx = self.cyclic.index(q, cell)
        except KeyError:
            raise WindowTooSmallError(f"cell of degree {q} leaves the window") from None
        pos, sign = self.connes.classes[q][idx]
        return None if pos < 0 else (pos, sign)


@dataclass
class _CColumn:
    complex: ChainComplex
    labels: Dict[int, List[str]]
    classes: list
    class_index: dict


@dataclass
class WindowedBicomplexPair:
    """The C-window, the D-window and ``φ`` with its stage-1 witnesses.

    Pairs built from simplicial groups keep the simplicial objects; the
    surrogate carries bicomplexes only.
    """

    m: Optional[int]
    N: int
    L: Optional[int]
    rows: int
    fmap: HomotopySimplicialMap
    source_object: Optional[SimplicialChainObject] = None
    target_object: Optional[SimplicialChainObject] = None
    labels: Dict[int, Dict[int, List[str]]] = field(default_factory=dict)
    # (column, internal degree, basis index) of ι_(1,m-1) in the C-window
    tracked: Optional[Tuple[int, int, int]] = None
    tracked_image: Optional[List] = None
    kind: str = "free"

    @property
    def source_bicomplex(self) -> Bicomplex:
        return self.fmap.source

    @property
    def target_bicomplex(self) -> Bicomplex:
        return self.fmap.target

    def phi(self, n: int) -> ChainMap:
        return self.fmap.f(n)

    def witness(self, n: int) -> ChainHomotopy:
        return self.fmap.witnesses[n]

    def quasi_isomorphism_degrees(self, n: int, upto: Optional[int] = None) -> Dict[int, bool]:
        """Per internal degree below ``upto`` (default ``rows``): is ``H_q(φ_n)`` an isomorphism?"""
        upto = self.rows if upto is None else upto
        f = self.phi(n)
        src, tgt = homology_dims(f.source), homology_dims(f.target)
        out = {}
        for q in range(upto):
            a, b = src.get(q, 0), tgt.get(q, 0)
            out[q] = a == b and induced_rank(f, q) == a
        return out

    def strict_failures(self) -> List[Tuple[int, int]]:
        """Squares that do not commute on the nose.

        With simplicial objects these are faces ``(n, i)``; otherwise the
        horizontal squares ``(p, -1)``.
        """
        bad = []
        if self.source_object is None or self.target_object is None:
            for p in range(1, self.N + 1):
                if self.fmap.f(p - 1) @ self.source_bicomplex.h(p) != (
                    self.target_bicomplex.h(p) @ self.fmap.f(p)
                ):
                    bad.append((p, -1))
            return bad
        for n in range(1, self.N + 1):
            for i in range(n + 1):
                lhs = self.target_object.face(n, i) @ self.phi(n)
                rhs = self.phi(n - 1) @ self.source_object.face(n, i)
                if lhs != rhs:
                    bad.append((n, i))
        return bad

    def is_strict(self) -> bool:
        return not self.strict_failures()

    def total_homology(self) -> Tuple[Dict[int, int], Dict[int, int]]:
        """Homology dimensions of ``Tot C`` and ``Tot D``."""
        tc, _ = totalize(self.source_bicomplex)
        td, _ = totalize(self.target_bicomplex)
        return homology_dims(tc), homology_dims(td)

    def total_map(self) -> ChainMap:
        """``Tot φ`` for a pair whose witnesses all vanish."""
        if not self.fmap.is_strict():
            raise InvalidWitnessError("total map needs vanishing witnesses", "total")
        return assemble_filtered_map(self.fmap).as_chain_map()

    def total_quasi_isomorphism_degrees(self) -> Dict[int, bool]:
        """Per total degree below the truncated top row: is ``H(Tot φ)`` an isomorphism?"""
        f = self.total_map()
        src, tgt = homology_dims(f.source), homology_dims(f.target)
        return {
            m: src.get(m, 0) == tgt.get(m, 0) == induced_rank(f, m)
            for m in range(self.rows)
        }

    def describe(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "m": self.m,
            "truncation": self.N,
            "window": self.L,
            "rows": self.rows,
            "source_dims": {
                p: self.source_bicomplex.column(p).dims for p in range(self.N + 1)
            },
            "target_dims": {
                p: self.target_bicomplex.column(p).dims for p in range(self.N + 1)
            },
            "strict": self.is_strict(),
        }


def _d_column(cols: _Columns, n: int, rows: int) -> _DColumn:
    X = CyclicSetTrunc(cols.algebra(n), rows)
    return _DColumn(X, connes_complex(X))


def _face_matrix(cols: _Columns, src: _DColumn, tgt: _DColumn, n: int, i: int, q: int) -> SparseMatrix:
    entries: Dict[Tuple[int, int], int] = {}
    for col, idx in enumerate(src.connes.orbits[q]):
        cell = src.cyclic.cells(q)[idx]
        hit = tgt.class_of(q, tuple(cols.face(n, i, g) for g in cell))
        if hit is not None:
            pos, sign = hit
            entries[(pos, col)] = entries.get((pos, col), 0) + sign
    return SparseMatrix(tgt.complex.dim(q), src.complex.dim(q), entries)


def _d_face(cols: _Columns, D: List[_DColumn], n: int, i: int, rows: int) -> ChainMap:
    comps = {q: _face_matrix(cols, D[n], D[n - 1], n, i, q) for q in range(rows + 1)}
    return ChainMap(D[n].complex, D[n - 1].complex, comps, check=False)


def _c_column(cols: _Columns, n: int, rows: int) -> _CColumn:
    classes = cols.classes(n)
    return _CColumn(
        complex=wtcc_small_model(classes, cols.rank(n), rows),
        labels=small_model_labels(classes, cols.rank(n), rows),
        classes=classes,
        class_index={g: k for k, g in enumerate(classes)},
    )


def _c_face(cols: _Columns, C: List[_CColumn], n: int, i: int, rows: int) -> ChainMap:
    src, tgt = C[n], C[n - 1]
    comps = {}
    degree0 = {(0, 0): 1}
    for k, g in enumerate(src.classes):
        image = cols.face(n, i, g)
        if cols.is_unit(image):
            row = 0
        else:
            row = 1 + tgt.class_index[cols.canonical(image)[0]]
        degree0[(row, 1 + k)] = degree0.get((row, 1 + k), 0) + 1
    comps[0] = SparseMatrix(tgt.complex.dim(0), src.complex.dim(0), degree0)
    if rows >= 1:
        comps[1] = SparseMatrix(
            tgt.complex.dim(1), src.complex.dim(1),
            {(b, a): 1 for a in range(cols.rank(n))
             for b in [cols.face_gen(n, i, a)] if b is not None},
        )
    if rows >= 2:
        comps[2] = SparseMatrix.identity(1)
    return ChainMap(src.complex, tgt.complex, comps, check=False)


def _phi(cols: _Columns, C: _CColumn, D: _DColumn, n: int, rows: int) -> ChainMap:
    unit = D.cyclic.algebra.unit

    def column_of(q: int, cells: List[tuple]) -> SparseMatrix:
        entries = {}
        for col, cell in enumerate(cells):
            hit = D.class_of(q, cell)
            if hit is not None:
                entries[(hit[0], col)] = hit[1]
        return SparseMatrix(D.complex.dim(q), C.complex.dim(q), entries)

    comps = {0: column_of(0, [(unit,)] + [(g,) for g in C.classes])}
    if rows >= 1:
        comps[1] = column_of(1, [
            (cols.inverse(cols.generator(n, a)), cols.generator(n, a))
            for a in range(cols.rank(n))
        ])
    if rows >= 2:
        comps[2] = column_of(2, [(unit, unit, unit)])
    return ChainMap(C.complex, D.complex, comps)


def _witness(
    cols: _Columns, C: List[_CColumn], D: List[_DColumn], p: int,
    top: GradedMap, bottom: GradedMap,
) -> Optional[ChainHomotopy]:
    """Conjugation paths ``(h, c h⁻¹)`` joining ``(∂_i x)`` to its basepoint ``(c)``."""
    entries: Dict[Tuple[int, int], int] = {}
    try:
        for k, g in enumerate(C[p].classes):
            for i in range(p + 1):
                image = cols.face(p, i, g)
                c, h = cols.canonical(image)
                if cols.is_unit(image) or c == image:
                    continue
                hit = D[p - 1].class_of(1, (h, cols.mul(c, cols.inverse(h))))
                if hit is None:
                    continue
                pos, sign = hit
                key = (pos, 1 + k)
                entries[key] = entries.get(key, 0) - (-1) ** i * sign
    except WindowTooSmallError:
        return None
    s = GradedMap(top.source, top.target, 1, {
        0: SparseMatrix(D[p - 1].complex.dim(1), C[p].complex.dim(0), entries)
    })
    try:
        return ChainHomotopy(top, bottom, s)
    except InvalidWitnessError:
        logger.debug(f"conjugation path witness fails at column {p}; solving instead")
        return None


def _assemble(cols: _Columns, m: int, rows: int, kind: str) -> WindowedBicomplexPair:
    if rows not in cols.rows_allowed:
        raise IndexRangeError(f"{kind} windows support rows {cols.rows_allowed}, got {rows}")
    N = cols.N
    D = [_d_column(cols, n, rows) for n in range(N + 1)]
    C = [_c_column(cols, n, rows) for n in range(N + 1)]
    target = SimplicialChainObject(
        [d.complex for d in D],
        [[]] + [[_d_face(cols, D, n, i, rows) for i in range(n + 1)] for n in range(1, N + 1)],
        check=False,
    )
    source = SimplicialChainObject(
        [c.complex for c in C],
        [[]] + [[_c_face(cols, C, n, i, rows) for i in range(n + 1)] for n in range(1, N + 1)],
        check=False,
    )
    Bc, Bd = alternating_sum(source), alternating_sum(target)
    maps = {n: _phi(cols, C[n], D[n], n, rows) for n in range(N + 1)}
    witnesses = {}
    for p in range(1, N + 1):
        top = maps[p - 1] @ Bc.h(p)
        bottom = Bd.h(p) @ maps[p]
        w = _witness(cols, C, D, p, top, bottom)
        if w is not None:
            witnesses[p] = w
    fmap = HomotopySimplicialMap(Bc, Bd, maps, witnesses)
    iota = m - 1
    tracked_image = maps[iota].component(1).column(0) if rows >= 1 else None
    pair = WindowedBicomplexPair(
        m=m, N=N, L=cols.L, rows=rows, fmap=fmap,
        source_object=source, target_object=target,
        labels={n: c.labels for n, c in enumerate(C)},
        tracked=(iota, 1, 0) if rows >= 1 else None,
        tracked_image=tracked_image, kind=kind,
    )
    logger.info(
        f"{kind} window pair m={m} N={N} L={cols.L} rows={rows}: "
        f"C dims {[c.complex.dims for c in C]}, D dims {[d.complex.dims for d in D]}"
    )
    return pair


def build_example_bicomplexes(m: int, N: int, L: int, rows: int = 2) -> WindowedBicomplexPair:
    """The windowed pair over ``Γ(m)`` with solved stage-1 witnesses."""
    if L < 2:
        raise WindowTooSmallError(
            f"window L={L} cannot hold the cell (ι⁻¹, ι) carrying ι_(1,{m - 1}); need L >= 2"
        )
    gamma = gamma_truncation(m, N)
    return _assemble(_FreeColumns(gamma, L), m, rows, "free")


def abelian_example_bicomplexes(m: int, N: int, L: int) -> WindowedBicomplexPair:
    """The same construction over ``A(m)`` with ℓ¹ windows; every square commutes."""
    if L < 2:
        raise WindowTooSmallError(f"window L={L} cannot hold (-ι, ι); need L >= 2")
    gamma = gamma_truncation(m, N)
    return _assemble(_AbelianColumns(abelianize(gamma), L), m, 1, "abelian")
