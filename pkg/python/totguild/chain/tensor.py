"""Tensor products of chain complexes and chain maps."""

from __future__ import annotations

from typing import Dict, List, Tuple

from totguild.exactla import SparseMatrix

from .complex import ChainComplex
from .maps import ChainMap


def tensor_blocks(C: ChainComplex, D: ChainComplex, n: int) -> List[Tuple[int, int, int]]:
    """``(p, offset, size)`` of each ``C_p ⊗ D_{n-p}`` block of degree ``n``."""
    blocks, offset = [], 0
    for p in C.degrees():
        size = C.dim(p) * D.dim(n - p)
        if size:
            blocks.append((p, offset, size))
            offset += size
    return blocks


def _degrees(C: ChainComplex, D: ChainComplex) -> range:
    if C.is_zero() or D.is_zero():
        return range(0)
    (clo, chi), (dlo, dhi) = C.support, D.support
    return range(clo + dlo, chi + dhi + 1)


def tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """``C ⊗ D`` with ``d(x ⊗ y) = dx ⊗ y + (-1)^p x ⊗ dy``.

    Inside a block the basis is ordered like ``kron``: ``e_i ⊗ f_j`` sits
    at ``i * dim D_q + j``.
    """
    dims: Dict[int, int] = {}
    layout: Dict[int, Dict[int, int]] = {}
    for n in _degrees(C, D):
        blocks = tensor_blocks(C, D, n)
        layout[n] = {p: off for p, off, _ in blocks}
        dims[n] = sum(size for _, _, size in blocks)
    diffs = {}
    for n in _degrees(C, D):
        if not dims.get(n) or not dims.get(n - 1):
            continue
        entries = {}
        for p, off in layout[n].items():
            q = n - p
            # d^C ⊗ 1 into block p-1
            if (p - 1) in layout[n - 1]:
                piece = C.d(p).kron(SparseMatrix.identity(D.dim(q)))
                low = layout[n - 1][p - 1]
                for (r, c), v in piece.items():
                    entries[(low + r, off + c)] = v
            # (-1)^p 1 ⊗ d^D into block p
            if p in layout[n - 1]:
                piece = SparseMatrix.identity(C.dim(p)).kron(D.d(q))
                low = layout[n - 1][p]
                sign = -1 if p % 2 else 1
                for (r, c), v in piece.items():
                    entries[(low + r, off + c)] = sign * v
        diffs[n] = SparseMatrix(dims[n - 1], dims[n], entries)
    return ChainComplex(dims, diffs, check=False)


def tensor_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """``f ⊗ g`` between the tensor products of sources and targets."""
    source = tensor(f.source, g.source)
    target = tensor(f.target, g.target)
    comps = {}
    for n in source.dims:
        src = tensor_blocks(f.source, g.source, n)
        tgt = {p: off for p, off, _ in tensor_blocks(f.target, g.target, n)}
        entries = {}
        for p, off, _ in src:
            if p not in tgt:
                continue
            piece = f.component(p).kron(g.component(n - p))
            for (r, c), v in piece.items():
                entries[(tgt[p] + r, off + c)] = v
        comps[n] = SparseMatrix(target.dim(n), source.dim(n), entries)
    return ChainMap(source, target, comps)
