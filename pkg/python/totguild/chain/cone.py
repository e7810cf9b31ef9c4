"""Mapping cones realizing the triangle ``D -> cone(f) -> Σ C``."""

from __future__ import annotations

from dataclasses import dataclass

from totguild.exactla import SparseMatrix

from .complex import ChainComplex, suspend
from .maps import ChainMap


@dataclass
class Cone:
    map: ChainMap
    cone: ChainComplex
    inclusion: ChainMap
    projection: ChainMap

    def source_offset(self, n: int) -> int:
        """Where the ``C_{n-1}`` block starts inside ``cone_n``."""
        return self.map.target.dim(n)


def mapping_cone(f: ChainMap) -> Cone:
    """``cone_n = D_n ⊕ C_{n-1}`` with ``d = [[d_D, f], [0, -d_C]]``."""
    C, D = f.source, f.target
    degrees = set(D.dims) | {n + 1 for n in C.dims}
    dims = {n: D.dim(n) + C.dim(n - 1) for n in degrees}
    diffs = {}
    for n in degrees | {n + 1 for n in degrees}:
        rows = [D.dim(n - 1), C.dim(n - 2)]
        cols = [D.dim(n), C.dim(n - 1)]
        if sum(rows) == 0 or sum(cols) == 0:
            continue
        diffs[n] = SparseMatrix.block(
            [[D.d(n), f.component(n - 1)], [None, -C.d(n - 1)]], rows, cols
        )
    cone = ChainComplex(dims, diffs, check=False)

    inclusion = ChainMap(
        D,
        cone,
        {
            n: SparseMatrix.block(
                [[SparseMatrix.identity(D.dim(n))], [None]],
                [D.dim(n), C.dim(n - 1)],
                [D.dim(n)],
            )
            for n in D.dims
        },
        check=False,
    )
    shifted = suspend(C, 1)
    projection = ChainMap(
        cone,
        shifted,
        {
            n: SparseMatrix.block(
                [[None, SparseMatrix.identity(C.dim(n - 1))]],
                [C.dim(n - 1)],
                [D.dim(n), C.dim(n - 1)],
            )
            for n in shifted.dims
        },
        check=False,
    )
    return Cone(map=f, cone=cone, inclusion=inclusion, projection=projection)
