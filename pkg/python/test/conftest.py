import random
import sys

import pytest
from totguild.chain import (ChainComplex, ChainMap, GradedMap, direct_sum,
                            homotopy_classes)
from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.simpfilt import Bicomplex, FilteredComplex, FilteredMap


@pytest.fixture(autouse=True)
def reset_log_level():
    """Automatically reset the global log level after each test to ensure isolation."""
    def get_l_mod():
        return sys.modules["totguild.logs.logger"]

    get_l_mod()._CONFIGURED_LOG_LEVEL = None
    logger._log_level = None

    yield

    get_l_mod()._CONFIGURED_LOG_LEVEL = None
    logger._log_level = None


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def circle():
    """Q <-0- Q: homology of a circle, one class in degrees 0 and 1."""
    return ChainComplex({0: 1, 1: 1}, {1: SparseMatrix.zeros(1, 1)})


@pytest.fixture
def interval():
    """Q^2 <-d- Q with d = (-1, 1): contractible to a point."""
    return ChainComplex(
        {0: 2, 1: 1}, {1: SparseMatrix.from_dense([[-1], [1]])}
    )


@pytest.fixture
def acyclic():
    """Q <-id- Q: exact everywhere."""
    return ChainComplex({0: 1, 1: 1}, {1: SparseMatrix.identity(1)})


def _unimodular(rng, n, steps=6, allowed=None):
    """A random integer change of basis and its inverse, entries only where ``allowed``."""
    P, P_inv = SparseMatrix.identity(n), SparseMatrix.identity(n)
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        if allowed is not None and not allowed(i, j):
            continue
        c = rng.choice((-2, -1, 1, 2))
        P = P @ (SparseMatrix.identity(n) + SparseMatrix(n, n, {(i, j): c}))
        P_inv = (SparseMatrix.identity(n) + SparseMatrix(n, n, {(i, j): -c})) @ P_inv
    return P, P_inv


@pytest.fixture
def random_complex(rng):
    """Factory for complexes in degrees 0..top with given Betti numbers, basis scrambled.

    Without ``betti`` degree 0 carries one class and the others zero or one.
    """
    def _make(top=2, betti=None):
        if betti is None:
            betti = [1] + [rng.randint(0, 1) for _ in range(top)]
        # pairs[n] is the rank of d_n
        pairs = [0] + [rng.randint(0, 2) for _ in range(top)] + [0]
        dims = {n: pairs[n + 1] + betti[n] + pairs[n] for n in range(top + 1)}
        bases = {n: _unimodular(rng, dims[n]) for n in dims}
        d = {}
        for n in range(1, top + 1):
            standard = SparseMatrix(
                dims[n - 1], dims[n],
                {(k, pairs[n + 1] + betti[n] + k): 1 for k in range(pairs[n])},
            )
            d[n] = bases[n - 1][0] @ standard @ bases[n][1]
        return ChainComplex(dims, d)

    return _make


@pytest.fixture
def random_graded(rng):
    """Factory for dense random graded maps with small integer entries."""
    def _make(source, target, degree):
        components = {}
        for n in source.dims:
            rows, cols = target.dim(n + degree), source.dim(n)
            if rows:
                components[n] = SparseMatrix(
                    rows, cols,
                    {(r, c): rng.randint(-2, 2) for r in range(rows) for c in range(cols)},
                )
        return GradedMap(source, target, degree, components)

    return _make


@pytest.fixture
def random_chain_map(rng, random_graded):
    """Factory for chain maps: a random homotopy class plus a random boundary."""
    def _make(source, target):
        f = random_graded(source, target, 1).boundary()
        for rep in homotopy_classes(source, target, 0).representatives:
            f = f + rep.scale(rng.randint(-2, 2))
        return ChainMap.from_graded(f)

    return _make


@pytest.fixture
def random_bicomplex(random_complex, random_chain_map):
    """Factory for three-column bicomplexes with both horizontal maps random.

    The middle column is ``A ⊕ B``; ``h_2`` lands in ``A`` and ``h_1`` only
    reads ``B``, so ``h_1 h_2 = 0``.
    """
    def _make(top=2):
        C0, A, B, C2 = (random_complex(top) for _ in range(4))
        C1 = direct_sum(A, B)
        g, k = random_chain_map(C2, A), random_chain_map(B, C0)
        into = {
            n: SparseMatrix.block([[g.component(n)], [None]], [A.dim(n), B.dim(n)], [C2.dim(n)])
            for n in C2.dims
        }
        out = {
            n: SparseMatrix.block([[None, k.component(n)]], [C0.dim(n)], [A.dim(n), B.dim(n)])
            for n in C1.dims
        }
        return Bicomplex(
            {0: C0, 1: C1, 2: C2},
            {1: ChainMap(C1, C0, out), 2: ChainMap(C2, C1, into)},
        )

    return _make


def _levelled(rng, levels):
    return {
        m: _unimodular(rng, len(lv), allowed=lambda i, j, lv=lv: lv[i] <= lv[j])
        for m, lv in levels.items()
    }


@pytest.fixture
def random_filtered(rng):
    """Factory for filtered complexes in degrees 0..top with levels below ``depth``.

    Each rank-one piece of ``d`` drops the filtration by a random amount, so
    differentials appear on random pages.
    """
    def _make(top=3, depth=3):
        pairs = [0] + [rng.randint(0, 2) for _ in range(top)] + [0]
        betti = [1] + [rng.randint(0, 1) for _ in range(top)]
        # (source level, target level) of each rank-one piece of d_n
        drops = {n: [] for n in range(1, top + 1)}
        for n, pieces in drops.items():
            for _ in range(pairs[n]):
                s = rng.randrange(depth)
                pieces.append((s, rng.randint(0, s)))
        levels = {
            n: [t for _, t in drops.get(n + 1, [])]
            + [rng.randrange(depth) for _ in range(betti[n])]
            + [s for s, _ in drops.get(n, [])]
            for n in range(top + 1)
        }
        bases = _levelled(rng, levels)
        d = {}
        for n in range(1, top + 1):
            start = pairs[n + 1] + betti[n]
            standard = SparseMatrix(
                len(levels[n - 1]), len(levels[n]),
                {(k, start + k): 1 for k in range(pairs[n])},
            )
            d[n] = bases[n - 1][0] @ standard @ bases[n][1]
        total = ChainComplex({n: len(lv) for n, lv in levels.items()}, d)
        return FilteredComplex(total, levels)

    return _make


@pytest.fixture
def scrambled_copy(rng):
    """Factory: ``filt`` moved by a filtration-preserving basis change, with the filtered isomorphism."""
    def _make(filt):
        changes = _levelled(rng, filt.levels)
        d = {
            m: changes[m - 1][0] @ D @ changes[m][1]
            for m, D in filt.total.differentials.items()
        }
        copy = FilteredComplex(ChainComplex(filt.total.dims, d), filt.levels)
        return copy, FilteredMap(filt, copy, {m: P for m, (P, _) in changes.items()})

    return _make
