import pytest
from totguild.chain import (ChainComplex, ChainMap, homology_dims, induced_rank,
                            mapping_cone)
from totguild.response import (DimensionMismatchError, IndexRangeError,
                               NotAChainComplexError, SimplicialIdentityError)
from totguild.simpfilt import (Bicomplex, SimplicialChainObject,
                               alternating_sum, total_differential, totalize)


def constant_object(C, N, with_degeneracies=True):
    """The constant simplicial object on C: every face and degeneracy is id."""
    ident = ChainMap.identity(C)
    faces = [[]] + [[ident] * (n + 1) for n in range(1, N + 1)]
    degeneracies = None
    if with_degeneracies:
        degeneracies = [[ident] * (n + 1) for n in range(N)]
    return SimplicialChainObject([C] * (N + 1), faces, degeneracies)


class TestSimplicialChainObject:
    """Test cases for truncated simplicial objects."""

    def test_constant_object_validates(self, circle):
        """Test the constant object satisfies every identity."""
        X = constant_object(circle, 3)
        assert X.N == 3
        assert X.face(2, 1) == ChainMap.identity(circle)

    def test_broken_face_identity(self, circle):
        """Test a zero middle face breaks ∂_0 ∂_1 = ∂_0 ∂_0."""
        ident = ChainMap.identity(circle)
        zero = ChainMap.zero(circle, circle)
        faces = [[], [ident, ident], [ident, zero, ident]]
        with pytest.raises(SimplicialIdentityError):
            SimplicialChainObject([circle] * 3, faces)

    def test_wrong_face_count(self, circle):
        """Test that C_n needs n + 1 faces."""
        ident = ChainMap.identity(circle)
        with pytest.raises(DimensionMismatchError):
            SimplicialChainObject([circle, circle], [[], [ident]])

    def test_missing_degeneracies(self, circle):
        """Test asking for a degeneracy that was never given."""
        X = constant_object(circle, 1, with_degeneracies=False)
        with pytest.raises(SimplicialIdentityError):
            X.degeneracy(0, 0)

    def test_truncate(self, circle):
        """Test truncation keeps the low degrees."""
        X = constant_object(circle, 3).truncate(1)
        assert X.N == 1
        assert len(X.degeneracies) == 1

    def test_alternating_sum_of_constant_object(self, circle):
        """Test Σ(-1)^i ∂_i is zero in odd and id in even degrees."""
        B = alternating_sum(constant_object(circle, 2))
        assert B.h(1).is_zero()
        assert B.h(2) == ChainMap.identity(circle)


class TestBicomplex:
    """Test cases for bicomplexes and totalization."""

    def test_h_squared_checked(self):
        """Test that h h != 0 is rejected."""
        point = ChainComplex.concentrated(0)
        ident = ChainMap.identity(point)
        with pytest.raises(NotAChainComplexError):
            Bicomplex({0: point, 1: point, 2: point}, {1: ident, 2: ident})

    def test_horizontal_ends_checked(self, circle, interval):
        """Test that h_p must run C_p -> C_{p-1}."""
        with pytest.raises(DimensionMismatchError):
            Bicomplex({0: circle, 1: interval}, {1: ChainMap.identity(circle)})

    def test_total_differential_squares_to_zero(self, interval):
        """Test D D = 0 on the totalization of a constant object."""
        B = alternating_sum(constant_object(interval, 3))
        for m in B.total_degrees():
            assert (total_differential(B, m) @ total_differential(B, m + 1)).is_zero()

    def test_tot_of_constant_object(self, circle):
        """Test the constant object totalizes to its base."""
        tot, _ = totalize(alternating_sum(constant_object(circle, 2)))
        assert tot.dims == {0: 1, 1: 2, 2: 2, 3: 1}
        assert homology_dims(tot) == {0: 1, 1: 1, 2: 0, 3: 0}

    def test_filtrations_are_preserved(self, interval):
        """Test both filtrations are accepted by the checked constructor."""
        from totguild.simpfilt import FilteredComplex

        B = alternating_sum(constant_object(interval, 2))
        for by in ("columns", "rows"):
            tot, filt = totalize(B, by=by)
            FilteredComplex(tot, filt.levels)
        _, cols = totalize(B, by="columns")
        assert cols.levels[1] == [0, 1, 1]

    def test_unknown_filtration(self, circle):
        """Test an unknown filtration name."""
        with pytest.raises(IndexRangeError):
            totalize(Bicomplex({0: circle}), by="diagonal")

    def test_window_and_rows(self, circle):
        """Test column windows and row truncation."""
        B = alternating_sum(constant_object(circle, 3))
        W = B.window(1, 2)
        assert W.column_range == (1, 2)
        assert W.h(2) == ChainMap.identity(circle)
        R = B.rows(0)
        assert all(C.dims == {0: 1} for C in R.columns.values())
        with pytest.raises(IndexRangeError):
            B.window(2, 1)

    def test_empty_bicomplex(self):
        """Test the empty bicomplex totalizes to zero."""
        tot, filt = totalize(Bicomplex({}))
        assert tot.is_zero()
        assert filt.bounds == (0, -1)
        assert total_differential(Bicomplex({}), 0).shape == (0, 0)


def _hand_total(B, m):
    """Dense ``Tot_m -> Tot_{m-1}`` from cells ``(p, q, i)`` listed by column, then index."""
    lo, hi = B.column_range

    def cells(k):
        return [(p, k - p, i) for p in range(lo, hi + 1) for i in range(B.cell_dim(p, k - p))]

    rows, cols = cells(m - 1), cells(m)
    where = {cell: r for r, cell in enumerate(rows)}
    dense = [[0] * len(cols) for _ in rows]
    for c, (p, q, i) in enumerate(cols):
        for r in range(B.cell_dim(p - 1, q)):
            dense[where[(p - 1, q, r)]][c] += B.h(p).component(q).get(r, i)
        for r in range(B.cell_dim(p, q - 1)):
            dense[where[(p, q - 1, r)]][c] += (-1) ** p * B.column(p).d(q).get(r, i)
    return dense


class TestRandomTotalization:
    """Test cases for Tot of randomized bicomplexes."""

    def test_three_by_three_against_hand_assembly(self, random_bicomplex):
        """Test D = h + (-1)^p d entry by entry and D D = 0."""
        for _ in range(10):
            B = random_bicomplex()
            tot, filt = totalize(B)
            for m in B.total_degrees():
                assert total_differential(B, m).to_dense() == _hand_total(B, m)
                assert (total_differential(B, m) @ total_differential(B, m + 1)).is_zero()
            assert filt.levels == {
                m: [p for p in range(3) for _ in range(B.cell_dim(p, m - p))]
                for m in tot.dims
            }

    def test_two_columns_are_a_cone(self, random_complex, random_chain_map):
        """Test Tot of f: C -> D placed in columns 1 and 0 is cone(f)."""
        for _ in range(10):
            C, D = random_complex(), random_complex()
            f = random_chain_map(C, D)
            tot, _ = totalize(Bicomplex({0: D, 1: C}, {1: f}))
            assert tot == mapping_cone(f).cone

    def test_cone_long_exact_sequence(self, random_complex, random_chain_map):
        """Test dim H_n(cone f) = dim coker f_* in n + dim ker f_* in n - 1."""
        for _ in range(10):
            C, D = random_complex(), random_complex()
            f = random_chain_map(C, D)
            hc, hd = homology_dims(C), homology_dims(D)
            cone = homology_dims(mapping_cone(f).cone)
            for n in range(4):
                coker = hd.get(n, 0) - induced_rank(f, n)
                kernel = hc.get(n - 1, 0) - induced_rank(f, n - 1) if n else 0
                assert cone.get(n, 0) == coker + kernel
