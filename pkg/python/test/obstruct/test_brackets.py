from itertools import product

import pytest
from totguild.chain import (ChainComplex, ChainHomotopy, ChainMap, GradedMap,
                            homology_dims, homotopy_classes)
from totguild.exactla import SparseMatrix
from totguild.formats import (data_path, load_document,
                              simplicial_map_from_file)
from totguild.freesimp import family_member
from totguild.obstruct import (HomotopySimplicialMap, Layers,
                               assemble_filtered_map, bracket_vanishes,
                               extend_tower, gr2_map, solve_stage1,
                               toda_bracket)
from totguild.response import (IndexRangeError, InvalidWitnessError,
                               PreconditionError)
from totguild.simpfilt import Bicomplex, totalize


@pytest.fixture
def surrogate():
    model, _ = load_document(data_path("surrogate.json"), ["simplicial_map"])
    fmap, _ = simplicial_map_from_file(model)
    return fmap


@pytest.fixture
def point():
    return ChainComplex.concentrated(0)


@pytest.fixture
def planted(random_complex, random_graded):
    """Random four-column bicomplexes with maps ``f_p = id + D(σ_p)`` on every column."""
    def near_identity(C):
        return ChainMap.identity(C) + random_graded(C, C, 1).boundary()

    def _make():
        K, L = random_complex(), random_complex()
        B = Bicomplex({0: K, 1: K, 2: L, 3: L}, {1: near_identity(K), 3: near_identity(L)})
        return B, {p: near_identity(C) for p, C in B.columns.items()}

    return _make


def _shifted_witness(w, random_graded, rng):
    """The same homotopy moved by a random Hom cycle and a random boundary."""
    source, target = w.s.source, w.s.target
    z = random_graded(source, target, 2).boundary()
    for rep in homotopy_classes(source, target, 1).representatives:
        z = z + rep.scale(rng.randint(-2, 2))
    return ChainHomotopy(w.from_map, w.to_map, w.s + z)


class TestHomotopySimplicialMap:
    """Test cases for homotopy-commutative maps of bicomplexes."""

    def test_identity_is_strict(self, circle):
        """Test the identity needs no homotopies."""
        B = Bicomplex({0: circle, 1: circle}, {1: ChainMap.identity(circle)})
        fmap = HomotopySimplicialMap.identity(B)
        assert fmap.is_strict()
        assert fmap.column_range == (0, 1)

    def test_witness_is_solved(self, point, acyclic):
        """Test a missing witness is found when the square commutes up to homotopy."""
        into = ChainMap(point, acyclic, {0: SparseMatrix.identity(1)})
        C = Bicomplex({0: acyclic, 1: point})
        D = Bicomplex({0: acyclic, 1: point}, {1: into})
        fmap = HomotopySimplicialMap(
            C, D, {0: ChainMap.identity(acyclic), 1: ChainMap.identity(point)}
        )
        assert fmap.witnesses[1].defect().is_zero()
        assert not fmap.is_strict()

    def test_non_commuting_square(self, point):
        """Test a square that fails up to homotopy is a precondition failure."""
        C = Bicomplex({0: point, 1: point}, {1: ChainMap.identity(point)})
        D = Bicomplex({0: point, 1: point})
        with pytest.raises(PreconditionError):
            HomotopySimplicialMap(
                C, D, {0: ChainMap.identity(point), 1: ChainMap.identity(point)}
            )

    def test_wrong_witness_rejected(self, surrogate):
        """Test a witness with the wrong sign is refused."""
        s = surrogate.s(2).scale(-1)
        bad = ChainHomotopy(
            surrogate.witnesses[2].from_map, surrogate.witnesses[2].to_map, s,
            check=False,
        )
        with pytest.raises(InvalidWitnessError):
            HomotopySimplicialMap(
                surrogate.source, surrogate.target, surrogate.maps, {2: bad}
            )

    def test_solve_stage1(self, surrogate):
        """Test the solver recovers a witness for the surrogate square."""
        w = solve_stage1(
            surrogate.f(2), surrogate.f(1),
            surrogate.source.h(2), surrogate.target.h(2),
        )
        assert w is not None
        assert w.defect().is_zero()
        assert not surrogate.is_strict()


class TestTodaBracket:
    """Test cases for brackets and their vanishing."""

    def test_surrogate_bracket_is_nonzero(self, surrogate):
        """Test T(2,0) of the finite surrogate does not vanish."""
        T = toda_bracket(surrogate, 2, 0)
        assert T.order == 2
        assert T.degree == 1
        assert T.classes.dim == 1
        assert T.indeterminacy.dim == 0
        assert not T.is_zero
        vanishes, witness = bracket_vanishes(T)
        assert not vanishes
        assert witness is None

    def test_representative_is_a_chain_map(self, surrogate):
        """Test the representative suspends to a chain map."""
        T = toda_bracket(surrogate, 2, 0)
        assert T.representative_map().is_cycle()

    def test_strict_map_has_vanishing_brackets(self, circle):
        """Test brackets of the identity of a strict bicomplex vanish."""
        B = Bicomplex({p: circle for p in range(3)})
        T = toda_bracket(HomotopySimplicialMap.identity(B), 2, 0)
        vanishes, witness = bracket_vanishes(T)
        assert vanishes
        assert witness.layer.boundary().is_zero()

    def test_order_below_two(self, surrogate):
        """Test brackets start at order 2."""
        with pytest.raises(IndexRangeError):
            toda_bracket(surrogate, 1, 0)

    def test_higher_order_needs_layers(self, surrogate):
        """Test T(3, n) without order-2 layers is a precondition failure."""
        with pytest.raises(PreconditionError):
            toda_bracket(surrogate, 3, 0)


class TestExtendTower:
    """Test cases for layer-by-layer extension."""

    def test_surrogate_fails_at_its_bracket(self, surrogate):
        """Test extension over three columns stops at T(2,0)."""
        result = extend_tower(surrogate, 3, 0)
        assert not result.ok
        assert result.failure.order == 2
        assert result.failure.position == 0
        assert not result.failure.is_zero

    def test_two_columns_extend(self, surrogate):
        """Test any two adjacent columns extend with the stage-1 data."""
        for start in (0, 1):
            result = extend_tower(surrogate, 2, start)
            assert result.ok
            assert result.map.is_cycle()

    def test_strict_map_extends(self, circle):
        """Test a strict map extends over any window."""
        B = Bicomplex({p: circle for p in range(4)})
        result = extend_tower(HomotopySimplicialMap.identity(B), 4, 0)
        assert result.ok
        assert result.filtered.is_chain_map()

    def test_order_must_be_positive(self, surrogate):
        """Test order 0 is refused."""
        with pytest.raises(IndexRangeError):
            extend_tower(surrogate, 0, 0)


class TestLayers:
    """Test cases for the layer calculus."""

    def test_stage1_layers_satisfy_condition(self, surrogate):
        """Test layer 1 meets its condition in every column."""
        layers = Layers(surrogate)
        for p in (1, 2):
            layers.check(1, p)
        assert layers.max_order == 1

    def test_surrogate_totals_differ(self, surrogate):
        """Test the totalizations have different homology."""
        tot_c, _ = totalize(surrogate.source)
        tot_d, _ = totalize(surrogate.target)
        assert {m: v for m, v in homology_dims(tot_c).items() if v} == {1: 1, 2: 1}
        assert not any(homology_dims(tot_d).values())

    def test_gr2_map_is_chain_map(self, surrogate):
        """Test the map on Gr^2 built from the witnesses."""
        g = gr2_map(surrogate, 2)
        assert g.is_cycle()
        with pytest.raises(IndexRangeError):
            gr2_map(surrogate, 7)

    def test_assembled_map_defect(self, surrogate):
        """Test all layers together are not a chain map on the full totalization."""
        assembled = assemble_filtered_map(surrogate)
        assert not assembled.is_chain_map()
        assert assembled.defect_order >= 2

    def test_set_checks_shape(self, surrogate):
        """Test a layer of the wrong degree is rejected."""
        layers = Layers(surrogate)
        wrong = GradedMap(
            surrogate.source.column(2), surrogate.target.column(0), 1,
        )
        with pytest.raises(IndexRangeError):
            layers.set(2, 2, wrong)
        with pytest.raises(IndexRangeError):
            Layers(surrogate, {(1, 2): wrong})


class TestPlantedMaps:
    """Test cases for randomized maps homotopic to the identity."""

    def test_stage1_and_gr2(self, planted):
        """Test every square is solved and each Gr^2 map is a chain map."""
        for _ in range(10):
            B, maps = planted()
            for p in (1, 2, 3):
                w = solve_stage1(maps[p], maps[p - 1], B.h(p), B.h(p))
                assert w is not None
                assert w.defect().is_zero()
            fmap = HomotopySimplicialMap(B, B, maps)
            layers = Layers(fmap)
            for n in (1, 2, 3):
                layers.check(1, n)
                assert gr2_map(fmap, n).is_cycle()

    def test_bracket_ignores_the_choice_of_witness(self, planted, random_graded, rng):
        """Test moving the witnesses by cycles and boundaries keeps the class."""
        for _ in range(5):
            B, maps = planted()
            fmap = HomotopySimplicialMap(B, B, maps)
            moved = HomotopySimplicialMap(B, B, maps, {
                p: _shifted_witness(w, random_graded, rng)
                for p, w in fmap.witnesses.items()
            })
            for n in (0, 1):
                T, U = toda_bracket(fmap, 2, n), toda_bracket(moved, 2, n)
                assert T.indeterminacy.dim == U.indeterminacy.dim
                assert T.coordinates == U.coordinates
                assert bracket_vanishes(T)[0] == bracket_vanishes(U)[0]

    def test_maps_homotopic_to_identity_extend(self, planted):
        """Test a map homotopic to the identity of a strict bicomplex extends."""
        for _ in range(3):
            B, maps = planted()
            result = extend_tower(HomotopySimplicialMap(B, B, maps), 3, 0)
            assert result.ok
            assert result.filtered.is_chain_map()


class TestBracketFamily:
    """Test cases for a family with coherent and obstructed members."""

    def test_extension_exists_exactly_when_bracket_vanishes(self):
        """Test T(2,0) vanishes iff b c e = 0 and extension follows it."""
        coherent = obstructed = 0
        for a, b, c, e in product((-1, 0, 1), repeat=4):
            fmap = family_member(a, b, c, e)
            vanishes, witness = bracket_vanishes(toda_bracket(fmap, 2, 0))
            assert vanishes == (b * c * e == 0)
            result = extend_tower(fmap, 3, 0)
            assert result.ok == vanishes
            if vanishes:
                coherent += 1
                assert witness.layer.degree == 2
                assert result.map.is_cycle()
            else:
                obstructed += 1
                assert result.failure.order == 2
        assert (coherent, obstructed) == (57, 24)
