import pytest
from totguild.chain import (ChainComplex, ChainMap, GradedMap, homology_dims,
                            is_acyclic)
from totguild.exactla import SparseMatrix
from totguild.formats import (data_path, homotopy_chain_from_file,
                              load_document)
from totguild.obstruct import HomotopyChainObject, bn_totalization_tower
from totguild.response import InvalidWitnessError, PreconditionError
from totguild.simpfilt import Bicomplex, totalize


@pytest.fixture
def point():
    return ChainComplex.concentrated(0)


@pytest.fixture
def planted():
    model, _ = load_document(data_path("bn_obstructed.json"), ["homotopy_chain"])
    return homotopy_chain_from_file(model)


class TestHomotopyChainObject:
    """Test cases for homotopy chain complexes of complexes."""

    def test_from_strict_bicomplex(self, point):
        """Test a strict bicomplex gives zero homotopies."""
        X = HomotopyChainObject.from_bicomplex(Bicomplex({n: point for n in range(3)}))
        assert X.N == 2
        assert X.h(2).is_zero()

    def test_bad_homotopy_rejected(self, point):
        """Test h_2 = 0 cannot witness d_1 d_2 = id."""
        ident = ChainMap.identity(point)
        with pytest.raises(InvalidWitnessError):
            HomotopyChainObject({0: point, 1: point, 2: point}, {1: ident, 2: ident})

    def test_solve_fails_without_nullhomotopy(self, point):
        """Test solving for homotopies when d_1 d_2 is not nullhomotopic."""
        ident = ChainMap.identity(point)
        with pytest.raises(PreconditionError):
            HomotopyChainObject.solve({0: point, 1: point, 2: point}, {1: ident, 2: ident})

    def test_solve_finds_homotopy(self, point, acyclic):
        """Test d_1 d_2 through an acyclic object is nullhomotopic."""
        into = ChainMap(point, acyclic, {0: SparseMatrix.identity(1)})
        X = HomotopyChainObject.solve(
            {0: acyclic, 1: acyclic, 2: point},
            {1: ChainMap.identity(acyclic), 2: into},
        )
        assert X.witness(2).defect().is_zero()
        assert not X.h(2).is_zero()

    def test_planted_object_is_valid(self, planted):
        """Test the shipped fixture satisfies its homotopy identities."""
        assert planted.N == 3
        for n in (2, 3):
            assert planted.witness(n).defect().is_zero()


class TestBNTower:
    """Test cases for the iterated-cone totalization tower."""

    def test_single_object(self, circle):
        """Test T_0 is C_0."""
        tower = bn_totalization_tower(HomotopyChainObject({0: circle}, {}))
        assert tower.totalizable
        assert tower.final == circle

    def test_strict_zero_maps_split(self, point):
        """Test zero maps give T_n with one class in each degree 0..n."""
        X = HomotopyChainObject.from_bicomplex(Bicomplex({n: point for n in range(4)}))
        tower = bn_totalization_tower(X)
        assert tower.totalizable
        assert len(tower.stages) == 4
        assert homology_dims(tower.final) == {0: 1, 1: 1, 2: 1, 3: 1}

    def test_identity_cone_is_acyclic(self, point):
        """Test T_1 = cone(id) has no homology."""
        X = HomotopyChainObject({0: point, 1: point}, {1: ChainMap.identity(point)})
        tower = bn_totalization_tower(X)
        assert is_acyclic(tower.final)
        assert tower.stages[1].inclusion.is_cycle()
        assert tower.stages[1].projection.is_cycle()

    def test_stage_two_uses_the_homotopy(self, point, acyclic):
        """Test T_2 exists whenever h_2 witnesses d_1 d_2 = 0."""
        into = ChainMap(point, acyclic, {0: SparseMatrix.identity(1)})
        X = HomotopyChainObject.solve(
            {0: acyclic, 1: acyclic, 2: point},
            {1: ChainMap.identity(acyclic), 2: into},
        )
        tower = bn_totalization_tower(X)
        assert tower.totalizable
        assert len(tower.stages) == 3
        assert tower.stages[2].phi is not None

    def test_planted_obstruction(self, planted):
        """Test the shipped fixture is obstructed at n = 3."""
        tower = bn_totalization_tower(planted)
        assert not tower.totalizable
        assert tower.obstruction.order == 3
        assert tower.obstruction.position == 3
        assert not tower.obstruction.is_zero
        assert len(tower.stages) == 3
        assert tower.brackets[3] is tower.obstruction

    def test_phi_lands_in_lower_stage(self, planted):
        """Test the degree-0 part phi_2 is a chain map into T_0."""
        tower = bn_totalization_tower(planted)
        phi = tower.stages[2].phi
        assert phi.target == tower.stages[0].complex
        assert isinstance(phi, GradedMap)

    def test_strict_input_matches_the_totalization(self, random_bicomplex):
        """Test the tower of a random strict bicomplex has the homology of Tot."""
        nonzero = lambda H: {m: v for m, v in H.items() if v}  # noqa: E731
        for _ in range(10):
            B = random_bicomplex()
            tower = bn_totalization_tower(HomotopyChainObject.from_bicomplex(B))
            tot, _ = totalize(B)
            assert tower.totalizable
            assert len(tower.stages) == 3
            assert nonzero(homology_dims(tower.final)) == nonzero(homology_dims(tot))
