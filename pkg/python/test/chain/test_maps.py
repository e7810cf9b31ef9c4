import pytest
from totguild.chain import (ChainComplex, ChainHomotopy, ChainMap, GradedMap,
                            HomComplex, homology_dims, homotopy_classes,
                            induced_map_on_homology, induced_rank,
                            is_acyclic, is_quasi_isomorphism, mapping_cone,
                            nullhomotopy, tensor, tensor_maps)
from totguild.exactla import SparseMatrix
from totguild.response import InvalidWitnessError, NotAChainMapError


@pytest.fixture
def point():
    return ChainComplex.concentrated(0)


@pytest.fixture
def collapse(interval, point):
    """The interval onto a point, sending both endpoints to it."""
    return ChainMap(interval, point, {0: SparseMatrix.from_dense([[1, 1]])})


class TestChainMap:
    """Test cases for chain maps and induced maps."""

    def test_non_commuting_rejected(self, interval, point):
        """Test that a map failing d f = f d raises."""
        with pytest.raises(NotAChainMapError):
            ChainMap(interval, point, {0: SparseMatrix.from_dense([[1, 0]])})

    def test_collapse_is_quasi_isomorphism(self, collapse):
        """Test the interval collapsing to a point."""
        assert is_quasi_isomorphism(collapse)
        assert induced_rank(collapse, 0) == 1

    def test_identity_and_zero(self, circle):
        """Test identity is a quasi-isomorphism and zero is not."""
        assert is_quasi_isomorphism(ChainMap.identity(circle))
        assert not is_quasi_isomorphism(ChainMap.zero(circle, circle))

    def test_induced_identity(self, circle):
        """Test H_n(id) is the identity matrix."""
        ident = ChainMap.identity(circle)
        assert induced_map_on_homology(ident, 1) == SparseMatrix.identity(1)

    def test_composition(self, interval, collapse):
        """Test composing with the identity leaves a map unchanged."""
        assert collapse @ ChainMap.identity(interval) == collapse

    def test_graded_boundary_squares_to_zero(self, interval, circle, rng):
        """Test D(D φ) = 0 for random graded maps."""
        for _ in range(5):
            row = [rng.randint(-2, 2), rng.randint(-2, 2)]
            phi = GradedMap(interval, circle, 1, {0: SparseMatrix.from_dense([row])})
            assert phi.boundary().boundary().is_zero()


class TestHomotopy:
    """Test cases for chain homotopies and Hom-complexes."""

    def test_nullhomotopy_of_acyclic_identity(self, acyclic):
        """Test the identity of an acyclic complex is nullhomotopic."""
        h = nullhomotopy(ChainMap.identity(acyclic))
        assert h is not None
        assert h.defect().is_zero()

    def test_no_nullhomotopy_for_circle(self, circle):
        """Test the identity of a circle is not nullhomotopic."""
        assert nullhomotopy(ChainMap.identity(circle)) is None

    def test_bad_witness_rejected(self, acyclic):
        """Test that a zero witness between different maps raises."""
        ident = ChainMap.identity(acyclic)
        zero = ChainMap.zero(acyclic, acyclic)
        with pytest.raises(InvalidWitnessError):
            ChainHomotopy(ident, zero, GradedMap(acyclic, acyclic, 1))

    def test_explicit_witness(self, acyclic):
        """Test id - 0 = d s + s d with s the inverse of d_1."""
        ident = ChainMap.identity(acyclic)
        zero = ChainMap.zero(acyclic, acyclic)
        s = GradedMap(acyclic, acyclic, 1, {0: SparseMatrix.identity(1)})
        assert ChainHomotopy(ident, zero, s).defect().is_zero()

    def test_homotopy_classes_of_circle(self, circle):
        """Test [Σ^k S, S] counts maps between homology groups."""
        assert homotopy_classes(circle, circle, 0).dim == 2
        assert homotopy_classes(circle, circle, 1).dim == 1
        assert homotopy_classes(circle, circle, -1).dim == 1
        assert homotopy_classes(circle, circle, 2).dim == 0

    def test_class_of_identity(self, acyclic, circle):
        """Test nullhomotopic maps have zero class."""
        space = homotopy_classes(circle, circle)
        assert not space.is_nullhomotopic(ChainMap.identity(circle))
        assert homotopy_classes(acyclic, acyclic).dim == 0

    def test_hom_complex_homology(self, interval, circle):
        """Test H(Hom(I, S)) = Hom(H(I), H(S))."""
        hom = HomComplex(interval, circle).as_complex()
        ChainComplex(hom.dims, hom.differentials)
        assert {k: v for k, v in homology_dims(hom).items() if v} == {0: 1, 1: 1}

    def test_vectorize_layout(self, interval, circle):
        """Test vectorize places components by ascending degree."""
        hom = HomComplex(interval, circle)
        phi = GradedMap(interval, circle, 0, {0: SparseMatrix.from_dense([[3, 4]])})
        assert hom.vectorize(phi) == [3, 4, 0]
        assert hom.devectorize([3, 4, 0], 0) == phi


class TestConeAndTensor:
    """Test cases for mapping cones and tensor products."""

    def test_cone_of_identity_is_acyclic(self, circle):
        """Test cone(id) is contractible."""
        cone = mapping_cone(ChainMap.identity(circle))
        assert cone.cone.dims == {0: 1, 1: 2, 2: 1}
        assert is_acyclic(cone.cone)

    def test_cone_of_zero_map(self, circle):
        """Test cone(0: C -> D) = D ⊕ ΣC on homology."""
        cone = mapping_cone(ChainMap.zero(circle, circle))
        assert homology_dims(cone.cone) == {0: 1, 1: 2, 2: 1}

    def test_cone_maps_are_chain_maps(self, collapse):
        """Test inclusion and projection commute with differentials."""
        cone = mapping_cone(collapse)
        assert cone.inclusion.is_cycle()
        assert cone.projection.is_cycle()
        assert (cone.projection @ cone.inclusion).is_zero()
        assert is_acyclic(cone.cone)

    def test_tensor_of_circles(self, circle):
        """Test the Künneth numbers (1, 2, 1)."""
        assert homology_dims(tensor(circle, circle)) == {0: 1, 1: 2, 2: 1}

    def test_tensor_with_interval(self, circle, interval):
        """Test tensoring with a contractible complex keeps homology."""
        assert homology_dims(tensor(interval, circle)) == {0: 1, 1: 1, 2: 0}

    def test_tensor_maps(self, collapse, circle):
        """Test f ⊗ id is a quasi-isomorphism when f is."""
        g = tensor_maps(collapse, ChainMap.identity(circle))
        assert is_quasi_isomorphism(g)
