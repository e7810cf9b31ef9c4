import pytest
from totguild.chain import ChainMap
from totguild.formats import data_path
from totguild.groupcyc import (FiniteGroup, FreeWord, burghelea_maps, compose,
                               conjugacy_class_rep, conjugacy_classes_up_to,
                               conjugation_map, coset_map, decompose,
                               free_reduce_and_conjugacy, primitive_root)
from totguild.response import (DimensionMismatchError, GroupTableError,
                               InputError, PreconditionError)


@pytest.fixture
def s3():
    return FiniteGroup.load_table(data_path("s3.tbl"))


class TestFiniteGroup:
    """Test cases for groups given by tables."""

    def test_load_table_with_names(self):
        """Test the shipped Z/2 table and its names line."""
        G = FiniteGroup.load_table(data_path("z2.tbl"))
        assert G.order == 2
        assert G.names == ["1", "g"]
        assert G.identity == 0
        assert G.inv(1) == 1

    def test_s3_classes(self, s3):
        """Test S3 has three classes of sizes 1, 3 and 2."""
        assert [len(c) for c in s3.conjugacy_classes()] == [1, 3, 2]
        assert s3.class_of(5) == s3.class_of(1)
        assert len(s3.centralizer(1)) == 2
        assert s3.conjugacy_classes() == FiniteGroup.symmetric(3).conjugacy_classes()

    def test_identity_is_found(self):
        """Test a table whose identity is not element 0."""
        G = FiniteGroup([[1, 0], [0, 1]])
        assert G.identity == 1

    def test_no_identity(self):
        """Test a table without a two-sided identity."""
        with pytest.raises(GroupTableError):
            FiniteGroup([[0, 0], [0, 0]])

    def test_not_associative(self):
        """Test a Latin square that is not a group."""
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupTableError):
            FiniteGroup(table)

    def test_ragged_table(self):
        """Test rows of the wrong length and out-of-range entries."""
        with pytest.raises(GroupTableError):
            FiniteGroup([[0, 1], [1]])
        with pytest.raises(GroupTableError):
            FiniteGroup([[0, 2], [2, 0]])
        with pytest.raises(GroupTableError):
            FiniteGroup([])

    def test_bad_table_file(self, tmp_path):
        """Test a non-integer entry in a table file."""
        path = tmp_path / "bad.tbl"
        path.write_text("0 1\n1 x\n")
        with pytest.raises(GroupTableError):
            FiniteGroup.load_table(path)


class TestFreeWords:
    """Test cases for free group words and conjugacy."""

    def test_free_reduction(self):
        """Test a·A·b reduces to b."""
        a, b = FreeWord.generator(2, 0), FreeWord.generator(2, 1)
        assert a * a.inverse() * b == b
        assert str(FreeWord.parse("aAb")) == "b"
        assert len(FreeWord.parse("abBA")) == 0

    def test_conjugate_with_witness(self):
        """Test abb ~ bba with conjugator BB."""
        u, v = FreeWord.parse("abb"), FreeWord.parse("bba")
        result = free_reduce_and_conjugacy(u, v)
        assert result.conjugate
        assert str(result.witness.conjugator) == "BB"
        assert result.witness.verify()

    def test_not_conjugate(self):
        """Test ab is not conjugate to a."""
        result = free_reduce_and_conjugacy(FreeWord.parse("ab"), FreeWord.parse("a", rank=2))
        assert not result.conjugate
        assert result.witness is None

    def test_conjugate_through_cyclic_reduction(self):
        """Test b a B is conjugate to a."""
        result = free_reduce_and_conjugacy(FreeWord.parse("baB"), FreeWord.parse("a", rank=2))
        assert result.conjugate
        assert result.witness.verify()

    def test_rank_mismatch(self):
        """Test words of different free groups are refused."""
        with pytest.raises(DimensionMismatchError):
            free_reduce_and_conjugacy(FreeWord.parse("a"), FreeWord.parse("b"))
        with pytest.raises(DimensionMismatchError):
            FreeWord.parse("a") * FreeWord.parse("b")

    def test_primitive_root(self):
        """Test (ab)^3 has root ab and exponent 3."""
        root, k = primitive_root(FreeWord.parse("ababab"))
        assert (str(root), k) == ("ab", 3)
        with pytest.raises(PreconditionError):
            primitive_root(FreeWord.identity(2))

    def test_root_of_a_conjugated_power(self):
        """Test the root is conjugated back."""
        y = FreeWord.parse("baaB")
        root, k = primitive_root(y)
        assert k == 2
        assert root ** 2 == y

    def test_class_representative(self):
        """Test the representative is the least rotation."""
        rep = conjugacy_class_rep(FreeWord.parse("baba"))
        assert str(rep.representative) == "abab"
        assert (str(rep.root), rep.exponent) == ("ab", 2)

    def test_classes_up_to_length_two(self):
        """Test F_2 has 4 classes of length 1 and 8 of length 2."""
        classes = conjugacy_classes_up_to(2, 2)
        assert len(classes) == 12
        assert sum(len(c.representative) == 1 for c in classes) == 4

    def test_parse_errors(self):
        """Test invalid letters and ranks."""
        with pytest.raises(InputError):
            FreeWord.parse("a1")
        with pytest.raises(InputError):
            FreeWord.parse("c", rank=2)
        assert FreeWord.parse("1").is_identity()


class TestBurghelea:
    """Test cases for the decomposition by conjugacy classes."""

    def test_decompose_and_compose(self, s3):
        """Test the cell decomposition is inverted by compose."""
        cell = (1, 3, 4)
        x, bar = decompose(s3, cell)
        assert compose(s3, x, bar) == cell

    def test_coset_map(self, s3):
        """Test cosets of the centralizer biject onto the class."""
        y = 1
        cosets = coset_map(s3, y)
        assert len(cosets) == s3.order // len(s3.centralizer(y))
        assert sorted(cosets.values()) == s3.conjugacy_classes()[s3.class_of(y)]

    def test_transposition_component(self, s3):
        """Test B C_y -> N^cy(S3)_<y> is injective and a homology isomorphism."""
        maps = burghelea_maps(s3, 1, 2)
        assert maps.is_injective()
        assert maps.is_homology_isomorphism()
        for n in range(3):
            assert maps.component.dims.get(n, 0) == 3 * 6 ** n
            assert maps.bar.dims.get(n, 0) == 2 ** n

    def test_central_element(self):
        """Test a central element has a single coset."""
        G = FiniteGroup.cyclic(3)
        maps = burghelea_maps(G, 1, 3)
        assert len(maps.cosets) == 1
        assert maps.is_homology_isomorphism()
        assert maps.homology_ranks() == [1, 0, 0]

    def test_conjugation_acts_on_a_component(self, s3):
        """Test conjugation is a chain map of the component."""
        f = conjugation_map(s3, 3, 2, s3.class_of(1))
        assert isinstance(f, ChainMap)
        assert f.source.dims[1] == 18
