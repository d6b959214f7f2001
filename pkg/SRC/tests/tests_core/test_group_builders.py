import allure
import pytest
from hypothesis import given
from hypothesis import strategies as st

from SRC.base.errors import (
    ClosureCapExceededError,
    GroupSpecError,
    InvalidPermutationError,
    NonFaithfulActionError,
    UnsupportedShapeError,
)
from SRC.base.permutation import Permutation, compose, inverse
from SRC.helpers import group_builders as builders
from SRC.helpers.group_spec import build_group, spec_label
from SRC.helpers.wreath import WreathElement, wreath_invert, wreath_multiply
from SRC.testbase import TestBase
from TestDataCommon import corpus


def permutations_of(degree: int):
    return st.permutations(list(range(degree))).map(lambda images: Permutation(tuple(images)))


@st.composite
def wreath_elements(draw, base_degree: int = 3, n: int = 2):
    inner = tuple(draw(permutations_of(base_degree)) for _ in range(n))
    return WreathElement(inner, draw(permutations_of(n)))


@allure.epic("Group Builders")
@allure.feature("Constructors")
class TestGroupBuilders(TestBase):

    @pytest.mark.parametrize(
        "name,degree,order",
        [
            ("S2", 2, 2),
            ("S4", 4, 24),
            ("A4", 4, 12),
            ("A5", 5, 60),
            ("C6", 6, 6),
            ("D5", 5, 10),
            ("A5_pairs", 10, 60),
        ],
    )
    def test_corpus_shapes(self, name, degree, order):
        group = self.group(name)
        assert (group.degree, group.order) == (degree, order)
        assert group.transitive

    def test_small_cases(self):
        assert builders.symmetric_natural(1).order == 1
        assert builders.alternating_natural(2).order == 1
        assert builders.cyclic_regular(1).regular
        with pytest.raises(UnsupportedShapeError):
            builders.dihedral_natural(2)
        with pytest.raises(UnsupportedShapeError):
            builders.symmetric_natural(0)

    def test_size_cap(self):
        with pytest.raises(ClosureCapExceededError):
            builders.symmetric_natural(6, cap=100)
        with pytest.raises(ClosureCapExceededError):
            builders.wreath_product(builders.symmetric_natural(3), builders.symmetric_natural(3), cap=1000)

    def test_k_subsets(self):
        a5_pairs = self.group("A5_pairs")
        assert a5_pairs.point_labels[0] == (1, 2)
        assert len(a5_pairs.point_labels) == 10
        with pytest.raises(NonFaithfulActionError):
            builders.action_on_k_subsets(builders.symmetric_natural(2), 2)
        with pytest.raises(UnsupportedShapeError):
            builders.action_on_k_subsets(builders.symmetric_natural(3), 4)

    def test_external_product(self):
        s3, c2 = self.group("S3"), self.group("C2")
        product = builders.external_direct_product(s3, c2)
        assert (product.degree, product.order) == (6, 12)
        assert product.transitive
        ids = builders.external_product_ids(product, s3, c2)
        assert sorted(ids) == list(range(12))
        for g in range(s3.order):
            for h in range(c2.order):
                expected = builders.external_pair_images(s3.images[g], c2.images[h])
                assert product.images[ids[g * c2.order + h]] == expected
        assert builders.external_direct_product(s3, builders.trivial_group(1)) is s3

    def test_internal_product(self):
        s3, c3 = self.group("S3"), self.group("C3")
        product = builders.internal_direct_product([s3, c3])
        assert (product.degree, product.order) == (6, 18)
        assert [orbit.members for orbit in product.orbits] == [(0, 1, 2), (3, 4, 5)]
        ids = builders.internal_product_ids(product, [s3, c3])
        assert sorted(ids) == list(range(18))
        with pytest.raises(UnsupportedShapeError):
            builders.internal_direct_product([])

    def test_left_regular(self):
        regular = builders.left_regular(self.group("S3"))
        assert regular.regular
        assert regular.order == 6
        assert len(regular.derangement_ids) == 5

    def test_wreath_product(self):
        s3, s2 = self.group("S3"), self.group("S2")
        wreath = builders.wreath_product(s3, s2)
        assert (wreath.degree, wreath.order) == (6, 72)
        assert wreath.transitive
        assert builders.wreath_product(s3, builders.trivial_group(1)) is s3
        coords = builders.wreath_coordinates(wreath, s3, s2)
        assert len(coords) == 2 and all(len(row) == 36 for row in coords)
        assert sorted(v for row in coords for v in row) == list(range(72))

    def test_wreath_coordinates_match_tuple_form(self):
        s2 = self.group("S2")
        wreath = self.group(corpus.wreath(corpus.spec("S2"), corpus.spec("S2")))
        coords = builders.wreath_coordinates(wreath, s2, s2)
        for h_id, outer in enumerate(s2.elements):
            for t, (g1, g2) in enumerate((a, b) for a in s2.elements for b in s2.elements):
                assert wreath.element(coords[h_id][t]) == WreathElement((g1, g2), outer).flatten()


@allure.epic("Group Builders")
@allure.feature("Wreath Tuple Form")
class TestWreathElement:

    @given(wreath_elements(), wreath_elements())
    def test_multiplication_matches_flattened_composition(self, a, b):
        assert wreath_multiply(a, b).flatten() == compose(a.flatten(), b.flatten())

    @given(wreath_elements(base_degree=2, n=3))
    def test_inversion_matches_flattened_inverse(self, a):
        assert wreath_invert(a).flatten() == inverse(a.flatten())
        assert wreath_multiply(a, wreath_invert(a)) == WreathElement.identity(2, 3)

    @given(wreath_elements())
    def test_from_flat_recovers_tuple(self, a):
        assert WreathElement.from_flat(a.flatten(), 3) == a

    def test_from_flat_rejects_block_breaking(self):
        with pytest.raises(UnsupportedShapeError):
            WreathElement.from_flat(Permutation((0, 2, 1, 3)), 2)
        with pytest.raises(UnsupportedShapeError):
            WreathElement.from_flat(Permutation.identity(5), 2)

    def test_shape_mismatch(self):
        with pytest.raises(UnsupportedShapeError):
            WreathElement((Permutation.identity(2),), Permutation.identity(2))


@allure.epic("Group Builders")
@allure.feature("Group Specs")
class TestGroupSpec:

    def test_generators_spec(self):
        group = build_group({"degree": 4, "generators": ["(1 2 3)", "(1 2)(3 4)"]})
        assert group.order == 12
        assert group.same_elements(builders.alternating_natural(4))

    def test_nested_spec_and_name(self):
        spec = {"constructor": "wreath", "inner": corpus.spec("S2"), "outer": corpus.spec("C3"), "name": "W"}
        group = build_group(spec)
        assert (group.name, group.order) == ("W", 24)

    def test_name_on_a_trivial_product(self):
        s3 = build_group(corpus.spec("S3"))
        group = build_group({"constructor": "external", "factors": [corpus.spec("S3"), corpus.TRIVIAL], "name": "P"})
        assert group.name == "P"
        assert group.same_elements(s3)
        assert s3.name == "S3"

    @pytest.mark.parametrize(
        "spec",
        [
            [],
            {"constructor": "sporadic", "n": 3},
            {"constructor": "symmetric"},
            {"constructor": "symmetric", "n": True},
            {"constructor": "k_subsets", "k": 2},
            {"constructor": "internal", "factors": []},
            {"degree": 3, "generators": []},
        ],
    )
    def test_malformed_specs(self, spec):
        with pytest.raises(GroupSpecError):
            build_group(spec)

    def test_bad_cycle_string(self):
        with pytest.raises(InvalidPermutationError):
            build_group({"degree": 3, "generators": ["(1 4)"]})

    def test_spec_label(self):
        assert spec_label(corpus.spec("S3")) == "symmetric(n=3)"
        assert spec_label({"degree": 3, "generators": ["(1 2 3)"]}) == "<(1 2 3)> on 3"
