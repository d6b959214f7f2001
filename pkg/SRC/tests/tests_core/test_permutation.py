import allure
import pytest
from hypothesis import given
from hypothesis import strategies as st

from SRC.base.errors import DegreeMismatchError, InvalidPermutationError
from SRC.base.permutation import Permutation, compose, fixed_points, inverse, is_derangement
from Utilities.TestUtils.graph_factory import GRAPH_FACTORY


def permutations_of(n: int):
    return st.permutations(list(range(n))).map(lambda images: Permutation(tuple(images)))


same_degree_pairs = st.integers(1, 7).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n)))
same_degree_triples = st.integers(1, 6).flatmap(
    lambda n: st.tuples(permutations_of(n), permutations_of(n), permutations_of(n))
)


@allure.epic("Permutation Core")
@allure.feature("Permutations")
class TestPermutation:

    def test_compose_applies_right_factor_first(self):
        """
        (0 1) o (0 1 2) = (1 2) with the right factor applied first.
        """
        assert compose(Permutation((1, 0, 2)), Permutation((1, 2, 0))) == Permutation((0, 2, 1))

    def test_inverse_of_three_cycle(self):
        assert inverse(Permutation((1, 2, 0))) == Permutation((2, 0, 1))

    def test_transposition_is_an_involution(self):
        swap = Permutation((1, 0, 2))
        assert inverse(swap) == swap

    def test_fixed_points(self):
        assert fixed_points(Permutation.identity(4)) == frozenset({0, 1, 2, 3})
        assert fixed_points(Permutation((1, 2, 0))) == frozenset()
        assert fixed_points(Permutation((1, 0, 2))) == frozenset({2})

    def test_is_derangement(self):
        assert not is_derangement(Permutation.identity(3))
        assert is_derangement(Permutation((1, 2, 0)))
        assert not is_derangement(Permutation((1, 0, 2)))

    def test_invalid_images_rejected(self):
        with pytest.raises(InvalidPermutationError):
            Permutation((0, 0, 1))

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(Permutation.identity(2), Permutation.identity(3))

    @pytest.mark.parametrize(
        "text,degree,images",
        [
            ("()", 3, (0, 1, 2)),
            ("(1 3 2)", 4, (2, 0, 1, 3)),
            ("(1 2)(3 4)", 4, (1, 0, 3, 2)),
        ],
    )
    def test_cycle_notation_parse_and_print(self, text, degree, images):
        permutation = Permutation.from_cycles(text, degree)
        assert permutation.images == images
        assert Permutation.from_cycles(permutation.to_cycles(), degree) == permutation

    @pytest.mark.parametrize("text", ["(1 2)(2 3)", "(1 5)", "1 2"])
    def test_malformed_cycle_notation(self, text):
        with pytest.raises(InvalidPermutationError):
            Permutation.from_cycles(text, 4)

    @given(same_degree_pairs)
    def test_inverse_cancels(self, pair):
        p, _ = pair
        identity = Permutation.identity(p.degree)
        assert compose(p, inverse(p)) == identity
        assert compose(inverse(p), p) == identity

    @given(same_degree_triples)
    def test_compose_is_associative(self, triple):
        p, q, r = triple
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    @given(same_degree_pairs)
    def test_compose_pointwise(self, pair):
        p, q = pair
        assert all(compose(p, q)(x) == p(q(x)) for x in range(p.degree))

    @given(same_degree_pairs)
    def test_derangement_iff_no_fixed_points(self, pair):
        p, _ = pair
        assert is_derangement(p) == (not fixed_points(p))

    def test_seeded_random_permutations(self):
        GRAPH_FACTORY.set_seed(11)
        first = [GRAPH_FACTORY.random_permutation(6) for _ in range(10)]
        GRAPH_FACTORY.set_seed(11)
        assert [GRAPH_FACTORY.random_permutation(6) for _ in range(10)] == first
        for p in first:
            assert sorted(p.images) == list(range(6))
            assert compose(p, p.inverse()).is_identity()
            assert Permutation.from_cycles(p.to_cycles(), 6) == p
