from fractions import Fraction

import allure
import pytest

from SRC.base.errors import IntransitiveActionError, UnsupportedShapeError
from SRC.helpers.ekr_helper import density_report, has_EKR, has_strict_EKR, intersection_density
from SRC.helpers.graph_products import derangement_graph
from SRC.helpers.graph_recognizers import is_complete_multipartite
from SRC.helpers.subgroup_search import always, regular_predicate, search_multipartite, search_transitive_2generated
from SRC.testbase import TestBase
from TestDataCommon import corpus
from Utilities.GenericUtils.file_op_utils import read_json


@allure.epic("EKR")
@allure.feature("Intersection Density")
class TestIntersectionDensity(TestBase):

    @pytest.mark.parametrize(
        "name,alpha,rho",
        [("A4", 3, Fraction(1)), ("S4", 6, Fraction(1)), ("C5", 1, Fraction(1)), ("A5_pairs", 12, Fraction(2))],
    )
    def test_density_values(self, name, alpha, rho):
        group = self.group(name)
        assert self.bench.alpha(name).size == alpha
        assert intersection_density(group, self.graph(name)) == rho

    def test_a5_pairs_shape(self):
        group = self.group("A5_pairs")
        assert (group.degree, group.order, group.max_stabilizer_order) == (10, 60, 6)
        assert not has_EKR(group, self.graph("A5_pairs"))

    def test_intransitive_density(self):
        square = self.group(corpus.internal(corpus.spec("S3"), corpus.spec("S3")))
        with pytest.raises(IntransitiveActionError):
            intersection_density(square)
        report = density_report(square, strict=False)
        assert report.rho is None
        assert report.ekr


@allure.epic("EKR")
@allure.feature("Strict EKR")
class TestStrictEKR(TestBase):

    def test_a4_not_strict(self):
        report = density_report(self.group("A4"))
        assert report.ekr
        assert report.strict_ekr is False
        assert report.witness_cycles[0] == ("()", "(1 3 2)", "(1 4 2)")
        data = report.to_dict()
        assert data["rho"] == "1"
        assert data["strict_ekr"] is False

    def test_s4_strict(self):
        verdict = has_strict_EKR(self.group("S4"), self.graph("S4"))
        assert verdict.strict is True
        assert verdict.enumerated == 16
        assert verdict.witness is None

    def test_regular_group_strict(self):
        verdict = self.bench.strict("C4")
        assert verdict.strict is True
        assert verdict.alpha == 1

    def test_no_ekr_gives_least_witness(self):
        verdict = self.bench.strict("A5_pairs")
        assert verdict.strict is False
        assert verdict.enumerated == 0
        assert verdict.witness == self.bench.alpha("A5_pairs").witness

    def test_truncated_enumeration_is_undecided(self):
        verdict = has_strict_EKR(self.group("S4"), self.graph("S4"), cap=5)
        assert verdict.strict is None
        assert verdict.truncated
        assert verdict.enumerated == 5

    @pytest.mark.slow
    def test_s3_wr_s2(self):
        spec = corpus.wreath(corpus.spec("S3"), corpus.spec("S2"))
        group = self.group(spec)
        verdict = self.bench.strict(spec)
        assert group.order == 72
        assert verdict.alpha == 12
        assert verdict.enumerated == 2592
        assert verdict.strict is False


@allure.epic("EKR")
@allure.feature("Subgroup Search")
class TestSubgroupSearch:

    def test_degree_three(self):
        result = search_transitive_2generated(3, always)
        assert [group.order for group in result.groups] == [3, 6]
        assert not result.partial

    def test_degree_bounds(self):
        with pytest.raises(UnsupportedShapeError):
            search_transitive_2generated(9, always)

    def test_budget_marks_partial(self):
        result = search_transitive_2generated(4, always, budget=3)
        assert result.partial
        assert result.pairs_examined == 3

    def test_regular_groups_of_degree_four(self):
        """
        Three cyclic groups of order 4 and the regular Klein four-group.
        """
        result = search_transitive_2generated(4, regular_predicate)
        assert len(result.groups) == 4
        assert all(group.order == 4 and group.regular for group in result.groups)
        klein = [group for group in result.groups if all((p * p).is_identity() for p in group.elements)]
        assert len(klein) == 1
        assert not result.partial

    def test_cache_round_trip(self, tmp_path):
        cache = tmp_path / "search_cache.json"
        first = search_multipartite(3, 3, cache_path=str(cache))
        assert [group.order for group in first.groups] == [3]
        stored = read_json(str(cache))
        assert len(stored) == 1
        second = search_multipartite(3, 3, cache_path=str(cache))
        assert second.groups[0].same_elements(first.groups[0])
        assert second.pairs_examined == first.pairs_examined

    @pytest.mark.slow
    def test_half_degree_witness(self, tmp_path):
        result = search_multipartite(6, 3, cache_path=str(tmp_path / "cache.json"))
        assert result.groups
        for group in result.groups:
            assert group.transitive
            assert is_complete_multipartite(derangement_graph(group)).part_count == 3
