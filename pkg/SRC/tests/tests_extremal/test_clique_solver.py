from itertools import combinations

import allure
import pytest

from SRC.base.errors import SolverBudgetExceededError
from SRC.base.graph import Graph, complement
from SRC.helpers.clique_solver import (
    clique_coclique_check,
    clique_number,
    enumerate_maximum_independent_sets,
    independence_number,
    max_clique,
)
from SRC.helpers.graph_products import direct_product, lexicographic, strong_product
from SRC.helpers.independent_sets import PrimitivityStatus, is_IS_primitive, is_MIS_normal_direct_square
from SRC.testbase import TestBase
from TestDataCommon import corpus
from Utilities.TestUtils.graph_factory import GRAPH_FACTORY


def brute_force_clique_number(graph: Graph) -> int:
    for size in range(graph.n, 0, -1):
        for members in combinations(range(graph.n), size):
            if all(graph.has_edge(u, v) for u, v in combinations(members, 2)):
                return size
    return 0


def disjoint_union(x: Graph, y: Graph) -> Graph:
    return Graph.from_edges(x.n + y.n, x.edges() + [(u + x.n, v + x.n) for u, v in y.edges()])


SOLVER_ORDER_LIMIT = 20


@allure.epic("Extremal")
@allure.feature("Clique Solver")
class TestCliqueSolver:

    def _compare_with_brute_force(self, count: int, seed: int):
        GRAPH_FACTORY.set_seed(seed)
        for graph in GRAPH_FACTORY.random_graphs(count, min_vertices=1, max_vertices=11):
            expected = brute_force_clique_number(graph)
            result = max_clique(graph)
            assert result.size == expected, graph.rows
            assert all(graph.has_edge(u, v) for u, v in combinations(result.witness, 2))
            assert independence_number(graph).size == brute_force_clique_number(complement(graph))

    @pytest.mark.smoke
    def test_random_graphs_smoke(self):
        self._compare_with_brute_force(40, seed=11)

    @pytest.mark.slow
    def test_random_graphs_exhaustive(self):
        self._compare_with_brute_force(500, seed=12)

    def test_known_values(self):
        c5, k3, k2 = Graph.cycle(5), Graph.complete(3), Graph.complete(2)
        assert independence_number(direct_product(c5, k3)).size == 6
        assert independence_number(lexicographic(c5, k3)).size == 2
        assert clique_number(strong_product(c5, k2)) == 4
        assert max_clique(Graph.empty(0)).size == 0

    def test_least_witness(self):
        assert independence_number(Graph.cycle(5)).witness == (0, 2)
        assert max_clique(Graph.complete_bipartite(2, 3)).witness == (0, 2)

    def test_enumeration_and_truncation(self):
        full = enumerate_maximum_independent_sets(Graph.cycle(5))
        assert full.alpha == 2
        assert full.sets == ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))
        assert not full.truncated
        capped = enumerate_maximum_independent_sets(Graph.cycle(5), cap=3)
        assert capped.count == 3 and capped.truncated

    def test_node_budget(self):
        with pytest.raises(SolverBudgetExceededError):
            enumerate_maximum_independent_sets(Graph.empty(12), node_budget=2)

    def test_clique_coclique_bound(self):
        assert clique_coclique_check(Graph.cycle(5))
        assert clique_coclique_check(Graph.complete(4))


@allure.epic("Extremal")
@allure.feature("Clique Solver")
class TestSolverOnCorpusGraphs(TestBase):

    def _assert_exact(self, name: str):
        graph = self.graph(name)
        omega = max_clique(graph)
        alpha = independence_number(graph)
        assert omega.size == brute_force_clique_number(graph), name
        assert alpha.size == brute_force_clique_number(complement(graph)), name
        assert all(graph.has_edge(u, v) for u, v in combinations(omega.witness, 2))
        assert not any(graph.has_edge(u, v) for u, v in combinations(alpha.witness, 2))

    def test_small_corpus_derangement_graphs(self):
        checked = []
        for name in corpus.names():
            if name == "K6":
                continue
            if self.group(name).order <= SOLVER_ORDER_LIMIT:
                self._assert_exact(name)
                checked.append(name)
        assert checked == ["S2", "S3", "A4", "C2", "C3", "C4", "C5", "C6", "D4", "D5", "D6"]

    @pytest.mark.slow
    def test_multipartite_witness_graph(self):
        if self.group("K6").order > SOLVER_ORDER_LIMIT:
            pytest.skip(f"K6 has more than {SOLVER_ORDER_LIMIT} elements")
        self._assert_exact("K6")


@allure.epic("Extremal")
@allure.feature("Independent Set Structure")
class TestIndependentSets(TestBase):

    def test_s3_graph_not_primitive(self):
        verdict = is_IS_primitive(self.graph("S3"))
        assert verdict.status == PrimitivityStatus.NOT_PRIMITIVE
        assert verdict.witness == (0,)
        assert verdict.neighbourhood_size == 3
        assert verdict.witness_ratio == verdict.target_ratio
        assert str(verdict.target_ratio) == "1/3"

    @pytest.mark.parametrize("graph", [Graph.complete(4), Graph.cycle(5)])
    def test_primitive_graphs(self, graph):
        verdict = is_IS_primitive(graph)
        assert verdict.status == PrimitivityStatus.PRIMITIVE
        assert verdict.witness is None

    def test_disconnected_graph_not_primitive(self):
        two_c5 = disjoint_union(Graph.cycle(5), Graph.cycle(5))
        verdict = is_IS_primitive(two_c5, assume_vertex_transitive=True)
        assert verdict.status == PrimitivityStatus.NOT_PRIMITIVE
        assert 0 in verdict.witness
        assert verdict.witness_ratio == verdict.target_ratio

    def test_budget_gives_unknown(self):
        verdict = is_IS_primitive(Graph.cycle(5), budget=0)
        assert verdict.status == PrimitivityStatus.UNKNOWN

    @pytest.mark.parametrize("graph", [Graph.complete(3), Graph.cycle(5)])
    def test_mis_normal_square(self, graph):
        verdict = is_MIS_normal_direct_square(graph)
        assert verdict
        assert verdict.square_alpha == verdict.alpha * graph.n

    def test_s3_square_not_mis_normal(self):
        verdict = is_MIS_normal_direct_square(self.graph("S3"))
        assert not verdict
        assert verdict.witness is not None
