import allure
import pytest
from hypothesis import given
from hypothesis import strategies as st

from SRC.base.errors import GraphSizeError, LoopyGraphError, MalformedBijectionError
from SRC.base.graph import (
    Graph,
    closed_neighborhood,
    complement,
    connected_components,
    equal_under_bijection,
    induced_subgraph,
    loop_complete,
)
from SRC.helpers.graph_io import from_adjacency_text, read_adjacency, to_adjacency_text, to_dot, write_adjacency
from SRC.helpers.graph_products import direct_power, direct_product, lexicographic, strong_product
from SRC.helpers.graph_recognizers import is_bipartite, is_complete_multipartite, is_disjoint_union_of_cliques
from SRC.testbase import TestBase
from Utilities.TestUtils.graph_factory import GRAPH_FACTORY


@st.composite
def small_graphs(draw, max_vertices: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@allure.epic("Graph Core")
@allure.feature("Graph Products")
class TestGraphProducts:

    def test_direct_product_of_edges(self):
        assert direct_product(Graph.complete(2), Graph.complete(2)).edges() == [(0, 3), (1, 2)]

    def test_strong_product_of_edges_is_k4(self):
        assert strong_product(Graph.complete(2), Graph.complete(2)) == Graph.complete(4)

    def test_lexicographic_small(self):
        product = lexicographic(Graph.complete(2), Graph.empty(2))
        assert product.edge_count() == 4
        assert is_complete_multipartite(product).part_sizes == [2, 2]

    def test_direct_power(self):
        assert direct_power(Graph.complete(2), 3).edge_count() == 4
        assert direct_power(Graph.cycle(5), 1) == Graph.cycle(5)
        with pytest.raises(ValueError):
            direct_power(Graph.cycle(5), 0)

    def test_loop_complete_factor(self):
        product = direct_product(Graph.complete(2), loop_complete(2))
        assert not product.has_loops()
        assert product.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
        with pytest.raises(LoopyGraphError):
            lexicographic(loop_complete(2), Graph.complete(2))
        with pytest.raises(LoopyGraphError):
            complement(loop_complete(3))

    def test_vertex_cap(self):
        with pytest.raises(GraphSizeError):
            strong_product(Graph.complete(100), Graph.complete(100), vertex_cap=5000)

    @given(small_graphs(), small_graphs())
    def test_product_edge_counts(self, x, y):
        ex, ey = x.edge_count(), y.edge_count()
        assert direct_product(x, y).edge_count() == 2 * ex * ey
        assert strong_product(x, y).edge_count() == x.n * ey + y.n * ex + 2 * ex * ey
        assert lexicographic(x, y).edge_count() == ex * y.n * y.n + x.n * ey

    @given(small_graphs(max_vertices=8))
    def test_complement_is_an_involution(self, x):
        co = complement(x)
        assert complement(co) == x
        assert x.edge_count() + co.edge_count() == x.n * (x.n - 1) // 2

    def test_induced_subgraph(self):
        sub = induced_subgraph(Graph.cycle(5), [0, 1, 2])
        assert sub == Graph.path(3)

    def test_closed_neighborhood(self):
        c5 = Graph.cycle(5)
        assert closed_neighborhood(c5, []) == []
        assert closed_neighborhood(c5, [0]) == [0, 1, 4]
        assert closed_neighborhood(c5, [0, 2]) == [0, 1, 2, 3, 4]
        assert closed_neighborhood(Graph.complete(4), [2]) == [0, 1, 2, 3]

    def test_closed_neighborhood_with_loops(self):
        c5 = Graph.cycle(5)
        looped = Graph.trusted(5, [row | (1 << v) for v, row in enumerate(c5.rows)], loops_allowed=True)
        assert looped.has_loops()
        assert closed_neighborhood(looped, [0]) == [0, 1, 4]
        assert closed_neighborhood(looped, [1, 3]) == closed_neighborhood(c5, [1, 3])
        assert closed_neighborhood(loop_complete(3), [1]) == [0, 1, 2]


@allure.epic("Graph Core")
@allure.feature("Derangement Graphs")
class TestDerangementGraph(TestBase):

    def test_s3_components(self):
        graph = self.graph("S3")
        assert connected_components(graph) == [(0, 3, 4), (1, 2, 5)]
        assert is_disjoint_union_of_cliques(graph) == ((0, 3, 4), (1, 2, 5))

    def test_identity_closed_neighbourhood_is_a_triangle(self):
        group = self.group("S3")
        assert closed_neighborhood(self.graph("S3"), [group.identity_id]) == [0, 3, 4]

    def test_regular_group_graph_is_complete(self):
        assert self.graph("C5") == Graph.complete(5)

    @pytest.mark.parametrize("name", ["S4", "A4", "D5", "A5_pairs"])
    def test_cayley_graph_is_regular(self, name):
        graph, group = self.graph(name), self.group(name)
        assert {graph.degree(v) for v in range(graph.n)} == {len(group.derangement_ids)}
        assert graph.neighbors(group.identity_id) == sorted(group.derangement_ids)


@allure.epic("Graph Core")
@allure.feature("Recognizers")
class TestRecognizers:

    def test_complete_multipartite(self):
        certificate = is_complete_multipartite(Graph.complete_bipartite(2, 3))
        assert certificate.parts == ((0, 1), (2, 3, 4))
        assert certificate.part_count == 2
        assert is_complete_multipartite(Graph.complete(4)).part_sizes == [1, 1, 1, 1]
        assert is_complete_multipartite(Graph.empty(3)).part_count == 1
        assert is_complete_multipartite(Graph.cycle(5)) is None

    def test_disjoint_cliques(self):
        assert is_disjoint_union_of_cliques(Graph.path(3)) is None
        assert is_disjoint_union_of_cliques(Graph.empty(2)) == ((0,), (1,))

    def test_bipartite_sides(self):
        verdict = is_bipartite(Graph.path(4))
        assert verdict
        assert verdict.sides == ((0, 2), (1, 3))

    @pytest.mark.parametrize("graph", [Graph.cycle(5), Graph.complete(3), Graph.cycle(7)])
    def test_odd_cycle_witness(self, graph):
        verdict = is_bipartite(graph)
        assert not verdict
        cycle = verdict.odd_cycle
        assert len(cycle) % 2 == 1
        assert all(graph.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))

    def test_c5_odd_cycle(self):
        assert is_bipartite(Graph.cycle(5)).odd_cycle == (2, 1, 0, 4, 3)


@allure.epic("Graph Core")
@allure.feature("Bijections and IO")
class TestGraphIO:

    def test_equal_under_bijection(self):
        c5 = Graph.cycle(5)
        assert equal_under_bijection(c5, c5, [0, 1, 2, 3, 4])
        assert equal_under_bijection(c5, c5, [4, 3, 2, 1, 0])
        verdict = equal_under_bijection(c5, c5, [0, 2, 4, 1, 3])
        assert not verdict
        assert verdict.mismatch == (0, 1)

    def test_malformed_bijection(self):
        with pytest.raises(MalformedBijectionError):
            equal_under_bijection(Graph.cycle(5), Graph.cycle(5), [0, 0, 1, 2, 3])
        with pytest.raises(MalformedBijectionError):
            equal_under_bijection(Graph.cycle(5), Graph.cycle(4), [0, 1, 2, 3])

    def test_adjacency_text_round_trip(self, tmp_path):
        GRAPH_FACTORY.set_seed(7)
        for graph in GRAPH_FACTORY.random_graphs(20, max_vertices=12) + [loop_complete(3)]:
            assert from_adjacency_text(to_adjacency_text(graph)) == graph
        path = tmp_path / "c5.adj"
        write_adjacency(str(path), Graph.cycle(5))
        assert read_adjacency(str(path)) == Graph.cycle(5)

    def test_dot_output(self):
        text = to_dot(Graph.path(2), name="P2", labels=["a", "b"])
        assert text.startswith('graph "P2" {')
        assert '0 [label="a"];' in text
        assert "0 -- 1;" in text
