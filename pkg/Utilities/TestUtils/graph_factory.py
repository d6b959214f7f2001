"""
Singleton factory for seeded random graphs used by the solver and product tests.
One Faker instance drives every draw, so a seed reproduces the whole corpus.
"""

from typing import List, Optional

from faker import Faker

from SRC.base.graph import Graph
from SRC.base.permutation import Permutation

DEFAULT_SEED = 20240917


class GraphFactory:
    """
    Singleton wrapper around Faker for random test graphs and permutations.
    """

    _instance: Optional["GraphFactory"] = None
    _faker: Optional[Faker] = None

    def __new__(cls) -> "GraphFactory":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._faker = Faker()
            cls._faker.seed_instance(DEFAULT_SEED)
        return cls._instance

    @classmethod
    def get_instance(cls) -> "GraphFactory":
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @property
    def faker(self) -> Faker:
        if self._faker is None:
            self._faker = Faker()
        return self._faker

    def set_seed(self, seed: int) -> None:
        """Reset the stream; the same seed yields the same sequence of graphs."""
        self.faker.seed_instance(seed)

    def random_int(self, min_int: int, max_int: int) -> int:
        return self.faker.random_int(min=min_int, max=max_int)

    def random_graph(self, n: int, edge_percent: Optional[int] = None) -> Graph:
        """G(n, p) with p drawn from 10..90 percent unless given."""
        percent = edge_percent if edge_percent is not None else self.random_int(10, 90)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if self.faker.random_int(min=1, max=100) <= percent
        ]
        return Graph.from_edges(n, edges)

    def random_graphs(self, count: int, min_vertices: int = 1, max_vertices: int = 20) -> List[Graph]:
        return [self.random_graph(self.random_int(min_vertices, max_vertices)) for _ in range(count)]

    def random_permutation(self, degree: int) -> Permutation:
        images = list(range(degree))
        self.faker.random.shuffle(images)
        return Permutation(tuple(images))


GRAPH_FACTORY = GraphFactory.get_instance()
