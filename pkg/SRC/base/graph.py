"""Finite simple graphs with bit-vector adjacency rows.

Row ``u`` is a Python int whose bit ``v`` is set iff u ~ v. Loops (bit ``u`` in
row ``u``) are only allowed when ``loops_allowed`` is set; they exist solely to
express the loop-complete factor used by the wreath block checks.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from SRC.base.errors import GraphSizeError, LoopyGraphError, MalformedBijectionError

DEFAULT_VERTEX_CAP = 5_000


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def check_vertex_cap(n: int, cap: int = DEFAULT_VERTEX_CAP) -> None:
    if n > cap:
        raise GraphSizeError(n, cap)


class Graph:
    """Immutable graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "loops_allowed")

    def __init__(self, n: int, rows: Sequence[int], loops_allowed: bool = False):
        if len(rows) != n:
            raise ValueError(f"Expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows: Tuple[int, ...] = tuple(rows)
        self.loops_allowed = loops_allowed
        for u, row in enumerate(self.rows):
            if row >> n:
                raise ValueError(f"Row {u} references a vertex outside 0..{n - 1}")
            if not loops_allowed and (row >> u) & 1:
                raise LoopyGraphError(f"Loop at vertex {u} but loops are not allowed")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"Adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def trusted(cls, n: int, rows: Sequence[int], loops_allowed: bool = False) -> "Graph":
        """Build without the O(n^2) symmetry validation; for rows produced by this package."""
        graph = cls.__new__(cls)
        graph.n = n
        graph.rows = tuple(rows)
        graph.loops_allowed = loops_allowed
        return graph

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], loops_allowed: bool = False) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, loops_allowed)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.trusted(n, [full & ~(1 << u) for u in range(n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.trusted(n, [0] * n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(u, u + 1) for u in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(u, (u + 1) % n) for u in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> List[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return bin(self.rows[u] & ~(1 << u)).count("1")

    def has_loops(self) -> bool:
        return any((row >> u) & 1 for u, row in enumerate(self.rows))

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u <= v, loops included, in row-major order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> u << u)]

    def edge_count(self) -> int:
        return len(self.edges())

    def full_mask(self) -> int:
        return (1 << self.n) - 1


def require_loop_free(graph: Graph, operation: str) -> None:
    if graph.has_loops():
        raise LoopyGraphError(f"{operation} is defined for loop-free graphs only")


def complement(graph: Graph) -> Graph:
    require_loop_free(graph, "complement")
    full = graph.full_mask()
    return Graph.trusted(graph.n, [full & ~row & ~(1 << u) for u, row in enumerate(graph.rows)])


def loop_complete(m: int) -> Graph:
    """K*_m: every pair adjacent, with a loop at each vertex."""
    full = (1 << m) - 1
    return Graph.trusted(m, [full] * m, loops_allowed=True)


def closed_neighborhood(graph: Graph, vertices: Iterable[int]) -> List[int]:
    mask = 0
    for v in vertices:
        mask |= graph.rows[v] | (1 << v)
    return list(iter_bits(mask))


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``; new vertex i is ``vertices[i]``."""
    position = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for w in iter_bits(graph.rows[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return Graph.trusted(len(vertices), rows, graph.loops_allowed)


def connected_components(graph: Graph) -> List[Tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest vertex."""
    unseen = graph.full_mask()
    components = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        component = 1 << start
        frontier = component
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= graph.rows[v]
            frontier = reach & ~component
            component |= frontier
        unseen &= ~component
        components.append(tuple(iter_bits(component)))
    return components


@dataclass(frozen=True)
class BijectionVerdict:
    equal: bool
    mismatch: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.equal


def equal_under_bijection(left: Graph, right: Graph, mapping: Sequence[int]) -> BijectionVerdict:
    """Check that u~v in ``left`` iff mapping[u]~mapping[v] in ``right``.

    The mismatch, if any, is the first pair (u, v) of ``left`` vertices in
    row-major order whose adjacency is not preserved.
    """
    if left.n != right.n:
        raise MalformedBijectionError(f"Vertex counts differ: {left.n} != {right.n}")
    if len(mapping) != left.n or sorted(mapping) != list(range(left.n)):
        raise MalformedBijectionError("Mapping is not a bijection onto the right-hand vertex set")
    inverse = [0] * left.n
    for u, image in enumerate(mapping):
        inverse[image] = u
    for u in range(left.n):
        pulled_back = 0
        for w in iter_bits(right.rows[mapping[u]]):
            pulled_back |= 1 << inverse[w]
        difference = pulled_back ^ left.rows[u]
        if difference:
            v = (difference & -difference).bit_length() - 1
            return BijectionVerdict(False, (u, v))
    return BijectionVerdict(True)
