from dataclasses import dataclass
from typing import List, Optional, Tuple

from SRC.base.graph import Graph, iter_bits, require_loop_free


@dataclass(frozen=True)
class MultipartiteCertificate:
    """Parts ordered by their smallest vertex, each part sorted."""

    parts: Tuple[Tuple[int, ...], ...]

    @property
    def part_count(self) -> int:
        return len(self.parts)

    @property
    def part_sizes(self) -> List[int]:
        return [len(part) for part in self.parts]


@dataclass(frozen=True)
class BipartiteVerdict:
    bipartite: bool
    sides: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    odd_cycle: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.bipartite


def _equivalence_classes(graph: Graph, class_of) -> Optional[Tuple[Tuple[int, ...], ...]]:
    unassigned = graph.full_mask()
    parts = []
    while unassigned:
        u = (unassigned & -unassigned).bit_length() - 1
        part = class_of(u)
        for v in iter_bits(part):
            if class_of(v) != part:
                return None
        unassigned &= ~part
        parts.append(tuple(iter_bits(part)))
    return tuple(parts)


def is_complete_multipartite(graph: Graph) -> Optional[MultipartiteCertificate]:
    """Certificate iff non-adjacency (with reflexivity) is an equivalence relation."""
    require_loop_free(graph, "is_complete_multipartite")
    full = graph.full_mask()
    parts = _equivalence_classes(graph, lambda u: full & ~graph.rows[u])
    return MultipartiteCertificate(parts) if parts is not None else None


def is_disjoint_union_of_cliques(graph: Graph) -> Optional[Tuple[Tuple[int, ...], ...]]:
    require_loop_free(graph, "is_disjoint_union_of_cliques")
    return _equivalence_classes(graph, lambda u: graph.rows[u] | (1 << u))


def is_bipartite(graph: Graph) -> BipartiteVerdict:
    """Two-colouring by BFS; on failure the witness is an odd cycle through a conflicting edge."""
    require_loop_free(graph, "is_bipartite")
    colour = [-1] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for root in range(graph.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = [root]
        for u in queue:
            for v in iter_bits(graph.rows[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return BipartiteVerdict(False, odd_cycle=_odd_cycle(u, v, parent, depth))
    sides = (
        tuple(v for v in range(graph.n) if colour[v] == 0),
        tuple(v for v in range(graph.n) if colour[v] == 1),
    )
    return BipartiteVerdict(True, sides=sides)


def _odd_cycle(u: int, v: int, parent: List[int], depth: List[int]) -> Tuple[int, ...]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])
