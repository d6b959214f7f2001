"""Exact maximum clique search on bit-vector graphs.

Branch and bound with a greedy colouring bound. The clique number is found on
a copy relabelled by descending degree; the reported witness is then the
lexicographically least maximum clique in the original labels, found by an
ascending search bounded the same way. Independence numbers and maximum
independent set enumeration run the same search on the complement.
"""

import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from SRC.base.errors import SolverBudgetExceededError
from SRC.base.graph import Graph, complement, iter_bits, require_loop_free
from Utilities.GenericUtils.config_utils import get_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

# recursion depth reaches the clique size, bounded by the vertex cap
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: Tuple[int, ...]
    nodes: int = 0


@dataclass(frozen=True)
class MaximumIndependentSets:
    alpha: int
    sets: Tuple[Tuple[int, ...], ...]
    truncated: bool
    nodes: int = 0

    @property
    def count(self) -> int:
        return len(self.sets)


@dataclass
class _NodeCounter:
    budget: int
    what: str
    nodes: int = field(default=0)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            logger.budget_exhausted(self.what, self.nodes)
            raise SolverBudgetExceededError(self.budget, self.what)


def _budget(node_budget: Optional[int]) -> int:
    return node_budget if node_budget is not None else get_settings().solver_node_budget


def colour_bound(rows: Sequence[int], candidates: int) -> int:
    """Number of colour classes in a greedy sequential colouring of ``candidates``."""
    colours = 0
    uncoloured = candidates
    while uncoloured:
        colours += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            uncoloured ^= low
            available &= ~rows[v] & ~low
    return colours


def _colour_sort(rows: Sequence[int], candidates: int) -> Tuple[List[int], List[int]]:
    order: List[int] = []
    colours: List[int] = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            uncoloured ^= low
            available &= ~rows[v] & ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def clique_number(graph: Graph, node_budget: Optional[int] = None) -> int:
    require_loop_free(graph, "clique_number")
    if graph.n == 0:
        return 0
    counter = _NodeCounter(_budget(node_budget), "clique number")
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in iter_bits(graph.rows[v]):
            row |= 1 << position[w]
        rows.append(row)

    best = 0
    candidates = (1 << graph.n) - 1
    while candidates:
        low = candidates & -candidates
        best += 1
        candidates &= rows[low.bit_length() - 1]

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        counter.tick()
        order_, colours = _colour_sort(rows, candidates)
        for index in range(len(order_) - 1, -1, -1):
            if size + colours[index] <= best:
                return
            v = order_[index]
            remaining = candidates & rows[v]
            if remaining:
                expand(size + 1, remaining)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~(1 << v)

    expand(0, (1 << graph.n) - 1)
    logger.debug(f"clique number {best} on {graph.n} vertices after {counter.nodes} nodes")
    return best


def _ascending_cliques(graph: Graph, target: int, counter: _NodeCounter, limit: Optional[int]):
    """Cliques of size ``target`` in lexicographic order; stops after ``limit`` results."""
    rows = graph.rows
    found: List[Tuple[int, ...]] = []

    def extend(clique: List[int], candidates: int) -> bool:
        if len(clique) == target:
            found.append(tuple(clique))
            return limit is not None and len(found) >= limit
        counter.tick()
        while candidates:
            if len(clique) + bin(candidates).count("1") < target:
                return False
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            remaining = candidates & rows[v]
            if len(clique) + 1 + colour_bound(rows, remaining) >= target:
                clique.append(v)
                stop = extend(clique, remaining)
                clique.pop()
                if stop:
                    return True
        return False

    extend([], graph.full_mask())
    return found


def max_clique(graph: Graph, node_budget: Optional[int] = None) -> CliqueResult:
    """Exact clique number with the lexicographically least maximum clique."""
    require_loop_free(graph, "max_clique")
    if graph.n == 0:
        return CliqueResult(0, ())
    size = clique_number(graph, node_budget)
    counter = _NodeCounter(_budget(node_budget), "least maximum clique")
    witness = _ascending_cliques(graph, size, counter, limit=1)
    return CliqueResult(size, witness[0], counter.nodes)


def independence_number(graph: Graph, node_budget: Optional[int] = None) -> CliqueResult:
    """alpha(X) as the clique number of the complement, witness least maximum independent set."""
    return max_clique(complement(graph), node_budget)


def enumerate_maximum_independent_sets(
    graph: Graph,
    cap: Optional[int] = None,
    node_budget: Optional[int] = None,
    alpha: Optional[int] = None,
) -> MaximumIndependentSets:
    """Every independent set of size alpha(X), in lexicographic order.

    At most ``cap`` sets are returned; ``truncated`` is set when a further set exists.
    """
    cap = cap if cap is not None else get_settings().mis_cap
    inverse = complement(graph)
    if graph.n == 0:
        return MaximumIndependentSets(0, ((),), False)
    if alpha is None:
        alpha = clique_number(inverse, node_budget)
    counter = _NodeCounter(_budget(node_budget), "maximum independent sets")
    found = _ascending_cliques(inverse, alpha, counter, limit=cap + 1)
    truncated = len(found) > cap
    if truncated:
        logger.warning(f"maximum independent set enumeration truncated at {cap} sets")
    logger.debug(f"enumerated {min(len(found), cap)} maximum independent sets of size {alpha}")
    return MaximumIndependentSets(alpha, tuple(found[:cap]), truncated, counter.nodes)


def clique_coclique_check(graph: Graph, node_budget: Optional[int] = None) -> bool:
    """alpha * omega <= |V|; holds for every vertex-transitive graph."""
    omega = clique_number(graph, node_budget)
    alpha = clique_number(complement(graph), node_budget)
    return alpha * omega <= graph.n
