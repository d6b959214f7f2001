"""IS-primitivity and MIS-normality of direct squares."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Optional, Set, Tuple

from SRC.base.errors import EnumerationCapExceededError
from SRC.base.graph import Graph, closed_neighborhood, require_loop_free
from SRC.helpers.clique_solver import enumerate_maximum_independent_sets, independence_number
from SRC.helpers.graph_products import direct_power
from Utilities.GenericUtils.config_utils import get_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


class PrimitivityStatus(str, Enum):
    PRIMITIVE = "primitive"
    NOT_PRIMITIVE = "not_primitive"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ISPrimitivityVerdict:
    status: PrimitivityStatus
    witness: Optional[Tuple[int, ...]]
    budget_spent: int
    alpha: int
    vertex_count: int
    neighbourhood_size: int = 0

    @property
    def witness_ratio(self) -> Optional[Fraction]:
        if self.witness is None:
            return None
        return Fraction(len(self.witness), self.neighbourhood_size)

    @property
    def target_ratio(self) -> Fraction:
        return Fraction(self.alpha, self.vertex_count)


def is_IS_primitive(
    graph: Graph,
    budget: Optional[int] = None,
    alpha: Optional[int] = None,
    assume_vertex_transitive: bool = False,
) -> ISPrimitivityVerdict:
    """Search for a non-maximum independent set A with |A| / |N[A]| = alpha / |V|.

    Independent sets are grown in ascending vertex order. A branch is cut when
    even its largest admissible extension could not reach the target ratio,
    using that |N[A]| never shrinks as A grows. With ``assume_vertex_transitive``
    only sets containing vertex 0 are explored, which loses no witness up to
    automorphism.
    """
    require_loop_free(graph, "is_IS_primitive")
    budget = budget if budget is not None else get_settings().is_primitivity_budget
    n = graph.n
    if alpha is None:
        alpha = independence_number(graph).size
    rows = graph.rows
    nodes = 0
    exhausted = False

    def search(members: Tuple[int, ...], candidates: int, neighbourhood: int):
        nonlocal nodes, exhausted
        nodes += 1
        if nodes > budget:
            exhausted = True
            return None
        size = len(members)
        closed = bin(neighbourhood).count("1")
        if size and size * n == alpha * closed:
            return members
        reachable = min(alpha - 1, size + bin(candidates).count("1"))
        if reachable * n < alpha * closed or size >= alpha - 1:
            return None
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            found = search(members + (v,), candidates & ~rows[v], neighbourhood | rows[v] | low)
            if found is not None or exhausted:
                return found
        return None

    roots = 1 if assume_vertex_transitive and n else (1 << n) - 1
    found = None
    if alpha > 1:
        while roots and found is None and not exhausted:
            low = roots & -roots
            v = low.bit_length() - 1
            roots ^= low
            later = ((1 << n) - 1) & ~((low << 1) - 1)
            found = search((v,), later & ~rows[v], rows[v] | low)

    if found is not None:
        closed = len(closed_neighborhood(graph, found))
        logger.debug(f"IS-primitivity witness {found} with |N[A]| = {closed}")
        return ISPrimitivityVerdict(PrimitivityStatus.NOT_PRIMITIVE, found, nodes, alpha, n, closed)
    if exhausted:
        logger.budget_exhausted("IS-primitivity search", nodes)
        return ISPrimitivityVerdict(PrimitivityStatus.UNKNOWN, None, nodes, alpha, n)
    return ISPrimitivityVerdict(PrimitivityStatus.PRIMITIVE, None, nodes, alpha, n)


@dataclass(frozen=True)
class MISNormalVerdict:
    normal: bool
    alpha: int
    square_alpha: int
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.normal


def _as_preimage(members: Tuple[int, ...], n: int, maximum: Set[FrozenSet[int]]) -> bool:
    firsts = frozenset(v // n for v in members)
    seconds = frozenset(v % n for v in members)
    if len(members) == len(firsts) * n and firsts in maximum:
        return True
    return len(members) == len(seconds) * n and seconds in maximum


def is_MIS_normal_direct_square(
    graph: Graph, cap: Optional[int] = None, node_budget: Optional[int] = None, vertex_cap: Optional[int] = None
) -> MISNormalVerdict:
    """True iff every maximum independent set of X x X is A x V or V x A for a maximum independent A."""
    require_loop_free(graph, "is_MIS_normal_direct_square")
    n = graph.n
    factor = enumerate_maximum_independent_sets(graph, cap, node_budget)
    if factor.truncated:
        raise EnumerationCapExceededError(factor.count, "factor maximum independent sets")
    square = direct_power(graph, 2, vertex_cap)
    square_sets = enumerate_maximum_independent_sets(square, cap, node_budget)
    if square_sets.truncated:
        raise EnumerationCapExceededError(square_sets.count, "square maximum independent sets")
    if square_sets.alpha != factor.alpha * n:
        return MISNormalVerdict(False, factor.alpha, square_sets.alpha, square_sets.sets[0])
    maximum = {frozenset(members) for members in factor.sets}
    for members in square_sets.sets:
        if not _as_preimage(members, n, maximum):
            return MISNormalVerdict(False, factor.alpha, square_sets.alpha, members)
    return MISNormalVerdict(True, factor.alpha, square_sets.alpha)
