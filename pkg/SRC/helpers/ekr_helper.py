"""Intersection density and the EKR / strict-EKR deciders.

Intersecting sets of G are exactly the independent sets of its derangement
graph, so every quantity here is read off the clique solver run on the
complement of Gamma_G. The EKR comparison uses the largest point stabilizer,
which also makes it meaningful for intransitive actions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from SRC.base.errors import IntransitiveActionError
from SRC.base.graph import Graph
from SRC.base.group_action import GroupAction, is_coset_of_point_stabilizer
from SRC.helpers.clique_solver import CliqueResult, enumerate_maximum_independent_sets, independence_number
from SRC.helpers.graph_products import derangement_graph
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class StrictEKRVerdict:
    strict: Optional[bool]
    alpha: int
    non_coset_sets: Tuple[Tuple[int, ...], ...]
    enumerated: int
    truncated: bool

    @property
    def witness(self) -> Optional[Tuple[int, ...]]:
        return self.non_coset_sets[0] if self.non_coset_sets else None


@dataclass(frozen=True)
class DensityReport:
    group_name: str
    order: int
    degree: int
    alpha: int
    max_stabilizer_order: int
    rho: Optional[Fraction]
    ekr: bool
    strict_ekr: Optional[bool]
    witnesses: Tuple[Tuple[int, ...], ...]
    witness_cycles: Tuple[Tuple[str, ...], ...]
    enumerated: int
    truncated: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "group": self.group_name,
            "order": self.order,
            "degree": self.degree,
            "alpha": self.alpha,
            "max_stabilizer_order": self.max_stabilizer_order,
            "rho": str(self.rho) if self.rho is not None else None,
            "ekr": self.ekr,
            "strict_ekr": self.strict_ekr,
            "witnesses": [list(ids) for ids in self.witnesses],
            "witness_cycles": [list(cycles) for cycles in self.witness_cycles],
            "enumerated": self.enumerated,
            "truncated": self.truncated,
        }


def maximum_intersecting_size(
    group: GroupAction, graph: Optional[Graph] = None, node_budget: Optional[int] = None
) -> int:
    graph = graph if graph is not None else derangement_graph(group)
    return independence_number(graph, node_budget).size


def intersection_density(
    group: GroupAction, graph: Optional[Graph] = None, node_budget: Optional[int] = None
) -> Fraction:
    """rho(G) = alpha(Gamma_G) / |G_v| = alpha * degree / |G| for transitive G."""
    if not group.transitive:
        raise IntransitiveActionError(f"Intersection density needs a transitive action, {group.name} is not")
    alpha = maximum_intersecting_size(group, graph, node_budget)
    return Fraction(alpha * group.degree, group.order)


def has_EKR(group: GroupAction, graph: Optional[Graph] = None, node_budget: Optional[int] = None) -> bool:
    return maximum_intersecting_size(group, graph, node_budget) == group.max_stabilizer_order


def has_strict_EKR(
    group: GroupAction,
    graph: Optional[Graph] = None,
    cap: Optional[int] = None,
    node_budget: Optional[int] = None,
    least: Optional[CliqueResult] = None,
) -> StrictEKRVerdict:
    """Decide whether every maximum intersecting set is a coset {g : g(v) = w}.

    Without EKR the least maximum intersecting set is already a non-coset
    witness. Otherwise all maximum intersecting sets are enumerated; a
    truncated enumeration yields ``strict=None``.
    """
    graph = graph if graph is not None else derangement_graph(group)
    least = least if least is not None else independence_number(graph, node_budget)
    if least.size != group.max_stabilizer_order:
        return StrictEKRVerdict(False, least.size, (least.witness,), 0, False)
    enumeration = enumerate_maximum_independent_sets(graph, cap, node_budget, alpha=least.size)
    non_coset = tuple(
        members for members in enumeration.sets if is_coset_of_point_stabilizer(group, members) is None
    )
    if enumeration.truncated:
        logger.warning(f"strict-EKR of {group.name} undecided: enumeration truncated at {enumeration.count}")
        return StrictEKRVerdict(None, least.size, non_coset, enumeration.count, True)
    return StrictEKRVerdict(not non_coset, least.size, non_coset, enumeration.count, False)


def density_report(
    group: GroupAction, cap: Optional[int] = None, node_budget: Optional[int] = None, strict: bool = True
) -> DensityReport:
    graph = derangement_graph(group)
    verdict = has_strict_EKR(group, graph, cap, node_budget) if strict else None
    alpha = verdict.alpha if verdict is not None else maximum_intersecting_size(group, graph, node_budget)
    rho = Fraction(alpha * group.degree, group.order) if group.transitive else None
    stabilizer = group.max_stabilizer_order
    witnesses = verdict.non_coset_sets if verdict is not None else ()
    report = DensityReport(
        group_name=group.name,
        order=group.order,
        degree=group.degree,
        alpha=alpha,
        max_stabilizer_order=stabilizer,
        rho=rho,
        ekr=alpha == stabilizer,
        strict_ekr=verdict.strict if verdict is not None else None,
        witnesses=witnesses,
        witness_cycles=tuple(tuple(group.describe(ids)) for ids in witnesses),
        enumerated=verdict.enumerated if verdict is not None else 0,
        truncated=verdict.truncated if verdict is not None else False,
    )
    logger.info(f"{group.name}: alpha={alpha}, stabilizer={stabilizer}, rho={rho}, strict={report.strict_ekr}")
    return report
