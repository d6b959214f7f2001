"""Internal direct products on disjoint unions, IS-primitivity, and strict-EKR of internal squares."""

from functools import reduce
from typing import List, Sequence, Tuple

from SRC.base.errors import SolverBudgetExceededError, UnsupportedShapeError
from SRC.base.graph import Graph, equal_under_bijection
from SRC.checks.base_check import CheckInstance, Workbench, require_decided, require_size, run_instance
from SRC.helpers.clique_solver import independence_number
from SRC.helpers.graph_products import direct_product
from SRC.helpers.graph_recognizers import is_bipartite
from SRC.helpers.group_builders import internal_product_ids
from SRC.helpers.independent_sets import (
    ISPrimitivityVerdict,
    PrimitivityStatus,
    is_IS_primitive,
    is_MIS_normal_direct_square,
)
from TestDataCommon import corpus
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

INTERNAL_FACTORS: List[Tuple[str, ...]] = [
    ("S3", "S3"),
    ("S2", "S2", "S2"),
    ("S3",),
    ("C3", "S2"),
    ("A4", "C2"),
    ("D4", "C3"),
    ("S4", "S2"),
    ("S3", "C4", "S2"),
]
SQUARE_BASES = ["C3", "C4", "C5", "S3", "D4"]
# non-bipartite corpus graphs small enough to square
SQUARE_CORPUS = ["S3", "C3", "C4", "C5", "C6", "D4"]


def _two_cycles(n: int) -> Graph:
    return Graph.from_edges(2 * n, [(u + shift, (u + 1) % n + shift) for shift in (0, n) for u in range(n)])


# vertex-transitive test graphs outside the corpus, named by how to rebuild them
EXTRA_GRAPHS = {
    "complete(4)": ({"graph": "complete", "n": 4}, lambda: Graph.complete(4)),
    "cycle(5)": ({"graph": "cycle", "n": 5}, lambda: Graph.cycle(5)),
    "cycle(7)": ({"graph": "cycle", "n": 7}, lambda: Graph.cycle(7)),
    "2 x cycle(5)": ({"graph": "two_cycles", "n": 5}, lambda: _two_cycles(5)),
}


def internal_spec(names: Sequence[str]) -> dict:
    return corpus.internal(*(corpus.spec(name) for name in names))


def internal_graph_instance(bench: Workbench, names: Tuple[str, ...]) -> CheckInstance:
    """Gamma of an internal product is the tensor product of the factor graphs; EKR factors give EKR."""
    spec = internal_spec(names)

    def body():
        factors = [bench.group(name) for name in names]
        product = bench.group(spec)
        require_size(product.order, bench.settings.product_order_limit, "product_order_limit")
        ids = internal_product_ids(product, factors)
        positions = [0] * product.order
        for position, element_id in enumerate(ids):
            positions[element_id] = position
        expected = reduce(
            lambda x, y: direct_product(x, y, bench.settings.vertex_cap), [bench.graph(name) for name in names]
        )
        verdict = equal_under_bijection(bench.graph(spec), expected, positions)
        details = {"vertices": product.order, "graph_equal": verdict.equal}
        if not verdict.equal or product.order > bench.settings.density_order_limit:
            return verdict.equal, details, verdict.mismatch
        factor_ekr = [bench.ekr(name) for name in names]
        details.update({"factor_ekr": factor_ekr, "ekr": bench.ekr(spec)})
        return not all(factor_ekr) or details["ekr"], details, bench.alpha(spec).witness

    label = " + ".join(names)
    return run_instance(f"Gamma({label}) is a tensor product of factor graphs", {"group": spec}, body)


def internal_graph_check(bench: Workbench) -> List[CheckInstance]:
    return [internal_graph_instance(bench, names) for names in INTERNAL_FACTORS]


def _primitivity(bench: Workbench, graph: Graph) -> ISPrimitivityVerdict:
    alpha = independence_number(graph, bench.settings.solver_node_budget).size
    verdict = is_IS_primitive(graph, bench.settings.is_primitivity_budget, alpha, assume_vertex_transitive=True)
    if verdict.status == PrimitivityStatus.UNKNOWN:
        raise SolverBudgetExceededError(verdict.budget_spent, "IS-primitivity")
    return verdict


def _primitivity_details(verdict: ISPrimitivityVerdict) -> dict:
    return {
        "status": verdict.status,
        "alpha": verdict.alpha,
        "witness_ratio": verdict.witness_ratio,
        "target_ratio": verdict.target_ratio,
        "budget_spent": verdict.budget_spent,
    }


def expected_primitivity_instance(
    bench: Workbench, label: str, inputs: dict, graph_of, expected: PrimitivityStatus
) -> CheckInstance:
    def body():
        verdict = _primitivity(bench, graph_of())
        return verdict.status == expected, _primitivity_details(verdict), verdict.witness

    return run_instance(f"{label} is {expected.value}", inputs, body)


def square_coherence_instance(bench: Workbench, label: str, inputs: dict, graph_of) -> CheckInstance:
    """For a non-bipartite vertex-transitive X: X x X is MIS-normal iff X is IS-primitive."""

    def body():
        graph = graph_of()
        require_size(graph.n, bench.settings.square_vertex_limit, "square_vertex_limit")
        if is_bipartite(graph).bipartite:
            raise UnsupportedShapeError(f"{label} is bipartite")
        primitivity = _primitivity(bench, graph)
        normal = is_MIS_normal_direct_square(
            graph, bench.settings.mis_cap, bench.settings.solver_node_budget, bench.settings.vertex_cap
        )
        primitive = primitivity.status == PrimitivityStatus.PRIMITIVE
        details = {"is_primitive": primitive, "mis_normal": normal.normal, "square_alpha": normal.square_alpha}
        return primitive == normal.normal, details, normal.witness or primitivity.witness

    return run_instance(f"{label} x {label}: MIS-normal iff IS-primitive", inputs, body)


def is_primitivity_check(bench: Workbench) -> List[CheckInstance]:
    primitive, not_primitive = PrimitivityStatus.PRIMITIVE, PrimitivityStatus.NOT_PRIMITIVE
    instances = []
    for name in corpus.regular_names:
        inputs = {"group": corpus.spec(name)}
        instances.append(
            expected_primitivity_instance(bench, f"Gamma({name})", inputs, lambda n=name: bench.graph(n), primitive)
        )
    inputs, graph_of = EXTRA_GRAPHS["complete(4)"]
    instances.append(expected_primitivity_instance(bench, "complete(4)", inputs, graph_of, primitive))
    for name in ("S3", "A4"):
        inputs = {"group": corpus.spec(name)}
        instances.append(
            expected_primitivity_instance(bench, f"Gamma({name})", inputs, lambda n=name: bench.graph(n), not_primitive)
        )
    inputs, graph_of = EXTRA_GRAPHS["2 x cycle(5)"]
    instances.append(expected_primitivity_instance(bench, "2 x cycle(5)", inputs, graph_of, not_primitive))

    for name in SQUARE_CORPUS:
        inputs = {"group": corpus.spec(name)}
        instances.append(square_coherence_instance(bench, f"Gamma({name})", inputs, lambda n=name: bench.graph(n)))
    for label in ("cycle(5)", "cycle(7)"):
        inputs, graph_of = EXTRA_GRAPHS[label]
        instances.append(square_coherence_instance(bench, label, inputs, graph_of))
    return instances


def internal_square_instance(bench: Workbench, name: str) -> CheckInstance:
    """G x G (internal) has strict-EKR iff G does and Gamma_G is IS-primitive."""
    spec = internal_spec((name, name))

    def body():
        group = bench.group(name)
        require_size(group.order**2, bench.settings.internal_square_limit, "internal_square_limit")
        primitivity = _primitivity(bench, bench.graph(name))
        square, base = bench.strict(spec), bench.strict(name)
        require_decided(square, base)
        primitive = primitivity.status == PrimitivityStatus.PRIMITIVE
        details = {"strict_square": square.strict, "strict": base.strict, "is_primitive": primitive}
        return square.strict == (base.strict and primitive), details, square.witness

    return run_instance(f"{name} + {name}: strict-EKR iff strict-EKR and IS-primitive", {"group": spec}, body)


def internal_power_check(bench: Workbench) -> List[CheckInstance]:
    return [internal_square_instance(bench, name) for name in SQUARE_BASES]
