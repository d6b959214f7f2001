"""Graph-theoretic identities the density arguments lean on, run over small graphs.

Test graphs are named so each instance can be rebuilt from its recorded inputs:
corpus derangement graphs by group name, plus cycles, paths and complete graphs.
"""

from typing import Callable, Dict, List, Tuple

from SRC.base.graph import Graph, complement
from SRC.checks.base_check import CheckInstance, Workbench, require_size, run_instance
from SRC.helpers.clique_solver import clique_number, enumerate_maximum_independent_sets, independence_number
from SRC.helpers.graph_products import direct_power, direct_product, lexicographic, strong_product
from TestDataCommon import corpus

GraphMaker = Callable[[Workbench], Graph]

# graphs that are vertex-transitive, as the independence-number identities require
TRANSITIVE_GRAPHS: Dict[str, Tuple[dict, GraphMaker]] = {
    "Gamma(S3)": ({"group": corpus.spec("S3")}, lambda bench: bench.graph("S3")),
    "Gamma(C3)": ({"group": corpus.spec("C3")}, lambda bench: bench.graph("C3")),
    "Gamma(C4)": ({"group": corpus.spec("C4")}, lambda bench: bench.graph("C4")),
    "Gamma(D4)": ({"group": corpus.spec("D4")}, lambda bench: bench.graph("D4")),
    "Gamma(A4)": ({"group": corpus.spec("A4")}, lambda bench: bench.graph("A4")),
    "cycle(5)": ({"graph": "cycle", "n": 5}, lambda bench: Graph.cycle(5)),
    "cycle(6)": ({"graph": "cycle", "n": 6}, lambda bench: Graph.cycle(6)),
    "complete(3)": ({"graph": "complete", "n": 3}, lambda bench: Graph.complete(3)),
}

OTHER_GRAPHS: Dict[str, Tuple[dict, GraphMaker]] = {
    "path(4)": ({"graph": "path", "n": 4}, lambda bench: Graph.path(4)),
    "empty(2)": ({"graph": "empty", "n": 2}, lambda bench: Graph.empty(2)),
    "star(3)": ({"graph": "complete_bipartite", "a": 1, "b": 3}, lambda bench: Graph.complete_bipartite(1, 3)),
}

ALL_GRAPHS = {**TRANSITIVE_GRAPHS, **OTHER_GRAPHS}


def _pairs(names: List[str]) -> List[Tuple[str, str]]:
    return [(left, right) for i, left in enumerate(names) for right in names[i:]]


def _inputs(*names: str) -> dict:
    return {name: ALL_GRAPHS[name][0] for name in names}


def _alpha(graph: Graph, bench: Workbench) -> int:
    return independence_number(graph, bench.settings.solver_node_budget).size


def _product_size(bench: Workbench, *names: str) -> int:
    size = 1
    for name in names:
        size *= ALL_GRAPHS[name][1](bench).n
    return size


def clique_coclique_instance(bench: Workbench, name: str) -> CheckInstance:
    def body():
        group = bench.group(name)
        require_size(group.order, bench.settings.density_order_limit, "density_order_limit")
        alpha = bench.alpha(name).size
        omega = clique_number(bench.graph(name), bench.settings.solver_node_budget)
        details = {"alpha": alpha, "omega": omega, "vertices": group.order}
        return alpha * omega <= group.order, details, None

    return run_instance(f"alpha * omega <= |V| on Gamma({name})", {"group": corpus.spec(name)}, body)


def strong_product_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    """Every maximum clique of X strong Y is the product of maximum cliques of the factors."""

    def body():
        require_size(_product_size(bench, left, right), bench.settings.toolbox_vertex_limit, "toolbox_vertex_limit")
        x, y = ALL_GRAPHS[left][1](bench), ALL_GRAPHS[right][1](bench)
        budget = bench.settings.solver_node_budget
        omega_x, omega_y = clique_number(x, budget), clique_number(y, budget)
        cliques = enumerate_maximum_independent_sets(complement(strong_product(x, y)), bench.settings.mis_cap, budget)
        details = {"omega_x": omega_x, "omega_y": omega_y, "omega": cliques.alpha, "maximum_cliques": cliques.count}
        if cliques.alpha != omega_x * omega_y:
            return False, details, cliques.sets[0]
        for clique in cliques.sets:
            first = {v // y.n for v in clique}
            second = {v % y.n for v in clique}
            if len(first) != omega_x or len(second) != omega_y or len(clique) != len(first) * len(second):
                return False, details, clique
        return not cliques.truncated, details, None

    return run_instance(f"maximum cliques of {left} strong {right} factor", _inputs(left, right), body)


def tensor_alpha_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        require_size(_product_size(bench, left, right), bench.settings.toolbox_vertex_limit, "toolbox_vertex_limit")
        x, y = TRANSITIVE_GRAPHS[left][1](bench), TRANSITIVE_GRAPHS[right][1](bench)
        alpha_x, alpha_y = _alpha(x, bench), _alpha(y, bench)
        product = _alpha(direct_product(x, y), bench)
        expected = max(alpha_x * y.n, alpha_y * x.n)
        return product == expected, {"alpha": product, "expected": expected}, None

    return run_instance(f"alpha({left} x {right}) = max(alpha(X)|Y|, alpha(Y)|X|)", _inputs(left, right), body)


def direct_power_instance(bench: Workbench, name: str, n: int) -> CheckInstance:
    def body():
        x = TRANSITIVE_GRAPHS[name][1](bench)
        require_size(x.n**n, bench.settings.toolbox_vertex_limit, "toolbox_vertex_limit")
        power = _alpha(direct_power(x, n), bench)
        expected = _alpha(x, bench) * x.n ** (n - 1)
        return power == expected, {"alpha": power, "expected": expected}, None

    inputs = {**_inputs(name), "power": n}
    return run_instance(f"alpha({name}^{n}) = alpha * |V|^{n - 1}", inputs, body)


def lexicographic_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        require_size(_product_size(bench, left, right), bench.settings.toolbox_vertex_limit, "toolbox_vertex_limit")
        x, y = ALL_GRAPHS[left][1](bench), ALL_GRAPHS[right][1](bench)
        product = _alpha(lexicographic(x, y), bench)
        expected = _alpha(x, bench) * _alpha(y, bench)
        return product == expected, {"alpha": product, "expected": expected}, None

    return run_instance(f"alpha({left}[{right}]) = alpha(X) alpha(Y)", _inputs(left, right), body)


def subgroup_density_instance(bench: Workbench, larger: str, smaller: str) -> CheckInstance:
    """rho(G) <= rho(H) for transitive H <= G, and the no-homomorphism ratio for Gamma_H inside Gamma_G."""

    def body():
        group, subgroup = bench.group(larger), bench.group(smaller)
        require_size(group.order, bench.settings.density_order_limit, "density_order_limit")
        contained = set(subgroup.images) <= set(group.images)
        rho_g, rho_h = bench.rho(larger), bench.rho(smaller)
        alpha_g, alpha_h = bench.alpha(larger).size, bench.alpha(smaller).size
        details = {"rho_G": rho_g, "rho_H": rho_h, "alpha_G": alpha_g, "alpha_H": alpha_h, "subgroup": contained}
        ratio_holds = subgroup.order * alpha_g <= group.order * alpha_h
        return contained and rho_g <= rho_h and ratio_holds, details, None

    inputs = {"G": corpus.spec(larger), "H": corpus.spec(smaller)}
    return run_instance(f"rho({larger}) <= rho({smaller})", inputs, body)


def toolbox_check(bench: Workbench) -> List[CheckInstance]:
    """Product instances above toolbox_vertex_limit are reported as skips."""
    everything, transitive = list(ALL_GRAPHS), list(TRANSITIVE_GRAPHS)
    instances = [clique_coclique_instance(bench, name) for name in corpus.names()]
    instances += [strong_product_instance(bench, left, right) for left, right in _pairs(everything)]
    instances += [tensor_alpha_instance(bench, left, right) for left, right in _pairs(transitive)]
    instances += [direct_power_instance(bench, name, n) for name in transitive for n in (2, 3)]
    instances += [lexicographic_instance(bench, left, right) for left in everything for right in everything]
    instances += [subgroup_density_instance(bench, larger, smaller) for larger, smaller in corpus.subgroup_pairs]
    return instances
