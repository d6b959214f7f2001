"""Derangement graphs and densities of external direct products G x H on V x W.

Product vertices are compared through the row-major map (g, h) -> g_id * |H| + h_id,
which is also the vertex order of the graph products.
"""

from typing import List, Optional, Tuple

from SRC.base.errors import UnsupportedShapeError
from SRC.base.graph import complement, connected_components, equal_under_bijection, induced_subgraph
from SRC.base.group_action import GroupAction
from SRC.checks.base_check import CheckInstance, Workbench, require_decided, require_size, run_instance
from SRC.helpers.graph_products import derangement_graph, direct_product, strong_product
from SRC.helpers.graph_recognizers import MultipartiteCertificate, is_complete_multipartite
from SRC.helpers.group_builders import external_product_ids
from SRC.helpers.group_spec import build_group
from SRC.helpers.subgroup_search import MAX_SEARCH_DEGREE
from TestDataCommon import corpus
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

COPIES_BASES = ["S3", "A4", "S4", "D4", "K6"]
MULTIPARTITE_BASES = ["K6", "C2", "C3", "C4", "C5"]
WITNESS_DEGREES = (6, 12, 24)


def product_spec(left: str, right: str) -> dict:
    return corpus.external(corpus.spec(left), corpus.spec(right))


def _positions(bench: Workbench, left: str, right: str) -> Tuple[GroupAction, List[int]]:
    """The product group and, for each product element ID, its row-major (g, h) position."""
    product = bench.group(product_spec(left, right))
    ids = external_product_ids(product, bench.group(left), bench.group(right))
    positions = [0] * product.order
    for position, element_id in enumerate(ids):
        positions[element_id] = position
    return product, positions


def _pair_inputs(left: str, right: str) -> dict:
    return {"G": corpus.spec(left), "H": corpus.spec(right)}


def complement_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        require_size(
            bench.group(left).order * bench.group(right).order,
            bench.settings.product_order_limit,
            "product_order_limit",
        )
        product, positions = _positions(bench, left, right)
        expected = strong_product(bench.co_graph(left), bench.co_graph(right), bench.settings.vertex_cap)
        verdict = equal_under_bijection(complement(bench.graph(product_spec(left, right))), expected, positions)
        return verdict.equal, {"vertices": product.order}, verdict.mismatch

    return run_instance(f"complement of Gamma({left} x {right}) is a strong product", _pair_inputs(left, right), body)


def naive_tensor_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    """The loop-free complement of a tensor of complements misses edges of Gamma_{G x H}."""

    def body():
        product, positions = _positions(bench, left, right)
        naive = complement(direct_product(bench.co_graph(left), bench.co_graph(right)))
        verdict = equal_under_bijection(bench.graph(product_spec(left, right)), naive, positions)
        return not verdict.equal, {"vertices": product.order}, verdict.mismatch

    return run_instance(f"Gamma({left} x {right}) differs from a complemented tensor", _pair_inputs(left, right), body)


def corpus_pairs() -> List[Tuple[str, str]]:
    """Unordered pairs of corpus actions, each action also paired with itself."""
    names = corpus.names()
    return [(left, right) for i, left in enumerate(names) for right in names[i:]]


def direct_complement_check(bench: Workbench) -> List[CheckInstance]:
    instances = [complement_instance(bench, left, right) for left, right in corpus_pairs()]
    instances += [trivial_factor_instance(bench, name) for name in ("S3", "A4")]
    instances.append(naive_tensor_instance(bench, "S3", "S2"))
    return instances


def trivial_factor_instance(bench: Workbench, name: str) -> CheckInstance:
    spec = corpus.external(corpus.spec(name), corpus.TRIVIAL)

    def body():
        product = bench.group(spec)
        same = product.same_elements(bench.group(name)) and bench.graph(spec) == bench.graph(name)
        return same, {"order": product.order}, None

    return run_instance(f"{name} x trivial is {name}", {"G": corpus.spec(name), "H": corpus.TRIVIAL}, body)


def copies_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    """For regular H, the complement of Gamma_{G x H} is |H| disjoint copies of the complement of Gamma_G."""

    def body():
        g_order, h_order = bench.group(left).order, bench.group(right).order
        require_size(g_order * h_order, bench.settings.product_order_limit, "product_order_limit")
        product, positions = _positions(bench, left, right)
        co_product = complement(bench.graph(product_spec(left, right)))
        by_position = [0] * product.order
        for element_id, position in enumerate(positions):
            by_position[position] = element_id
        co_base = bench.co_graph(left)
        block_edges = 0
        for h in range(h_order):
            block = [by_position[g * h_order + h] for g in range(g_order)]
            copy = induced_subgraph(co_product, block)
            if copy != co_base:
                return False, {"block": h}, equal_under_bijection(copy, co_base, list(range(g_order))).mismatch
            block_edges += copy.edge_count()
        components = len(connected_components(co_product))
        expected = h_order * len(connected_components(co_base))
        details = {"copies": h_order, "components": components, "expected_components": expected}
        return block_edges == co_product.edge_count() and components == expected, details, None

    return run_instance(
        f"complement of Gamma({left} x {right}) is {right}-many copies", _pair_inputs(left, right), body
    )


def regular_copies_check(bench: Workbench) -> List[CheckInstance]:
    instances = [copies_instance(bench, left, right) for left in COPIES_BASES for right in corpus.regular_names]
    instances += [trivial_factor_instance(bench, name) for name in ("S4",)]
    return instances


def multipartite_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        base = is_complete_multipartite(bench.graph(left))
        if base is None:
            raise UnsupportedShapeError(f"Gamma({left}) is not complete multipartite")
        require_size(
            bench.group(left).order * bench.group(right).order,
            bench.settings.product_order_limit,
            "product_order_limit",
        )
        certificate = is_complete_multipartite(bench.graph(product_spec(left, right)))
        expected = base.part_count * bench.group(right).order
        parts = certificate.part_count if certificate is not None else None
        details = {"base_parts": base.part_count, "parts": parts, "expected": expected}
        witness = certificate.part_sizes if certificate is not None else None
        return parts == expected, details, witness

    return run_instance(
        f"Gamma({left} x {right}) is complete multipartite with k|H| parts", _pair_inputs(left, right), body
    )


def regular_multipartite_check(bench: Workbench) -> List[CheckInstance]:
    pairs = [(left, right) for left in MULTIPARTITE_BASES for right in ("C2", "C3", "C4")]
    return [multipartite_instance(bench, left, right) for left, right in pairs]


def conjecture_witness_spec(n: int) -> dict:
    """GroupSpec of a transitive degree-n group whose derangement graph has n/2 parts.

    n = 2^a * k with k >= 3 odd: a searched degree-2k group with k parts,
    times a regular group of degree 2^(a-1).
    """
    if n < 6 or n % 2 or n & (n - 1) == 0:
        raise UnsupportedShapeError(f"n must be even and not a power of 2, got {n}")
    a, k = 0, n
    while k % 2 == 0:
        a, k = a + 1, k // 2
    if 2 * k > MAX_SEARCH_DEGREE:
        raise UnsupportedShapeError(f"n = {n} needs a degree-{2 * k} search, above {MAX_SEARCH_DEGREE}")
    base = {"constructor": "multipartite_witness", "degree": 2 * k, "parts": k}
    if a == 1:
        return base
    return corpus.external(base, {"constructor": "cyclic", "n": 2 ** (a - 1)})


def construct_conjecture_witness(
    n: int, cap: Optional[int] = None
) -> Tuple[GroupAction, Optional[MultipartiteCertificate]]:
    group = build_group(conjecture_witness_spec(n), cap)
    group = group.renamed(f"W{n}({group.name})")
    return group, is_complete_multipartite(derangement_graph(group))


def witness_instance(bench: Workbench, n: int) -> CheckInstance:
    def body():
        spec = conjecture_witness_spec(n)
        group = bench.group(spec)
        certificate = is_complete_multipartite(bench.graph(spec))
        parts = certificate.part_count if certificate is not None else None
        details = {"degree": group.degree, "order": group.order, "transitive": group.transitive, "parts": parts}
        holds = group.degree == n and group.transitive and parts == n // 2
        witness = {
            "generators": [g.to_cycles() for g in group.generators],
            "part_sizes": certificate.part_sizes if certificate is not None else None,
        }
        return holds, details, witness

    inputs = {"n": n}
    return run_instance(f"transitive degree-{n} group with complete {n // 2}-partite Gamma", inputs, body)


def multipartite_witness_check(bench: Workbench) -> List[CheckInstance]:
    return [witness_instance(bench, n) for n in WITNESS_DEGREES]


def density_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        g_order, h_order = bench.group(left).order, bench.group(right).order
        require_size(g_order * h_order, bench.settings.product_order_limit, "product_order_limit")
        budget = bench.settings.density_node_budget
        rho, rho_g, rho_h = bench.rho(product_spec(left, right), budget), bench.rho(left), bench.rho(right)
        details = {"order": g_order * h_order, "rho": rho, "rho_G": rho_g, "rho_H": rho_h}
        return rho == rho_g * rho_h, details, None

    return run_instance(f"rho({left} x {right}) = rho({left}) rho({right})", _pair_inputs(left, right), body)


def strict_instance(bench: Workbench, left: str, right: str) -> CheckInstance:
    def body():
        g_order, h_order = bench.group(left).order, bench.group(right).order
        require_size(g_order * h_order, bench.settings.density_order_limit, "density_order_limit")
        spec = product_spec(left, right)
        strict, strict_g, strict_h = bench.strict(spec), bench.strict(left), bench.strict(right)
        require_decided(strict, strict_g, strict_h)
        details = {"strict": strict.strict, "strict_G": strict_g.strict, "strict_H": strict_h.strict}
        return strict.strict == (strict_g.strict and strict_h.strict), details, strict.witness

    label = f"{left} x {right} strict-EKR iff both factors are"
    return run_instance(label, _pair_inputs(left, right), body)


def direct_density_check(bench: Workbench) -> List[CheckInstance]:
    instances = []
    for left, right in corpus_pairs():
        instances.append(density_instance(bench, left, right))
        instances.append(strict_instance(bench, left, right))
    return instances
