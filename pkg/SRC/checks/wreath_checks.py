"""Wreath products G wr H acting on V x N.

Every check addresses wreath elements through ``wreath_coordinates``: row h of
the table lists the elements ((g_1..g_n), h) with the inner tuple in row-major
order over base element IDs, which is also the vertex order of ``direct_power``.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from SRC.base.errors import SolverBudgetExceededError, WorkbenchError
from SRC.base.graph import Graph, equal_under_bijection, induced_subgraph, iter_bits, loop_complete
from SRC.base.group_action import GroupAction, point_stabilizer
from SRC.base.permutation import Permutation, compose, fixed_points, inverse
from SRC.checks.base_check import (
    CheckInstance,
    Workbench,
    require_decided,
    require_size,
    run_instance,
    skip_instance,
)
from SRC.helpers.graph_products import direct_power, direct_product, lexicographic
from SRC.helpers.group_builders import wreath_coordinates
from SRC.helpers.group_spec import spec_label
from SRC.helpers.independent_sets import PrimitivityStatus, is_IS_primitive
from SRC.helpers.wreath import WreathElement, flat_adjacent, tuple_adjacent, wreath_invert, wreath_multiply
from TestDataCommon import corpus
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


def sym(m: int) -> dict:
    return {"constructor": "symmetric", "n": m}


def cyc(m: int) -> dict:
    return {"constructor": "cyclic", "n": m}


def wreath_inputs(base: dict, top: dict) -> dict:
    return {"G": base, "H": top}


_PREFIXES = {"symmetric": "S", "cyclic": "C", "dihedral": "D", "alternating": "A"}


def short_label(spec: dict) -> str:
    """Corpus name, or S4 / C3 style for plain constructors."""
    for name in corpus.names():
        if corpus.corpus[name] == spec:
            return name
    if set(spec) == {"constructor", "n"} and spec["constructor"] in _PREFIXES:
        return f"{_PREFIXES[spec['constructor']]}{spec['n']}"
    return spec_label(spec)


def wreath_label(base: dict, top: dict) -> str:
    return f"{short_label(base)} wr {short_label(top)}"


def wreath_order(bench: Workbench, base: dict, top: dict) -> int:
    top_group = bench.group(top)
    return bench.group(base).order ** top_group.degree * top_group.order


def _tuples(bench: Workbench, base: dict, top: dict) -> Tuple[GroupAction, List[WreathElement]]:
    wreath = bench.group(corpus.wreath(base, top))
    width = bench.group(base).degree
    return wreath, [WreathElement.from_flat(element, width) for element in wreath.elements]


# multiplication and inversion in tuple form

FORMULA_EXHAUSTIVE = [(sym(2), sym(2)), (sym(3), sym(2))]
FORMULA_SAMPLED = [(sym(2), sym(3)), (sym(3), sym(3))]


def _formula_mismatch(wreath: GroupAction, tuples: List[WreathElement], pairs: List[Tuple[int, int]]):
    for i, j in pairs:
        if wreath_multiply(tuples[i], tuples[j]).flatten() != compose(wreath.elements[i], wreath.elements[j]):
            return {"product": (i, j)}
    for i in sorted({i for pair in pairs for i in pair}):
        if wreath_invert(tuples[i]).flatten() != inverse(wreath.elements[i]):
            return {"inverse": i}
    return None


def formulas_instance(bench: Workbench, base: dict, top: dict, sampled: bool) -> CheckInstance:
    def body():
        wreath, tuples = _tuples(bench, base, top)
        top_group, base_group = bench.group(top), bench.group(base)
        expected_order = base_group.order**top_group.degree * top_group.order
        if wreath.order != expected_order:
            return False, {"order": wreath.order, "expected_order": expected_order}, None
        if sampled:
            rng = bench.rng(f"wreath-formulas:{wreath_label(base, top)}")
            drawn = rng.integers(0, wreath.order, size=(bench.settings.random_formula_pairs, 2))
            pairs = [(int(i), int(j)) for i, j in drawn]
        else:
            pairs = [(i, j) for i in range(wreath.order) for j in range(wreath.order)]
        mismatch = _formula_mismatch(wreath, tuples, pairs)
        details = {"order": wreath.order, "pairs": len(pairs), "sampled": sampled}
        return mismatch is None, details, mismatch

    mode = "sampled" if sampled else "exhaustive"
    return run_instance(f"{wreath_label(base, top)}: tuple formulas ({mode})", wreath_inputs(base, top), body)


def coordinates_instance(bench: Workbench, base: dict, top: dict) -> CheckInstance:
    """The coordinate table is a bijection onto the group and respects the tuple form."""

    def body():
        wreath = bench.group(corpus.wreath(base, top))
        base_group, top_group = bench.group(base), bench.group(top)
        coords = wreath_coordinates(wreath, base_group, top_group)
        flat = [element_id for row in coords for element_id in row]
        if sorted(flat) != list(range(wreath.order)):
            return False, {"bijective": False}, None
        width, n = base_group.degree, top_group.degree
        for h_id, row in enumerate(coords):
            element = WreathElement.from_flat(wreath.elements[row[-1]], width)
            if element.outer != top_group.elements[h_id]:
                return False, {"row": h_id}, row[-1]
            if any(g != base_group.elements[-1] for g in element.inner[:n]):
                return False, {"row": h_id, "column": len(row) - 1}, row[-1]
        return True, {"rows": len(coords), "columns": len(coords[0])}, None

    return run_instance(f"{wreath_label(base, top)}: coordinate table", wreath_inputs(base, top), body)


def wreath_formulas_check(bench: Workbench) -> List[CheckInstance]:
    instances = [formulas_instance(bench, base, top, sampled=False) for base, top in FORMULA_EXHAUSTIVE]
    instances += [formulas_instance(bench, base, top, sampled=True) for base, top in FORMULA_SAMPLED]
    instances += [coordinates_instance(bench, base, top) for base, top in FORMULA_EXHAUSTIVE + FORMULA_SAMPLED]
    return instances


# adjacency decided coordinatewise

ADJACENCY_EXHAUSTIVE = [(sym(3), sym(2)), (sym(2), sym(2)), (cyc(3), sym(2)), (sym(2), sym(3))]
ADJACENCY_SAMPLED = [(sym(2), sym(3)), (sym(3), sym(3))]


def adjacency_instance(bench: Workbench, base: dict, top: dict, sampled: bool) -> CheckInstance:
    def body():
        if not sampled:
            require_size(wreath_order(bench, base, top), bench.settings.wreath_order_limit, "wreath_order_limit")
        wreath, tuples = _tuples(bench, base, top)
        if sampled:
            rng = bench.rng(f"wreath-adjacency:{wreath_label(base, top)}")
            drawn = rng.integers(0, wreath.order, size=(bench.settings.random_pairs, 2))
            pairs: Iterable[Tuple[int, int]] = ((int(i), int(j)) for i, j in drawn)
            count = bench.settings.random_pairs
        else:
            pairs = ((i, j) for i in range(wreath.order) for j in range(wreath.order))
            count = wreath.order**2
        elements = wreath.elements
        for i, j in pairs:
            if tuple_adjacent(tuples[i], tuples[j]) != flat_adjacent(elements[i], elements[j]):
                return False, {"pairs": count}, {"pair": (i, j), "cycles": wreath.describe((i, j))}
        return True, {"pairs": count, "sampled": sampled}, None

    mode = "sampled" if sampled else "exhaustive"
    return run_instance(f"{wreath_label(base, top)}: coordinatewise adjacency ({mode})", wreath_inputs(base, top), body)


def named_pairs_instance(bench: Workbench) -> CheckInstance:
    """A pair whose tops differ everywhere is adjacent; a non-derangement quotient blocks adjacency."""
    base, top = sym(3), sym(2)

    def body():
        identity = WreathElement.identity(3, 2)
        swap = Permutation((1, 0))
        rotation = Permutation.from_cycles("(1 2 3)", 3)
        transposition = Permutation.from_cycles("(1 2)", 3)
        across = WreathElement((rotation, transposition), swap)
        blocked = WreathElement((rotation, transposition), Permutation.identity(2))
        details = {
            "tops_differ_everywhere": tuple_adjacent(identity, across),
            "fixed_point_in_second_block": tuple_adjacent(identity, blocked),
        }
        holds = details["tops_differ_everywhere"] and not details["fixed_point_in_second_block"]
        holds = holds and flat_adjacent(identity.flatten(), across.flatten())
        holds = holds and not flat_adjacent(identity.flatten(), blocked.flatten())
        return holds, details, None

    return run_instance("S3 wr S2: named adjacent and non-adjacent pairs", wreath_inputs(base, top), body)


def wreath_adjacency_check(bench: Workbench) -> List[CheckInstance]:
    instances = [adjacency_instance(bench, base, top, sampled=False) for base, top in ADJACENCY_EXHAUSTIVE]
    instances += [adjacency_instance(bench, base, top, sampled=True) for base, top in ADJACENCY_SAMPLED]
    instances.append(named_pairs_instance(bench))
    return instances


# layers and between-layer graphs

BLOCK_CASES = [(sym(3), sym(2)), (sym(2), sym(2)), (sym(2), sym(3)), (cyc(3), sym(2))]


def _between_layers(graph: Graph, first: List[int], second: List[int]) -> Graph:
    """Bipartite graph of edges between two layers, vertex t * 2 + layer."""
    position = {v: t * 2 for t, v in enumerate(first)}
    position.update({v: t * 2 + 1 for t, v in enumerate(second)})
    rows = [0] * (2 * len(first))
    for layer, members in ((0, first), (1, second)):
        other = second if layer == 0 else first
        other_mask = 0
        for v in other:
            other_mask |= 1 << v
        for t, v in enumerate(members):
            row = 0
            for w in iter_bits(graph.rows[v] & other_mask):
                row |= 1 << position[w]
            rows[t * 2 + layer] = row
    return Graph.trusted(len(rows), rows)


def blocks_instance(bench: Workbench, base: dict, top: dict) -> CheckInstance:
    def body():
        require_size(wreath_order(bench, base, top), bench.settings.wreath_density_limit, "wreath_density_limit")
        spec = corpus.wreath(base, top)
        wreath, base_group, top_group = bench.group(spec), bench.group(base), bench.group(top)
        coords = wreath_coordinates(wreath, base_group, top_group)
        graph, gamma, n = bench.graph(spec), bench.graph(base), top_group.degree
        layer_graph = direct_power(gamma, n)
        for h in range(top_group.order):
            layer = induced_subgraph(graph, coords[h])
            verdict = equal_under_bijection(layer, layer_graph, list(range(layer.n)))
            if not verdict:
                return False, {"layer": h}, verdict.mismatch
        pairs = 0
        for h in range(top_group.order):
            for h2 in range(h + 1, top_group.order):
                outer, outer2 = top_group.images[h], top_group.images[h2]
                factors = [gamma if outer[i] == outer2[i] else loop_complete(base_group.order) for i in range(n)]
                expected = factors[0]
                for factor in factors[1:] + [Graph.complete(2)]:
                    expected = direct_product(expected, factor)
                between = _between_layers(graph, coords[h], coords[h2])
                verdict = equal_under_bijection(between, expected, list(range(between.n)))
                if not verdict:
                    return False, {"layers": (h, h2)}, verdict.mismatch
                pairs += 1
        return True, {"layers": top_group.order, "layer_pairs": pairs}, None

    return run_instance(f"{wreath_label(base, top)}: layer and between-layer products", wreath_inputs(base, top), body)


def wreath_blocks_check(bench: Workbench) -> List[CheckInstance]:
    return [blocks_instance(bench, base, top) for base, top in BLOCK_CASES]


# regular top group

REGULAR_TOP_CASES = [(sym(3), sym(2)), (sym(2), sym(2)), (sym(2), cyc(3)), (cyc(3), cyc(2))]


def regular_top_instance(bench: Workbench, base: dict, top: dict) -> CheckInstance:
    def body():
        require_size(wreath_order(bench, base, top), bench.settings.wreath_density_limit, "wreath_density_limit")
        spec = corpus.wreath(base, top)
        wreath, base_group, top_group = bench.group(spec), bench.group(base), bench.group(top)
        if not top_group.regular:
            return False, {"top_regular": False}, None
        coords = wreath_coordinates(wreath, base_group, top_group)
        layer_size = len(coords[0])
        mapping = [0] * wreath.order
        for h, row in enumerate(coords):
            for t, element_id in enumerate(row):
                mapping[element_id] = h * layer_size + t
        layer = direct_power(bench.graph(base), top_group.degree)
        expected = lexicographic(Graph.complete(top_group.order), layer, bench.settings.vertex_cap)
        verdict = equal_under_bijection(bench.graph(spec), expected, mapping)
        return verdict.equal, {"vertices": wreath.order}, verdict.mismatch

    return run_instance(
        f"{wreath_label(base, top)}: Gamma is K_n[Gamma_G^n]", wreath_inputs(base, top), body
    )


def wreath_regular_top_check(bench: Workbench) -> List[CheckInstance]:
    return [regular_top_instance(bench, base, top) for base, top in REGULAR_TOP_CASES]


# density bounds

DENSITY_CASES = [
    (sym(3), sym(2)),
    (sym(2), sym(3)),
    (sym(2), sym(2)),
    (cyc(3), sym(2)),
    (cyc(4), sym(2)),
    (sym(2), cyc(3)),
    (cyc(3), cyc(3)),
    ({"constructor": "dihedral", "n": 4}, sym(2)),
]
EXTENDED_DENSITY_CASES = [(corpus.spec("K6"), sym(2)), (corpus.spec("A4"), sym(2))]


def lower_bound_set(bench: Workbench, base: dict, top: dict) -> List[int]:
    """I_G x G x ... x G x H_0, an intersecting set of G wr H of density rho(G)."""
    spec = corpus.wreath(base, top)
    wreath, base_group, top_group = bench.group(spec), bench.group(base), bench.group(top)
    coords = wreath_coordinates(wreath, base_group, top_group)
    intersecting = set(bench.alpha(base).witness)
    tail = base_group.order ** (top_group.degree - 1)
    return sorted(
        coords[h][t]
        for h in point_stabilizer(top_group, 0)
        for t in range(len(coords[h]))
        if t // tail in intersecting
    )


def density_bounds_instance(bench: Workbench, base: dict, top: dict, extended: bool = False) -> CheckInstance:
    def body():
        limit = bench.settings.wreath_density_limit * (10 if extended else 1)
        require_size(wreath_order(bench, base, top), limit, "wreath_density_limit")
        spec = corpus.wreath(base, top)
        rho, rho_g, rho_h = bench.rho(spec), bench.rho(base), bench.rho(top)
        ekr_h = bench.ekr(top)
        members = lower_bound_set(bench, base, top)
        graph = bench.graph(spec)
        mask = sum(1 << v for v in members)
        independent = all(not graph.rows[v] & mask for v in members)
        wreath = bench.group(spec)
        construction = Fraction(len(members) * wreath.degree, wreath.order)
        details = {
            "rho": rho,
            "rho_G": rho_g,
            "rho_H": rho_h,
            "ekr_H": ekr_h,
            "construction_size": len(members),
            "construction_density": construction,
            "construction_intersecting": independent,
        }
        holds = rho_g <= rho <= rho_g * rho_h and independent and construction == rho_g
        if ekr_h:
            holds = holds and rho == rho_g
        return holds, details, None if holds else members

    return run_instance(
        f"{wreath_label(base, top)}: rho(G) <= rho(G wr H) <= rho(G) rho(H)", wreath_inputs(base, top), body
    )


def wreath_density_check(bench: Workbench) -> List[CheckInstance]:
    instances = [density_bounds_instance(bench, base, top) for base, top in DENSITY_CASES]
    for base, top in EXTENDED_DENSITY_CASES:
        if bench.settings.extended:
            instances.append(density_bounds_instance(bench, base, top, extended=True))
        else:
            label = f"{wreath_label(base, top)}: density bounds"
            instances.append(skip_instance(label, wreath_inputs(base, top), "runs under the extended budget only"))
    return instances


# strict-EKR of wreath products


def _gated(bench: Workbench, label: str, base: dict, top: dict, extended: bool, run) -> CheckInstance:
    if extended and not bench.settings.extended:
        return skip_instance(label, wreath_inputs(base, top), "runs under the extended budget only")
    return run()


def _wreath_strict(bench: Workbench, base: dict, top: dict, extended: bool):
    limit = bench.settings.wreath_density_limit * (10 if extended else 1)
    require_size(wreath_order(bench, base, top), limit, "wreath_density_limit")
    verdict = bench.strict(corpus.wreath(base, top))
    require_decided(verdict)
    return verdict


def _is_primitive(bench: Workbench, spec: dict) -> bool:
    verdict = is_IS_primitive(
        bench.graph(spec),
        bench.settings.is_primitivity_budget,
        bench.alpha(spec).size,
        assume_vertex_transitive=True,
    )
    if verdict.status == PrimitivityStatus.UNKNOWN:
        raise SolverBudgetExceededError(verdict.budget_spent, "IS-primitivity")
    return verdict.status == PrimitivityStatus.PRIMITIVE


S3_WR_S2_MAXIMUM_SETS = 2592


def s3_wr_s2_instance(bench: Workbench) -> CheckInstance:
    base, top = sym(3), sym(2)

    def body():
        verdict = _wreath_strict(bench, base, top, extended=False)
        wreath = bench.group(corpus.wreath(base, top))
        witness = verdict.witness
        details = {"strict": verdict.strict, "alpha": verdict.alpha, "maximum_sets": verdict.enumerated}
        if witness is None:
            return False, details, None
        graph = bench.graph(corpus.wreath(base, top))
        mask = sum(1 << v for v in witness)
        independent = all(not graph.rows[v] & mask for v in witness)
        holds = verdict.strict is False and len(witness) == 12 and independent
        holds = holds and verdict.enumerated == S3_WR_S2_MAXIMUM_SETS
        return holds, details, {"ids": witness, "cycles": wreath.describe(witness)}

    return run_instance("S3 wr S2 is not strict-EKR", wreath_inputs(base, top), body)


def regular_top_strict_instance(bench: Workbench, base: dict, top: dict) -> CheckInstance:
    """With a regular top group: G wr H strict-EKR iff G strict-EKR and Gamma_G IS-primitive."""

    def body():
        verdict = _wreath_strict(bench, base, top, extended=False)
        base_verdict = bench.strict(base)
        require_decided(base_verdict)
        primitive = _is_primitive(bench, base)
        details = {"strict": verdict.strict, "strict_G": base_verdict.strict, "is_primitive_G": primitive}
        return verdict.strict == (base_verdict.strict and primitive), details, verdict.witness

    return run_instance(
        f"{wreath_label(base, top)}: strict-EKR iff G strict and IS-primitive", wreath_inputs(base, top), body
    )


def internal_power_spec(base: dict, n: int) -> dict:
    return corpus.internal(*([base] * n))


def internal_power_instance(bench: Workbench, base: dict, top: dict, extended: bool) -> CheckInstance:
    """G^n internal strict-EKR and H with EKR give G wr H strict-EKR."""
    label = f"{wreath_label(base, top)}: strict-EKR from the internal power"

    def body():
        n = bench.group(top).degree
        power = bench.strict(internal_power_spec(base, n))
        require_decided(power)
        ekr_h = bench.ekr(top)
        details = {"strict_power": power.strict, "ekr_H": ekr_h}
        if not (power.strict and ekr_h):
            return False, details, None
        verdict = _wreath_strict(bench, base, top, extended)
        details["strict"] = verdict.strict
        return verdict.strict is True, details, verdict.witness

    return _gated(bench, label, base, top, extended, lambda: run_instance(label, wreath_inputs(base, top), body))


def _fixes_exactly_one_point(group: GroupAction) -> bool:
    return any(len(fixed_points(element)) == 1 for element in group.elements)


def strict_top_instance(bench: Workbench, base: dict, top: dict, extended: bool) -> CheckInstance:
    """H strict-EKR with an element fixing exactly one point: S2 wr H, and S3 wr H for n >= 3, are strict-EKR."""
    label = f"{wreath_label(base, top)}: strict-EKR from a strict top group"

    def body():
        top_group = bench.group(top)
        top_verdict = bench.strict(top)
        require_decided(top_verdict)
        one_point = _fixes_exactly_one_point(top_group)
        details = {"strict_H": top_verdict.strict, "fixes_one_point": one_point}
        if not (top_verdict.strict and one_point):
            return False, details, None
        verdict = _wreath_strict(bench, base, top, extended)
        details["strict"] = verdict.strict
        return verdict.strict is True, details, verdict.witness

    return _gated(bench, label, base, top, extended, lambda: run_instance(label, wreath_inputs(base, top), body))


# (m, n) -> needs the extended budget; None is beyond either budget
SYMMETRIC_TABLE: Dict[Tuple[int, int], Optional[bool]] = {
    (1, 3): False,
    (2, 1): False,
    (2, 2): False,
    (2, 3): False,
    (3, 2): False,
    (3, 3): True,
    (4, 2): None,
    (4, 3): None,
}


def symmetric_table_instance(bench: Workbench, m: int, n: int, extended: Optional[bool]) -> CheckInstance:
    """S_m wr S_n is strict-EKR exactly when (m, n) != (3, 2)."""
    base, top = sym(m), sym(n)
    label = f"S{m} wr S{n}: strict-EKR is {(m, n) != (3, 2)}"
    if extended is None:
        return skip_instance(label, wreath_inputs(base, top), f"order {wreath_order(bench, base, top)} beyond budget")

    def body():
        verdict = _wreath_strict(bench, base, top, extended)
        return verdict.strict == ((m, n) != (3, 2)), {"strict": verdict.strict, "alpha": verdict.alpha}, verdict.witness

    return _gated(bench, label, base, top, extended, lambda: run_instance(label, wreath_inputs(base, top), body))


def wreath_strict_check(bench: Workbench) -> List[CheckInstance]:
    instances = [s3_wr_s2_instance(bench)]
    for base in (cyc(3), sym(3), cyc(4), {"constructor": "dihedral", "n": 4}):
        instances.append(regular_top_strict_instance(bench, base, sym(2)))
    instances.append(internal_power_instance(bench, cyc(3), sym(2), extended=False))
    instances.append(internal_power_instance(bench, cyc(3), sym(3), extended=False))
    instances.append(internal_power_instance(bench, sym(4), sym(2), extended=True))
    instances.append(strict_top_instance(bench, sym(2), sym(3), extended=False))
    instances.append(strict_top_instance(bench, sym(2), sym(4), extended=True))
    instances.append(strict_top_instance(bench, sym(3), sym(3), extended=True))
    instances += [symmetric_table_instance(bench, m, n, extended) for (m, n), extended in SYMMETRIC_TABLE.items()]
    return instances


# density conjecture exploration, outside the verification suite


@dataclass
class ConjectureReport:
    budget_s: float
    rows: List[Dict[str, Any]] = field(default_factory=list)
    findings: List[Dict[str, Any]] = field(default_factory=list)
    exhausted: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "budget_s": self.budget_s,
            "exhausted": self.exhausted,
            "findings": self.findings,
            "rows": self.rows,
        }


def explore_wreath_density_conjecture(bench: Workbench, budget_s: float, names: Optional[List[str]] = None):
    """Compare rho(G wr H) with rho(G) over transitive corpus pairs, smallest wreath first.

    Pairs above ``wreath_density_limit`` or reached after the time budget are
    recorded as skip rows; a row whose solver hits ``density_node_budget`` is
    ``unknown``. Any inequality is a finding; nothing is asserted.
    """
    names = names or corpus.names()
    report = ConjectureReport(budget_s)
    candidates = []
    for left in names:
        for right in names:
            base, top = bench.group(left), bench.group(right)
            if base.transitive and top.transitive:
                candidates.append((base.order**top.degree * top.order, left, right))
    started = time.monotonic()
    for order, left, right in sorted(candidates):
        row: Dict[str, Any] = {"G": left, "H": right, "order": order}
        if order > bench.settings.wreath_density_limit:
            row.update(status="skip", reason="order above wreath_density_limit")
        elif time.monotonic() - started > budget_s:
            report.exhausted = True
            row.update(status="skip", reason="time budget exhausted")
        else:
            spec = corpus.wreath(corpus.spec(left), corpus.spec(right))
            try:
                rho, rho_g = bench.rho(spec, bench.settings.density_node_budget), bench.rho(left)
                row.update(rho=str(rho), rho_G=str(rho_g), rho_H=str(bench.rho(right)), ekr_H=bench.ekr(right))
            except WorkbenchError as error:
                logger.warning(f"conjecture row {left} wr {right} undecided: {error}")
                row.update(status="unknown", reason=str(error))
            else:
                row["status"] = "equal" if rho == rho_g else "finding"
                if rho != rho_g:
                    logger.warning(f"density conjecture finding: rho({left} wr {right}) = {rho} != {rho_g}")
                    report.findings.append(dict(row))
        report.rows.append(row)
    logger.info(f"conjecture exploration: {len(report.rows)} rows, {len(report.findings)} findings")
    return report
