"""The verification suite: check IDs, the statements they cover, and the runner.

Checks run in parallel on one shared Workbench. The report lists checks in
registry order whatever the thread count, and every random draw comes from a
per-instance stream, so two runs differ only in their runtime fields.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from SRC.base.errors import UnsupportedShapeError
from SRC.checks.base_check import CheckInstance, CheckResult, CheckStatus, Workbench
from SRC.checks.definitions_checks import graph_structure_check, worked_examples_check
from SRC.checks.direct_product_checks import (
    direct_complement_check,
    direct_density_check,
    multipartite_witness_check,
    regular_copies_check,
    regular_multipartite_check,
)
from SRC.checks.internal_product_checks import internal_graph_check, internal_power_check, is_primitivity_check
from SRC.checks.toolbox_checks import toolbox_check
from SRC.checks.wreath_checks import (
    wreath_adjacency_check,
    wreath_blocks_check,
    wreath_density_check,
    wreath_formulas_check,
    wreath_regular_top_check,
    wreath_strict_check,
)
from Utilities.GenericUtils.config_utils import WorkbenchSettings, get_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

STATEMENTS: Dict[str, str] = {
    "density-of-worked-examples": "A4 has density 1 and EKR without strict-EKR; A5 on 2-subsets has density 2",
    "cayley-graph-facts": "Gamma_G is a Cayley graph on the derangements, hence vertex-transitive",
    "triangle-and-odd-cycle": "a transitive derangement graph of degree >= 3 has a triangle and is not bipartite",
    "clique-coclique-bound": "alpha(X) omega(X) <= |V(X)| for vertex-transitive X",
    "strong-product-cliques": "every maximum clique C of X strong Y is p_X(C) x p_Y(C)",
    "tensor-independence-number": "alpha(X x Y) = max(alpha(X)|Y|, alpha(Y)|X|) for vertex-transitive X, Y",
    "direct-power-independence-number": "alpha(X^n) = alpha(X) |V(X)|^(n-1) for vertex-transitive X",
    "lexicographic-independence-number": "alpha(X[Y]) = alpha(X) alpha(Y)",
    "density-monotone-in-subgroups": "rho(G) <= rho(H) for a transitive subgroup H of G",
    "direct-product-complement-is-strong-product": (
        "the complement of Gamma_{G x H} is the strong product of complements"
    ),
    "regular-factor-complement-copies": "for regular H the complement of Gamma_{G x H} is |H| copies of it for G",
    "regular-factor-multipartite-parts": "for regular H and k-partite Gamma_G, Gamma_{G x H} is k|H|-partite",
    "half-degree-multipartite-witness": "every even n that is not a power of 2 has a transitive group "
    "of degree n with complete n/2-partite derangement graph",
    "direct-product-density-multiplicative": "rho(G x H) = rho(G) rho(H)",
    "direct-product-strict-ekr": "G x H has strict-EKR iff G and H do",
    "internal-product-tensor-graph": "Gamma of an internal direct product is the tensor product of factor graphs",
    "internal-product-ekr": "an internal direct product of EKR groups has EKR",
    "regular-groups-is-primitive": "the derangement graph of a regular group is complete, hence IS-primitive",
    "disconnected-not-is-primitive": "S3 and A4 have IS-imprimitive derangement graphs, as has any "
    "disconnected vertex-transitive graph",
    "mis-normal-square": "for non-bipartite vertex-transitive X, X x X is MIS-normal iff X is IS-primitive",
    "internal-power-strict-ekr": "the internal square of G has strict-EKR iff G has and Gamma_G is IS-primitive",
    "internal-square-of-s3": "S3 + S3 lacks strict-EKR though S3 has it",
    "wreath-multiplication": "((g), h)((g'), h') = ((g_{h'(i)} g'_i), h h')",
    "wreath-inversion": "((g), h)^-1 = ((g_{h^-1(i)}^-1), h^-1)",
    "wreath-adjacency-tuple-form": "two wreath elements are adjacent iff g_i ~ g'_i wherever h(i) = h'(i)",
    "wreath-layer-graph": "the layer of a fixed top element is Gamma_G^n",
    "wreath-between-layers": "between layers h, h' the graph is X_1 x ... x X_n x K2",
    "wreath-regular-top-lexicographic": "for regular H, Gamma_{G wr H} is K_|H|[Gamma_G^n]",
    "wreath-density-bounds": "rho(G) <= rho(G wr H) <= rho(G) rho(H)",
    "wreath-density-ekr-top": "rho(G wr H) = rho(G) when H has EKR",
    "wreath-regular-top-strict-ekr": "for regular H, G wr H has strict-EKR iff G has and Gamma_G is IS-primitive",
    "s3-wr-s2-not-strict": "S3 wr S2 lacks strict-EKR",
    "wreath-strict-from-internal-power": "strict-EKR of the internal power G^n and EKR of H give strict-EKR of G wr H",
    "s2-wr-strict-top": "S2 wr H has strict-EKR when H has and fixes exactly one point with some element",
    "s3-wr-strict-top": "S3 wr H has strict-EKR under the same hypothesis on H of degree >= 3",
    "symmetric-wreath-table": "S_m wr S_n has strict-EKR iff (m, n) != (3, 2)",
}


@dataclass(frozen=True)
class SuiteCheck:
    check_id: str
    statements: Sequence[str]
    run: Callable[[Workbench], List[CheckInstance]]

    @property
    def statement_ref(self) -> str:
        return ", ".join(self.statements)


CHECKS: List[SuiteCheck] = [
    SuiteCheck("worked-examples", ["density-of-worked-examples"], worked_examples_check),
    SuiteCheck("derangement-graph-structure", ["cayley-graph-facts", "triangle-and-odd-cycle"], graph_structure_check),
    SuiteCheck(
        "graph-toolbox",
        [
            "clique-coclique-bound",
            "strong-product-cliques",
            "tensor-independence-number",
            "direct-power-independence-number",
            "lexicographic-independence-number",
            "density-monotone-in-subgroups",
        ],
        toolbox_check,
    ),
    SuiteCheck("direct-product-complement", ["direct-product-complement-is-strong-product"], direct_complement_check),
    SuiteCheck("regular-factor-copies", ["regular-factor-complement-copies"], regular_copies_check),
    SuiteCheck("regular-factor-multipartite", ["regular-factor-multipartite-parts"], regular_multipartite_check),
    SuiteCheck("multipartite-witness", ["half-degree-multipartite-witness"], multipartite_witness_check),
    SuiteCheck(
        "direct-product-density",
        ["direct-product-density-multiplicative", "direct-product-strict-ekr"],
        direct_density_check,
    ),
    SuiteCheck(
        "internal-product-graph",
        ["internal-product-tensor-graph", "internal-product-ekr"],
        internal_graph_check,
    ),
    SuiteCheck(
        "is-primitivity",
        ["regular-groups-is-primitive", "disconnected-not-is-primitive", "mis-normal-square"],
        is_primitivity_check,
    ),
    SuiteCheck(
        "internal-power-strict-ekr",
        ["internal-power-strict-ekr", "internal-square-of-s3"],
        internal_power_check,
    ),
    SuiteCheck("wreath-formulas", ["wreath-multiplication", "wreath-inversion"], wreath_formulas_check),
    SuiteCheck("wreath-adjacency", ["wreath-adjacency-tuple-form"], wreath_adjacency_check),
    SuiteCheck("wreath-blocks", ["wreath-layer-graph", "wreath-between-layers"], wreath_blocks_check),
    SuiteCheck("wreath-regular-top", ["wreath-regular-top-lexicographic"], wreath_regular_top_check),
    SuiteCheck("wreath-density-bounds", ["wreath-density-bounds", "wreath-density-ekr-top"], wreath_density_check),
    SuiteCheck(
        "wreath-strict-ekr-cases",
        [
            "wreath-regular-top-strict-ekr",
            "s3-wr-s2-not-strict",
            "wreath-strict-from-internal-power",
            "s2-wr-strict-top",
            "s3-wr-strict-top",
            "symmetric-wreath-table",
        ],
        wreath_strict_check,
    ),
]

CHECKS_BY_ID: Dict[str, SuiteCheck] = {check.check_id: check for check in CHECKS}


def check_ids() -> List[str]:
    return [check.check_id for check in CHECKS]


def select_checks(selection: Optional[str]) -> List[SuiteCheck]:
    """``None`` or ``"all"`` selects the whole suite; otherwise a comma-separated list of IDs."""
    if selection is None or selection.strip() == "all":
        return list(CHECKS)
    wanted = [token.strip() for token in selection.split(",") if token.strip()]
    unknown = [check_id for check_id in wanted if check_id not in CHECKS_BY_ID]
    if unknown:
        raise UnsupportedShapeError(f"Unknown check IDs {unknown}; expected some of {check_ids()}")
    return [check for check in CHECKS if check.check_id in wanted]


def run_check(check: SuiteCheck, bench: Workbench) -> CheckResult:
    logger.check_start(check.check_id)
    started = time.perf_counter()
    result = CheckResult.from_instances(check.check_id, check.statement_ref, check.run(bench))
    result.runtime_ms = int((time.perf_counter() - started) * 1000)
    logger.check_end(check.check_id, result.status.value, result.runtime_ms)
    return result


def run_suite(
    selection: Optional[str] = None,
    settings: Optional[WorkbenchSettings] = None,
    threads: Optional[int] = None,
) -> List[CheckResult]:
    settings = settings or get_settings()
    threads = max(1, threads or settings.threads)
    checks = select_checks(selection)
    bench = Workbench(settings)
    logger.step(f"running {len(checks)} checks on {threads} thread(s), extended={settings.extended}")
    if threads == 1:
        return [run_check(check, bench) for check in checks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda check: run_check(check, bench), checks))


def summarize(results: Sequence[CheckResult]) -> Dict[str, int]:
    summary = {status.value: 0 for status in CheckStatus}
    for result in results:
        summary[result.status.value] += 1
    summary["total"] = len(results)
    return summary


def suite_failed(results: Sequence[CheckResult]) -> bool:
    return any(result.status == CheckStatus.FAIL for result in results)
