"""Worked density examples and structural facts about derangement graphs."""

from typing import List, Optional, Tuple

from SRC.base.graph import equal_under_bijection
from SRC.base.permutation import Permutation, compose_images, invert_images
from SRC.checks.base_check import CheckInstance, Workbench, require_size, run_instance
from SRC.helpers.graph_recognizers import is_bipartite
from TestDataCommon import corpus

A4_NON_COSET_WITNESS = ("()", "(1 3 2)", "(1 4 2)")
TRANSLATION_SAMPLE = 200


def a4_example(bench: Workbench) -> CheckInstance:
    def body():
        group = bench.group("A4")
        verdict = bench.strict("A4")
        witness = tuple(sorted(group.id_of(Permutation.from_cycles(text, 4)) for text in A4_NON_COSET_WITNESS))
        details = {
            "rho": bench.rho("A4"),
            "ekr": bench.ekr("A4"),
            "strict_ekr": verdict.strict,
            "non_coset_sets": len(verdict.non_coset_sets),
        }
        holds = details["rho"] == 1 and details["ekr"] and verdict.strict is False
        holds = holds and witness in verdict.non_coset_sets
        return holds, details, {"ids": witness, "cycles": group.describe(witness)}

    return run_instance("A4: density 1, EKR, not strict-EKR", {"group": corpus.spec("A4")}, body)


def a5_pairs_example(bench: Workbench) -> CheckInstance:
    def body():
        group = bench.group("A5_pairs")
        alpha = bench.alpha("A5_pairs")
        details = {"alpha": alpha.size, "stabilizer": group.max_stabilizer_order, "rho": bench.rho("A5_pairs")}
        holds = alpha.size == 12 and group.max_stabilizer_order == 6 and details["rho"] == 2
        return holds, details, {"ids": alpha.witness, "cycles": group.describe(alpha.witness)}

    return run_instance("A5 on 2-subsets: density 2", {"group": corpus.spec("A5_pairs")}, body)


def strict_example(bench: Workbench, name: str) -> CheckInstance:
    def body():
        require_size(bench.group(name).order, bench.settings.density_order_limit, "density_order_limit")
        verdict = bench.strict(name)
        details = {"strict_ekr": verdict.strict, "enumerated": verdict.enumerated, "rho": bench.rho(name)}
        return verdict.strict is True, details, verdict.witness

    return run_instance(f"{name}: strict-EKR", {"group": corpus.spec(name)}, body)


def worked_examples_check(bench: Workbench) -> List[CheckInstance]:
    instances = [a4_example(bench), a5_pairs_example(bench)]
    instances += [strict_example(bench, name) for name in ("S2", "S3", "S4", "S5", "C5")]
    return instances


def find_triangle(bench: Workbench, name: str) -> Optional[Tuple[int, int, int]]:
    """A triangle through the identity; Gamma_G is vertex-transitive, so one exists iff any does."""
    graph = bench.graph(name)
    u = bench.group(name).identity_id
    for v in graph.neighbors(u):
        common = graph.rows[u] & graph.rows[v]
        if common:
            return u, v, (common & -common).bit_length() - 1
    return None


def triangle_instance(bench: Workbench, name: str) -> CheckInstance:
    def body():
        triangle = find_triangle(bench, name)
        bipartite = is_bipartite(bench.graph(name))
        details = {"triangle": triangle, "bipartite": bipartite.bipartite, "odd_cycle": bipartite.odd_cycle}
        return triangle is not None and not bipartite.bipartite, details, triangle

    return run_instance(f"Gamma({name}) has a triangle and an odd cycle", {"group": corpus.spec(name)}, body)


def cayley_instance(bench: Workbench, name: str) -> CheckInstance:
    """Derangements are inverse-closed and exclude the identity; right translations are automorphisms."""

    def body():
        group = bench.group(name)
        require_size(group.order, bench.settings.density_order_limit, "density_order_limit")
        graph = bench.graph(name)
        derangements = set(group.derangement_ids)
        inverse_closed = all(group.index[invert_images(group.images[i])] in derangements for i in derangements)
        if group.identity_id in derangements or not inverse_closed:
            return False, {"inverse_closed": inverse_closed}, sorted(derangements)
        translations = list(range(group.order))
        if group.order > TRANSLATION_SAMPLE:
            rng = bench.rng(f"cayley:{name}")
            translations = sorted(int(a) for a in rng.choice(group.order, size=TRANSLATION_SAMPLE, replace=False))
        for a in translations:
            shift = group.images[a]
            mapping = [group.index[compose_images(g, shift)] for g in group.images]
            verdict = equal_under_bijection(graph, graph, mapping)
            if not verdict:
                return False, {"translation": a}, verdict.mismatch
        return True, {"translations": len(translations), "valency": len(derangements)}, None

    return run_instance(f"Gamma({name}) is a vertex-transitive Cayley graph", {"group": corpus.spec(name)}, body)


def graph_structure_check(bench: Workbench) -> List[CheckInstance]:
    instances = []
    for name in corpus.names():
        instances.append(cayley_instance(bench, name))
        if name in corpus.triangle_names:
            instances.append(triangle_instance(bench, name))
    return instances
