"""Exhaustive search over two-generated transitive subgroups of S_n.

Candidate pairs (a, b) with a <= b run over the non-identity elements of S_n in
canonical order. Pairs whose generators do not act transitively are rejected
from their point orbits before any closure is built, and closures growing past
``max_order`` are abandoned. Results are deduplicated by element set and sorted
by (order, element list), so conjugate copies survive as separate results.
"""

import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from SRC.base.errors import ClosureCapExceededError, UnsupportedShapeError
from SRC.base.group_action import GroupAction, closure
from SRC.base.permutation import Permutation
from SRC.helpers.graph_products import derangement_graph
from SRC.helpers.graph_recognizers import is_complete_multipartite
from SRC.helpers.group_builders import symmetric_natural
from Utilities.GenericUtils.config_utils import get_settings
from Utilities.GenericUtils.file_op_utils import read_json, write_json
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

_CACHE_LOCK = threading.Lock()

MAX_SEARCH_DEGREE = 8

GroupPredicate = Callable[[GroupAction], bool]


@dataclass
class SearchResult:
    groups: List[GroupAction] = field(default_factory=list)
    partial: bool = False
    pairs_examined: int = 0
    order_capped: int = 0


def _joins_all_points(n: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for images in (a, b):
        for x in range(n):
            rx, ry = find(x), find(images[x])
            if rx != ry:
                parent[ry] = rx
                components -= 1
    return components == 1


def _cyclic_images(a: Tuple[int, ...]) -> frozenset:
    identity = tuple(range(len(a)))
    powers = {identity}
    current = a
    while current != identity:
        powers.add(current)
        current = tuple(a[x] for x in current)
    return frozenset(powers)


def search_transitive_2generated(
    n: int,
    predicate: GroupPredicate,
    budget: Optional[int] = None,
    max_order: Optional[int] = None,
) -> SearchResult:
    """Transitive groups <a, b> <= S_n satisfying ``predicate``.

    ``budget`` caps the number of candidate pairs examined; running out flags
    the result as partial. ``max_order`` skips groups larger than the bound.
    """
    if not 1 <= n <= MAX_SEARCH_DEGREE:
        raise UnsupportedShapeError(f"Subgroup search supports degrees 1..{MAX_SEARCH_DEGREE}, got {n}")
    settings = get_settings()
    budget = budget if budget is not None else settings.search_budget
    max_order = max_order if max_order is not None else settings.search_max_order
    cap = max_order if max_order is not None else settings.element_cap

    if n == 1:
        trivial = symmetric_natural(1)
        return SearchResult([trivial] if predicate(trivial) else [], False, 1, 0)

    candidates = [images for images in symmetric_natural(n).images if images != tuple(range(n))]
    verdicts: Dict[Tuple[Tuple[int, ...], ...], bool] = {}
    found: Dict[Tuple[Tuple[int, ...], ...], GroupAction] = {}
    result = SearchResult()

    for i, a in enumerate(candidates):
        powers = _cyclic_images(a)
        for b in candidates[i:]:
            if result.pairs_examined >= budget:
                result.partial = True
                logger.budget_exhausted("subgroup search", result.pairs_examined)
                return _finish(result, found)
            result.pairs_examined += 1
            if b != a and b in powers:
                continue
            if not _joins_all_points(n, a, b):
                continue
            generators = [Permutation(a)] if a == b else [Permutation(a), Permutation(b)]
            try:
                group = closure(generators, cap)
            except ClosureCapExceededError:
                result.order_capped += 1
                continue
            if group.images in verdicts:
                continue
            verdicts[group.images] = predicate(group)
            if verdicts[group.images]:
                found[group.images] = group
                logger.debug(f"search hit: order {group.order} generated by {[g.to_cycles() for g in generators]}")
    return _finish(result, found)


def _finish(result: SearchResult, found: Dict[Tuple[Tuple[int, ...], ...], GroupAction]) -> SearchResult:
    ordered = [found[key] for key in sorted(found, key=lambda images: (len(images), images))]
    result.groups = [
        group.renamed(f"T{group.degree}.{number}(order {group.order})")
        for number, group in enumerate(ordered, start=1)
    ]
    logger.info(
        f"subgroup search: {len(result.groups)} groups, {result.pairs_examined} pairs, "
        f"{result.order_capped} over the order bound, partial={result.partial}"
    )
    return result


def multipartite_predicate(parts: int) -> GroupPredicate:
    """Gamma_G is complete multipartite with exactly ``parts`` parts."""

    def predicate(group: GroupAction) -> bool:
        certificate = is_complete_multipartite(derangement_graph(group))
        return certificate is not None and certificate.part_count == parts

    return predicate


def regular_predicate(group: GroupAction) -> bool:
    return group.regular


def always(group: GroupAction) -> bool:
    return True


def _cache_key(degree: int, parts: int, max_order: Optional[int]) -> str:
    return f"multipartite-degree{degree}-parts{parts}-maxorder{max_order}"


def _read_cache(cache_path: str) -> Dict[str, dict]:
    try:
        return read_json(cache_path) or {}
    except (OSError, ValueError):
        return {}


def search_multipartite(
    degree: int,
    parts: int,
    budget: Optional[int] = None,
    max_order: Optional[int] = None,
    cache_path: Optional[str] = None,
    use_cache: bool = True,
) -> SearchResult:
    """Search for transitive groups whose derangement graph is complete ``parts``-partite.

    Hits are cached by search parameters as generator cycle strings; a cached
    entry is rebuilt and re-verified instead of searching again.
    """
    settings = get_settings()
    max_order = max_order if max_order is not None else settings.search_max_order
    cache_path = cache_path or settings.search_cache_path
    key = _cache_key(degree, parts, max_order)
    predicate = multipartite_predicate(parts)

    cache: Dict[str, dict] = {}
    if use_cache:
        with _CACHE_LOCK:
            cache = _read_cache(cache_path)
    entry = cache.get(key)
    if entry and entry.get("groups"):
        groups = [
            closure([Permutation.from_cycles(text, degree) for text in generators], settings.element_cap)
            for generators in entry["groups"]
        ]
        if all(group.transitive and predicate(group) for group in groups):
            logger.info(f"reusing {len(groups)} cached search results for {key}")
            result = SearchResult(groups, entry.get("partial", False), entry.get("pairs_examined", 0))
            return _finish(result, {group.images: group for group in groups})
        logger.warning(f"cached search results for {key} failed re-verification, searching again")

    result = search_transitive_2generated(degree, predicate, budget, max_order)
    if use_cache and result.groups:
        entry = {
            "degree": degree,
            "parts": parts,
            "max_order": max_order,
            "partial": result.partial,
            "pairs_examined": result.pairs_examined,
            "groups": [[g.to_cycles() for g in group.generators] for group in result.groups],
        }
        # re-read under the lock so entries written by other searches survive
        with _CACHE_LOCK:
            cache = _read_cache(cache_path)
            cache[key] = entry
            write_json(cache_path, cache)
    return result
