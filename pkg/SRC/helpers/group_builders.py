"""Constructors for every group action the workbench studies.

Point encodings are fixed so that the canonical bijections used by the graph
checks are reproducible:

* external product: (v, w) -> v * |W| + w
* internal product: factor k's point x -> offset_k + x
* wreath product:   (a, i) -> i * |V| + a
"""

from itertools import combinations, product
from math import factorial
from typing import Dict, List, Sequence, Tuple

from SRC.base.errors import ClosureCapExceededError, NonFaithfulActionError, UnsupportedShapeError
from SRC.base.group_action import DEFAULT_CLOSURE_CAP, GroupAction, closure
from SRC.base.permutation import Permutation
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


def _cycle(degree: int, points: Sequence[int]) -> Permutation:
    images = list(range(degree))
    for position, point in enumerate(points):
        images[point] = points[(position + 1) % len(points)]
    return Permutation(tuple(images))


def _check_size(order: int, cap: int) -> None:
    if order > cap:
        raise ClosureCapExceededError(cap, order)


def trivial_group(n: int = 1, name: str = "") -> GroupAction:
    identity = Permutation.identity(n)
    return GroupAction(n, [identity], [identity.images], name=name or f"1_{n}")


def symmetric_natural(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    if n < 1:
        raise UnsupportedShapeError(f"Symmetric group needs n >= 1, got {n}")
    _check_size(factorial(n), cap)
    if n == 1:
        return GroupAction(1, [Permutation.identity(1)], [(0,)], name="S1")
    generators = [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
    return closure(generators, cap, name=f"S{n}")


def alternating_natural(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    if n < 1:
        raise UnsupportedShapeError(f"Alternating group needs n >= 1, got {n}")
    if n < 3:
        return trivial_group(n, name=f"A{n}")
    _check_size(factorial(n) // 2, cap)
    generators = [_cycle(n, [0, 1, i]) for i in range(2, n)]
    return closure(generators, cap, name=f"A{n}")


def cyclic_regular(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    if n < 1:
        raise UnsupportedShapeError(f"Cyclic group needs n >= 1, got {n}")
    if n == 1:
        return trivial_group(1, name="C1")
    return closure([_cycle(n, list(range(n)))], cap, name=f"C{n}")


def dihedral_natural(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    """Symmetries of the n-gon: order 2n for n >= 3."""
    if n < 3:
        raise UnsupportedShapeError(f"Dihedral action needs n >= 3, got {n}")
    rotation = _cycle(n, list(range(n)))
    reflection = Permutation(tuple((-x) % n for x in range(n)))
    return closure([rotation, reflection], cap, name=f"D{n}")


def left_regular(group: GroupAction) -> GroupAction:
    """Action of the abstract group on itself by left multiplication, points = element IDs."""
    generators = [Permutation(_left_translation(group, g.images)) for g in group.generators]
    elements = [_left_translation(group, images) for images in group.images]
    return GroupAction(group.order, generators, elements, name=f"Reg({group.name})")


def _left_translation(group: GroupAction, images: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(group.index[tuple(images[x] for x in other)] for other in group.images)


def action_on_k_subsets(group: GroupAction, k: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    """Induced action on sorted k-subsets (lexicographic point order); must stay faithful."""
    if not 1 <= k <= group.degree:
        raise UnsupportedShapeError(f"k must lie in 1..{group.degree}, got {k}")
    subsets = list(combinations(range(group.degree), k))
    position: Dict[Tuple[int, ...], int] = {subset: i for i, subset in enumerate(subsets)}

    def induced(images: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(position[tuple(sorted(images[x] for x in subset))] for subset in subsets)

    generators = [Permutation(induced(g.images)) for g in group.generators]
    induced_elements = {induced(images) for images in group.images}
    if len(induced_elements) != group.order:
        raise NonFaithfulActionError(
            f"{group.name} acts unfaithfully on {k}-subsets ({len(induced_elements)} < {group.order})"
        )
    _check_size(len(induced_elements), cap)
    labels = [tuple(x + 1 for x in subset) for subset in subsets]
    return GroupAction(len(subsets), generators, induced_elements, name=f"{group.name}_on_{k}sets", point_labels=labels)


def external_pair_images(g: Tuple[int, ...], h: Tuple[int, ...]) -> Tuple[int, ...]:
    width = len(h)
    return tuple(g[v] * width + h[w] for v in range(len(g)) for w in range(width))


def external_direct_product(
    left: GroupAction, right: GroupAction, cap: int = DEFAULT_CLOSURE_CAP
) -> GroupAction:
    """G x H acting coordinatewise on V x W."""
    if right.degree == 1:
        return left
    if left.degree == 1:
        return right
    _check_size(left.order * right.order, cap)
    left_identity = tuple(range(left.degree))
    right_identity = tuple(range(right.degree))
    generators = [Permutation(external_pair_images(g.images, right_identity)) for g in left.generators]
    generators += [Permutation(external_pair_images(left_identity, h.images)) for h in right.generators]
    elements = [external_pair_images(g, h) for g in left.images for h in right.images]
    labels = [(v + 1, w + 1) for v in range(left.degree) for w in range(right.degree)]
    group = GroupAction(
        left.degree * right.degree, generators, elements, name=f"{left.name}x{right.name}", point_labels=labels
    )
    logger.debug(f"external product {group.name}: order {group.order}")
    return group


def external_product_ids(product_group: GroupAction, left: GroupAction, right: GroupAction) -> List[int]:
    """Element ID in G x H of the pair (g, h), indexed row-major by g_id * |H| + h_id."""
    if right.degree == 1 or left.degree == 1:
        return list(range(product_group.order))
    return [product_group.index[external_pair_images(g, h)] for g in left.images for h in right.images]


def internal_direct_product(factors: Sequence[GroupAction], cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    """G_1 x ... x G_n acting on the disjoint union of the factor domains."""
    if not factors:
        raise UnsupportedShapeError("internal_direct_product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    order = 1
    for factor in factors:
        order *= factor.order
    _check_size(order, cap)
    offsets = _offsets(factors)
    degree = offsets[-1] + factors[-1].degree
    generators = []
    for k, factor in enumerate(factors):
        for g in factor.generators:
            parts = [g.images if j == k else tuple(range(f.degree)) for j, f in enumerate(factors)]
            generators.append(Permutation(_concatenate(parts, offsets)))
    elements = [_concatenate(parts, offsets) for parts in product(*(f.images for f in factors))]
    labels = [(k + 1, x + 1) for k, factor in enumerate(factors) for x in range(factor.degree)]
    name = "(" + "+".join(f.name for f in factors) + ")"
    return GroupAction(degree, generators, elements, name=name, point_labels=labels)


def internal_product_ids(product_group: GroupAction, factors: Sequence[GroupAction]) -> List[int]:
    """Element ID of the tuple (g_1, ..., g_n), tuples ordered row-major (first factor slowest)."""
    if len(factors) == 1:
        return list(range(product_group.order))
    offsets = _offsets(factors)
    return [product_group.index[_concatenate(parts, offsets)] for parts in product(*(f.images for f in factors))]


def _offsets(factors: Sequence[GroupAction]) -> List[int]:
    offsets = [0]
    for factor in factors[:-1]:
        offsets.append(offsets[-1] + factor.degree)
    return offsets


def _concatenate(parts: Sequence[Tuple[int, ...]], offsets: Sequence[int]) -> Tuple[int, ...]:
    return tuple(offset + x for part, offset in zip(parts, offsets) for x in part)


def wreath_images(inner: Sequence[Tuple[int, ...]], outer: Tuple[int, ...], base_degree: int) -> Tuple[int, ...]:
    """Flattened permutation of ((g_1..g_n), h): (a, i) -> (g_i(a), h(i))."""
    return tuple(outer[i] * base_degree + inner[i][a] for i in range(len(outer)) for a in range(base_degree))


def wreath_product(base: GroupAction, top: GroupAction, cap: int = DEFAULT_CLOSURE_CAP) -> GroupAction:
    """G wr H on V x N, order |G|^n * |H|."""
    n = top.degree
    if n == 1 and top.order == 1:
        return base
    _check_size(base.order**n * top.order, cap)
    base_identity = tuple(range(base.degree))
    top_identity = tuple(range(n))
    generators = []
    for g in base.generators:
        inner = [g.images] + [base_identity] * (n - 1)
        generators.append(Permutation(wreath_images(inner, top_identity, base.degree)))
    for h in top.generators:
        generators.append(Permutation(wreath_images([base_identity] * n, h.images, base.degree)))
    elements = [
        wreath_images(inner, outer, base.degree) for inner in product(base.images, repeat=n) for outer in top.images
    ]
    labels = [(a + 1, i + 1) for i in range(n) for a in range(base.degree)]
    group = GroupAction(
        base.degree * n, generators, elements, name=f"{base.name}wr{top.name}", point_labels=labels
    )
    logger.debug(f"wreath product {group.name}: order {group.order}")
    return group


def wreath_coordinates(wreath: GroupAction, base: GroupAction, top: GroupAction) -> List[List[int]]:
    """``coords[h_id][t]`` is the wreath element ID of ((g_1..g_n), h).

    ``t`` indexes the inner tuple row-major over base element IDs, first
    coordinate slowest, matching the vertex order of ``direct_power``.
    """
    n = top.degree
    if n == 1 and top.order == 1:
        return [list(range(base.order))]
    return [
        [wreath.index[wreath_images(inner, outer, base.degree)] for inner in product(base.images, repeat=n)]
        for outer in top.images
    ]
