"""Finite permutation groups, fully enumerated.

Elements are kept sorted by image array; an element's index in that list is its
stable ID and doubles as its vertex number in the derangement graph.
"""

import copy
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from SRC.base.errors import ClosureCapExceededError, DegreeMismatchError, PointOutOfRangeError
from SRC.base.permutation import Permutation, check_same_degree, compose_images, images_are_derangement
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

DEFAULT_CLOSURE_CAP = 250_000


@dataclass(frozen=True)
class Orbit:
    representative: int
    members: Tuple[int, ...]


class GroupAction:
    """A permutation group acting on {0..degree-1}, immutable after construction."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Iterable[Tuple[int, ...]],
        name: str = "",
        point_labels: Optional[Sequence[object]] = None,
    ):
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.images: Tuple[Tuple[int, ...], ...] = tuple(sorted(set(elements)))
        self.index: Dict[Tuple[int, ...], int] = {images: i for i, images in enumerate(self.images)}
        self.name = name or f"<{len(self.images)} on {degree}>"
        self.point_labels = tuple(point_labels) if point_labels is not None else None
        for images in self.images[:1]:
            if len(images) != degree:
                raise DegreeMismatchError(len(images), degree)

    def renamed(self, name: str) -> "GroupAction":
        """The same action under another name; ``self`` is left untouched."""
        twin = copy.copy(self)
        twin.name = name
        return twin

    def __repr__(self) -> str:
        return f"GroupAction({self.name}, degree={self.degree}, order={self.order})"

    def __len__(self) -> int:
        return len(self.images)

    @property
    def order(self) -> int:
        return len(self.images)

    @cached_property
    def elements(self) -> Tuple[Permutation, ...]:
        return tuple(Permutation(images) for images in self.images)

    def element(self, element_id: int) -> Permutation:
        return self.elements[element_id]

    def id_of(self, permutation) -> int:
        images = permutation.images if isinstance(permutation, Permutation) else tuple(permutation)
        return self.index[images]

    @cached_property
    def identity_id(self) -> int:
        return self.index[tuple(range(self.degree))]

    def same_elements(self, other: "GroupAction") -> bool:
        return self.degree == other.degree and self.images == other.images

    @cached_property
    def orbits(self) -> Tuple[Orbit, ...]:
        return tuple(orbits(self))

    @cached_property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    @cached_property
    def regular(self) -> bool:
        return self.transitive and self.order == self.degree

    @cached_property
    def derangement_ids(self) -> Tuple[int, ...]:
        return tuple(i for i, images in enumerate(self.images) if images_are_derangement(images))

    @cached_property
    def max_stabilizer_order(self) -> int:
        return max((len(point_stabilizer(self, v)) for v in range(self.degree)), default=self.order)

    def describe(self, element_ids: Iterable[int]) -> List[str]:
        return [self.elements[i].to_cycles() for i in element_ids]


def _check_point(group: GroupAction, point: int) -> None:
    if not 0 <= point < group.degree:
        raise PointOutOfRangeError(point, group.degree)


def closure(
    generators: Sequence[Permutation],
    cap: int = DEFAULT_CLOSURE_CAP,
    name: str = "",
    point_labels: Optional[Sequence[object]] = None,
) -> GroupAction:
    """Breadth-first closure of ``generators`` under left multiplication.

    For a finite group the orbit of the identity under the generators is closed
    under inverses too, so no separate inverse step is needed.
    """
    if not generators:
        raise ValueError("closure needs at least one generator")
    degree = check_same_degree(generators)
    generator_images = [g.images for g in generators]
    identity = tuple(range(degree))
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generator_images:
            product = compose_images(g, current)
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    raise ClosureCapExceededError(cap, len(seen))
                queue.append(product)
    group = GroupAction(degree, generators, seen, name=name, point_labels=point_labels)
    logger.debug(f"closure built {group.name}: order {group.order}, degree {degree}")
    return group


def orbits(group: GroupAction) -> List[Orbit]:
    """Orbits ordered by representative (their smallest point)."""
    assigned = [False] * group.degree
    result = []
    generator_images = [g.images for g in group.generators] or list(group.images)
    for start in range(group.degree):
        if assigned[start]:
            continue
        members = {start}
        frontier = [start]
        assigned[start] = True
        while frontier:
            point = frontier.pop()
            for g in generator_images:
                image = g[point]
                if not assigned[image]:
                    assigned[image] = True
                    members.add(image)
                    frontier.append(image)
        result.append(Orbit(start, tuple(sorted(members))))
    return result


def point_stabilizer(group: GroupAction, v: int) -> List[int]:
    _check_point(group, v)
    return [i for i, images in enumerate(group.images) if images[v] == v]


def coset_of_point_map(group: GroupAction, v: int, w: int) -> List[int]:
    """IDs of all g with g(v) = w."""
    _check_point(group, v)
    _check_point(group, w)
    return [i for i, images in enumerate(group.images) if images[v] == w]


def is_coset_of_point_stabilizer(group: GroupAction, element_ids: Iterable[int]) -> Optional[Tuple[int, int]]:
    """Lexicographically least (v, w) with S = {g : g(v) = w}, or None."""
    members: FrozenSet[int] = frozenset(element_ids)
    if not members:
        raise ValueError("is_coset_of_point_stabilizer needs a nonempty set")
    anchor = group.images[min(members)]
    for v in range(group.degree):
        w = anchor[v]
        if all(group.images[i][v] == w for i in members):
            if len(members) == sum(1 for images in group.images if images[v] == w):
                return v, w
    return None


def derangement_set(group: GroupAction) -> List[int]:
    return list(group.derangement_ids)
