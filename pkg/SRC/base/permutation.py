"""Permutations of the dense domain {0..degree-1}.

Composition is applied right to left everywhere in the workbench:
``compose(p, q)(x) == p(q(x))``. Cycle notation in text I/O is 1-based.
"""

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from SRC.base.errors import DegreeMismatchError, InvalidPermutationError

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on {0..degree-1} stored as its image array."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidPermutationError(f"{list(self.images)} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1 3 2)(4 5)"``; ``"()"`` is the identity."""
        images = list(range(degree))
        stripped = text.replace(" ", "").replace(",", "")
        if _CYCLE_PATTERN.sub("", stripped):
            raise InvalidPermutationError(f"Malformed cycle notation: {text!r}")
        seen: set = set()
        for body in _CYCLE_PATTERN.findall(text):
            points = [int(token) - 1 for token in re.split(r"[\s,]+", body.strip()) if token]
            for point in points:
                if not 0 <= point < degree:
                    raise InvalidPermutationError(f"Point {point + 1} outside 1..{degree} in {text!r}")
                if point in seen:
                    raise InvalidPermutationError(f"Cycles in {text!r} are not disjoint")
                seen.add(point)
            for position, point in enumerate(points):
                images[point] = points[(position + 1) % len(points)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, ordered by that point."""
        visited = [False] * self.degree
        result = []
        for start in range(self.degree):
            if visited[start] or self.images[start] == start:
                visited[start] = True
                continue
            cycle = []
            point = start
            while not visited[point]:
                visited[point] = True
                cycle.append(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    def to_cycles(self) -> str:
        """1-based cycle notation; the identity prints as ``"()"``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)

    def __str__(self) -> str:
        return self.to_cycles()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. apply q first."""
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    return Permutation(compose_images(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return Permutation(invert_images(p.images))


def fixed_points(p: Permutation) -> FrozenSet[int]:
    return frozenset(point for point, image in enumerate(p.images) if image == point)


def is_derangement(p: Permutation) -> bool:
    return all(image != point for point, image in enumerate(p.images))


# Raw image-tuple helpers used by the hot loops of closure and graph construction.


def compose_images(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    return tuple(p[x] for x in q)


def invert_images(p: Sequence[int]) -> Tuple[int, ...]:
    result = [0] * len(p)
    for point, image in enumerate(p):
        result[image] = point
    return tuple(result)


def images_are_derangement(p: Sequence[int]) -> bool:
    return all(image != point for point, image in enumerate(p))


def check_same_degree(permutations: Iterable[Permutation]) -> int:
    degrees = {p.degree for p in permutations}
    if len(degrees) > 1:
        ordered = sorted(degrees)
        raise DegreeMismatchError(ordered[0], ordered[-1])
    return degrees.pop() if degrees else 0
