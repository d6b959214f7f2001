"""Tuple form ((g_1, ..., g_n), h) of wreath product elements.

The flattened permutation acts on points i * |V| + a, matching
``group_builders.wreath_product``.
"""

from dataclasses import dataclass
from typing import Tuple

from SRC.base.errors import DegreeMismatchError, UnsupportedShapeError
from SRC.base.permutation import Permutation, compose, inverse, is_derangement


@dataclass(frozen=True)
class WreathElement:
    inner: Tuple[Permutation, ...]
    outer: Permutation

    def __post_init__(self):
        if len(self.inner) != self.outer.degree:
            raise UnsupportedShapeError(
                f"{len(self.inner)} inner permutations for an outer permutation of degree {self.outer.degree}"
            )
        if self.inner:
            base = self.inner[0].degree
            for g in self.inner:
                if g.degree != base:
                    raise DegreeMismatchError(g.degree, base)

    @classmethod
    def identity(cls, base_degree: int, n: int) -> "WreathElement":
        return cls(tuple(Permutation.identity(base_degree) for _ in range(n)), Permutation.identity(n))

    @property
    def base_degree(self) -> int:
        return self.inner[0].degree

    @property
    def n(self) -> int:
        return self.outer.degree

    def flatten(self) -> Permutation:
        width = self.base_degree
        return Permutation(
            tuple(self.outer(i) * width + self.inner[i](a) for i in range(self.n) for a in range(width))
        )

    @classmethod
    def from_flat(cls, permutation: Permutation, base_degree: int) -> "WreathElement":
        """Recover the tuple form; raises if ``permutation`` does not preserve the blocks."""
        if base_degree < 1 or permutation.degree % base_degree:
            raise UnsupportedShapeError(f"Degree {permutation.degree} is not a multiple of {base_degree}")
        n = permutation.degree // base_degree
        outer = []
        inner = []
        for i in range(n):
            block = permutation(i * base_degree) // base_degree
            images = []
            for a in range(base_degree):
                point = permutation(i * base_degree + a)
                if point // base_degree != block:
                    raise UnsupportedShapeError(f"Block {i} is not mapped onto a single block")
                images.append(point % base_degree)
            outer.append(block)
            inner.append(Permutation(tuple(images)))
        return cls(tuple(inner), Permutation(tuple(outer)))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return wreath_multiply(self, other)


def _check_shapes(a: WreathElement, b: WreathElement) -> None:
    if a.n != b.n:
        raise DegreeMismatchError(a.n, b.n)
    if a.base_degree != b.base_degree:
        raise DegreeMismatchError(a.base_degree, b.base_degree)


def wreath_multiply(a: WreathElement, b: WreathElement) -> WreathElement:
    """(g, h) . (g', h') = ((g_{h'(1)} g'_1, ..., g_{h'(n)} g'_n), h h')."""
    _check_shapes(a, b)
    inner = tuple(compose(a.inner[b.outer(i)], b.inner[i]) for i in range(a.n))
    return WreathElement(inner, compose(a.outer, b.outer))


def wreath_invert(a: WreathElement) -> WreathElement:
    """(g, h)^-1 = ((g_{h^-1(1)}^-1, ..., g_{h^-1(n)}^-1), h^-1)."""
    outer_inverse = inverse(a.outer)
    inner = tuple(inverse(a.inner[outer_inverse(j)]) for j in range(a.n))
    return WreathElement(inner, outer_inverse)


def tuple_adjacent(a: WreathElement, b: WreathElement) -> bool:
    """Adjacency in the wreath derangement graph, decided coordinatewise.

    Adjacent iff g_i ~ g'_i in the base derangement graph for every i with
    h(i) = h'(i). Distinct elements only; an element is never adjacent to itself.
    """
    _check_shapes(a, b)
    if a == b:
        return False
    return all(
        is_derangement(compose(a.inner[i], inverse(b.inner[i])))
        for i in range(a.n)
        if a.outer(i) == b.outer(i)
    )


def flat_adjacent(a: Permutation, b: Permutation) -> bool:
    """Adjacency in any derangement graph: a b^-1 is fixed-point free."""
    return is_derangement(compose(a, inverse(b)))
