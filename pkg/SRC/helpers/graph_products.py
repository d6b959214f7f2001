"""Derangement graphs and the three graph products.

Product vertices are indexed row-major: (x, y) -> x * |V(Y)| + y.
"""

from typing import Optional

from SRC.base.graph import DEFAULT_VERTEX_CAP, Graph, check_vertex_cap, iter_bits, require_loop_free
from SRC.base.group_action import GroupAction
from SRC.base.permutation import compose_images
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


def derangement_graph(group: GroupAction, vertex_cap: Optional[int] = None) -> Graph:
    """Cayley graph Cay(G, D): vertex i is element ID i, g ~ h iff g h^-1 is a derangement."""
    check_vertex_cap(group.order, vertex_cap or DEFAULT_VERTEX_CAP)
    derangements = [group.images[i] for i in group.derangement_ids]
    rows = []
    for h in group.images:
        row = 0
        for d in derangements:
            row |= 1 << group.index[compose_images(d, h)]
        rows.append(row)
    logger.debug(f"derangement graph of {group.name}: {group.order} vertices, degree {len(derangements)}")
    return Graph.trusted(group.order, rows)


def _shifted(mask: int, block: int, width: int) -> int:
    return mask << (block * width)


def strong_product(x: Graph, y: Graph, vertex_cap: Optional[int] = None) -> Graph:
    require_loop_free(x, "strong_product")
    require_loop_free(y, "strong_product")
    check_vertex_cap(x.n * y.n, vertex_cap or DEFAULT_VERTEX_CAP)
    width = y.n
    rows = []
    for u in range(x.n):
        x_closed = x.rows[u] | (1 << u)
        for v in range(width):
            y_closed = y.rows[v] | (1 << v)
            row = 0
            for w in iter_bits(x_closed):
                row |= _shifted(y_closed, w, width)
            rows.append(row & ~(1 << (u * width + v)))
    return Graph.trusted(x.n * width, rows)


def direct_product(x: Graph, y: Graph, vertex_cap: Optional[int] = None) -> Graph:
    """Tensor product; a loop at x counts as x ~ x, so loops survive only where both factors have one."""
    check_vertex_cap(x.n * y.n, vertex_cap or DEFAULT_VERTEX_CAP)
    width = y.n
    rows = []
    for u in range(x.n):
        for v in range(width):
            row = 0
            for w in iter_bits(x.rows[u]):
                row |= _shifted(y.rows[v], w, width)
            rows.append(row)
    return Graph.trusted(x.n * width, rows, loops_allowed=x.loops_allowed or y.loops_allowed)


def lexicographic(x: Graph, y: Graph, vertex_cap: Optional[int] = None) -> Graph:
    """X[Y]: (x1, y1) ~ (x2, y2) iff x1 ~ x2, or x1 = x2 and y1 ~ y2."""
    require_loop_free(x, "lexicographic")
    require_loop_free(y, "lexicographic")
    check_vertex_cap(x.n * y.n, vertex_cap or DEFAULT_VERTEX_CAP)
    width = y.n
    full = y.full_mask()
    rows = []
    for u in range(x.n):
        outer = 0
        for w in iter_bits(x.rows[u]):
            outer |= _shifted(full, w, width)
        for v in range(width):
            rows.append(outer | _shifted(y.rows[v], u, width))
    return Graph.trusted(x.n * width, rows)


def direct_power(x: Graph, n: int, vertex_cap: Optional[int] = None) -> Graph:
    """X x X x ... x X (n factors), first coordinate most significant."""
    if n < 1:
        raise ValueError(f"direct_power needs n >= 1, got {n}")
    check_vertex_cap(x.n**n, vertex_cap or DEFAULT_VERTEX_CAP)
    result = x
    for _ in range(n - 1):
        result = direct_product(result, x, vertex_cap)
    return result
