"""Exception hierarchy shared by the workbench.

Every error also derives from the builtin a caller would naturally catch
(ValueError for bad input, RuntimeError for exhausted limits).
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class InvalidPermutationError(WorkbenchError, ValueError):
    pass


class DegreeMismatchError(WorkbenchError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PointOutOfRangeError(WorkbenchError, ValueError):
    def __init__(self, point: int, degree: int):
        super().__init__(f"Point {point} is outside the domain 0..{degree - 1}")
        self.point = point
        self.degree = degree


class ClosureCapExceededError(WorkbenchError, RuntimeError):
    """Raised when a group closure grows beyond the configured element cap."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(f"Closure aborted: more than {cap} elements (reached {partial_count})")
        self.cap = cap
        self.partial_count = partial_count


class NonFaithfulActionError(WorkbenchError, ValueError):
    pass


class IntransitiveActionError(WorkbenchError, ValueError):
    pass


class GroupSpecError(WorkbenchError, ValueError):
    pass


class GraphSizeError(WorkbenchError, RuntimeError):
    def __init__(self, requested: int, cap: int):
        super().__init__(f"Graph on {requested} vertices exceeds the vertex cap {cap}")
        self.requested = requested
        self.cap = cap


class LoopyGraphError(WorkbenchError, ValueError):
    pass


class MalformedBijectionError(WorkbenchError, ValueError):
    pass


class SolverBudgetExceededError(WorkbenchError, RuntimeError):
    def __init__(self, nodes: int, what: Optional[str] = None):
        label = f" while computing {what}" if what else ""
        super().__init__(f"Solver budget of {nodes} search nodes exhausted{label}")
        self.nodes = nodes


class UnsupportedShapeError(WorkbenchError, ValueError):
    pass


class EnumerationCapExceededError(WorkbenchError, RuntimeError):
    def __init__(self, cap: int, what: Optional[str] = None):
        label = f" of {what}" if what else ""
        super().__init__(f"Enumeration{label} truncated at the cap of {cap} sets")
        self.cap = cap
