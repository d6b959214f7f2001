"""Verdict records shared by every check, and the per-run workbench context.

A check runs a list of instances. Each instance is described by the GroupSpec
documents it was built from, so its outcome can be reproduced from the report.
An instance whose construction or solver runs past a configured limit is a
``skip`` carrying the reason; it never turns into a silent pass.
"""

import json
import threading
import zlib
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from SRC.base.errors import EnumerationCapExceededError, IntransitiveActionError, UnsupportedShapeError, WorkbenchError
from SRC.base.graph import Graph, complement
from SRC.base.group_action import GroupAction
from SRC.helpers.clique_solver import CliqueResult, independence_number
from SRC.helpers.ekr_helper import StrictEKRVerdict, has_strict_EKR
from SRC.helpers.graph_products import derangement_graph
from SRC.helpers.group_spec import build_group, spec_label
from TestDataCommon import corpus
from Utilities.GenericUtils.config_utils import WorkbenchSettings, get_settings
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(item) for item in items]
    return value


@dataclass
class CheckInstance:
    label: str
    inputs: Dict[str, Any]
    status: CheckStatus
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    reason: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "inputs": _jsonable(self.inputs),
            "outcome": self.status.value,
            "details": _jsonable(self.details),
            "witness": _jsonable(self.witness),
            "reason": self.reason,
        }


@dataclass
class CheckResult:
    check_id: str
    statement_ref: str
    status: CheckStatus
    instances: List[CheckInstance] = field(default_factory=list)
    runtime_ms: int = 0

    @classmethod
    def from_instances(cls, check_id: str, statement_ref: str, instances: List[CheckInstance]) -> "CheckResult":
        statuses = {instance.status for instance in instances}
        if CheckStatus.FAIL in statuses:
            status = CheckStatus.FAIL
        elif CheckStatus.PASS in statuses:
            status = CheckStatus.PASS
        else:
            status = CheckStatus.SKIP
        return cls(check_id, statement_ref, status, list(instances))

    @property
    def failures(self) -> List[CheckInstance]:
        return [instance for instance in self.instances if instance.status == CheckStatus.FAIL]

    def to_dict(self, include_runtime: bool = True) -> Dict[str, Any]:
        data = {
            "check_id": self.check_id,
            "statement_ref": self.statement_ref,
            "status": self.status.value,
            "instances": [instance.to_dict() for instance in self.instances],
        }
        if include_runtime:
            data["runtime_ms"] = self.runtime_ms
        return data


InstanceBody = Callable[[], Tuple[bool, Dict[str, Any], Any]]


def run_instance(label: str, inputs: Dict[str, Any], body: InstanceBody) -> CheckInstance:
    """Run one instance; ``body`` returns (holds, details, witness).

    The witness is kept for failures (the counterexample) and for passes that
    certify something (e.g. a multipartite certificate).
    """
    try:
        holds, details, witness = body()
    except WorkbenchError as error:
        logger.warning(f"{label}: skipped ({error})")
        return CheckInstance(label, inputs, CheckStatus.SKIP, reason=str(error))
    status = CheckStatus.PASS if holds else CheckStatus.FAIL
    logger.verification(label, holds)
    return CheckInstance(label, inputs, status, details, witness)


def skip_instance(label: str, inputs: Dict[str, Any], reason: str) -> CheckInstance:
    logger.info(f"{label}: skipped ({reason})")
    return CheckInstance(label, inputs, CheckStatus.SKIP, reason=reason)


def require_size(size: int, limit: int, setting: str) -> None:
    """Raise the skip reason when an instance is larger than its configured limit."""
    if size > limit:
        raise UnsupportedShapeError(f"size {size} above {setting}={limit}")


def require_decided(*verdicts: StrictEKRVerdict) -> None:
    """Turn a truncated strict-EKR enumeration into a skip."""
    for verdict in verdicts:
        if verdict.strict is None:
            raise EnumerationCapExceededError(verdict.enumerated, "strict-EKR")


def resolve_spec(spec_or_name) -> dict:
    return corpus.spec(spec_or_name) if isinstance(spec_or_name, str) else spec_or_name


class Workbench:
    """Caches groups, derangement graphs and solver results for one verification run.

    Safe to share between check threads: values are computed outside the lock
    and are deterministic, so a rare duplicate computation is harmless.
    """

    def __init__(self, settings: Optional[WorkbenchSettings] = None):
        self.settings = settings or get_settings()
        self._lock = threading.Lock()
        self._cache: Dict[Tuple[str, str], Any] = {}

    def _memo(self, kind: str, spec: dict, compute: Callable[[], Any]) -> Any:
        key = (kind, json.dumps(spec, sort_keys=True))
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def group(self, spec_or_name) -> GroupAction:
        spec = resolve_spec(spec_or_name)
        return self._memo("group", spec, lambda: build_group(spec, self.settings.element_cap))

    def graph(self, spec_or_name) -> Graph:
        spec = resolve_spec(spec_or_name)
        return self._memo("graph", spec, lambda: derangement_graph(self.group(spec), self.settings.vertex_cap))

    def co_graph(self, spec_or_name) -> Graph:
        spec = resolve_spec(spec_or_name)
        return self._memo("co_graph", spec, lambda: complement(self.graph(spec)))

    def alpha(self, spec_or_name, node_budget: Optional[int] = None) -> CliqueResult:
        """Least maximum independent set; a tighter ``node_budget`` raises instead of searching on."""
        spec = resolve_spec(spec_or_name)
        budget = node_budget if node_budget is not None else self.settings.solver_node_budget
        return self._memo("alpha", spec, lambda: independence_number(self.graph(spec), budget))

    def rho(self, spec_or_name, node_budget: Optional[int] = None) -> Fraction:
        group = self.group(spec_or_name)
        if not group.transitive:
            raise IntransitiveActionError(f"{group.name} is intransitive; its density is undefined")
        return Fraction(self.alpha(spec_or_name, node_budget).size * group.degree, group.order)

    def ekr(self, spec_or_name) -> bool:
        return self.alpha(spec_or_name).size == self.group(spec_or_name).max_stabilizer_order

    def strict(self, spec_or_name) -> StrictEKRVerdict:
        spec = resolve_spec(spec_or_name)
        return self._memo(
            "strict",
            spec,
            lambda: has_strict_EKR(
                self.group(spec),
                self.graph(spec),
                self.settings.mis_cap,
                self.settings.solver_node_budget,
                least=self.alpha(spec),
            ),
        )

    def rng(self, stream: str) -> np.random.Generator:
        """Random stream private to ``stream``, so results do not depend on thread scheduling."""
        return np.random.default_rng([self.settings.seed, zlib.crc32(stream.encode("utf-8"))])

    @staticmethod
    def label(spec_or_name) -> str:
        return spec_or_name if isinstance(spec_or_name, str) else spec_label(spec_or_name)
