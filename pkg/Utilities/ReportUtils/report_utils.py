import html
import json
from datetime import datetime
from typing import Any, Dict, List, Sequence

import allure

from SRC.checks.base_check import CheckResult
from Utilities.GenericUtils.file_op_utils import write_csv, write_json, write_text

CSV_COLUMNS = [
    "check_id",
    "statement_ref",
    "check_status",
    "label",
    "outcome",
    "reason",
    "inputs",
    "details",
    "witness",
]


# ---------- JSON ----------
def report_document(results: Sequence[CheckResult], summary: Dict[str, int], include_runtime: bool = True) -> dict:
    """Report JSON: the summary plus one entry per check in suite order."""
    return {"summary": summary, "checks": [result.to_dict(include_runtime) for result in results]}


def save_json(results: Sequence[CheckResult], summary: Dict[str, int], out: str = "verification_report.json"):
    write_json(out, report_document(results, summary))


# ---------- CSV ----------
def instance_rows(results: Sequence[CheckResult]) -> List[Dict[str, Any]]:
    rows = []
    for result in results:
        for instance in result.instances:
            data = instance.to_dict()
            rows.append(
                {
                    "check_id": result.check_id,
                    "statement_ref": result.statement_ref,
                    "check_status": result.status.value,
                    "label": data["label"],
                    "outcome": data["outcome"],
                    "reason": data["reason"] or "",
                    "inputs": json.dumps(data["inputs"], sort_keys=True),
                    "details": json.dumps(data["details"], sort_keys=True),
                    "witness": json.dumps(data["witness"], sort_keys=True),
                }
            )
    return rows


def save_csv(results: Sequence[CheckResult], out: str = "verification_report.csv"):
    write_csv(out, instance_rows(results), CSV_COLUMNS)


# ---------- HTML ----------
def generate_html(results: Sequence[CheckResult], out: str = "verification_report.html"):
    parts = [f"<h1>Verification Report {datetime.now()}</h1><table border=1>"]
    headings = ["Check", "Status", "Instance", "Outcome", "Reason", "Duration"]
    parts.append("<tr>" + "".join(f"<th>{heading}</th>" for heading in headings) + "</tr>")
    for result in results:
        for instance in result.instances:
            parts.append(
                f"<tr><td>{html.escape(result.check_id)}</td><td>{result.status.value}</td>"
                f"<td>{html.escape(instance.label)}</td><td>{instance.status.value}</td>"
                f"<td>{html.escape(instance.reason or '')}</td><td>{result.runtime_ms}ms</td></tr>"
            )
    parts.append("</table>")
    write_text(out, "\n".join(parts))


# ---------- Allure ----------
def attach_text(name, content):
    allure.attach(content, name=name, attachment_type=allure.attachment_type.TEXT)


def attach_check(result: CheckResult):
    allure.attach(
        json.dumps(result.to_dict(), indent=2, sort_keys=True),
        name=result.check_id,
        attachment_type=allure.attachment_type.JSON,
    )
