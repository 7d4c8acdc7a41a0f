"""Deterministic machine-readable reports.

Every integer is serialized as a decimal string so consumers never lose
exactness; the only non-integer quantity (the asymptotic ratio) is
emitted as both an exact fraction and a decimal rendering.  Identical
inputs produce byte-identical reports, so nothing time- or
machine-dependent belongs here.
"""

from __future__ import annotations

import json
from fractions import Fraction


def stringify(value):
    """Recursively convert exact numbers to strings for JSON output."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return {
            "fraction": f"{value.numerator}/{value.denominator}",
            "decimal": repr(float(value)),
        }
    if isinstance(value, dict):
        return {k: stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [stringify(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def check(name: str, expected, actual) -> dict:
    return {"name": name, "pass": expected == actual, "expected": expected, "actual": actual}


def build_report(command: str, parameters: dict, results: dict, checks: list[dict] | None = None) -> dict:
    report = {
        "command": command,
        "parameters": stringify(parameters),
        "results": stringify(results),
    }
    if checks is not None:
        report["checks"] = stringify(checks)
        report["checks_passed"] = all(c["pass"] for c in checks)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _pretty_lines(prefix: str, value) -> list[str]:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            lines.extend(_pretty_lines(f"{prefix}{k}.", v) if isinstance(v, dict) else _pretty_lines(f"{prefix}{k}", v))
        return lines
    if isinstance(value, list):
        return [f"{prefix} = {json.dumps(value)}"]
    return [f"{prefix} = {value}"]


def render_pretty(report: dict) -> str:
    """Human-readable view of the same data as the JSON report."""
    lines = [f"command: {report['command']}"]
    for key in ("parameters", "results"):
        if report.get(key):
            lines.append(f"{key}:")
            for line in _pretty_lines("  ", report[key]):
                lines.append(line)
    for chk in report.get("checks", []):
        status = "PASS" if chk["pass"] else "FAIL"
        lines.append(
            f"[{status}] {chk['name']} (expected={json.dumps(chk['expected'])}, "
            f"actual={json.dumps(chk['actual'])})"
        )
    if "checks" in report:
        lines.append(f"checks passed: {report['checks_passed']}")
    return "\n".join(lines) + "\n"
