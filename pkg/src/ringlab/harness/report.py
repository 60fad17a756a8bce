"""Rendering check results as a machine document or a human table."""

from __future__ import annotations

import json
from typing import Sequence

from .checks import CheckResult

SCHEMA_VERSION = 1
FORMATS = ("json", "table")


def record(result: CheckResult, *, timing: bool = True) -> dict:
    """One report record; field order is fixed."""
    out = {
        "id": result.id,
        "location": result.location,
        "statement": result.statement,
        "status": result.status,
        "bounded": result.bounded,
        "applicable": result.applicable,
        "instances": [i.to_dict() for i in result.instances],
    }
    if timing:
        out["wall_time"] = round(result.wall_time, 4)
    return out


def report(results: Sequence[CheckResult], *, timing: bool = True) -> dict:
    counts = {"PASS": 0, "FAIL": 0, "VACUOUS": 0}
    for r in results:
        counts[r.status] += 1
    return {
        "schema_version": SCHEMA_VERSION,
        "summary": counts,
        "checks": [record(r, timing=timing) for r in results],
    }


def canonical_json(results: Sequence[CheckResult]) -> str:
    """Deterministic form: no timings, sorted keys, fixed separators."""
    return json.dumps(report(results, timing=False), sort_keys=True, separators=(",", ":"))


def table(results: Sequence[CheckResult]) -> str:
    rows = [("ID", "STATUS", "N", "TIME", "LOCATION")]
    for r in results:
        rows.append((r.id, r.status, str(r.applicable), f"{r.wall_time:.2f}s", r.location + (" [bounded]" if r.bounded else "")))
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    for r in results:
        for inst in r.failures:
            lines.append(f"  FAIL {r.id}: {', '.join(inst.labels)}" + (f" ({inst.note})" if inst.note else ""))
    if results:
        counts = report(results, timing=False)["summary"]
        lines.append(f"{counts['PASS']} passed, {counts['FAIL']} failed, {counts['VACUOUS']} vacuous")
    return "\n".join(lines)


def render(results: Sequence[CheckResult], fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(report(results), indent=2)
    if fmt == "table":
        return table(results)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


__all__ = ["FORMATS", "SCHEMA_VERSION", "canonical_json", "record", "render", "report", "table"]
