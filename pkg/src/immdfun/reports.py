"""Structured verification reports and their serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    Serialized field order is fixed: suite, m, partition, selector_rows,
    selector_cols, seed, residual, pass, details.
    """

    suite: str
    m: int | None = None
    partition: tuple[int, ...] | None = None
    selector_rows: tuple[int, ...] | None = None
    selector_cols: tuple[int, ...] | None = None
    seed: int | None = None
    residual: float | None = None
    passed: bool = False
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "partition": list(self.partition) if self.partition is not None else None,
            "selector_rows": list(self.selector_rows)
            if self.selector_rows is not None
            else None,
            "selector_cols": list(self.selector_cols)
            if self.selector_cols is not None
            else None,
            "seed": self.seed,
            "residual": self.residual,
            "pass": bool(self.passed),
            "details": self.details,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), allow_nan=False)

    def to_pretty(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        bits = [f"[{mark}] {self.suite}"]
        if self.m is not None:
            bits.append(f"m={self.m}")
        if self.partition is not None:
            bits.append("partition={" + ",".join(str(x) for x in self.partition) + "}")
        if self.selector_rows is not None:
            bits.append(f"rows={','.join(str(x) for x in self.selector_rows)}")
        if self.selector_cols is not None:
            bits.append(f"cols={','.join(str(x) for x in self.selector_cols)}")
        if self.seed is not None:
            bits.append(f"seed={self.seed}")
        if self.residual is not None:
            bits.append(f"residual={self.residual:.3e}")
        return "  ".join(bits)


CSV_FIELDS = [
    "suite",
    "m",
    "partition",
    "selector_rows",
    "selector_cols",
    "seed",
    "residual",
    "pass",
    "details",
]


def to_csv_row(report: VerificationReport) -> list[str]:
    d = report.to_dict()
    row = []
    for key in CSV_FIELDS:
        val = d[key]
        if val is None:
            row.append("")
        elif isinstance(val, (list, dict)):
            row.append(json.dumps(val, separators=(",", ":")))
        else:
            row.append(str(val))
    return row
