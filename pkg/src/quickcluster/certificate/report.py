from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..instance import format_scalar

__all__ = ["CertificateReport", "fmt_triple"]


def fmt_triple(values) -> str:
    return "(" + ",".join(format_scalar(Fraction(v)) for v in values) + ")"


@dataclass
class CertificateReport:
    """Outcome of one verification sweep.

    ``passed`` holds iff ``worst_value <= 0`` and there are no mismatches.
    ``rows`` is the optional tabular dump, one dict per checked extremal point.
    """

    suite: str
    checked_points: int
    worst_value: Fraction
    worst_witness: str
    mismatches: list[tuple[Any, Any, str]] = field(default_factory=list)
    summary: str = ""
    notes: list[str] = field(default_factory=list)
    rows: list[dict[str, str]] = field(default_factory=list)
    parameters: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.worst_value <= 0 and not self.mismatches

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_text(self) -> str:
        lines = [self.summary] if self.summary else []
        lines.append(f"suite = {self.suite}")
        for key, value in self.parameters.items():
            lines.append(f"{key} = {value}")
        lines += [
            f"verdict = {self.verdict}",
            f"checked_points = {self.checked_points}",
            f"worst_value = {format_scalar(self.worst_value)}",
            f"worst_witness = {self.worst_witness}",
            f"mismatches = {len(self.mismatches)}",
        ]
        for expected, computed, where in self.mismatches[:20]:
            lines.append(f"mismatch = {where}: expected {_show(expected)}, computed {_show(computed)}")
        if len(self.mismatches) > 20:
            lines.append(f"mismatch = ... {len(self.mismatches) - 20} more")
        for note in self.notes:
            lines.append(f"note = {note}")
        if not self.passed:
            lines.append(f"witness {self.worst_witness}")
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        if not self.rows:
            return ""
        cols = list(self.rows[0])
        out = ["\t".join(cols)]
        out += ["\t".join(row.get(c, "") for c in cols) for row in self.rows]
        return "\n".join(out) + "\n"


def _show(value) -> str:
    if isinstance(value, Fraction):
        return format_scalar(value)
    return str(value)
