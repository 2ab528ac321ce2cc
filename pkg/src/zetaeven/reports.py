"""Pass/fail reports for identity checks.

A report captures one verification: what was compared, at which
parameters, the residual, and the tolerance it was judged against.
``passed`` is never supplied by the caller -- it is computed at
construction from |residual| <= tolerance, so the field can never
contradict the numbers it summarizes.

A report whose check failed for a structural reason (for example a
residual sequence that was supposed to decrease but did not) carries
tolerance -1; no magnitude satisfies |residual| <= -1, so such reports
are failed by construction while keeping the invariant intact.

Reports serialize to single JSON lines via ``to_line``/``from_line`` so
they can be logged, diffed, and re-read without loss.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Mapping

from .numeric_core import HighPrecisionReal

__all__ = ["VerificationReport", "render_value"]


def render_value(value: Any) -> Any:
    """Canonical rendering of payload values for reports and records.

    Fractions render as 'p/q' (or a bare integer string), decimals and
    high-precision reals as decimal strings; ints, bools and strings
    pass through.
    """
    if isinstance(value, HighPrecisionReal):
        return str(value.rounded())
    if isinstance(value, Decimal):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, int, str)):
        return value
    raise TypeError(f"cannot render {type(value).__name__} in a report")


@dataclass(frozen=True)
class VerificationReport:
    """One identity check: parameters in, residual/tolerance/passed out."""

    identity_name: str
    parameters: Mapping[str, Any]
    lhs: str
    rhs: str
    residual: HighPrecisionReal
    tolerance: HighPrecisionReal
    passed: bool = field(init=False)

    def __post_init__(self):
        rendered = {str(k): render_value(v) for k, v in dict(self.parameters).items()}
        object.__setattr__(self, "parameters", rendered)
        object.__setattr__(self, "lhs", render_value(self.lhs))
        object.__setattr__(self, "rhs", render_value(self.rhs))
        object.__setattr__(self, "passed", abs(self.residual) <= self.tolerance)

    def to_line(self) -> str:
        """One-line JSON form, stable key order, lossless for residuals."""
        record = {
            "identity": self.identity_name,
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": str(self.residual.value),
            "residual_digits": self.residual.precision_digits,
            "tolerance": str(self.tolerance.value),
            "tolerance_digits": self.tolerance.precision_digits,
            "passed": self.passed,
        }
        return json.dumps(record, sort_keys=True, separators=(", ", ": "))

    @classmethod
    def from_line(cls, line: str) -> "VerificationReport":
        record = json.loads(line)
        report = cls(
            identity_name=record["identity"],
            parameters=record["parameters"],
            lhs=record["lhs"],
            rhs=record["rhs"],
            residual=HighPrecisionReal(
                Decimal(record["residual"]), record["residual_digits"]
            ),
            tolerance=HighPrecisionReal(
                Decimal(record["tolerance"]), record["tolerance_digits"]
            ),
        )
        if report.passed != record["passed"]:
            raise ValueError("serialized passed flag contradicts residual/tolerance")
        return report
