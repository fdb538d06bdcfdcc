"""Shared verification-report type."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one numerical verification run.

    passed is true exactly when no counterexample was found; worst_residual is
    check-specific (an inequality margin, a maximum relative residual, ...)
    and is documented by the producing operation.  details carries auxiliary
    values for human inspection and is not part of the serialized schema.
    """

    name: str
    passed: bool
    checks: int
    worst_residual: float
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must hold exactly when counterexample is absent")

    def to_schema(self) -> dict:
        """Fixed-field-order mapping matching the CLI JSON report schema."""
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "worst_residual": self.worst_residual,
            "counterexample": self.counterexample,
        }
