"""Report rows shared by every verification suite.

A row records one checked instance: the catalog id, the concrete
parameters, a boolean verdict, and the exact values that were compared.
Values stay in their native exact types (UPoly, QRat, MPoly, MRat,
Fraction, int) until a writer serializes them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactalg import to_json_value


@dataclass(frozen=True)
class CheckRow:
    """One verified instance of a catalog identity."""

    id: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    expected: Any = None
    computed: Any = None
    witness: Any = None

    def as_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "params": to_json_value(self.params),
            "pass": self.passed,
            "expected": to_json_value(self.expected),
            "computed": to_json_value(self.computed),
            "witness": to_json_value(self.witness),
        }


@dataclass(frozen=True)
class SeriesRow:
    """One generating-function comparison through a truncation order."""

    id: str
    order: int
    passed: bool
    first_failing_order: int | None = None
    lhs_coeff: Any = None
    rhs_coeff: Any = None

    def as_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "order": self.order,
            "pass": self.passed,
            "first_failing_order": self.first_failing_order,
            "lhs_coeff": to_json_value(self.lhs_coeff),
            "rhs_coeff": to_json_value(self.rhs_coeff),
        }
