"""Pass/fail bookkeeping for numerical checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        # NaN residuals fail
        return bool(self.residual <= self.tol)

    def to_dict(self) -> dict:
        residual = self.residual if math.isfinite(self.residual) else str(self.residual)
        return {"name": self.name, "residual": residual, "tol": self.tol, "passed": self.passed}


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def worst(self) -> Check | None:
        """The check with the largest residual/tolerance ratio."""
        if not self.checks:
            return None
        return max(self.checks, key=lambda c: c.residual / c.tol if c.tol > 0 else math.inf)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self, verbose: bool = False) -> str:
        lines = []
        for c in self.checks if verbose else self.failures:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark}  {c.name}: residual {c.residual:.3e} (tol {c.tol:.1e})")
        status = "all checks passed" if self.passed else f"{len(self.failures)} check(s) failed"
        lines.append(f"{len(self.checks)} checks, {status}")
        return "\n".join(lines)
