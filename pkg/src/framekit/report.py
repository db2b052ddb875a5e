"""Named defect checks collected into a pass/fail report."""
from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    defect: float
    threshold: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.defect) and self.defect <= self.threshold


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name, defect, threshold):
        self.checks.append(Check(name, float(defect), float(threshold)))
        return self

    def extend(self, other: "VerificationReport", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.defect, c.threshold))
        for k, v in other.info.items():
            self.info[prefix + k] = v
        return self

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name) -> float:
        for c in self.checks:
            if c.name == name:
                return c.defect
        raise KeyError(name)

    def defects(self) -> dict:
        """Flat name -> defect map."""
        return {c.name: c.defect for c in self.checks}

    def max_defect(self) -> float:
        return max((c.defect for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        """JSON-ready form; non-finite numbers become the strings "inf"/"nan"."""
        return {
            "overall": self.overall,
            "checks": [{"name": c.name, "defect": _finite(c.defect),
                        "threshold": _finite(c.threshold), "pass": c.passed}
                       for c in self.checks],
            "info": {k: _finite(v) for k, v in self.info.items()},
        }


def _finite(value):
    if isinstance(value, (bool, str, int)) or value is None:
        return value
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value
