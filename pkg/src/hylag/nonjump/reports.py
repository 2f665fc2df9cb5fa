from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from ..hypergraph import InvalidInput


class ClaimRefused(InvalidInput):
    """The claim is not asserted at the requested parameters."""


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item"):  # numpy scalar
        return v.item()
    return v


@dataclass
class ClaimReport:
    claim: str
    passed: bool
    achieved_max: float | None = None
    target: Fraction | None = None
    slack: float | None = None
    samples: int = 0
    kind: str = "upper-bound"  # or "sign", "identity", "empirical"
    tolerance: float | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if self.target is not None:
            d["target_float"] = float(self.target)
        return _jsonable(d)


@dataclass
class VerificationReport:
    claims: list[ClaimReport]
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "config": _jsonable(self.config),
            "claims": [c.to_dict() for c in sorted(self.claims, key=lambda c: c.claim)],
        }

    def table(self) -> str:
        rows = [("claim", "kind", "achieved", "target", "slack", "samples", "result")]
        for c in sorted(self.claims, key=lambda c: c.claim):
            rows.append(
                (
                    c.claim,
                    c.kind,
                    "" if c.achieved_max is None else f"{c.achieved_max:.12g}",
                    "" if c.target is None else f"{float(c.target):.12g}",
                    "" if c.slack is None else f"{c.slack:.3g}",
                    str(c.samples),
                    "PASS" if c.passed else "FAIL",
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
