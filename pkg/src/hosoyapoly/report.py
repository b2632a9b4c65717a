"""Structured pass/fail records returned by every verifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

#: Witness lists are truncated to this many entries; ``failures`` keeps the true count.
MAX_WITNESSES = 20


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"


@dataclass
class VerificationReport:
    """Outcome of checking one theorem over one or more instances.

    ``checked`` counts instances that were actually compared, ``skipped``
    counts instances excluded by the theorem's hypotheses.
    """

    theorem: str
    params: dict[str, Any] = field(default_factory=dict)
    status: Status = Status.PASS
    checked: int = 0
    skipped: int = 0
    failures: int = 0
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL

    def check(self, ok: bool, **witness) -> bool:
        """Record one comparison; on failure flip the status and keep a witness."""
        self.checked += 1
        if not ok:
            self.add_witness(**witness)
        return ok

    def add_witness(self, **witness) -> None:
        self.failures += 1
        self.status = Status.FAIL
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append({k: _jsonable(v) for k, v in witness.items()})

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "status": self.status.value,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "details": self.details,
        }

    def summary(self) -> str:
        line = f"{self.status.value:7s} {self.theorem} checked={self.checked}"
        if self.skipped:
            line += f" skipped={self.skipped}"
        if self.failures:
            line += f" failures={self.failures}"
        return line


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)
