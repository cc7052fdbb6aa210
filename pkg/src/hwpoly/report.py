"""Structured pass/fail records for identity checks."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    parameters: dict[str, str] = field(default_factory=dict)
    passed: bool = True
    first_failure: str | None = None
    # set when a check's premise fails, as opposed to the identity itself
    hypothesis_violated: bool = False

    def __post_init__(self) -> None:
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must be True exactly when first_failure is None")
        if self.hypothesis_violated and self.passed:
            raise ValueError("a report with a violated hypothesis cannot pass")

    @classmethod
    def ok(cls, name: str, parameters: dict[str, str]) -> CheckReport:
        return cls(name, dict(parameters))

    @classmethod
    def fail(cls, name: str, parameters: dict[str, str], detail: str,
             hypothesis_violated: bool = False) -> CheckReport:
        return cls(name, dict(parameters), False, detail, hypothesis_violated)

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return "hypothesis violated" if self.hypothesis_violated else "fail"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{self.status.upper():5} {self.check_name} {params}".rstrip()
        if self.first_failure is not None:
            line += f"\n      first failure: {self.first_failure}"
        return line
