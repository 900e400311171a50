#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/checks.py — result types shared by every self-test and harness.

A Report collects named CheckResults. Randomized harnesses call
`report.record(name, passed, counterexample)` once per trial; records with
the same name fold into one CheckResult that counts trials and keeps the
first counterexample.

Two access modes, as with the schema validators:
    • report.failures()          → failing, non-reported checks (non-throwing)
    • report.raise_on_failure()  → CheckFailure on the first one
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .errors import CheckFailure


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None
    reported_only: bool = False
    detail: str = ""
    count: int = 1
    failed: int = 0

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.reported_only:
            out["reported_only"] = True
        if self.detail:
            out["detail"] = self.detail
        if self.count > 1:
            out["trials"] = self.count
            out["failed"] = self.failed
        return out


@dataclass
class Report:
    name: str
    seed: Optional[int] = None
    trials: int = 0
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def _find(self, name: str) -> Optional[CheckResult]:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def record(
        self,
        name: str,
        passed: bool,
        counterexample: Optional[str] = None,
        reported_only: bool = False,
        detail: str = "",
    ) -> CheckResult:
        existing = self._find(name)
        if existing is None:
            res = CheckResult(
                name=name,
                passed=passed,
                counterexample=None if passed else counterexample,
                reported_only=reported_only,
                detail=detail,
                failed=0 if passed else 1,
            )
            self.checks.append(res)
            return res
        existing.count += 1
        if not passed:
            existing.failed += 1
            if existing.passed:
                existing.passed = False
                existing.counterexample = counterexample
                if detail:
                    existing.detail = detail
        return existing

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "Report") -> "Report":
        """Fold another report in, prefixing its check names."""
        for c in other.checks:
            c.name = f"{other.name}/{c.name}"
            self.checks.append(c)
        self.notes.extend(f"{other.name}: {n}" for n in other.notes)
        self.trials += other.trials
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if not c.reported_only)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.reported_only]

    def raise_on_failure(self) -> None:
        for c in self.failures():
            raise CheckFailure(f"{self.name}/{c.name}", c.detail or "check failed", c.counterexample)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

