"""Named pass/fail check results shared by all verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: object = None
    actual: object = None
    note: str = ""

    def row(self) -> tuple[str, str, str, str, str]:
        return (
            self.name,
            "pass" if self.passed else "FAIL",
            "" if self.expected is None else str(self.expected),
            "" if self.actual is None else str(self.actual),
            self.note,
        )


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, expected=None, actual=None, note: str = "") -> CheckResult:
        check = CheckResult(name, bool(passed), expected, actual, note)
        self.checks.append(check)
        return check

    def require(self, name: str, expected, actual, note: str = "") -> CheckResult:
        return self.add(name, expected == actual, expected, actual, note)

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                CheckResult(prefix + c.name, c.passed, c.expected, c.actual, c.note)
            )

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def format_table(self) -> str:
        lines = ["status\tcheck\texpected\tactual\tnote"]
        for c in self.checks:
            name, status, expected, actual, note = c.row()
            lines.append(f"{status}\t{name}\t{expected}\t{actual}\t{note}")
        summary = "PASS" if self.passed else f"FAIL ({len(self.failures())} failing)"
        lines.append(f"# overall: {summary}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "expected": None if c.expected is None else str(c.expected),
                    "actual": None if c.actual is None else str(c.actual),
                    "note": c.note,
                }
                for c in self.checks
            ],
        }
