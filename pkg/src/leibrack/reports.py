"""Small result records shared by the property suites and the CLI."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one sampled or exhaustive property check."""

    name: str
    checked: int
    violations: list = field(default_factory=list)
    max_residual: object = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.violations

    def summary(self):
        status = "pass" if self.passed else "fail"
        return f"{self.name}: {status} ({self.checked} checked, max residual {self.max_residual})"
