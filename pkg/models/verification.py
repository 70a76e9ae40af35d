# models/verification.py
# outcome of an exhaustive or exact verification run

from dataclasses import dataclass, field

from models.errors import CounterexampleFound


@dataclass
class VerificationReport:
    """what was checked, how many objects, and the first witness of a failure"""
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str, witness=None):
        self.failures.append(message)
        if self.witness is None:
            self.witness = witness

    def raise_for_failure(self) -> "VerificationReport":
        if self.failures:
            raise CounterexampleFound(f"{self.name}: {self.failures[0]}", witness=self.witness)
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:10],
            "witness": repr(self.witness) if self.witness is not None else None,
            "details": self.details,
        }
