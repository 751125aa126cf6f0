import enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Axiom(str, enum.Enum):
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"


class Violation(BaseModel):
    """A named failure with the offending sign vectors."""

    rule: str
    vectors: list[str] = Field(default_factory=list)
    element: int | None = None
    element_label: str | None = None
    message: str = ""


class AxiomViolation(Violation):
    """Failure of one of the cocircuit axioms."""

    model_config = ConfigDict(use_enum_values=True)

    rule: Axiom

    @model_validator(mode="after")
    def check_witness_shape(self) -> "AxiomViolation":
        if self.rule == Axiom.C0 and self.vectors:
            raise ValueError("A C0 witness carries no vectors")
        if self.rule == Axiom.C1 and len(self.vectors) != 1:
            raise ValueError("A C1 witness is exactly one vector")
        if self.rule == Axiom.C2 and len(self.vectors) != 2:
            raise ValueError("A C2 witness is exactly two vectors")
        if self.rule == Axiom.C3 and (len(self.vectors) != 2 or self.element is None):
            raise ValueError("A C3 witness is two vectors and one element")
        return self


class Verdict(BaseModel):
    """Result of a check: pass, or the canonically first violation."""

    check: str
    passed: bool
    violation: Violation | None = None
    warnings: list[str] = Field(default_factory=list)
    cost: int | None = None  # instrumented work units, when the check counts them
    skipped: bool = False  # hypothesis of the check not met; neither pass nor fail

    @classmethod
    def ok(cls, check: str, **kwargs: object) -> "Verdict":
        return cls(check=check, passed=True, **kwargs)  # type: ignore[arg-type]

    @classmethod
    def fail(cls, check: str, violation: Violation, **kwargs: object) -> "Verdict":
        return cls(
            check=check, passed=False, violation=violation, **kwargs  # type: ignore[arg-type]
        )

    @classmethod
    def skip(cls, check: str, reason: str) -> "Verdict":
        return cls(check=check, passed=False, skipped=True, warnings=[f"skipped: {reason}"])

    @property
    def failed(self) -> bool:
        return not self.passed and not self.skipped
