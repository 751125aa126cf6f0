from pydantic import BaseModel, Field

from schemas.verdict import Verdict


class HullRecord(BaseModel):
    """Connectivity of one crabbed hull against its target."""

    signature: str  # per element: + / - / * (both) / 0 (forced zero)
    generators: list[str]
    vertices: int
    connectivity: int
    target: int
    satisfied: bool


class HullConnectivityVerdict(Verdict):
    """Verdict of the hull connectivity condition with per-hull detail."""

    exhaustive: bool = True
    hulls: list[HullRecord] = Field(default_factory=list)


class EquivalenceReport(BaseModel):
    """The three equivalent conditions evaluated side by side on one system."""

    cocircuits: int
    edges: int
    axioms: Verdict
    hull_connectivity: HullConnectivityVerdict
    crabbed_paths: Verdict
    agree: bool  # axioms pass exactly when crabbed paths pass
    implication_holds: bool  # axioms passing forces hull connectivity to pass
    cost_naive: int
    cost_graph: int

    @property
    def consistent(self) -> bool:
        return self.agree and self.implication_holds


class CostReport(BaseModel):
    """Instrumented work of the two recognition routes."""

    cocircuits: int
    edges: int
    cost_naive: int
    cost_graph: int
    seconds_naive: float | None = None
    seconds_graph: float | None = None

    @property
    def ratio(self) -> float:
        return self.cost_naive / self.cost_graph if self.cost_graph else 0.0


class BenchRow(CostReport):
    family: str
    size: int


class CorpusSummary(BaseModel):
    """Aggregate of the equivalence harness over a corpus."""

    instances: int
    positives: int
    negatives: int
    disagreements: list[str] = Field(default_factory=list)
    implication_failures: list[str] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.disagreements and not self.implication_failures
