from schemas.export import GraphDocument, LatticeDocument, SystemDocument
from schemas.report import (
    BenchRow,
    CorpusSummary,
    CostReport,
    EquivalenceReport,
    HullConnectivityVerdict,
    HullRecord,
)
from schemas.run_config import RunConfig
from schemas.verdict import Axiom, AxiomViolation, Verdict, Violation

__all__ = [
    "Axiom",
    "Violation",
    "AxiomViolation",
    "Verdict",
    "HullRecord",
    "HullConnectivityVerdict",
    "EquivalenceReport",
    "CostReport",
    "BenchRow",
    "CorpusSummary",
    "GraphDocument",
    "LatticeDocument",
    "SystemDocument",
    "RunConfig",
]
