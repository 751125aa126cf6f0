"""Pytest fixtures for testing."""

import sys
from collections.abc import Callable
from pathlib import Path

import pytest
from typer.testing import CliRunner

# Add src directory to path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from models.graph import SignedGraph  # noqa: E402
from models.lattice import FaceLattice  # noqa: E402
from models.sign_system import SignSystem  # noqa: E402
from models.types import EnumerationPolicy  # noqa: E402
from repositories.sign_system_repository import SignSystemRepository  # noqa: E402
from services.axiom_service import AxiomService  # noqa: E402
from services.generator_service import GeneratorService  # noqa: E402
from services.graph_service import GraphService  # noqa: E402
from services.lattice_service import LatticeService  # noqa: E402
from services.verify_service import VerifyService  # noqa: E402

# U(2,3): columns (1,0), (0,1), (1,1)
U23 = ["0++", "0--", "+0+", "-0-", "+-0", "-+0"]
# U(2,3) without the pair ±"+-0"
NEGATIVE = ["0++", "0--", "+0+", "-0-"]
# Angular sweep of U(2,3)
U23_CYCLE = ["+0+", "0++", "-+0", "-0-", "0--", "+-0"]


@pytest.fixture
def u23() -> SignSystem:
    return SignSystem.from_strings(U23)


@pytest.fixture
def negative_system() -> SignSystem:
    return SignSystem.from_strings(NEGATIVE)


@pytest.fixture
def axiom_service() -> AxiomService:
    return AxiomService()


@pytest.fixture
def lattice_service() -> LatticeService:
    return LatticeService()


@pytest.fixture
def graph_service() -> GraphService:
    return GraphService()


@pytest.fixture
def generator_service(axiom_service: AxiomService) -> GeneratorService:
    return GeneratorService(axiom_service)


@pytest.fixture
def policy() -> EnumerationPolicy:
    return EnumerationPolicy(exhaustive_cap=16, sample_count=200, seed=0)


@pytest.fixture
def verify_service(
    axiom_service: AxiomService,
    lattice_service: LatticeService,
    graph_service: GraphService,
    generator_service: GeneratorService,
    policy: EnumerationPolicy,
) -> VerifyService:
    return VerifyService(
        axiom_service, lattice_service, graph_service, generator_service, policy, jobs=1
    )


@pytest.fixture
def u23_lattice(u23: SignSystem, lattice_service: LatticeService) -> FaceLattice:
    return lattice_service.build_lattice(u23)


@pytest.fixture
def u23_graph(u23_lattice: FaceLattice, graph_service: GraphService) -> SignedGraph:
    return graph_service.cocircuit_graph(u23_lattice)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def write_system(tmp_path: Path) -> Callable[..., Path]:
    """Write sign strings to a file in the sign-system format and return its path."""

    def _write(strings: list[str], name: str = "system.txt", header: str | None = None) -> Path:
        path = tmp_path / name
        lines = [header] if header else []
        lines.extend(strings)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write


@pytest.fixture
def repository() -> SignSystemRepository:
    return SignSystemRepository()
