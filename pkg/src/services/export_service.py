"""Canonical DOT and JSON renderings of graphs, lattices and reports."""

import orjson
from pydantic import BaseModel

from models.graph import SignedGraph
from models.lattice import FaceLattice
from models.sign_system import SignSystem
from schemas.export import GraphDocument, LatticeDocument, SystemDocument
from services.lattice_service import TOP_LABEL, LatticeService

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def dumps(document: BaseModel | dict | list) -> str:
    """Deterministic JSON text: two-space indent, sorted keys, trailing newline."""
    if isinstance(document, BaseModel):
        document = document.model_dump(mode="json")
    return orjson.dumps(document, option=JSON_OPTIONS).decode() + "\n"


class ExportService:
    """Service for rendering domain objects in interchange formats."""

    def __init__(self, lattices: LatticeService | None = None) -> None:
        self.lattices = lattices or LatticeService()

    def graph_to_dot(self, graph: SignedGraph) -> str:
        """Undirected DOT with one node per vertex in canonical order, labelled by sign string."""
        name = graph.kind.value
        lines = [f"graph {name} {{"]
        for i, vertex in enumerate(graph.vertices):
            lines.append(f'    v{i} [label="{vertex}"];')
        for i, j in graph.sorted_edges():
            lines.append(f"    v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def graph_to_document(self, graph: SignedGraph) -> GraphDocument:
        return GraphDocument(
            kind=graph.kind.value,
            ground=list(graph.vertices.ground.labels),
            vertices=graph.vertices.strings(),
            edges=graph.sorted_edges(),
            adjacency=[list(neighbors) for neighbors in graph.adjacency],
        )

    def graph_to_json(self, graph: SignedGraph) -> str:
        return dumps(self.graph_to_document(graph))

    def lattice_to_document(self, lattice: FaceLattice) -> LatticeDocument:
        names = lattice.covectors.strings()
        covers = [
            (names[lower], TOP_LABEL if upper is None else names[upper])
            for lower, upper in self.lattices.hasse_edges(lattice)
        ]
        return LatticeDocument(
            ground=list(lattice.covectors.ground.labels),
            covectors=names,
            heights={name: height for name, height in zip(names, lattice.heights)},
            covers=covers,
            graded=lattice.graded,
            top_rank=lattice.top_rank,
            rank=lattice.top_rank - 1 if lattice.graded else None,
            atoms=[str(x) for x in lattice.atoms],
            topes=[str(x) for x in lattice.coatoms],
        )

    def lattice_to_json(self, lattice: FaceLattice) -> str:
        return dumps(self.lattice_to_document(lattice))

    def system_to_document(self, system: SignSystem) -> SystemDocument:
        return SystemDocument(
            ground=list(system.ground.labels),
            members=system.strings(),
            origin=list(system.origin) if system.origin is not None else None,
        )
