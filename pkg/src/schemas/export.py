from pydantic import BaseModel


class GraphDocument(BaseModel):
    """JSON adjacency export of a signed graph, in canonical vertex order."""

    kind: str
    ground: list[str]
    vertices: list[str]
    edges: list[tuple[int, int]]
    adjacency: list[list[int]]


class LatticeDocument(BaseModel):
    """JSON export of a big face lattice; the top element is named ``top``."""

    ground: list[str]
    covectors: list[str]
    heights: dict[str, int]
    covers: list[tuple[str, str]]  # (lower, upper), upper may be "top"
    graded: bool
    top_rank: int
    rank: int | None
    atoms: list[str]
    topes: list[str]


class SystemDocument(BaseModel):
    ground: list[str]
    members: list[str]
    origin: list[int] | None = None
