"""Graphs whose vertices are sign vectors, and crabbed-hull signatures."""

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from core.exceptions import EmptyTuple, GroundSetMismatch, VertexNotInGraph
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, Sign, SignVector


class GraphKind(str, enum.Enum):
    COCIRCUIT = "cocircuit"
    TOPE = "tope"
    INDUCED = "induced"


@dataclass(frozen=True)
class SignedGraph:
    """Undirected simple graph on a sign system; edges are index pairs (i, j) with i < j."""

    vertices: SignSystem
    edges: frozenset[tuple[int, int]]
    kind: GraphKind

    def __post_init__(self) -> None:
        count = len(self.vertices)
        for i, j in self.edges:
            if not 0 <= i < j < count:
                raise ValueError(f"Edge ({i}, {j}) is not a valid pair of vertex indices")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbors of every vertex in canonical vertex order."""
        neighbors: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            neighbors[i].append(j)
            neighbors[j].append(i)
        return tuple(tuple(sorted(adjacent)) for adjacent in neighbors)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def index_of(self, vector: SignVector) -> int:
        index = self.vertices.index_of(vector)
        if index is None:
            raise VertexNotInGraph(f"'{vector}' is not a vertex of this graph")
        return index

    def degree(self, vector: SignVector) -> int:
        return len(self.adjacency[self.index_of(vector)])

    def has_edge(self, x: SignVector, y: SignVector) -> bool:
        i, j = sorted((self.index_of(x), self.index_of(y)))
        return (i, j) in self.edges

    def induced(self, indices: Iterable[int]) -> "SignedGraph":
        """Induced subgraph; the canonical order is preserved, so indices are re-packed."""
        chosen = sorted(set(indices))
        position = {old: new for new, old in enumerate(chosen)}
        edges = frozenset(
            (position[i], position[j])
            for i, j in self.edges
            if i in position and j in position
        )
        subsystem = self.vertices.with_members(self.vertices.members[i] for i in chosen)
        return SignedGraph(subsystem, edges, GraphKind.INDUCED)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class HullSignature:
    """
    Allowed nonzero signs per element for the crabbed hull [X1, ..., Xk].

    Z belongs to the hull iff Z(e) ∈ {0, X1(e), ..., Xk(e)} for all e, i.e. iff
    Z+ ⊆ ``plus`` and Z- ⊆ ``minus``.
    """

    ground: GroundSet
    plus: int
    minus: int

    @classmethod
    def of(cls, vectors: Iterable[SignVector]) -> "HullSignature":
        vectors = list(vectors)
        if not vectors:
            raise EmptyTuple()
        ground = vectors[0].ground
        plus = minus = 0
        for vector in vectors:
            if vector.ground is not ground and vector.ground != ground:
                raise GroundSetMismatch()
            plus |= vector.pos
            minus |= vector.neg
        return cls(ground, plus, minus)

    def allows(self, vector: SignVector) -> bool:
        return not (vector.pos & ~self.plus) and not (vector.neg & ~self.minus)

    def union(self, other: "HullSignature") -> "HullSignature":
        return HullSignature(self.ground, self.plus | other.plus, self.minus | other.minus)

    def allowed(self, element: int) -> frozenset[Sign]:
        """Nonzero signs a hull member may take on ``element``; zero is always allowed."""
        signs = set()
        if self.plus >> element & 1:
            signs.add(Sign.PLUS)
        if self.minus >> element & 1:
            signs.add(Sign.MINUS)
        return frozenset(signs)

    @property
    def both_mask(self) -> int:
        """Elements on which the tuple offers both nonzero signs."""
        return self.plus & self.minus

    def __str__(self) -> str:
        chars = []
        for e in range(self.ground.size):
            signs = self.allowed(e)
            if len(signs) == 2:
                chars.append("*")
            else:
                chars.append(next(iter(signs)).value if signs else Sign.ZERO.value)
        return "".join(chars)
