"""Cocircuit graphs, tope graphs and crabbed hulls."""

from collections import deque
from collections.abc import Iterable

import networkx as nx

from core.config import logger
from core.exceptions import NotATope
from models.graph import GraphKind, HullSignature, SignedGraph
from models.lattice import FaceLattice
from models.sign_vector import SignVector, iter_bits
from schemas.verdict import Verdict, Violation


class GraphService:
    """
    Service for graphs derived from a face lattice.

    ``traversals`` accumulates the work of every crabbed-path search: one unit per edge
    relaxation and one per hull-membership test. Callers reset it between measurements.
    """

    def __init__(self) -> None:
        self.traversals = 0

    def cocircuit_graph(self, lattice: FaceLattice) -> SignedGraph:
        """
        G(C*): atoms X, Y are adjacent iff some Z of L̂ has exactly X and Y as atoms below it.

        1̂ lies above every atom, so it adds an edge only when there are exactly two atoms.
        """
        atom_position = {index: position for position, index in enumerate(lattice.atom_indices)}
        atom_mask = 0
        for index in lattice.atom_indices:
            atom_mask |= 1 << index

        edges = set()
        for i, below in enumerate(lattice.below):
            atoms_below = (below | 1 << i) & atom_mask
            if atoms_below.bit_count() == 2:
                first = (atoms_below & -atoms_below).bit_length() - 1
                second = atoms_below.bit_length() - 1
                edges.add((atom_position[first], atom_position[second]))
        if len(atom_position) == 2:
            edges.add((0, 1))

        vertices = lattice.covectors.with_members(lattice.atoms)
        return SignedGraph(vertices, frozenset(edges), GraphKind.COCIRCUIT)

    def tope_graph(self, lattice: FaceLattice) -> SignedGraph:
        """G(T): topes S, T are adjacent iff some covector lies below exactly S and T."""
        tope_position = {index: position for position, index in enumerate(lattice.coatom_indices)}
        tope_mask = 0
        for index in lattice.coatom_indices:
            tope_mask |= 1 << index

        edges = set()
        for i, above in enumerate(lattice.above):
            topes_above = (above | 1 << i) & tope_mask
            if topes_above.bit_count() == 2:
                first = (topes_above & -topes_above).bit_length() - 1
                second = topes_above.bit_length() - 1
                edges.add((tope_position[first], tope_position[second]))

        vertices = lattice.covectors.with_members(lattice.coatoms)
        return SignedGraph(vertices, frozenset(edges), GraphKind.TOPE)

    def hull_signature(self, vectors: Iterable[SignVector]) -> HullSignature:
        return HullSignature.of(vectors)

    def hull_indices(self, graph: SignedGraph, signature: HullSignature) -> list[int]:
        return [i for i, vertex in enumerate(graph.vertices) if signature.allows(vertex)]

    def crabbed_hull(self, graph: SignedGraph, signature: HullSignature) -> SignedGraph:
        """Subgraph induced by the vertices Z with Z(e) ∈ {0, X1(e), ..., Xk(e)} everywhere."""
        return graph.induced(self.hull_indices(graph, signature))

    def crabbed_path_exists(self, graph: SignedGraph, x: SignVector, y: SignVector) -> bool:
        """
        Whether a path from X to Y stays inside the crabbed hull [X, Y].

        Breadth-first search over canonical vertex order; vertices are tested for hull
        membership when first reached and the target is recognised when dequeued.
        """
        source = graph.index_of(x)
        target = graph.index_of(y)
        signature = HullSignature.of((x, y))
        members = graph.vertices.members
        adjacency = graph.adjacency

        seen = {source}
        queue = deque([source])
        while queue:
            current = queue.popleft()
            if current == target:
                return True
            for neighbor in adjacency[current]:
                self.traversals += 1
                if neighbor in seen:
                    continue
                seen.add(neighbor)
                self.traversals += 1
                if signature.allows(members[neighbor]):
                    queue.append(neighbor)
        return False

    def vertex_connectivity(self, graph: SignedGraph) -> int:
        """κ(G), with κ = 0 for the one-vertex graph and for the empty graph."""
        if graph.order == 0:
            logger.warning("Vertex connectivity of the empty graph taken as 0")
            return 0
        if graph.order == 1:
            return 0
        return int(nx.node_connectivity(graph.to_networkx()))

    def tope_subgraph(
        self, graph: SignedGraph, lattice: FaceLattice, tope: SignVector
    ) -> SignedGraph:
        """G(U): cocircuits X with X∘U = U, i.e. X ≤ U."""
        if lattice.covectors.index_of(tope) not in lattice.coatom_indices:
            raise NotATope(f"'{tope}' is not a tope of this lattice")
        return graph.induced(i for i, vertex in enumerate(graph.vertices) if vertex.leq(tope))

    def degree_in_hull(
        self, graph: SignedGraph, signature: HullSignature, vertex: SignVector
    ) -> int:
        """Number of neighbors of ``vertex`` inside the hull with the given signature."""
        members = graph.vertices.members
        return sum(
            1 for neighbor in graph.adjacency[graph.index_of(vertex)]
            if signature.allows(members[neighbor])
        )

    def parallel_classes(self, lattice: FaceLattice) -> list[int]:
        """Class id per element; e and f share one iff their cocircuit columns agree up to sign."""
        keys: dict[tuple[str, ...], int] = {}
        classes = []
        for e in range(lattice.covectors.ground.size):
            column = tuple(atom[e].value for atom in lattice.atoms)
            if next((sign for sign in column if sign != "0"), "+") == "-":
                column = tuple({"+": "-", "-": "+"}.get(sign, sign) for sign in column)
            classes.append(keys.setdefault(column, len(keys)))
        return classes

    def tope_distance_check(
        self, lattice: FaceLattice, graph: SignedGraph | None = None
    ) -> Verdict:
        """
        Tope-graph distance between two topes equals the number of parallel classes in
        their separator, which is the separator size when no two elements are parallel.
        """
        graph = graph or self.tope_graph(lattice)
        members = graph.vertices.members
        classes = self.parallel_classes(lattice)
        distances = dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))

        for i in range(graph.order):
            for j in range(i + 1, graph.order):
                separator = members[i].separator_mask(members[j])
                expected = len({classes[e] for e in iter_bits(separator)})
                actual = distances[i].get(j)
                if actual != expected:
                    found = "no path" if actual is None else f"distance {actual}"
                    return Verdict.fail(
                        "tope-distance",
                        Violation(
                            rule="tope-distance",
                            vectors=[str(members[i]), str(members[j])],
                            message=f"{found}, separator meets {expected} parallel classes",
                        ),
                    )
        return Verdict.ok("tope-distance")
