"""Graph conditions for cocircuit systems and their equivalence with the axioms."""

import random
import time
from collections import deque
from collections.abc import Iterable, Sequence
from itertools import combinations

import networkx as nx
from joblib import Parallel, delayed

from core.config import logger, settings
from core.exceptions import EquivalenceViolated, HypothesisNotMet, OMException
from models.graph import HullSignature, SignedGraph
from models.lattice import FaceLattice
from models.sign_system import SignSystem
from models.sign_vector import SignVector, compose_seq
from models.types import CorpusInstance, EnumerationPolicy
from schemas.report import (
    CorpusSummary,
    CostReport,
    EquivalenceReport,
    HullConnectivityVerdict,
    HullRecord,
)
from schemas.verdict import Verdict, Violation
from services.axiom_service import AxiomService
from services.generator_service import GeneratorService
from services.graph_service import GraphService
from services.lattice_service import LatticeService

Hull = tuple[HullSignature, tuple[SignVector, ...]]


def _connectivity_of(order: int, edges: list[tuple[int, int]]) -> int:
    """κ of a small graph given by vertex count and edge list; runs in worker processes."""
    if order <= 1:
        return 0
    graph = nx.Graph()
    graph.add_nodes_from(range(order))
    graph.add_edges_from(edges)
    return int(nx.node_connectivity(graph))


class VerifyService:
    """
    Service for the crabbed-path and hull-connectivity conditions.

    Both conditions presuppose (C0)-(C2); inputs failing them raise HypothesisNotMet.
    """

    def __init__(
        self,
        axioms: AxiomService | None = None,
        lattices: LatticeService | None = None,
        graphs: GraphService | None = None,
        generators: GeneratorService | None = None,
        policy: EnumerationPolicy | None = None,
        jobs: int | None = None,
    ) -> None:
        self.axioms = axioms or AxiomService()
        self.lattices = lattices or LatticeService()
        self.graphs = graphs or GraphService()
        self.generators = generators or GeneratorService(self.axioms)
        self.policy = policy or EnumerationPolicy.from_settings()
        self.jobs = jobs if jobs is not None else settings.jobs

    def _prepare(
        self, system: SignSystem, lattice: FaceLattice | None, graph: SignedGraph | None
    ) -> tuple[FaceLattice, SignedGraph]:
        lattice = lattice or self.lattices.build_lattice(system)
        graph = graph or self.graphs.cocircuit_graph(lattice)
        return lattice, graph

    def _require_oriented_matroid(self, system: SignSystem) -> None:
        verdict = self.axioms.check_all(system)
        if not verdict.passed:
            assert verdict.violation is not None
            raise HypothesisNotMet(
                f"Input is not an oriented matroid: {verdict.violation.rule} fails"
            )

    # Crabbed paths

    def check_crabbed_paths(
        self,
        system: SignSystem,
        lattice: FaceLattice | None = None,
        graph: SignedGraph | None = None,
    ) -> Verdict:
        """
        Every pair X ≠ ±Y of cocircuits is joined by a crabbed path in G(C*).

        ``cost`` on the verdict is the number of edge relaxations and hull tests.
        """
        self.axioms.require_hypothesis(system)
        lattice, graph = self._prepare(system, lattice, graph)
        self.graphs.traversals = 0

        members = system.members
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                if y == -x:
                    continue
                if not self.graphs.crabbed_path_exists(graph, x, y):
                    logger.info(f"No crabbed path between {x} and {y}")
                    return Verdict.fail(
                        "crabbed-paths",
                        Violation(
                            rule="crabbed-paths",
                            vectors=[str(x), str(y)],
                            message="no path inside the crabbed hull of the pair",
                        ),
                        cost=self.graphs.traversals,
                    )
        return Verdict.ok("crabbed-paths", cost=self.graphs.traversals)

    # Hull connectivity

    def enumerate_hulls(
        self, system: SignSystem, policy: EnumerationPolicy | None = None
    ) -> tuple[list[Hull], bool]:
        """
        Tuples of cocircuits with pairwise different hull signatures.

        Up to the exhaustive cap every reachable signature is found by closing the
        singleton signatures under union; otherwise singletons, all pairs and a seeded
        sample of larger subsets are used. Returns the hulls and whether they are complete.
        """
        policy = policy or self.policy
        members = system.members
        hulls: dict[HullSignature, tuple[SignVector, ...]] = {}

        def visit(vectors: tuple[SignVector, ...]) -> HullSignature:
            signature = HullSignature.of(vectors)
            hulls.setdefault(signature, vectors)
            return signature

        if policy.is_exhaustive(len(members)):
            singles = [(visit((x,)), x) for x in members]
            queue = deque(hulls)
            while queue:
                signature = queue.popleft()
                for single, x in singles:
                    extended = signature.union(single)
                    if extended not in hulls:
                        hulls[extended] = hulls[signature] + (x,)
                        queue.append(extended)
            return list(hulls.items()), True

        for x in members:
            visit((x,))
        for x, y in combinations(members, 2):
            visit((x, y))
        rng = random.Random(policy.seed)
        if len(members) >= 3:
            for _ in range(policy.sample_count):
                size = rng.randint(3, len(members))
                visit(tuple(rng.sample(members, size)))
        return list(hulls.items()), False

    def check_hull_connectivity(
        self,
        system: SignSystem,
        policy: EnumerationPolicy | None = None,
        lattice: FaceLattice | None = None,
        graph: SignedGraph | None = None,
    ) -> HullConnectivityVerdict:
        """Every enumerated hull [X1, ..., Xk] is (h(X1∘...∘Xk) - 1)-connected."""
        self.axioms.require_hypothesis(system)
        lattice, graph = self._prepare(system, lattice, graph)
        hulls, exhaustive = self.enumerate_hulls(system, policy)

        vertex_sets = [tuple(self.graphs.hull_indices(graph, signature)) for signature, _ in hulls]
        connectivity = self._connectivities(graph, vertex_sets)

        records = []
        for (signature, generators), vertices in zip(hulls, vertex_sets):
            target = lattice.height(compose_seq(generators, system.ground)) - 1
            kappa = connectivity[vertices]
            records.append(
                HullRecord(
                    signature=str(signature),
                    generators=[str(x) for x in generators],
                    vertices=len(vertices),
                    connectivity=kappa,
                    target=target,
                    satisfied=kappa >= target,
                )
            )
        logger.info(f"Checked {len(records)} hulls ({'exhaustive' if exhaustive else 'sampled'})")

        failed = next((record for record in records if not record.satisfied), None)
        if failed is not None:
            return HullConnectivityVerdict(
                check="hull-connectivity",
                passed=False,
                violation=Violation(
                    rule="hull-connectivity",
                    vectors=failed.generators,
                    message=f"hull is {failed.connectivity}-connected, "
                    f"needs {failed.target}",
                ),
                exhaustive=exhaustive,
                hulls=records,
            )
        return HullConnectivityVerdict(
            check="hull-connectivity", passed=True, exhaustive=exhaustive, hulls=records
        )

    def _connectivities(
        self, graph: SignedGraph, vertex_sets: Sequence[tuple[int, ...]]
    ) -> dict[tuple[int, ...], int]:
        """κ of each distinct induced subgraph, optionally across worker processes."""
        unique = list(dict.fromkeys(vertex_sets))
        payloads = []
        for vertices in unique:
            subgraph = graph.induced(vertices)
            payloads.append((subgraph.order, subgraph.sorted_edges()))

        if self.jobs > 1 and len(payloads) > 1:
            values = Parallel(n_jobs=self.jobs)(
                delayed(_connectivity_of)(order, edges) for order, edges in payloads
            )
        else:
            values = [_connectivity_of(order, edges) for order, edges in payloads]
        return dict(zip(unique, values))

    # Equivalence

    def equivalence_harness(self, system: SignSystem, strict: bool = False) -> EquivalenceReport:
        """
        Axioms, crabbed paths and hull connectivity side by side.

        The axioms and the crabbed-path condition must agree, and passing axioms must
        force hull connectivity. With ``strict`` a disagreement raises EquivalenceViolated.
        """
        self.axioms.require_hypothesis(system)
        lattice, graph = self._prepare(system, None, None)

        axioms = self.axioms.check_all(system)
        cost_naive = self.axioms.inspections
        crabbed = self.check_crabbed_paths(system, lattice, graph)
        hulls = self.check_hull_connectivity(system, lattice=lattice, graph=graph)

        report = EquivalenceReport(
            cocircuits=len(system),
            edges=len(graph.edges),
            axioms=axioms,
            hull_connectivity=hulls,
            crabbed_paths=crabbed,
            agree=axioms.passed == crabbed.passed,
            implication_holds=not axioms.passed or hulls.passed,
            cost_naive=cost_naive,
            cost_graph=crabbed.cost or 0,
        )
        if not report.consistent:
            logger.error(f"Equivalence violated on a system with {len(system)} cocircuits")
            if strict:
                raise EquivalenceViolated(
                    "Axioms and graph conditions disagree on this input"
                )
        return report

    # Tope-side properties

    def crabbed_tope_paths_check(
        self, system: SignSystem, lattice: FaceLattice | None = None
    ) -> Verdict:
        """Every pair of topes is joined by a crabbed path in the tope graph."""
        self._require_oriented_matroid(system)
        lattice = lattice or self.lattices.build_lattice(system)
        topes = self.graphs.tope_graph(lattice)

        members = topes.vertices.members
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not self.graphs.crabbed_path_exists(topes, u, v):
                    return Verdict.fail(
                        "crabbed-tope-paths",
                        Violation(
                            rule="crabbed-tope-paths",
                            vectors=[str(u), str(v)],
                            message="no path inside the crabbed hull of the topes",
                        ),
                    )
        return Verdict.ok("crabbed-tope-paths")

    def tope_subgraph_connectivity_check(
        self,
        system: SignSystem,
        lattice: FaceLattice | None = None,
        graph: SignedGraph | None = None,
    ) -> Verdict:
        """For every tope U the cocircuits below U induce an (r-1)-connected graph."""
        self._require_oriented_matroid(system)
        lattice, graph = self._prepare(system, lattice, graph)
        target = self.lattices.rank(lattice) - 1

        for tope in lattice.coatoms:
            subgraph = self.graphs.tope_subgraph(graph, lattice, tope)
            kappa = self.graphs.vertex_connectivity(subgraph)
            if kappa < target:
                return Verdict.fail(
                    "tope-subgraph-connectivity",
                    Violation(
                        rule="tope-subgraph-connectivity",
                        vectors=[str(tope)],
                        message=f"subgraph below the tope is {kappa}-connected, needs {target}",
                    ),
                )
        return Verdict.ok("tope-subgraph-connectivity")

    def uniform_neighbor_check(
        self, system: SignSystem, policy: EnumerationPolicy | None = None
    ) -> Verdict:
        """
        Degrees inside hulls of a uniform oriented matroid.

        A hull vertex Z has h(X1∘...∘Xk) - 1 neighbors in the hull, plus one for each
        element of Z⁰ on which the tuple offers both signs. Generators of a pair hull
        never vanish on such an element, so for them the count is exactly h - 1.
        """
        self._require_oriented_matroid(system)
        lattice, graph = self._prepare(system, None, None)
        rank = self.lattices.rank(lattice)
        if rank < 2:
            raise HypothesisNotMet("Neighbor counts need rank at least 2")
        if not self.generators.is_uniform(system, rank):
            raise HypothesisNotMet("Input is not a uniform oriented matroid")

        hulls, _ = self.enumerate_hulls(system, policy)
        for signature, generators in hulls:
            height = lattice.height(compose_seq(generators, system.ground))
            for index in self.graphs.hull_indices(graph, signature):
                vertex = graph.vertices.members[index]
                expected = height - 1 + (vertex.zero_mask & signature.both_mask).bit_count()
                degree = self.graphs.degree_in_hull(graph, signature, vertex)
                if degree != expected:
                    return Verdict.fail(
                        "uniform-neighbors",
                        Violation(
                            rule="uniform-neighbors",
                            vectors=[str(vertex), *(str(x) for x in generators)],
                            message=f"degree {degree} inside the hull, expected {expected}",
                        ),
                    )
        return Verdict.ok("uniform-neighbors")

    # Contraction of hulls

    def hull_contraction_check(
        self,
        system: SignSystem,
        vectors: Iterable[SignVector],
        graph: SignedGraph | None = None,
        minors: dict[int, SignedGraph] | None = None,
    ) -> Verdict:
        """
        The hull [X1, ..., Xk] restricted to E minus U⁰ is the hull of the restricted tuple
        in the cocircuit graph of C*/U⁰, with U = X1∘...∘Xk.
        """
        vectors = tuple(vectors)
        _, graph = self._prepare(system, None, graph)
        minors = minors if minors is not None else {}
        composition = compose_seq(vectors, system.ground)
        removed = composition.zero_mask

        if removed not in minors:
            minor = self.lattices.contract(
                system, [e for e in range(system.ground.size) if removed >> e & 1]
            )
            minors[removed] = self.graphs.cocircuit_graph(self.lattices.build_lattice(minor))
        minor_graph = minors[removed]
        minor_ground = minor_graph.vertices.ground
        kept = tuple(e for e in range(system.ground.size) if not removed >> e & 1)

        signature = HullSignature.of(vectors)
        restricted = {
            str(graph.vertices.members[i].restrict(kept, minor_ground))
            for i in self.graphs.hull_indices(graph, signature)
        }
        minor_signature = HullSignature.of(x.restrict(kept, minor_ground) for x in vectors)
        contracted = {
            str(minor_graph.vertices.members[i])
            for i in self.graphs.hull_indices(minor_graph, minor_signature)
        }
        if restricted != contracted:
            return Verdict.fail(
                "hull-contraction",
                Violation(
                    rule="hull-contraction",
                    vectors=[str(x) for x in vectors],
                    message=f"hull has {len(restricted)} vertices, "
                    f"contracted hull has {len(contracted)}",
                ),
            )
        return Verdict.ok("hull-contraction")

    def check_hull_contractions(self, system: SignSystem) -> Verdict:
        """The hull contraction property for every pair of cocircuits."""
        self._require_oriented_matroid(system)
        _, graph = self._prepare(system, None, None)
        minors: dict[int, SignedGraph] = {}
        for x, y in combinations(system.members, 2):
            verdict = self.hull_contraction_check(system, (x, y), graph, minors)
            if not verdict.passed:
                return verdict
        return Verdict.ok("hull-contraction")

    # Cost comparison

    def cost_comparison(self, system: SignSystem, timings: bool = True) -> CostReport:
        """Instrumented work of the elimination axiom against the crabbed-path check."""
        self.axioms.require_hypothesis(system)

        started = time.perf_counter()
        naive = self.axioms.check_c3(system)
        seconds_naive = time.perf_counter() - started

        started = time.perf_counter()
        lattice, graph = self._prepare(system, None, None)
        crabbed = self.check_crabbed_paths(system, lattice, graph)
        seconds_graph = time.perf_counter() - started

        return CostReport(
            cocircuits=len(system),
            edges=len(graph.edges),
            cost_naive=naive.cost or 0,
            cost_graph=crabbed.cost or 0,
            seconds_naive=seconds_naive if timings else None,
            seconds_graph=seconds_graph if timings else None,
        )

    # Corpus

    def run_corpus(
        self, instances: Iterable[CorpusInstance], with_hulls: bool = True
    ) -> CorpusSummary:
        """Equivalence harness over named instances, aggregated."""
        count = positives = negatives = 0
        disagreements: list[str] = []
        implication_failures: list[str] = []

        for instance in instances:
            count += 1
            try:
                if with_hulls:
                    report = self.equivalence_harness(instance.system)
                    axioms_pass = report.axioms.passed
                    agree = report.agree
                    if not report.implication_holds:
                        implication_failures.append(instance.name)
                else:
                    axioms_pass = self.axioms.check_all(instance.system).passed
                    agree = axioms_pass == self.check_crabbed_paths(instance.system).passed
            except OMException as e:
                logger.warning(f"Corpus instance {instance.name} skipped: {e.message}")
                disagreements.append(f"{instance.name}: {e.message}")
                continue

            if axioms_pass:
                positives += 1
            else:
                negatives += 1
            if not agree:
                disagreements.append(instance.name)
            elif instance.positive and not axioms_pass:
                disagreements.append(f"{instance.name}: realizable system fails the axioms")
            outcome = "pass" if axioms_pass else "fail"
            logger.debug(f"Corpus instance {instance.name}: axioms {outcome}")

        logger.info(f"Corpus: {count} instances, {positives} oriented matroids")
        return CorpusSummary(
            instances=count,
            positives=positives,
            negatives=negatives,
            disagreements=disagreements,
            implication_failures=implication_failures,
        )
