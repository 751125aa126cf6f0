"""Composition closure, the big face lattice and contraction minors."""

import time
from collections import deque
from collections.abc import Iterable

from core.config import logger, settings
from core.exceptions import InvalidInput, NotGraded, ResourceLimitExceeded
from models.lattice import FaceLattice
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, SignVector, iter_bits, mask_of
from schemas.verdict import Verdict, Violation

TOP_LABEL = "top"


class LatticeService:
    """Service for covector lattices of sign systems."""

    def __init__(
        self,
        covector_cap: int | None = None,
        time_limit_seconds: float | None = None,
        diagnostic_cap: int | None = None,
    ) -> None:
        self.covector_cap = covector_cap if covector_cap is not None else settings.covector_cap
        self.time_limit_seconds = (
            time_limit_seconds
            if time_limit_seconds is not None
            else settings.closure_time_limit_seconds
        )
        self.diagnostic_cap = (
            diagnostic_cap if diagnostic_cap is not None else settings.lattice_diagnostic_cap
        )
        if self.covector_cap <= 0 or self.time_limit_seconds <= 0:
            raise InvalidInput("Closure budgets must be positive")

    def closure(self, system: SignSystem) -> SignSystem:
        """
        L(C*): the zero vector and every finite composition of members.

        Every composition is a left fold X1∘...∘Xk, so a breadth-first search that
        right-composes each reached covector with each member reaches all of them.
        """
        generators = [(vector.pos, vector.neg) for vector in system]
        seen: set[tuple[int, int]] = {(0, 0)}
        queue: deque[tuple[int, int]] = deque([(0, 0)])
        started = time.monotonic()

        while queue:
            pos, neg = queue.popleft()
            for g_pos, g_neg in generators:
                composed = (pos | (g_pos & ~neg), neg | (g_neg & ~pos))
                if composed in seen:
                    continue
                seen.add(composed)
                queue.append(composed)
                if len(seen) > self.covector_cap:
                    raise ResourceLimitExceeded(
                        f"Closure exceeds the covector cap of {self.covector_cap}"
                    )
                if len(seen) % 1024 == 0 and time.monotonic() - started > self.time_limit_seconds:
                    raise ResourceLimitExceeded(
                        f"Closure exceeds the time limit of {self.time_limit_seconds}s"
                    )

        ground = system.ground
        covectors = SignSystem(ground, tuple(SignVector(ground, p, n) for p, n in seen))
        logger.info(f"Closure of {len(system)} sign vectors: {len(covectors)} covectors")
        return covectors

    def build_lattice(self, system: SignSystem) -> FaceLattice:
        """Closure plus 1̂, with longest-chain heights, cover relations and the grading flag."""
        covectors = self.closure(system)
        members = covectors.members
        count = len(members)
        # Strictly smaller covectors have strictly smaller support
        order = sorted(range(count), key=lambda i: members[i].support_mask.bit_count())

        below = [0] * count
        for position, i in enumerate(order):
            upper = members[i]
            mask = 0
            for j in order[:position]:
                lower = members[j]
                if not lower.pos & ~upper.pos and not lower.neg & ~upper.neg:
                    mask |= 1 << j
            below[i] = mask

        heights = [0] * count
        lower_covers: list[tuple[int, ...]] = [()] * count
        for i in order:
            covered = 0
            height = 0
            for j in iter_bits(below[i]):
                covered |= below[j]
                height = max(height, heights[j] + 1)
            heights[i] = height
            lower_covers[i] = tuple(iter_bits(below[i] & ~covered))

        above_any = 0
        for mask in below:
            above_any |= mask
        coatoms = tuple(i for i in range(count) if not above_any >> i & 1)

        zero = covectors.index_of(SignVector.zero(covectors.ground))
        atoms = tuple(i for i in range(count) if lower_covers[i] == (zero,))

        graded = all(
            heights[i] == heights[j] + 1 for i in range(count) for j in lower_covers[i]
        ) and len({heights[i] for i in coatoms}) == 1
        top_rank = max(heights[i] for i in coatoms) + 1

        if not graded:
            logger.info("Face lattice is not graded; heights are longest-chain lengths")
        logger.debug(f"Lattice: {len(atoms)} atoms, {len(coatoms)} coatoms, top rank {top_rank}")

        return FaceLattice(
            base=system,
            covectors=covectors,
            heights=tuple(heights),
            below=tuple(below),
            lower_covers=tuple(lower_covers),
            atom_indices=atoms,
            coatom_indices=coatoms,
            graded=graded,
            top_rank=top_rank,
        )

    def rank(self, lattice: FaceLattice) -> int:
        """r(M) = h(1̂) - 1."""
        if not lattice.graded:
            raise NotGraded()
        return lattice.top_rank - 1

    def atoms(self, lattice: FaceLattice) -> SignSystem:
        return lattice.covectors.with_members(lattice.atoms)

    def topes(self, lattice: FaceLattice) -> SignSystem:
        return lattice.covectors.with_members(lattice.coatoms)

    def height(self, lattice: FaceLattice, vector: SignVector) -> int:
        return lattice.height(vector)

    def hasse_edges(self, lattice: FaceLattice) -> list[tuple[int, int | None]]:
        """Cover relations (lower, upper) by covector index; ``None`` stands for 1̂."""
        edges: list[tuple[int, int | None]] = [
            (j, i) for i, covers in enumerate(lattice.lower_covers) for j in covers
        ]
        edges.extend((i, None) for i in lattice.coatom_indices)
        return sorted(edges, key=lambda edge: (edge[0], -1 if edge[1] is None else edge[1]))

    def check_lattice_property(self, lattice: FaceLattice) -> Verdict:
        """
        Every pair of elements of L̂ has a join and a meet.

        Quadratic in the number of pairs times the lattice size, hence capped.
        """
        count = len(lattice.covectors)
        if count + 1 > self.diagnostic_cap:
            raise ResourceLimitExceeded(
                f"Lattice of {count + 1} elements exceeds the diagnostic cap of "
                f"{self.diagnostic_cap}"
            )

        top = count
        everything = (1 << (count + 1)) - 1
        up = [lattice.above[i] | 1 << i | 1 << top for i in range(count)] + [1 << top]
        down = [lattice.below[i] | 1 << i for i in range(count)] + [everything]
        heights = list(lattice.heights) + [lattice.top_rank]

        def bound_exists(bounds: int, cone: list[int], pick_max: bool) -> bool:
            candidates = list(iter_bits(bounds))
            if not candidates:
                return False
            chosen = (max if pick_max else min)(candidates, key=lambda k: heights[k])
            return cone[chosen] == bounds

        for i in range(count + 1):
            for j in range(i + 1, count + 1):
                has_join = bound_exists(up[i] & up[j], up, pick_max=False)
                has_meet = bound_exists(down[i] & down[j], down, pick_max=True)
                if not (has_join and has_meet):
                    missing = "join" if not has_join else "meet"
                    return Verdict.fail(
                        "lattice",
                        Violation(
                            rule="lattice",
                            vectors=[self._label(lattice, i), self._label(lattice, j)],
                            message=f"no {missing} for this pair",
                        ),
                    )
        return Verdict.ok("lattice")

    @staticmethod
    def _label(lattice: FaceLattice, index: int) -> str:
        if index == len(lattice.covectors):
            return TOP_LABEL
        return str(lattice.covectors.members[index])

    # Minors

    def contract(self, system: SignSystem, elements: Iterable[int]) -> SignSystem:
        """C*/A: members vanishing on A, restricted to E minus A and re-indexed densely."""
        removed = mask_of(elements)
        ground = system.ground
        if removed & ~ground.full_mask:
            raise InvalidInput("Contraction set is not a subset of the ground set")
        if removed == ground.full_mask:
            raise InvalidInput("Cannot contract the whole ground set")

        kept = tuple(e for e in range(ground.size) if not removed >> e & 1)
        minor_ground = GroundSet(tuple(ground.labels[e] for e in kept))
        members = tuple(
            vector.restrict(kept, minor_ground)
            for vector in system
            if not vector.support_mask & removed
        )
        origin = kept if system.origin is None else tuple(system.origin[e] for e in kept)
        return SignSystem(minor_ground, members, origin)

    def contracted_rank(self, system: SignSystem, zero_mask: int) -> int:
        """r(M/A) for A given as a mask; contracting everything leaves rank 0."""
        if zero_mask == system.ground.full_mask:
            return 0
        return self.rank(self.build_lattice(self.contract(system, iter_bits(zero_mask))))

    def contraction_rank_identity(
        self, system: SignSystem, vector: SignVector, lattice: FaceLattice | None = None
    ) -> Verdict:
        """r(M/U⁰) = h(U) for a covector U."""
        lattice = lattice or self.build_lattice(system)
        height = lattice.height(vector)
        contracted = self.contracted_rank(system, vector.zero_mask)
        if contracted != height:
            return Verdict.fail(
                "contraction-rank",
                Violation(
                    rule="contraction-rank",
                    vectors=[str(vector)],
                    message=f"rank of the contraction is {contracted}, height is {height}",
                ),
            )
        return Verdict.ok("contraction-rank")

    def check_contraction_ranks(
        self, system: SignSystem, lattice: FaceLattice | None = None
    ) -> Verdict:
        """The contraction rank identity for every covector; contractions shared by zero set."""
        lattice = lattice or self.build_lattice(system)
        ranks: dict[int, int] = {}
        for vector, height in zip(lattice.covectors, lattice.heights):
            zero_mask = vector.zero_mask
            if zero_mask not in ranks:
                ranks[zero_mask] = self.contracted_rank(system, zero_mask)
            if ranks[zero_mask] != height:
                return Verdict.fail(
                    "contraction-rank",
                    Violation(
                        rule="contraction-rank",
                        vectors=[str(vector)],
                        message=f"rank of the contraction is {ranks[zero_mask]}, "
                        f"height is {height}",
                    ),
                )
        return Verdict.ok("contraction-rank")
