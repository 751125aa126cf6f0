"""Instance factory: realizable cocircuit systems, uniform families and near-misses."""

import math
import random
from itertools import combinations

from sympy import Matrix

from core.config import logger
from core.exceptions import InvalidInput, SamplingBudgetExhausted
from models.configuration import VectorConfiguration
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, SignVector
from models.types import MutationKind
from services.axiom_service import AxiomService

MAX_CYCLIC_SIZE = 10
MAX_RANDOM_SIZE = 12
MAX_RANDOM_PAIRS = 200


class GeneratorService:
    """Service for generating sign systems from exact data and seeds."""

    def __init__(self, axioms: AxiomService | None = None) -> None:
        self.axioms = axioms or AxiomService()

    # Realizable systems

    def from_matrix(self, config: VectorConfiguration, validate: bool = True) -> SignSystem:
        """
        Cocircuits of the oriented matroid of the columns of an integer matrix.

        Each (r-1)-subset of columns of rank r-1 spans a hyperplane; its normal is the
        vector of signed maximal minors, computed exactly with fraction-free elimination.
        Columns are signed by that normal, and the vector and its negation are both emitted.
        """
        matrix = Matrix(config.rows)
        r, n = config.rank, config.size
        ground = GroundSet.standard(n)
        if matrix.rank() != r:
            raise InvalidInput(
                f"Matrix has rank {matrix.rank()}, expected full row rank {r}"
            )

        normals: set[tuple[int, ...]] = set()
        for subset in combinations(range(n), r - 1):
            normal = self._hyperplane_normal(matrix, subset)
            if normal is not None:
                normals.add(normal)

        vectors = []
        for normal in sorted(normals):
            pos = neg = 0
            for j, column in enumerate(config.columns):
                value = sum(a * b for a, b in zip(normal, column))
                if value > 0:
                    pos |= 1 << j
                elif value < 0:
                    neg |= 1 << j
            vector = SignVector(ground, pos, neg)
            vectors.extend((vector, -vector))

        system = SignSystem(ground, tuple(vectors))
        logger.debug(f"Matrix {r}x{n}: {len(normals)} hyperplanes, {len(system)} cocircuits")
        if validate:
            verdict = self.axioms.check_all(system)
            if not verdict.passed:
                raise RuntimeError(f"Realizable system failed the axioms: {verdict.violation}")
        return system

    @staticmethod
    def _hyperplane_normal(matrix: Matrix, subset: tuple[int, ...]) -> tuple[int, ...] | None:
        """Canonical integer normal of the span of ``subset``, or None if it is not a hyperplane."""
        r = matrix.rows
        if r == 1:
            return (1,)
        block = matrix.extract(list(range(r)), list(subset))
        if block.rank() != r - 1:
            return None

        cofactors = []
        for i in range(r):
            rows = [k for k in range(r) if k != i]
            minor = block.extract(rows, list(range(r - 1))).det(method="bareiss")
            cofactors.append(int((-1) ** i * minor))

        divisor = math.gcd(*cofactors)
        normal = [c // divisor for c in cofactors]
        first = next(c for c in normal if c)
        if first < 0:
            normal = [-c for c in normal]
        return tuple(normal)

    def u2n(self, n: int) -> SignSystem:
        """Rank-2 uniform system from the plane vectors (1, k), k = 0..n-1."""
        if n < 2:
            raise InvalidInput("u2n needs n >= 2")
        return self.from_matrix(VectorConfiguration.of([[1] * n, list(range(n))]))

    def cyclic(self, r: int, n: int) -> SignSystem:
        """Uniform system of n points (1, t, ..., t^(r-1)) on the moment curve, t = 1..n."""
        if not 2 <= r <= n <= MAX_CYCLIC_SIZE:
            raise InvalidInput(f"cyclic needs 2 <= r <= n <= {MAX_CYCLIC_SIZE}, got r={r}, n={n}")
        rows = [[t**power for t in range(1, n + 1)] for power in range(r)]
        system = self.from_matrix(VectorConfiguration.of(rows))

        expected = 2 * math.comb(n, r - 1)
        if len(system) != expected or not self.is_uniform(system, r):
            raise RuntimeError(f"cyclic({r}, {n}) is not uniform with {expected} cocircuits")
        return system

    def is_uniform(self, system: SignSystem, rank: int) -> bool:
        """Every cocircuit vanishes on exactly rank - 1 elements."""
        return all(vector.zero_mask.bit_count() == rank - 1 for vector in system)

    def from_spec(self, spec: str, seed: int = 0) -> SignSystem:
        """Inline generator spec: ``u2n:N``, ``cyclic:R:N`` or ``random:N:PAIRS``."""
        family, *args = spec.strip().split(":")
        try:
            numbers = [int(arg) for arg in args]
        except ValueError:
            raise InvalidInput(f"Generator arguments must be integers: '{spec}'") from None

        if family == "u2n" and len(numbers) == 1:
            return self.u2n(numbers[0])
        if family == "cyclic" and len(numbers) == 2:
            return self.cyclic(*numbers)
        if family == "random" and len(numbers) == 2:
            return self.random_c0c2(numbers[0], numbers[1], seed)
        raise InvalidInput(
            f"Unknown generator spec '{spec}'; use u2n:N, cyclic:R:N or random:N:PAIRS"
        )

    # Near-misses

    def mutate(self, system: SignSystem, kind: MutationKind, seed: int = 0) -> SignSystem:
        """
        Perturb a system by one ± pair.

        The result is not filtered; callers re-check (C0)-(C2) and discard what fails.
        """
        rng = random.Random(seed)
        representatives = self._pair_representatives(system)
        if kind != MutationKind.ADD_RANDOM and not representatives:
            raise InvalidInput(f"Mutation '{kind.value}' needs a nonempty system")

        members = set(system.members)
        if kind == MutationKind.DROP_PAIR:
            chosen = rng.choice(representatives)
            members -= {chosen, -chosen}
        elif kind == MutationKind.FLIP_ENTRY:
            chosen = rng.choice(representatives)
            element = rng.randrange(system.ground.size)
            current = chosen[element].value
            replacement = rng.choice([sign for sign in "+0-" if sign != current])
            text = list(str(chosen))
            text[element] = replacement
            flipped = SignVector.from_string("".join(text), system.ground)
            members -= {chosen, -chosen}
            members |= {flipped, -flipped}
        else:
            added = self._random_nonzero(rng, system.ground)
            members |= {added, -added}

        logger.debug(f"Mutation {kind.value} with seed {seed}: {len(system)} -> {len(members)}")
        return system.with_members(members)

    def random_c0c2(
        self, n: int, pairs: int, seed: int = 0, budget: int = 10_000
    ) -> SignSystem:
        """
        A system of ``pairs`` antipodal pairs satisfying (C0)-(C2).

        Candidates are drawn one at a time and rejected when they would break (C0)-(C2);
        the draws are deterministic given the seed.
        """
        if not 1 <= n <= MAX_RANDOM_SIZE:
            raise InvalidInput(f"random_c0c2 needs 1 <= n <= {MAX_RANDOM_SIZE}, got {n}")
        if not 0 <= pairs <= MAX_RANDOM_PAIRS:
            raise InvalidInput(f"random_c0c2 needs 0 <= pairs <= {MAX_RANDOM_PAIRS}, got {pairs}")

        rng = random.Random(seed)
        ground = GroundSet.standard(n)
        supports: list[int] = []
        vectors: list[SignVector] = []
        draws = 0
        while len(supports) < pairs:
            if draws >= budget:
                raise SamplingBudgetExhausted(
                    f"No (C0)-(C2) system with {pairs} pairs on {n} elements after {budget} draws"
                )
            draws += 1
            candidate = self._random_nonzero(rng, ground)
            support = candidate.support_mask
            # Equal supports are only allowed for X = ±Y, and those are drawn as one pair.
            if any(not support & ~other or not other & ~support for other in supports):
                continue
            supports.append(support)
            vectors.extend((candidate, -candidate))

        logger.debug(f"random_c0c2({n}, {pairs}, seed={seed}) accepted after {draws} draws")
        return SignSystem(ground, tuple(vectors))

    @staticmethod
    def _pair_representatives(system: SignSystem) -> list[SignVector]:
        """One member per ± class, in canonical order."""
        chosen = []
        for vector in system:
            negation = -vector
            if negation not in system or vector.sort_key <= negation.sort_key:
                chosen.append(vector)
        return chosen

    @staticmethod
    def _random_nonzero(rng: random.Random, ground: GroundSet) -> SignVector:
        while True:
            text = "".join(rng.choice("+0-") for _ in range(ground.size))
            vector = SignVector.from_string(text, ground)
            if not vector.is_zero:
                return vector
