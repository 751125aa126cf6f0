"""Named instance collections for the equivalence harness."""

import random

from core.config import logger
from core.exceptions import SamplingBudgetExhausted
from models.configuration import VectorConfiguration
from models.types import CorpusInstance, MutationKind
from services.axiom_service import AxiomService
from services.generator_service import GeneratorService

# Parallel, antiparallel and special-position columns
HAND_MATRICES: dict[str, list[list[int]]] = {
    "u23-sum": [[1, 0, 1], [0, 1, 1]],
    "identity-2": [[1, 0], [0, 1]],
    "parallel-pair": [[1, 1, 0], [0, 0, 1]],
    "antiparallel-pair": [[1, -1, 0], [0, 0, 1]],
    "rank3-one-sum": [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 0]],
    "rank3-two-sums": [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]],
    "identity-3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "rank1-positive": [[1, 2, 3]],
    "rank1-mixed": [[1, -1, 2]],
    "rank3-coplanar": [[1, 0, 1, 1, 0], [0, 1, 1, -1, 0], [0, 0, 0, 0, 1]],
    "rank3-collinear-three": [[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 0, 1]],
    "rank4-two-sums": [
        [1, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 1],
    ],
    "rank3-doubled": [[1, 1, 0, 0], [0, 0, 1, 1], [1, 1, 1, 2]],
}

MUTATION_SOURCE_CAP = 16


class CorpusService:
    """Builds the realizable corpus and the seeded near-miss corpus."""

    def __init__(
        self, generators: GeneratorService | None = None, axioms: AxiomService | None = None
    ) -> None:
        self.axioms = axioms or AxiomService()
        self.generators = generators or GeneratorService(self.axioms)

    def positive_corpus(self) -> list[CorpusInstance]:
        instances = []
        for r in range(2, 5):
            for n in range(r, 8):
                instances.append(
                    CorpusInstance(
                        name=f"cyclic:{r}:{n}",
                        system=self.generators.cyclic(r, n),
                        rank=r,
                        uniform=True,
                    )
                )
        for n in range(2, 17):
            instances.append(
                CorpusInstance(name=f"u2n:{n}", system=self.generators.u2n(n), rank=2, uniform=True)
            )
        for name, rows in HAND_MATRICES.items():
            config = VectorConfiguration.of(rows)
            instances.append(
                CorpusInstance(
                    name=f"matrix:{name}",
                    system=self.generators.from_matrix(config),
                    rank=config.rank,
                )
            )
        logger.info(f"Positive corpus: {len(instances)} instances")
        return instances

    def negative_corpus(
        self,
        seed: int = 0,
        size: int = 200,
        sources: list[CorpusInstance] | None = None,
    ) -> list[CorpusInstance]:
        """
        Mutants of small realizable instances and random (C0)-(C2) systems.

        Only candidates satisfying (C0)-(C2) are kept; the draws are fixed by ``seed``.
        """
        sources = sources if sources is not None else self.positive_corpus()
        sources = [s for s in sources if 0 < len(s.system) <= MUTATION_SOURCE_CAP]
        kinds = list(MutationKind)
        rng = random.Random(seed)

        instances: list[CorpusInstance] = []
        attempts = 0
        while len(instances) < size:
            if attempts >= 50 * max(size, 1):
                raise SamplingBudgetExhausted(
                    f"Negative corpus stalled at {len(instances)} of {size} instances"
                )
            attempts += 1
            draw = rng.randrange(2**31)
            if sources and attempts % 2:
                source = sources[rng.randrange(len(sources))]
                kind = kinds[rng.randrange(len(kinds))]
                system = self.generators.mutate(source.system, kind, draw)
                name = f"{source.name}/{kind.value}#{draw}"
            else:
                n = rng.randint(3, 6)
                pairs = rng.randint(2, 6)
                try:
                    system = self.generators.random_c0c2(n, pairs, draw, budget=500)
                except SamplingBudgetExhausted:
                    continue
                name = f"random:{n}:{pairs}#{draw}"

            if self.axioms.check_hypothesis(system).passed:
                instances.append(CorpusInstance(name=name, system=system, positive=False))

        logger.info(f"Negative corpus: {len(instances)} instances after {attempts} draws")
        return instances
