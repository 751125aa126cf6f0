"""Domain types and value objects."""

import enum
from dataclasses import dataclass

from core.config import settings
from models.sign_system import SignSystem


class MutationKind(str, enum.Enum):
    DROP_PAIR = "drop-pair"
    FLIP_ENTRY = "flip-entry"
    ADD_RANDOM = "add-random"


class GraphFormat(str, enum.Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


@dataclass(frozen=True)
class EnumerationPolicy:
    """
    Which tuples of cocircuits the hull checks visit.

    Systems with at most ``exhaustive_cap`` members get every subset (deduplicated by
    hull signature); larger systems get every pair plus ``sample_count`` random larger
    subsets drawn with ``seed``.
    """

    exhaustive_cap: int = 16
    sample_count: int = 1_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.exhaustive_cap < 0 or self.sample_count < 0:
            raise ValueError("Enumeration policy bounds must be nonnegative")

    @classmethod
    def from_settings(cls) -> "EnumerationPolicy":
        return cls(
            exhaustive_cap=settings.exhaustive_cap,
            sample_count=settings.sample_count,
            seed=settings.seed,
        )

    def is_exhaustive(self, size: int) -> bool:
        return size <= self.exhaustive_cap


@dataclass(frozen=True)
class CorpusInstance:
    """A named system of the test corpus."""

    name: str
    system: SignSystem
    rank: int | None = None
    uniform: bool = False
    positive: bool = True
