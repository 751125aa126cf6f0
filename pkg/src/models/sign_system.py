"""Canonically ordered, duplicate-free collections of sign vectors."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from core.exceptions import GroundSetMismatch, InvalidInput
from models.sign_vector import GroundSet, SignVector


@dataclass(frozen=True)
class SignSystem:
    """
    A system of signed sets sharing one ground set.

    Members are deduplicated and sorted lexicographically with + < 0 < -, so two
    systems with the same member set always list them in the same order.
    ``origin`` maps each element to its index in the system it was contracted from.
    """

    ground: GroundSet
    members: tuple[SignVector, ...] = ()
    origin: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        unique: dict[tuple[int, int], SignVector] = {}
        for vector in self.members:
            if vector.ground is not self.ground and vector.ground != self.ground:
                raise GroundSetMismatch(
                    f"Sign vector '{vector}' does not live on the system's ground set"
                )
            unique.setdefault((vector.pos, vector.neg), vector)
        ordered = tuple(sorted(unique.values(), key=lambda v: v.sort_key))
        object.__setattr__(self, "members", ordered)
        if self.origin is not None and len(self.origin) != self.ground.size:
            raise InvalidInput("Index mapping must cover the whole ground set")

    @classmethod
    def from_strings(
        cls, strings: Iterable[str], ground: GroundSet | None = None
    ) -> "SignSystem":
        strings = list(strings)
        if ground is None:
            if not strings:
                raise InvalidInput("Cannot infer the ground set of an empty system")
            ground = GroundSet.standard(len(strings[0]))
        return cls(ground, tuple(SignVector.from_string(s, ground) for s in strings))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SignVector]:
        return iter(self.members)

    def __contains__(self, vector: object) -> bool:
        return vector in self._positions

    @cached_property
    def _positions(self) -> dict[SignVector, int]:
        return {vector: i for i, vector in enumerate(self.members)}

    def index_of(self, vector: SignVector) -> int | None:
        return self._positions.get(vector)

    def strings(self) -> list[str]:
        return [str(vector) for vector in self.members]

    def negated(self) -> "SignSystem":
        """Global negation X -> -X of every member."""
        return SignSystem(self.ground, tuple(-vector for vector in self.members), self.origin)

    def with_members(self, vectors: Iterable[SignVector]) -> "SignSystem":
        return SignSystem(self.ground, tuple(vectors), self.origin)
