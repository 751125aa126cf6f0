"""Sign vectors over an indexed ground set.

A sign vector X is stored as two disjoint bit masks: ``pos`` (X+) and ``neg`` (X-).
Element ``e`` is bit ``1 << e``.
"""

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from core.config import settings
from core.exceptions import GroundSetMismatch, InvalidInput, ResourceLimitExceeded


class Sign(str, enum.Enum):
    PLUS = "+"
    ZERO = "0"
    MINUS = "-"


# Canonical order: + < 0 < -
SIGN_RANK = {Sign.PLUS: 0, Sign.ZERO: 1, Sign.MINUS: 2}


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


@dataclass(frozen=True)
class GroundSet:
    """Ground set E = {0, ..., n-1}; labels are cosmetic."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) < 1:
            raise InvalidInput("Ground set must have at least one element")
        if len(self.labels) > settings.max_ground_size:
            raise ResourceLimitExceeded(
                f"Ground set of size {len(self.labels)} exceeds the supported maximum "
                f"of {settings.max_ground_size}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidInput(f"Ground set labels are not distinct: {', '.join(self.labels)}")

    @classmethod
    def standard(cls, size: int) -> "GroundSet":
        """Ground set labelled e0..e{n-1}."""
        return cls(tuple(f"e{i}" for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInput(f"Unknown ground-set element: {label}") from None


@dataclass(frozen=True, eq=False)
class SignVector:
    """Signed set X = (X+, X-) on a ground set."""

    ground: GroundSet
    pos: int = 0
    neg: int = 0
    _key: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.pos & self.neg:
            raise InvalidInput("Positive and negative parts of a sign vector must be disjoint")
        if (self.pos | self.neg) & ~self.ground.full_mask:
            raise InvalidInput("Sign vector reaches outside its ground set")
        key = tuple(
            0 if self.pos >> e & 1 else 2 if self.neg >> e & 1 else 1
            for e in range(self.ground.size)
        )
        object.__setattr__(self, "_key", key)

    # Construction

    @classmethod
    def from_string(cls, text: str, ground: GroundSet | None = None) -> "SignVector":
        """Parse a string over {'+', '0', '-'}."""
        if ground is None:
            ground = GroundSet.standard(len(text))
        if len(text) != ground.size:
            raise InvalidInput(
                f"Sign string '{text}' has length {len(text)}, ground set has {ground.size}"
            )
        pos = neg = 0
        for e, char in enumerate(text):
            if char == Sign.PLUS.value:
                pos |= 1 << e
            elif char == Sign.MINUS.value:
                neg |= 1 << e
            elif char != Sign.ZERO.value:
                raise InvalidInput(f"Invalid sign character '{char}' in '{text}'")
        return cls(ground, pos, neg)

    @classmethod
    def zero(cls, ground: GroundSet) -> "SignVector":
        return cls(ground, 0, 0)

    # Identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignVector):
            return NotImplemented
        return (
            self.pos == other.pos
            and self.neg == other.neg
            and (self.ground is other.ground or self.ground == other.ground)
        )

    def __hash__(self) -> int:
        return hash((self.pos, self.neg))

    def __str__(self) -> str:
        return "".join(sign.value for sign in self.signs)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"

    def __getitem__(self, element: int) -> Sign:
        if self.pos >> element & 1:
            return Sign.PLUS
        if self.neg >> element & 1:
            return Sign.MINUS
        return Sign.ZERO

    @property
    def signs(self) -> tuple[Sign, ...]:
        return tuple(self[e] for e in range(self.ground.size))

    @property
    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key with + < 0 < -."""
        return self._key

    @property
    def is_zero(self) -> bool:
        return not (self.pos | self.neg)

    # Supports

    @property
    def support_mask(self) -> int:
        return self.pos | self.neg

    @property
    def zero_mask(self) -> int:
        return self.ground.full_mask & ~(self.pos | self.neg)

    def support(self) -> frozenset[int]:
        """X+ ∪ X-."""
        return frozenset(iter_bits(self.support_mask))

    def zero_support(self) -> frozenset[int]:
        """E minus the support."""
        return frozenset(iter_bits(self.zero_mask))

    # Algebra

    def _require_same_ground(self, other: "SignVector") -> None:
        if self.ground is not other.ground and self.ground != other.ground:
            raise GroundSetMismatch(f"Cannot combine '{self}' and '{other}': ground sets differ")

    def negate(self) -> "SignVector":
        return SignVector(self.ground, self.neg, self.pos)

    def __neg__(self) -> "SignVector":
        return self.negate()

    def separator_mask(self, other: "SignVector") -> int:
        self._require_same_ground(other)
        return (self.pos & other.neg) | (self.neg & other.pos)

    def separator(self, other: "SignVector") -> frozenset[int]:
        """S(X, Y) = (X+ ∩ Y-) ∪ (X- ∩ Y+)."""
        return frozenset(iter_bits(self.separator_mask(other)))

    def compose(self, other: "SignVector") -> "SignVector":
        """X∘Y: X wherever X is nonzero, Y elsewhere."""
        self._require_same_ground(other)
        return SignVector(
            self.ground,
            self.pos | (other.pos & ~self.neg),
            self.neg | (other.neg & ~self.pos),
        )

    def leq(self, other: "SignVector") -> bool:
        """Y ≤ X iff S(X, Y) is empty and the support of Y lies in the support of X."""
        self._require_same_ground(other)
        return not (self.pos & ~other.pos) and not (self.neg & ~other.neg)

    def restrict(self, kept: tuple[int, ...], ground: GroundSet) -> "SignVector":
        """Keep the elements ``kept`` (old indices), re-indexed densely onto ``ground``."""
        pos = neg = 0
        for new, old in enumerate(kept):
            if self.pos >> old & 1:
                pos |= 1 << new
            elif self.neg >> old & 1:
                neg |= 1 << new
        return SignVector(ground, pos, neg)


def compose_seq(vectors: Iterable[SignVector], ground: GroundSet) -> SignVector:
    """Left fold of composition; the empty composition is the zero vector."""
    result = SignVector.zero(ground)
    for vector in vectors:
        result = result.compose(vector)
    return result
