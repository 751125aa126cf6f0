"""Big face lattice of a sign system."""

from dataclasses import dataclass
from functools import cached_property

from core.exceptions import NotACovector
from models.sign_system import SignSystem
from models.sign_vector import SignVector, iter_bits


@dataclass(frozen=True)
class FaceLattice:
    """
    Covectors L(C*) ordered by ≤, with an artificial top 1̂ above everything.

    Per-covector data is aligned with ``covectors.members``. ``below[i]`` is a bit mask over
    covector indices of everything strictly below covector ``i``; ``lower_covers[i]`` lists
    the covectors it covers. ``heights[i]`` is the length of a longest chain from the zero
    vector, which is the rank function when the lattice is graded.
    """

    base: SignSystem
    covectors: SignSystem
    heights: tuple[int, ...]
    below: tuple[int, ...]
    lower_covers: tuple[tuple[int, ...], ...]
    atom_indices: tuple[int, ...]
    coatom_indices: tuple[int, ...]
    graded: bool
    top_rank: int

    has_top = True

    @cached_property
    def above(self) -> tuple[int, ...]:
        """Bit masks of everything strictly above each covector."""
        masks = [0] * len(self.covectors)
        for i, mask in enumerate(self.below):
            for j in iter_bits(mask):
                masks[j] |= 1 << i
        return tuple(masks)

    @property
    def zero_index(self) -> int:
        index = self.covectors.index_of(SignVector.zero(self.covectors.ground))
        assert index is not None
        return index

    def index(self, vector: SignVector) -> int:
        index = self.covectors.index_of(vector)
        if index is None:
            raise NotACovector(f"'{vector}' is not a covector of this system")
        return index

    def height(self, vector: SignVector) -> int:
        return self.heights[self.index(vector)]

    @property
    def atoms(self) -> tuple[SignVector, ...]:
        return tuple(self.covectors.members[i] for i in self.atom_indices)

    @property
    def coatoms(self) -> tuple[SignVector, ...]:
        return tuple(self.covectors.members[i] for i in self.coatom_indices)
