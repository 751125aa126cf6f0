"""Integer vector configurations used as a realizability oracle."""

from dataclasses import dataclass

from core.exceptions import InvalidInput


@dataclass(frozen=True)
class VectorConfiguration:
    """
    An r x n integer matrix read column-wise: n vectors in Z^r.

    The rank of the matrix must be exactly r; the generator service checks that with
    exact arithmetic before building cocircuits.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise InvalidInput("Matrix must have at least one row and one column")
        width = len(self.rows[0])
        for number, row in enumerate(self.rows, start=1):
            if len(row) != width:
                raise InvalidInput(f"Matrix row {number} has {len(row)} entries, expected {width}")
        for j, column in enumerate(self.columns):
            if not any(column):
                raise InvalidInput(f"Column {j} is the zero vector; loops are not supported")

    @classmethod
    def of(cls, rows: list[list[int]]) -> "VectorConfiguration":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        """Declared rank r (the number of rows)."""
        return len(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows[0])

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))
