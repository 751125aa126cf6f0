"""Matrix file format: one row per line, integers separated by whitespace."""

from core.exceptions import InvalidInput
from models.configuration import VectorConfiguration
from repositories.base import TextFileRepository


class MatrixRepository(TextFileRepository[VectorConfiguration]):
    """Repository for integer vector configurations."""

    def parse(self, text: str) -> VectorConfiguration:
        rows: list[list[int]] = []
        for number, line in self.content_lines(text):
            try:
                rows.append([int(token) for token in line.split()])
            except ValueError:
                raise InvalidInput(f"line {number}: matrix entries must be integers") from None
        if not rows:
            raise InvalidInput("Matrix file has no rows")
        return VectorConfiguration.of(rows)

    def format(self, entity: VectorConfiguration) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in entity.rows) + "\n"
