"""Sign-system file format.

Optional header ``# ground: e0,e1,...``, then one sign string per line; blank lines and
other ``#`` comments are ignored.
"""

import re

from core.exceptions import InvalidInput, OMException
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, SignVector
from repositories.base import TextFileRepository

GROUND_HEADER = re.compile(r"^#\s*ground\s*:\s*(.*)$", re.IGNORECASE)


class SignSystemRepository(TextFileRepository[SignSystem]):
    """Repository for SignSystem files."""

    def parse(self, text: str) -> SignSystem:
        ground: GroundSet | None = None
        for number, raw in enumerate(text.splitlines(), start=1):
            match = GROUND_HEADER.match(raw.strip())
            if match:
                labels = tuple(label.strip() for label in match.group(1).split(","))
                if any(not label for label in labels):
                    raise InvalidInput(f"line {number}: ground header contains an empty label")
                try:
                    ground = GroundSet(labels)
                except OMException as e:
                    raise InvalidInput(f"line {number}: {e.message}") from e
                break

        vectors: list[SignVector] = []
        for number, line in self.content_lines(text):
            if ground is None:
                ground = GroundSet.standard(len(line))
            try:
                vectors.append(SignVector.from_string(line, ground))
            except OMException as e:
                raise InvalidInput(f"line {number}: {e.message}") from e

        if ground is None:
            raise InvalidInput("Empty sign-system file needs a '# ground:' header")
        return SignSystem(ground, tuple(vectors))

    def format(self, entity: SignSystem) -> str:
        lines = [f"# ground: {','.join(entity.ground.labels)}"]
        lines.extend(entity.strings())
        return "\n".join(lines) + "\n"
