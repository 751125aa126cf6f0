"""Base repository for plain-text interchange files."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar

from core.config import logger
from core.exceptions import InvalidInput

ModelType = TypeVar("ModelType")


class TextFileRepository(ABC, Generic[ModelType]):
    """Reads and writes one model type in a line-oriented text format."""

    @abstractmethod
    def parse(self, text: str) -> ModelType:
        """Build the model from file contents."""
        pass

    @abstractmethod
    def format(self, entity: ModelType) -> str:
        """Render the model in its canonical text form."""
        pass

    def read(self, path: Path) -> ModelType:
        """Read and parse a file."""
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidInput(f"Cannot read {path}: {e.strerror}") from e
        logger.debug(f"Read {len(text)} bytes from {path}")
        return self.parse(text)

    def write(self, entity: ModelType, path: Path) -> None:
        """Write the canonical form of an entity."""
        path.write_text(self.format(entity), encoding="utf-8")
        logger.debug(f"Wrote {path}")

    @staticmethod
    def content_lines(text: str) -> list[tuple[int, str]]:
        """Numbered lines with blanks and '#' comments removed."""
        lines = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                lines.append((number, line))
        return lines
