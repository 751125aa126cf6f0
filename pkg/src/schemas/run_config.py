from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, Field, model_validator

from core.config import settings
from models.types import EnumerationPolicy, GraphFormat


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    # Commands that build their own instances and take no input system
    SOURCELESS: ClassVar[frozenset[str]] = frozenset({"bench", "corpus"})

    command: str
    input_path: Path | None = None
    gen_spec: str | None = None
    output_format: GraphFormat = GraphFormat.TEXT
    covector_cap: int = Field(default=settings.covector_cap, gt=0)
    time_limit_seconds: float = Field(default=settings.closure_time_limit_seconds, gt=0)
    exhaustive_cap: int = Field(default=settings.exhaustive_cap, ge=0)
    sample_count: int = Field(default=settings.sample_count, ge=0)
    seed: int = settings.seed
    jobs: int = Field(default=settings.jobs, ge=1)

    @model_validator(mode="after")
    def check_single_input(self) -> "RunConfig":
        given = (self.input_path is not None) + (self.gen_spec is not None)
        if self.command in self.SOURCELESS:
            if given:
                raise ValueError(f"{self.command} takes no input system")
        elif given != 1:
            raise ValueError("Give exactly one input: a file path or --gen")
        return self

    @property
    def policy(self) -> EnumerationPolicy:
        return EnumerationPolicy(
            exhaustive_cap=self.exhaustive_cap,
            sample_count=self.sample_count,
            seed=self.seed,
        )
