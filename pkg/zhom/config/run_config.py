from typing import Literal

from pydantic import Field, field_validator

from ..oracle.brute import DEFAULT_SIZE_GUARD
from .base_config import ConfigBaseModel


class RunConfig(ConfigBaseModel):
    """Run config"""

    size_guard: int = Field(default=DEFAULT_SIZE_GUARD, gt=0)
    """Largest number of assignments (or polynomial points) the brute-force oracle may enumerate"""
    threads: int = Field(default=1, ge=1)
    """Oracle worker threads; results do not depend on it"""
    digits: int = Field(default=12, ge=1, le=60)
    """Digits of the printed decimal approximation"""
    mode: Literal["auto", "fast", "brute"] = "auto"
    """Evaluation mode: auto decides first, then evaluates fast when tractable and brute otherwise"""
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    """Console log level"""

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value: object) -> object:
        return value.upper() if isinstance(value, str) else value


class CorpusConfig(ConfigBaseModel):
    """Corpus run config"""

    entries: list[str] = Field(default_factory=list)
    """Corpus entry names, in table order; empty means every registered entry"""
    seed: int = 2024
    """Seed of the graph suite the fast/brute agreement is checked on"""
    graph_count: int = Field(default=100, ge=0)
    """Graphs of the suite checked per tractable entry"""
    max_vertices: int = Field(default=6, ge=1)
    """Largest graph of the suite"""
    max_total_multiplicity: int = Field(default=12, ge=0)
    """Largest total edge multiplicity of the suite"""
    run: RunConfig = Field(default_factory=RunConfig)
    """Run settings shared with the other subcommands"""
