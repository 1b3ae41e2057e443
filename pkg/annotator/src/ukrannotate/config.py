"""Adapter configuration and the capability contract backends must meet."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

#: Annotation layers the downstream metric engine cannot work without.
REQUIRED_LAYERS = frozenset({"lemma", "upos", "feats", "head", "deprel"})


@dataclass(frozen=True)
class AdapterConfig:
    """How a batch run annotates: which pipeline, how, and where to."""

    model: str = "dict-uk-0.1"
    batch_size: int = 32
    encoding: str = "utf-8"
    output_dir: Path = field(default_factory=lambda: Path("."))

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if not self.model:
            raise ValueError("model identifier must be non-empty")


def check_capabilities(model: str, provided: frozenset[str]) -> None:
    """Refuse to run a pipeline that cannot emit every required layer."""
    missing = REQUIRED_LAYERS - provided
    if missing:
        raise ValueError(
            f"pipeline {model!r} does not emit required layer(s): "
            f"{', '.join(sorted(missing))}")
