"""Define the configurable parameters of a run."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from typing import Any, Literal, Mapping, Optional, Type, TypeVar

Command = Literal[
    "volume", "series", "zograf", "tensor", "coords", "betti", "asym", "check"
]
OutputFormat = Literal["text", "json", "csv"]


@dataclass(kw_only=True)
class RunConfig:
    """Configuration of a single CLI invocation.

    The order is the single knob that bounds every truncation performed by the
    invocation; the seed makes the randomized property suites reproducible.
    """

    command: Optional[Command] = field(
        default=None,
        metadata={"description": "Subcommand being executed."},
    )

    order: int = field(
        default=6,
        metadata={
            "description": "Truncation order used by every series and table in the run."
        },
    )

    output_format: OutputFormat = field(
        default="text",
        metadata={"description": "Rendering of the result: text, json or csv."},
    )

    output_path: Optional[str] = field(
        default=None,
        metadata={"description": "Write the result here instead of stdout."},
    )

    correlator_table_path: Optional[str] = field(
        default=None,
        metadata={
            "description": "JSON-lines table of correlators for genus >= 1 volumes."
        },
    )

    seed: Optional[int] = field(
        default=None,
        metadata={"description": "Seed of the randomized property suites."},
    )

    cache_dir: Optional[str] = field(
        default=None,
        metadata={
            "description": "Directory where the volume memo table is persisted between runs."
        },
    )

    factorial_cache_bound: int = field(
        default=512,
        metadata={"description": "Largest n whose factorial is kept in memory."},
    )

    @classmethod
    def from_mapping(
        cls: Type[T], mapping: Optional[Mapping[str, Any]] = None
    ) -> T:
        """Create a RunConfig from an arbitrary mapping, ignoring unknown keys.

        Args:
            mapping: Values to use; ``None`` entries are skipped so that unset
                CLI options fall back to the defaults.

        Returns:
            T: A configuration instance.
        """
        mapping = mapping or {}
        _fields = {f.name for f in fields(cls) if f.init}
        return cls(
            **{k: v for k, v in mapping.items() if k in _fields and v is not None}
        )

    @classmethod
    def from_env(cls: Type[T], **overrides: Any) -> T:
        """Create a RunConfig from ``WPVOL_*`` environment variables and overrides."""
        values: dict[str, Any] = {
            "cache_dir": os.getenv("WPVOL_CACHE_DIR") or None,
            "correlator_table_path": os.getenv("WPVOL_CORRELATOR_TABLE") or None,
        }
        bound = os.getenv("WPVOL_FACTORIAL_CACHE")
        if bound:
            values["factorial_cache_bound"] = int(bound)
        values.update(overrides)
        return cls.from_mapping(values)


T = TypeVar("T", bound=RunConfig)
