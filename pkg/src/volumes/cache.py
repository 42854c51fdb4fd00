"""Process-wide memo table of genus-zero volumes V(m)."""

from __future__ import annotations

import threading
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, Optional, Tuple, Union

import msgspec

from exact_core import MultiIndex, format_rational, parse_rational
from shared.logger import get_logger

logger = get_logger(__name__)

CACHE_FILE_NAME = "volumes.json"


class VolumeCache:
    """Thread-safe map ``MultiIndex -> V(m)``.

    Entries are only ever added with their exact value, so concurrent readers
    observe a pure lookup table. Persisted as ``{"2,1": "161/48", ...}``.
    """

    def __init__(self) -> None:
        self._values: Dict[MultiIndex, Fraction] = {}
        self._lock = threading.RLock()

    def get(self, m: MultiIndex) -> Optional[Fraction]:
        return self._values.get(m)

    def put(self, m: MultiIndex, value: Fraction) -> Fraction:
        with self._lock:
            return self._values.setdefault(m, value)

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def __contains__(self, m: MultiIndex) -> bool:
        return m in self._values

    def __len__(self) -> int:
        return len(self._values)

    def items(self) -> Iterator[Tuple[MultiIndex, Fraction]]:
        with self._lock:
            snapshot = sorted(self._values.items())
        return iter(snapshot)

    def dump(self, path: Union[str, Path]) -> Path:
        """Write the table as JSON; keys in canonical order so the bytes are stable."""
        path = Path(path)
        if path.is_dir():
            path = path / CACHE_FILE_NAME
        payload = {m.to_text(): format_rational(v) for m, v in self.items()}
        path.write_bytes(msgspec.json.encode(payload))
        logger.debug(f"Dumped {len(payload)} volumes to {path}")
        return path

    def load(self, path: Union[str, Path]) -> int:
        """Merge a dumped table; returns the number of entries read."""
        path = Path(path)
        if path.is_dir():
            path = path / CACHE_FILE_NAME
        if not path.exists():
            return 0
        payload = msgspec.json.decode(path.read_bytes(), type=Dict[str, str])
        for text, value in payload.items():
            self.put(MultiIndex.parse(text), parse_rational(value))
        logger.debug(f"Loaded {len(payload)} volumes from {path}")
        return len(payload)


VOLUME_CACHE = VolumeCache()
