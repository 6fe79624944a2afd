"""Bundled data-table loading with an environment override.

Tables ship inside the package under ``modkit/data``. Setting
``MODKIT_DATA_DIR`` points every default loader at an alternative
directory containing files with the same names.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Callable, TypeVar

ENV_VAR = "MODKIT_DATA_DIR"

_BUNDLED = Path(__file__).parent / "data"

T = TypeVar("T")

_cache: dict[tuple[str, str], object] = {}


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else _BUNDLED


def cached(key: str, loader: Callable[[Path], T]) -> T:
    """Load-once per (key, directory); directory resolved at call time so
    tests can flip the env var."""
    directory = data_dir()
    cache_key = (key, str(directory))
    if cache_key not in _cache:
        _cache[cache_key] = loader(directory)
    return _cache[cache_key]  # type: ignore[return-value]
