"""Optional on-disk cache of enumerated tableau lists."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .tableaux import IncreasingTableau, Partition, enumerate_inc

FORMAT_VERSION = 1
ENV_VAR = "TABKIT_CACHE_DIR"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


class EnumerationCache:
    """Stores ``Inc_k(shape)`` as reading words, one JSON file per key."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path_for(self, shape: Partition, k: int) -> Path:
        parts = "-".join(map(str, shape.parts)) or "empty"
        return self.directory / f"inc_v{FORMAT_VERSION}_{parts}_k{k}.json"

    def get(self, shape: Partition, k: int) -> list[IncreasingTableau] | None:
        path = self.path_for(shape, k)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if data.get("version") != FORMAT_VERSION or data.get("shape") != list(shape.parts) or data.get("k") != k:
            return None
        out = []
        for word in data["words"]:
            it = iter(word)
            rows = tuple(tuple(next(it) for _ in range(p)) for p in shape.parts)
            out.append(IncreasingTableau(shape, rows, k))
        return out

    def put(self, shape: Partition, k: int, tableaux: list[IncreasingTableau]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {"version": FORMAT_VERSION, "shape": list(shape.parts), "k": k,
                   "words": [list(t.reading_word()) for t in tableaux]}
        tmp = self.path_for(shape, k).with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, separators=(",", ":")))
        tmp.replace(self.path_for(shape, k))


def cached_enumerate_inc(shape: Partition, k: int, cache_dir: str | os.PathLike | None = None) -> list[IncreasingTableau]:
    directory = resolve_cache_dir(cache_dir)
    if directory is None:
        return enumerate_inc(shape, k)
    cache = EnumerationCache(directory)
    hit = cache.get(shape, k)
    if hit is not None:
        return hit
    result = enumerate_inc(shape, k)
    cache.put(shape, k, result)
    return result
