"""On-disk cache of fusion results, one JSON file per key."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .fusion import FusionResult
from .serialize import dumps, fraction_str, result_from_json, result_to_json
from .tableaux import StandardTableau

__all__ = ["CacheKey", "ResultCache", "default_cache_dir"]

ENV_VAR = "FUSIONQ_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "fusionq"


@dataclass(frozen=True)
class CacheKey:
    tableau: StandardTableau
    variant: str
    kind: str
    mode: str
    q0: Fraction | None = None
    # picks q0 from the seeded pool when numeric mode has no explicit q0
    seed: int | None = None

    def canonical(self) -> str:
        doc = {
            "shape": list(self.tableau.shape),
            "tableau": self.tableau.to_lists(),
            "variant": self.variant,
            "kind": self.kind,
            "mode": self.mode,
            "q0": None if self.q0 is None else fraction_str(self.q0),
        }
        if self.mode == "numeric" and self.q0 is None:
            doc["seed"] = self.seed
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode("utf-8")).hexdigest()


class ResultCache:
    """Write-once-per-key store; files are replaced atomically."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, key: CacheKey) -> Path:
        return self.directory / f"{key.digest()}.json"

    def get(self, key: CacheKey) -> FusionResult | None:
        p = self.path(key)
        try:
            text = p.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        doc = json.loads(text)
        return result_from_json(doc["result"])

    def put(self, key: CacheKey, result: FusionResult) -> Path:
        p = self.path(key)
        if p.exists():
            return p
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {"key": json.loads(key.canonical()), "created": time.time(),
               "result": result_to_json(result)}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(dumps(doc))
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return p

    def get_or_compute(self, key: CacheKey, compute: Callable[[], FusionResult]) -> FusionResult:
        hit = self.get(key)
        if hit is not None:
            return hit
        result = compute()
        self.put(key, result)
        return result
