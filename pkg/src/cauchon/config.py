"""Run configuration and the on-disk cache of rendered command output."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass
from dataclasses import field as dc_field
from pathlib import Path
from typing import Callable, Optional

CACHE_ENV = "CAUCHON_CACHE_DIR"


@dataclass(frozen=True)
class RunConfig:
    m: int = 2
    p: int = 2
    seed: int = 0
    trials: int = 5
    field: str = "prime"
    cache_dir: Optional[str] = None
    format: str = "json"
    # command-specific arguments, as a sorted tuple of (name, value) pairs
    extra: tuple = dc_field(default_factory=tuple)

    def key(self, command: str) -> str:
        payload = asdict(self)
        payload.pop("cache_dir")
        payload["command"] = command
        payload["extra"] = [list(kv) for kv in self.extra]
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def resolved_cache_dir(self) -> Optional[Path]:
        d = os.environ.get(CACHE_ENV) or self.cache_dir
        return Path(d) if d else None


class Cache:
    """One file per (command, shape, seed, config hash); writes are atomic."""

    def __init__(self, root: Path):
        self.root = Path(root)

    def path(self, command: str, config: RunConfig) -> Path:
        return self.root / f"{command}-{config.m}x{config.p}-seed{config.seed}-{config.key(command)[:16]}.out"

    def get(self, command: str, config: RunConfig) -> Optional[str]:
        path = self.path(command, config)
        if path.exists():
            return path.read_text(encoding="utf-8")
        return None

    def put(self, command: str, config: RunConfig, text: str):
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, self.path(command, config))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, command: str, config: RunConfig, compute: Callable[[], str]) -> str:
        hit = self.get(command, config)
        if hit is not None:
            return hit
        text = compute()
        self.put(command, config, text)
        return text
