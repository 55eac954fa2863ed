"""Resource bounds, read from a JSON file named by ``JETCOVER_CONFIG``.

Example file::

    {"max_hochster_vertices": 18, "max_s": 4, "max_k": 5}

Keys not present keep their defaults.  CLI flags override the file.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace

from .errors import DomainError

ENV_VAR = "JETCOVER_CONFIG"


@dataclass(frozen=True)
class Config:
    max_hochster_vertices: int = 16
    max_s: int = 6
    max_k: int = 7

    def override(self, **kwargs) -> Config:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def to_json(self) -> dict:
        return asdict(self)


def load_config(path: str | None = None) -> Config:
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Config()
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read config {path!r}: {exc}") from None
    if not isinstance(data, dict):
        raise DomainError(f"config {path!r} must hold a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise DomainError(f"unknown config keys {sorted(unknown)} in {path!r}")
    for k, v in data.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise DomainError(f"config key {k!r} must be a nonnegative integer")
    return Config(**data)
