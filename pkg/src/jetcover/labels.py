"""Vertex labels: sort order and the ``x_i`` naming of jet variables."""

from __future__ import annotations

import re
from typing import Iterable

from .errors import DomainError, StructuralError

_DIGITS = re.compile(r"(\d+)")


def label_key(label: str) -> tuple:
    """Sort key for labels: lexicographic, except digit runs compare numerically.

    With this key ``x_2`` sorts before ``x_10``, so jet universes come out
    base-major and index-ascending for any order ``s``.
    """
    parts = _DIGITS.split(label)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


def sort_labels(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(labels, key=label_key))


def check_base_label(label: str) -> None:
    if not label or "_" in label:
        raise StructuralError(
            f"label {label!r} cannot be lifted to jets: base labels must be "
            "nonempty and contain no underscore"
        )


def jet_label(base: str, order: int) -> str:
    return f"{base}_{order}"


def split_jet_label(label: str) -> tuple[str, int]:
    base, sep, idx = label.rpartition("_")
    if not sep or not base or not idx.isdigit():
        raise DomainError(f"{label!r} is not a jet variable label (expected base_index)")
    return base, int(idx)


def jet_universe(base: Iterable[str], s: int) -> tuple[str, ...]:
    """J_s(X) ordered base-major, then by index."""
    if s < 0:
        raise DomainError(f"jet order must be nonnegative, got {s}")
    out = []
    for x in base:
        check_base_label(x)
        out.extend(jet_label(x, i) for i in range(s + 1))
    return tuple(out)
