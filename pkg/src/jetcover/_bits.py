"""Bitset helpers.  Subsets of a vertex universe are Python ints."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(items: Iterable[str], index: dict[str, int]) -> int:
    mask = 0
    for item in items:
        mask |= 1 << index[item]
    return mask


def from_mask(mask: int, labels: Sequence[str]) -> frozenset[str]:
    return frozenset(labels[i] for i in bits(mask))


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of sets, sorted by (size, value)."""
    ordered = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(edges: Sequence[int]) -> list[int]:
    """All inclusion-minimal transversals of a family of nonempty sets.

    Berge's sequential algorithm: the transversals of the first ``i`` edges
    are extended by each vertex of edge ``i + 1`` that they miss, and the
    result is minimalized before moving on.
    """
    covers = [0]
    for edge in sorted(set(edges), key=lambda m: (popcount(m), m)):
        if edge == 0:
            return []
        nxt = []
        for c in covers:
            if c & edge:
                nxt.append(c)
            else:
                nxt.extend(c | (1 << v) for v in bits(edge))
        covers = minimal_masks(nxt)
    return covers


def is_transversal(mask: int, edges: Iterable[int]) -> bool:
    return all(mask & e for e in edges)
