"""Exact ranks of integer matrices and reduced simplicial homology.

Ranks over the rationals use fraction-free elimination on sparse rows, with
each reduced row divided by the gcd of its entries so numbers stay small.
Ranks over GF(p) reduce every entry modulo ``p``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from ._bits import bits, popcount
from .errors import DomainError

Field = int | str
Row = dict[int, int]


def parse_field(field: Field | None) -> int:
    """Normalize a field description to 0 (rationals) or a prime p.

    Accepts ``None``, ``"Q"``, ``0``, a prime int, or ``"Fp:<p>"``.
    """
    if field is None or field == "Q" or field == 0:
        return 0
    if isinstance(field, str):
        head, _, tail = field.partition(":")
        if head != "Fp" or not tail.isdigit():
            raise DomainError(f"unknown field {field!r}; expected 'Q' or 'Fp:<prime>'")
        field = int(tail)
    p = int(field)
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise DomainError(f"{p} is not prime")
    return p


def field_name(p: int) -> str:
    return "Q" if p == 0 else f"Fp:{p}"


def _normalize(row: Row, p: int) -> Row:
    if p:
        return {c: v % p for c, v in row.items() if v % p}
    row = {c: v for c, v in row.items() if v}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def rank(rows: Iterable[Row], p: int = 0) -> int:
    """Rank of a sparse integer matrix over Q (``p == 0``) or GF(p)."""
    pivots: dict[int, Row] = {}
    for row in rows:
        row = _normalize(row, p)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            if p:
                factor = b * pow(a, -1, p) % p
                new = dict(row)
                for c, v in piv.items():
                    new[c] = (new.get(c, 0) - factor * v) % p
            else:
                new = {c: a * v for c, v in row.items()}
                for c, v in piv.items():
                    new[c] = new.get(c, 0) - b * v
            row = _normalize(new, p)
    return len(pivots)


def dense_rank(matrix: Sequence[Sequence[int]], p: int = 0) -> int:
    return rank(({j: int(v) for j, v in enumerate(r) if v} for r in matrix), p)


def _boundary_rows(faces: Sequence[int], lower_index: dict[int, int]) -> list[Row]:
    """Rows of the boundary map, one per face; signs by position of the removed vertex."""
    rows = []
    for f in faces:
        row: Row = {}
        for pos, v in enumerate(bits(f)):
            row[lower_index[f & ~(1 << v)]] = -1 if pos % 2 else 1
        rows.append(row)
    return rows


def reduced_homology_from_faces(face_masks: Iterable[int], p: int = 0) -> dict[int, int]:
    """Nonzero reduced Betti numbers {i: dim H~_i} of the complex with these faces.

    An empty list is the void complex, with no reduced homology.  The list
    ``[0]`` is the complex {emptyset}, whose only homology is H~_{-1} of
    dimension one.
    """
    by_size: dict[int, list[int]] = {}
    for f in face_masks:
        by_size.setdefault(popcount(f), []).append(f)
    if not by_size:
        return {}
    top = max(by_size)
    ranks = {0: 0}
    for k in range(1, top + 1):
        lower = by_size.get(k - 1, [])
        idx = {f: i for i, f in enumerate(lower)}
        ranks[k] = rank(_boundary_rows(by_size.get(k, []), idx), p) if lower else 0
    ranks[top + 1] = 0
    out = {}
    for k in range(0, top + 1):
        # chains of size k live in degree k - 1
        h = len(by_size.get(k, [])) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements, largest first."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (-popcount(m), m)):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def strong_collapse(facets: Sequence[int]) -> list[int]:
    """Repeatedly delete dominated vertices; the homotopy type is unchanged.

    A vertex v is dominated when some other vertex lies in every facet that
    contains v.  The returned facets describe the core.
    """
    facets = maximal_masks(facets)
    while True:
        support = 0
        for f in facets:
            support |= f
        for v in bits(support):
            common = -1
            for f in facets:
                if f >> v & 1:
                    common &= f
            if common & ~(1 << v):
                facets = maximal_masks(f & ~(1 << v) for f in facets)
                break
        else:
            return facets


def faces_of_facets(facets: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for f in facets:
        sub = f
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return out


def reduced_homology_from_facets(facets: Sequence[int], p: int = 0, collapse: bool = True) -> dict[int, int]:
    """Like :func:`reduced_homology_from_faces`, from facet masks.

    An empty facet list is the void complex; ``[0]`` is {emptyset}.
    """
    if not facets:
        return {}
    if collapse:
        facets = strong_collapse(facets)
        if len(facets) == 1 and facets[0]:
            return {}
    return reduced_homology_from_faces(faces_of_facets(facets), p)


def reduced_homology(complex_, field: Field | None = None) -> dict[int, int]:
    return reduced_homology_from_faces(complex_.face_masks, parse_field(field))


__all__ = [
    "dense_rank",
    "faces_of_facets",
    "field_name",
    "maximal_masks",
    "parse_field",
    "rank",
    "reduced_homology",
    "reduced_homology_from_faces",
    "reduced_homology_from_facets",
    "strong_collapse",
]
