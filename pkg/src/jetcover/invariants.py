"""Lifting functions and matrices, and the Stanley-Reisner invariants they transform.

Covers f-vectors, Hilbert series, Betti tables via Hochster's formula,
regularity, linear resolutions and cochordality.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Mapping

import numpy as np

from ._bits import popcount
from .clutter import FVector, Graph, SimplicialComplex, complex_from_ideal, is_chordal, edge_ideal
from .errors import DomainError, ResourceLimitError
from .homology import field_name, maximal_masks, parse_field, reduced_homology_from_facets
from .ideals import MonomialIdeal

log = logging.getLogger(__name__)


def lifting_function(s: int, j: int, k: int) -> int:
    """ell_s(j, k) by the recursion over the number of lifts of one vertex."""
    if min(s, j, k) < 0:
        raise DomainError(f"lifting function needs s, j, k >= 0, got {(s, j, k)}")
    return _lift(s, j, k)


@lru_cache(maxsize=None)
def _lift(s: int, j: int, k: int) -> int:
    if k < j or k > (s + 1) * j:
        return 0
    if j == 0:
        return 1
    return sum(comb(s + 1, i) * _lift(s, j - 1, k - i) for i in range(1, min(k, s + 1) + 1))


def lifting_function_closed_form(s: int, j: int, k: int) -> int:
    """ell_s(j, k) as a sum over positive compositions a of k into j parts of prod C(s+1, a_h)."""
    if min(s, j, k) < 0:
        raise DomainError(f"lifting function needs s, j, k >= 0, got {(s, j, k)}")
    total = 0
    for a in product(range(1, s + 2), repeat=j):
        if sum(a) == k:
            term = 1
            for ah in a:
                term *= comb(s + 1, ah)
            total += term
    return total


@dataclass(frozen=True)
class LiftingMatrix:
    s: int
    entries: np.ndarray

    @property
    def max_j(self) -> int:
        return self.entries.shape[0] - 1

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LiftingMatrix) and self.s == other.s and self.tolist() == other.tolist()

    def __hash__(self) -> int:
        return hash((self.s, tuple(map(tuple, self.tolist()))))


def lifting_matrix(s: int, max_j: int) -> LiftingMatrix:
    """(max_j + 1) x ((s+1) max_j + 1) matrix of ell_s(j, k), as exact Python ints."""
    if s < 0 or max_j < 0:
        raise DomainError(f"lifting matrix needs s, max_j >= 0, got {(s, max_j)}")
    cols = (s + 1) * max_j + 1
    m = np.empty((max_j + 1, cols), dtype=object)
    for j in range(max_j + 1):
        for k in range(cols):
            m[j, k] = _lift(s, j, k)
    return LiftingMatrix(s, m)


def transform_f_vector(f: FVector | Iterable[int], s: int) -> FVector:
    """f-vector of the principal-jet complex: f_k = sum_j f_j ell_s(j+1, k+1)."""
    entries = list(f)
    if not entries:
        return FVector(())
    L = lifting_matrix(s, len(entries) - 1).entries
    row = np.array(entries, dtype=object) @ L
    return FVector(tuple(int(v) for v in row))


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denom_exp, numerator coefficients from t^0 upward."""

    numerator: tuple[int, ...]
    denom_exp: int

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denomExp": self.denom_exp}

    @classmethod
    def from_json(cls, data: Mapping) -> HilbertSeries:
        return cls(tuple(int(c) for c in data["numerator"]), int(data["denomExp"]))

    def coefficients(self, up_to: int) -> list[int]:
        """Power-series coefficients H(0..up_to), i.e. dimensions of graded pieces."""
        out = []
        for n in range(up_to + 1):
            d = self.denom_exp
            if d == 0:
                out.append(self.numerator[n] if n < len(self.numerator) else 0)
                continue
            out.append(sum(c * comb(n - i + d - 1, d - 1) for i, c in enumerate(self.numerator) if i <= n))
        return out

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                t = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c) if (c != 1 or not t) else ""
                terms.append(f"{coef}{'*' if coef and t else ''}{t}")
        num = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"({num}) / (1 - t)^{self.denom_exp}"


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hilbert_series(f: FVector | Iterable[int]) -> HilbertSeries:
    """Sum_{i=0}^{d} f_{i-1} t^i (1-t)^{d-i} over (1-t)^d, with d = len(f) - 1."""
    entries = list(f)
    if not entries:
        raise DomainError("the void complex has no Stanley-Reisner ring")
    d = len(entries) - 1
    num = [0] * (d + 1)
    for i, fi in enumerate(entries):
        poly = [0] * i + [1]
        for _ in range(d - i):
            poly = _poly_mul(poly, [1, -1])
        for n, c in enumerate(poly):
            num[n] += fi * c
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), d)


def dimension_and_multiplicity(f: FVector | Iterable[int]) -> tuple[int, int]:
    f = f if isinstance(f, FVector) else FVector(tuple(f))
    if not len(f):
        raise DomainError("the void complex has no dimension")
    return f.krull_dimension, f.multiplicity


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}, stored sparsely as {(i, j): value}."""

    entries: Mapping[tuple[int, int], int]
    field: str = "Q"

    def __post_init__(self):
        clean = {}
        for (i, j), v in dict(self.entries).items():
            i, j, v = int(i), int(j), int(v)
            if v < 0:
                raise DomainError(f"negative Betti number at {(i, j)}")
            if v and j < i:
                raise DomainError(f"beta_{{{i},{j}}} is nonzero but j < i")
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    @property
    def max_i(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_j(self) -> int:
        return max((j for _, j in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def totals(self) -> list[int]:
        out = [0] * (self.max_i + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def matrix(self, width: int | None = None) -> np.ndarray:
        """Upper-triangular view: row r, column j holds beta_{j-r, j}."""
        width = self.max_j + 1 if width is None else width
        m = np.zeros((self.regularity + 1, width), dtype=object)
        for (i, j), v in self.entries.items():
            if j >= width:
                raise DomainError(f"width {width} too small for beta_{{{i},{j}}}")
            m[j - i, j] = v
        return m

    @classmethod
    def from_matrix(cls, m, field: str = "Q") -> BettiTable:
        entries = {}
        for r, row in enumerate(m):
            for j, v in enumerate(row):
                if v:
                    entries[(j - r, j)] = int(v)
        return cls(entries, field)

    def diagram(self) -> str:
        """Macaulay2-style Betti diagram: columns i, rows r, entries beta_{i, i+r}."""
        cols = self.max_i + 1
        header = [""] + [str(i) for i in range(cols)]
        rows = [["total:"] + [str(t) for t in self.totals()]]
        for r in range(self.regularity + 1):
            rows.append([f"{r}:"] + [str(self[(i, i + r)]) if self[(i, i + r)] else "." for i in range(cols)])
        table = [header] + rows
        widths = [max(len(row[c]) for row in table) for c in range(cols + 1)]
        lines = []
        for row in table:
            cells = [row[0].rjust(widths[0])] + [row[c].rjust(widths[c]) for c in range(1, cols + 1)]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"field": self.field, "betti": {f"{i},{j}": v for (i, j), v in self.entries.items()}}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Mapping | str) -> BettiTable:
        if isinstance(data, str):
            data = json.loads(data)
        entries = {}
        for key, v in data["betti"].items():
            i, j = key.split(",")
            entries[(int(i), int(j))] = int(v)
        return cls(entries, data.get("field", "Q"))


def betti_numbers_hochster(
    d: SimplicialComplex,
    field: str | int | None = None,
    max_vertices: int | None = None,
    collapse: bool = True,
) -> BettiTable:
    """beta_{i,j} = sum over j-subsets V of dim H~_{j-i-1}(Delta_V).

    Enumerates all 2^n vertex subsets; raises :class:`ResourceLimitError` when
    n exceeds ``max_vertices`` (default from the configuration, 16).  With
    ``collapse`` each restriction is first shrunk by strong collapses, which
    preserve homology; ``collapse=False`` runs plain boundary-matrix ranks.
    """
    from .config import load_config

    p = parse_field(field)
    bound = load_config().max_hochster_vertices if max_vertices is None else max_vertices
    n = len(d.vertices)
    if n > bound:
        raise ResourceLimitError(
            f"Hochster enumeration over {n} vertices needs 2^{n} subsets; the bound is {bound} vertices"
        )
    entries: dict[tuple[int, int], int] = {}
    if d.is_void():
        return BettiTable(entries, field_name(p))
    facets = maximal_masks(d.face_masks)
    for v in range(1 << n):
        restricted = maximal_masks(f & v for f in facets)
        size = popcount(v)
        for h, dim in reduced_homology_from_facets(restricted, p, collapse).items():
            # H~_h of a |V|-subset contributes to beta_{|V|-h-1, |V|}
            i = size - h - 1
            entries[(i, size)] = entries.get((i, size), 0) + dim
    return BettiTable(entries, field_name(p))


def transform_betti(b: BettiTable, s: int) -> BettiTable:
    """Betti table of the principal-jet complex: the matrix view times L_s."""
    m = b.matrix()
    L = lifting_matrix(s, m.shape[1] - 1).entries
    return BettiTable.from_matrix(m.dot(L), b.field)


def regularity(b: BettiTable) -> int:
    return b.regularity


def has_linear_resolution(i: MonomialIdeal, field: str | int | None = None, max_vertices: int | None = None) -> bool:
    """All minimal generators have one degree d, and the quotient has regularity d - 1."""
    if i.is_zero():
        log.info("zero ideal: no generators, so no linear resolution is reported")
        return False
    if i.is_unit():
        raise DomainError("the unit ideal has no Stanley-Reisner ring")
    degrees = set(i.degrees())
    if len(degrees) != 1:
        return False
    (deg,) = degrees
    b = betti_numbers_hochster(complex_from_ideal(i), field, max_vertices)
    return b.regularity == deg - 1


def is_cochordal(g: Graph) -> bool:
    return is_chordal(Graph.from_clutter(g).complement())


def is_cochordal_by_resolution(g: Graph, field: str | int | None = None) -> bool:
    """Froberg criterion: the edge ideal has a linear resolution."""
    return has_linear_resolution(edge_ideal(g), field)


__all__ = [
    "BettiTable",
    "FVector",
    "HilbertSeries",
    "LiftingMatrix",
    "betti_numbers_hochster",
    "dimension_and_multiplicity",
    "has_linear_resolution",
    "hilbert_series",
    "is_cochordal",
    "is_cochordal_by_resolution",
    "lifting_function",
    "lifting_function_closed_form",
    "lifting_matrix",
    "regularity",
    "transform_betti",
    "transform_f_vector",
]
