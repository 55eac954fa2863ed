"""Vertex covers, cover ideals, symbolic powers and k-covers.

Includes the irreducible 2-covers of a graph, perfect matchings with Favaron's
property (P), and (very) well-covered checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from ._bits import minimal_transversals
from .clutter import Clutter, Graph, _edge_key, induced_subgraph, is_bipartite, neighbor_set
from .errors import ConsistencyError, DomainError
from .ideals import Monomial, MonomialIdeal, intersect_all, polarize
from .labels import label_key


def minimal_vertex_covers(c: Clutter) -> list[frozenset[str]]:
    """All inclusion-minimal transversals, sorted lexicographically.

    An edgeless clutter has exactly one minimal cover, the empty set.
    """
    masks = minimal_transversals(c.edge_masks)
    return sorted((c.subset(m) for m in masks), key=_edge_key)


def cover_ideal(c: Clutter) -> MonomialIdeal:
    """Edge ideal of the Alexander dual: one generator per minimal vertex cover."""
    return MonomialIdeal(c.vertices, [Monomial.from_vars(w) for w in minimal_vertex_covers(c)])


def cover_ideal_by_intersection(c: Clutter) -> MonomialIdeal:
    """Same ideal as :func:`cover_ideal`, as the intersection of the edge primes."""
    return intersect_all((MonomialIdeal.prime(c.vertices, e) for e in c.edges), c.vertices)


def symbolic_power(c: Clutter, k: int) -> MonomialIdeal:
    """k-th symbolic power of the cover ideal: intersection of <e>^k over edges e."""
    if k < 1:
        raise DomainError(f"symbolic power order must be positive, got {k}")
    return intersect_all((MonomialIdeal.prime(c.vertices, e).power(k) for e in c.edges), c.vertices)


def jet_covers_via_polarization(c: Clutter, s: int) -> list[frozenset[str]]:
    """Minimal vertex covers of the s-jet clutter, read off the (s+1)-th symbolic power.

    Each minimal generator of the symbolic power is polarized at order ``s``;
    its support is a minimal cover of the jet clutter.
    """
    if s < 0:
        raise DomainError(f"jet order must be nonnegative, got {s}")
    out = []
    for g in symbolic_power(c, s + 1).generators:
        if any(e > s + 1 for _, e in g.items()):
            raise ConsistencyError(f"symbolic power generator {g} has an exponent above {s + 1}")
        out.append(polarize(g, s).support)
    return sorted(out, key=_edge_key)


@dataclass(frozen=True)
class KCover:
    """A weighting of the vertices that covers each edge at least ``k`` times."""

    clutter: Clutter
    k: int
    weights: Mapping[str, int]

    def __post_init__(self):
        weights = {str(v): int(w) for v, w in dict(self.weights).items() if int(w) != 0}
        for v, w in weights.items():
            if v not in self.clutter.index:
                raise DomainError(f"weight given for unknown vertex {v!r}")
            if w < 0:
                raise DomainError(f"negative weight {w} for {v!r}")
        for e in self.clutter.edges:
            total = sum(weights.get(v, 0) for v in e)
            if total < self.k:
                raise DomainError(f"edge {sorted(e)} is covered {total} < {self.k} times")
        object.__setattr__(self, "weights", dict(sorted(weights.items(), key=lambda kv: label_key(kv[0]))))

    @classmethod
    def from_monomial(cls, clutter: Clutter, k: int, m: Monomial) -> KCover:
        return cls(clutter, k, m.as_dict())

    @property
    def monomial(self) -> Monomial:
        return Monomial(self.weights)

    def to_json(self) -> dict:
        return {"k": self.k, "weights": dict(self.weights)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, clutter: Clutter, data: Mapping | str) -> KCover:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(clutter, int(data["k"]), data["weights"])


def minimal_k_covers(c: Clutter, k: int) -> list[KCover]:
    return [KCover.from_monomial(c, k, g) for g in symbolic_power(c, k).generators]


def _require_no_isolated(g: Graph) -> Graph:
    g = Graph.from_clutter(g)
    iso = g.isolated_vertices()
    if iso:
        raise DomainError(f"graph has isolated vertices {list(iso)}")
    return g


def independent_sets(g: Graph) -> list[frozenset[str]]:
    """Every nonempty independent set, by exhaustive subset enumeration."""
    g = Graph.from_clutter(g)
    n = len(g.vertices)
    out = []
    for mask in range(1, 1 << n):
        if not any(e & mask == e for e in g.edge_masks):
            out.append(g.subset(mask))
    return out


def irreducible_two_covers(g: Graph) -> list[Monomial]:
    """The irreducible 2-covers of a graph, as monomials.

    A bipartite graph has none.  Otherwise there is the product of all
    vertices, plus, for every nonempty independent set U such that
    N(U) is not a vertex cover, U and N(U) do not exhaust the vertices, and
    the rest R = X minus (U and N(U)) induces a non-bipartite graph without
    isolated vertices, the monomial prod_{N(U)} v^2 * prod_{R} z.
    """
    g = _require_no_isolated(g)
    if is_bipartite(g):
        return []
    X = frozenset(g.vertices)
    found = {Monomial.from_vars(X)}
    for u in independent_sets(g):
        nu = neighbor_set(g, u)
        rest = X - u - nu
        if not rest or g.is_vertex_cover(nu):
            continue
        sub = induced_subgraph(g, rest)
        if sub.isolated_vertices() or is_bipartite(sub):
            continue
        found.add(Monomial([(v, 2) for v in nu] + [(z, 1) for z in rest]))
    return sorted(found, key=lambda m: (-m.degree, [(label_key(v), -e) for v, e in m.items()]))


@dataclass(frozen=True)
class MatchingWitness:
    """A perfect matching plus whether it satisfies Favaron's property (P)."""

    matching: tuple[frozenset[str], ...]
    property_p: bool

    def partner(self) -> dict[str, str]:
        out = {}
        for e in self.matching:
            a, b = tuple(e)
            out[a], out[b] = b, a
        return out


def satisfies_property_p(g: Graph, matching: Iterable[frozenset[str]]) -> bool:
    """For every x and every neighbour y of x other than M(x): y is not
    adjacent to M(x), and y is adjacent to every neighbour of M(x)."""
    adj = g.adjacency
    mate = MatchingWitness(tuple(matching), False).partner()
    for x in g.vertices:
        mx = mate[x]
        for y in adj[x] - {mx}:
            if mx in adj[y]:
                return False
            if not (adj[mx] - {y}) <= adj[y]:
                return False
    return True


def perfect_matchings(g: Graph) -> list[MatchingWitness]:
    g = Graph.from_clutter(g)
    adj = g.adjacency
    if len(g.vertices) % 2:
        return []
    out: list[MatchingWitness] = []

    def extend(free: list[str], chosen: list[frozenset[str]]):
        if not free:
            m = tuple(sorted(chosen, key=_edge_key))
            out.append(MatchingWitness(m, satisfies_property_p(g, m)))
            return
        x, rest = free[0], free[1:]
        for y in rest:
            if y in adj[x]:
                extend([v for v in rest if v != y], chosen + [frozenset((x, y))])

    extend(list(g.vertices), [])
    return out


def is_well_covered(c: Clutter) -> bool:
    """All minimal vertex covers have the same cardinality."""
    return len({len(w) for w in minimal_vertex_covers(c)}) <= 1


@dataclass(frozen=True)
class VeryWellCoveredReport:
    very_well_covered: bool
    cover_sizes: tuple[int, ...]
    matchings: tuple[MatchingWitness, ...]


def very_well_covered_report(g: Graph) -> VeryWellCoveredReport:
    """Decide very-well-coveredness two ways and insist they agree.

    One route compares the minimal cover sizes with |X|/2; the other is
    Favaron's criterion (a perfect matching exists and all of them satisfy
    property (P)).
    """
    g = _require_no_isolated(g)
    n = len(g.vertices)
    sizes = tuple(sorted({len(w) for w in minimal_vertex_covers(g)}))
    by_covers = n % 2 == 0 and sizes == (n // 2,)
    pms = tuple(perfect_matchings(g))
    by_favaron = bool(pms) and all(m.property_p for m in pms)
    if bool(pms) and any(m.property_p for m in pms) != by_favaron:
        raise ConsistencyError(f"property (P) holds for some but not all perfect matchings of {g}")
    if by_covers != by_favaron:
        raise ConsistencyError(
            f"cover sizes {sizes} and Favaron's criterion disagree on {g}"
        )
    return VeryWellCoveredReport(by_covers, sizes, pms)


def is_very_well_covered(g: Graph) -> bool:
    return very_well_covered_report(g).very_well_covered


def is_very_well_covered_clutter(c: Clutter) -> bool:
    """Experimental: a d-uniform clutter all of whose minimal covers have |X|/d elements.

    This generalization of very well-covered graphs has not been validated
    in the literature; treat results as exploratory.
    """
    sizes = {len(e) for e in c.edges}
    if len(sizes) != 1:
        raise DomainError("clutter is not uniform")
    (d,) = sizes
    n = len(c.vertices)
    if n % d:
        return False
    return all(len(w) == n // d for w in minimal_vertex_covers(c))


__all__ = [
    "KCover",
    "MatchingWitness",
    "VeryWellCoveredReport",
    "cover_ideal",
    "cover_ideal_by_intersection",
    "independent_sets",
    "irreducible_two_covers",
    "is_very_well_covered",
    "is_very_well_covered_clutter",
    "is_well_covered",
    "jet_covers_via_polarization",
    "minimal_k_covers",
    "minimal_vertex_covers",
    "perfect_matchings",
    "satisfies_property_p",
    "symbolic_power",
    "very_well_covered_report",
]
