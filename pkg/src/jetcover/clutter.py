"""Clutters, graphs, simplicial complexes and the Stanley-Reisner correspondence.

Every container here is an immutable value.  Vertices are string labels kept
in :func:`~jetcover.labels.label_key` order; each object also exposes a dense
integer index so that subsets can be handled as bitsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from ._bits import bits, from_mask, minimal_masks, minimal_transversals, popcount, to_mask
from .errors import DomainError, StructuralError
from .ideals import Monomial, MonomialIdeal
from .labels import label_key, sort_labels


def _edge_key(edge: frozenset[str]) -> tuple:
    return tuple(label_key(v) for v in sort_labels(edge))


def _clean_vertices(vertices: Iterable[str]) -> tuple[str, ...]:
    vertices = [str(v) for v in vertices]
    seen = set()
    for v in vertices:
        if v in seen:
            raise StructuralError(f"duplicate vertex label {v!r}")
        seen.add(v)
    return sort_labels(vertices)


@dataclass(frozen=True, eq=False)
class Clutter:
    """A finite vertex set and an antichain of nonempty edges.

    Equality ignores the Graph/Clutter distinction: two clutters are equal when
    their vertex and edge sets are.
    """

    vertices: tuple[str, ...]
    edges: tuple[frozenset[str], ...] = ()

    def __post_init__(self):
        verts = _clean_vertices(self.vertices)
        vset = set(verts)
        edges = {frozenset(str(v) for v in e) for e in self.edges}
        for e in edges:
            if not e:
                raise StructuralError("empty edge: such a clutter has no vertex cover")
            if not e <= vset:
                raise StructuralError(f"edge {sorted(e)} uses vertices outside {list(verts)}")
        for e, f in combinations(edges, 2):
            if e < f or f < e:
                raise StructuralError(f"edges {sorted(e)} and {sorted(f)} are nested")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(edges, key=_edge_key)))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]], vertices: Iterable[str] | None = None):
        edges = [frozenset(e) for e in edges]
        if vertices is None:
            vertices = set().union(*edges) if edges else set()
        return cls(tuple(vertices), tuple(edges))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(e, self.index) for e in self.edges)

    def mask(self, subset: Iterable[str]) -> int:
        try:
            return to_mask(subset, self.index)
        except KeyError as exc:
            raise DomainError(f"vertex {exc.args[0]!r} is not in {list(self.vertices)}") from None

    def subset(self, mask: int) -> frozenset[str]:
        return from_mask(mask, self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Clutter):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def is_vertex_cover(self, subset: Iterable[str]) -> bool:
        m = self.mask(subset)
        return all(m & e for e in self.edge_masks)

    def __str__(self) -> str:
        es = ", ".join("{" + ",".join(sort_labels(e)) + "}" for e in self.edges)
        return f"{type(self).__name__}(V={{{','.join(self.vertices)}}}, E=[{es}])"


@dataclass(frozen=True, eq=False)
class Graph(Clutter):
    """A clutter whose edges all have two elements."""

    def __post_init__(self):
        super().__post_init__()
        for e in self.edges:
            if len(e) != 2:
                raise StructuralError(f"graph edge {sorted(e)} does not have two endpoints")

    @classmethod
    def from_clutter(cls, c: Clutter) -> Graph:
        return c if isinstance(c, Graph) else cls(c.vertices, c.edges)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: str) -> frozenset[str]:
        return self.adjacency[v]

    def isolated_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self.adjacency[v])

    def complement(self) -> Graph:
        present = set(self.edges)
        pairs = [frozenset(p) for p in combinations(self.vertices, 2) if frozenset(p) not in present]
        return Graph(self.vertices, tuple(pairs))


def canonicalize(vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> Clutter:
    """Build a clutter from raw data, discarding edges that contain other edges.

    Vertices are sorted by label; duplicate labels raise :class:`StructuralError`.
    """
    verts = _clean_vertices(vertices)
    raw = [frozenset(str(v) for v in e) for e in edges]
    index = {v: i for i, v in enumerate(verts)}
    for e in raw:
        if not e <= set(verts):
            raise StructuralError(f"edge {sorted(e)} uses vertices outside {list(verts)}")
        if not e:
            raise StructuralError("empty edge: such a clutter has no vertex cover")
    kept = minimal_masks(to_mask(e, index) for e in raw)
    out = tuple(from_mask(m, verts) for m in kept)
    if out and all(len(e) == 2 for e in out):
        return Graph(verts, out)
    return Clutter(verts, out)


def edge_ideal(c: Clutter) -> MonomialIdeal:
    return MonomialIdeal(c.vertices, [Monomial.from_vars(e) for e in c.edges])


def clutter_of_ideal(i: MonomialIdeal) -> Clutter:
    """The clutter whose edge ideal is the squarefree ideal ``i``."""
    if not i.is_squarefree():
        raise DomainError(f"{i} is not squarefree")
    if i.is_unit():
        raise DomainError("the unit ideal is not the edge ideal of a clutter")
    c = Clutter(i.universe, tuple(g.support for g in i.generators))
    return Graph.from_clutter(c) if c.edges and c.is_graph() else c


def _check_subset(g: Clutter, ys: Iterable[str]) -> frozenset[str]:
    ys = frozenset(ys)
    extra = ys - set(g.vertices)
    if extra:
        raise DomainError(f"vertices {sorted(extra)} are not in the graph")
    return ys


def induced_subgraph(g: Graph, ys: Iterable[str]) -> Graph:
    ys = _check_subset(g, ys)
    return Graph(tuple(ys), tuple(e for e in g.edges if e <= ys))


def neighbor_set(g: Graph, ys: Iterable[str]) -> frozenset[str]:
    ys = _check_subset(g, ys)
    out: set[str] = set()
    for y in ys:
        out |= g.adjacency[y]
    return frozenset(out)


@dataclass(frozen=True)
class BipartiteWitness:
    bipartite: bool
    coloring: dict[str, int] = field(default_factory=dict)
    odd_cycle: tuple[str, ...] = ()


def bipartite_witness(g: Graph) -> BipartiteWitness:
    """BFS 2-coloring, or an odd cycle when none exists."""
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adjacency[u], key=label_key):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteWitness(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteWitness(True, coloring=color)


def _odd_cycle(parent: dict[str, str | None], u: str, w: str) -> tuple[str, ...]:
    def path(v):
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    pu, pw = path(u), path(w)
    common = set(pu) & set(pw)
    pu = pu[: next(i for i, v in enumerate(pu) if v in common) + 1]
    pw = pw[: next(i for i, v in enumerate(pw) if v in common)]
    return tuple(pu + pw[::-1])


def is_bipartite(g: Graph) -> bool:
    return bipartite_witness(g).bipartite


def maximum_cardinality_search(g: Graph) -> list[str]:
    """Visit order of MCS; its reverse is a perfect elimination ordering iff g is chordal."""
    weight = {v: 0 for v in g.vertices}
    order: list[str] = []
    visited: set[str] = set()
    for _ in g.vertices:
        v = max((u for u in g.vertices if u not in visited), key=lambda u: weight[u])
        order.append(v)
        visited.add(v)
        for w in g.adjacency[v]:
            if w not in visited:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[str]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if not set(later) - {u} <= g.adjacency[u]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    peo = maximum_cardinality_search(g)[::-1]
    return is_perfect_elimination_ordering(g, peo)


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}); empty for the void complex."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def f(self, i: int) -> int:
        """Number of faces of dimension ``i`` (``i >= -1``)."""
        return self.entries[i + 1] if 0 <= i + 1 < len(self.entries) else 0

    @property
    def krull_dimension(self) -> int:
        return len(self.entries) - 1

    @property
    def multiplicity(self) -> int:
        return self.entries[-1]


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex described by its minimal non-faces.

    ``minimal_nonfaces == (frozenset(),)`` is the void complex (no faces at
    all); an empty tuple of minimal non-faces is the full simplex.
    """

    vertices: tuple[str, ...]
    minimal_nonfaces: tuple[frozenset[str], ...] = ()

    def __post_init__(self):
        verts = _clean_vertices(self.vertices)
        nonfaces = {frozenset(n) for n in self.minimal_nonfaces}
        for n in nonfaces:
            if not n <= set(verts):
                raise StructuralError(f"non-face {sorted(n)} uses vertices outside {list(verts)}")
        for a, b in combinations(nonfaces, 2):
            if a < b or b < a:
                raise StructuralError(f"minimal non-faces {sorted(a)} and {sorted(b)} are nested")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "minimal_nonfaces", tuple(sorted(nonfaces, key=_edge_key)))

    @classmethod
    def full_simplex(cls, vertices: Iterable[str]) -> SimplicialComplex:
        return cls(tuple(vertices), ())

    @classmethod
    def void(cls, vertices: Iterable[str] = ()) -> SimplicialComplex:
        return cls(tuple(vertices), (frozenset(),))

    @classmethod
    def from_facets(cls, vertices: Iterable[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
        """Complex generated by ``facets``; no facets gives the void complex.

        A set is a non-face iff it meets the complement of every facet, so the
        minimal non-faces are the minimal transversals of the facet complements.
        """
        verts = _clean_vertices(vertices)
        facets = [frozenset(f) for f in facets]
        if not facets:
            return cls.void(verts)
        index = {v: i for i, v in enumerate(verts)}
        full = (1 << len(verts)) - 1
        comps = [full & ~to_mask(f, index) for f in facets]
        if 0 in comps:
            return cls.full_simplex(verts)
        return cls(verts, tuple(from_mask(m, verts) for m in minimal_transversals(comps)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def nonface_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(n, self.index) for n in self.minimal_nonfaces)

    def is_void(self) -> bool:
        return 0 in self.nonface_masks

    def is_face(self, subset: Iterable[str]) -> bool:
        m = to_mask(subset, self.index)
        return not any(n & m == n for n in self.nonface_masks)

    @cached_property
    def face_masks(self) -> tuple[int, ...]:
        """All faces as bitmasks, found by DFS pruned at non-faces."""
        if self.is_void():
            return ()
        n = len(self.vertices)
        through = [[m for m in self.nonface_masks if m >> v & 1] for v in range(n)]
        out: list[int] = []
        stack = [(0, 0)]
        while stack:
            mask, start = stack.pop()
            out.append(mask)
            for v in range(start, n):
                grown = mask | (1 << v)
                if not any(m & grown == m for m in through[v]):
                    stack.append((grown, v + 1))
        return tuple(sorted(out, key=lambda m: (popcount(m), m)))

    def faces(self) -> list[frozenset[str]]:
        return [from_mask(m, self.vertices) for m in self.face_masks]

    def facets(self) -> list[frozenset[str]]:
        masks = self.face_masks
        maximal = [m for m in masks if not any(o != m and o & m == m for o in masks)]
        return sorted((from_mask(m, self.vertices) for m in maximal), key=_edge_key)

    @property
    def dimension(self) -> int | None:
        """max face size - 1 (``-1`` for {emptyset}, ``None`` for the void complex)."""
        if self.is_void():
            return None
        return max(popcount(m) for m in self.face_masks) - 1

    def restriction(self, subset: Iterable[str]) -> SimplicialComplex:
        sub = frozenset(subset)
        if not sub <= set(self.vertices):
            raise DomainError(f"{sorted(sub - set(self.vertices))} are not vertices of the complex")
        return SimplicialComplex(tuple(sub), tuple(n for n in self.minimal_nonfaces if n <= sub))

    def stanley_reisner_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.vertices, [Monomial.from_vars(n) for n in self.minimal_nonfaces])


def complex_from_ideal(i: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are supports of squarefree monomials outside ``i``."""
    if not i.is_squarefree():
        raise DomainError(f"{i} is not squarefree")
    if i.is_unit():
        raise DomainError("the unit ideal has no Stanley-Reisner complex (it would be void)")
    return SimplicialComplex(i.universe, tuple(g.support for g in i.generators))


def f_vector(d: SimplicialComplex) -> FVector:
    counts: list[int] = []
    for m in d.face_masks:
        k = popcount(m)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return FVector(tuple(counts))


def all_subsets(vertices: Sequence[str]) -> Iterator[frozenset[str]]:
    n = len(vertices)
    for mask in range(1 << n):
        yield frozenset(vertices[i] for i in bits(mask))
