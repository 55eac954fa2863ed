"""Jets of clutters and monomial ideals, and principal jets of edge ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

from .clutter import Clutter, Graph, _edge_key
from .covers import minimal_vertex_covers
from .errors import ConsistencyError, DomainError
from .ideals import Monomial, MonomialIdeal, intersect_all, quotient
from .labels import check_base_label, jet_label, jet_universe, label_key


def jet_variables(xs: Iterable[str], s: int) -> tuple[str, ...]:
    """J_s(X): the labels x_0, ..., x_s for each x, in the given base order."""
    return jet_universe(xs, s)


def compositions(total_max: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` naturals with sum at most ``total_max``, stars-and-bars order."""
    if parts == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(total_max - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class JetPolynomial:
    """A formal sum of jet monomials with positive integer coefficients."""

    terms: Mapping[Monomial, int]

    def __post_init__(self):
        terms = {m: int(c) for m, c in dict(self.terms).items() if c}
        order = sorted(terms, key=lambda m: [(label_key(v), e) for v, e in m.items()])
        object.__setattr__(self, "terms", {m: terms[m] for m in order})

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, JetPolynomial) and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return " + ".join(str(m) if c == 1 else f"{c}*{m}" for m, c in self.terms.items()) or "0"

    @classmethod
    def parse(cls, text: str) -> JetPolynomial:
        terms: dict[Monomial, int] = {}
        for chunk in text.split("+"):
            chunk = chunk.strip()
            coeff, _, rest = chunk.partition("*")
            if coeff.isdigit() and rest:
                m, c = Monomial.parse(rest), int(coeff)
            else:
                m, c = Monomial.parse(chunk), 1
            terms[m] = terms.get(m, 0) + c
        return cls(terms)


@dataclass(frozen=True)
class JetGenerator:
    base: Monomial
    order: int
    polynomial: JetPolynomial


@dataclass(frozen=True)
class JetIdealPresentation:
    """Generators of the ideal of s-jets of a monomial ideal, one per (generator, t-degree)."""

    base: MonomialIdeal
    s: int
    generators: tuple[JetGenerator, ...]

    @property
    def universe(self) -> tuple[str, ...]:
        return jet_universe(self.base.universe, self.s)

    def polynomials(self) -> list[JetPolynomial]:
        return [g.polynomial for g in self.generators]

    def terms(self) -> list[Monomial]:
        return [m for g in self.generators for m in g.polynomial.monomials()]

    def radical_generators(self) -> MonomialIdeal:
        """Ideal generated by the flattened terms (the radical, for squarefree bases)."""
        return MonomialIdeal(self.universe, self.terms())


def phi(m: Monomial, s: int) -> list[JetPolynomial]:
    """Coefficients of t^0..t^s in the expansion of m under x -> sum_j x_j t^j."""
    layers: list[dict[Monomial, int]] = [{Monomial(): 1}] + [{} for _ in range(s)]
    for var, e in m.items():
        for _ in range(e):
            nxt: list[dict[Monomial, int]] = [{} for _ in range(s + 1)]
            for j, layer in enumerate(layers):
                for mono, c in layer.items():
                    for i in range(s + 1 - j):
                        key = mono * Monomial({jet_label(var, i): 1})
                        nxt[j + i][key] = nxt[j + i].get(key, 0) + c
            layers = nxt
    return [JetPolynomial(layer) for layer in layers]


def jet_ideal_generators(i: MonomialIdeal, s: int) -> JetIdealPresentation:
    if s < 0:
        raise DomainError(f"jet order must be nonnegative, got {s}")
    for v in i.universe:
        check_base_label(v)
    gens = []
    for g in i.generators:
        for j, poly in enumerate(phi(g, s)):
            gens.append(JetGenerator(g, j, poly))
    return JetIdealPresentation(i, s, tuple(gens))


@dataclass(frozen=True)
class JetClutter:
    base: Clutter
    s: int
    clutter: Clutter

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.clutter.vertices

    @property
    def edges(self) -> tuple[frozenset[str], ...]:
        return self.clutter.edges


def _lift_edges(c: Clutter, choices) -> list[frozenset[str]]:
    out = []
    for e in c.edges:
        xs = sorted(e, key=label_key)
        for idx in choices(len(xs)):
            out.append(frozenset(jet_label(x, i) for x, i in zip(xs, idx)))
    if len(out) != len(set(out)):
        raise ConsistencyError("lifted edges are not distinct")
    return out


def _same_kind(c: Clutter, vertices, edges) -> Clutter:
    cls = Graph if isinstance(c, Graph) else Clutter
    return cls(vertices, tuple(edges))


def jet_clutter(c: Clutter, s: int) -> JetClutter:
    """Edges {x_{1,i1}, ..., x_{r,ir}} for every base edge and i1 + ... + ir <= s."""
    if s < 0:
        raise DomainError(f"jet order must be nonnegative, got {s}")
    edges = _lift_edges(c, lambda r: compositions(s, r))
    return JetClutter(c, s, _same_kind(c, jet_variables(c.vertices, s), edges))


def principal_jet_clutter(c: Clutter, s: int) -> JetClutter:
    """Edges {x_{1,i1}, ..., x_{r,ir}} for every base edge and independent 0 <= i_h <= s."""
    if s < 0:
        raise DomainError(f"jet order must be nonnegative, got {s}")
    edges = _lift_edges(c, lambda r: product(range(s + 1), repeat=r))
    return JetClutter(c, s, _same_kind(c, jet_variables(c.vertices, s), edges))


def jet_edge_ideal(c: Clutter, s: int) -> MonomialIdeal:
    """Edge ideal of the jet clutter, i.e. the radical of the ideal of s-jets."""
    jc = jet_clutter(c, s)
    return MonomialIdeal(jc.vertices, [Monomial.from_vars(e) for e in jc.edges])


def principal_jet_ideal(c: Clutter, s: int) -> MonomialIdeal:
    jc = principal_jet_clutter(c, s)
    return MonomialIdeal(jc.vertices, [Monomial.from_vars(e) for e in jc.edges])


def lifted_cover(w: Iterable[str], s: int) -> frozenset[str]:
    """J_s(W) = {x_i : x in W, 0 <= i <= s}."""
    return frozenset(jet_variables(sorted(w, key=label_key), s))


def principal_jet_decomposition(c: Clutter, s: int, check: bool = True) -> list[frozenset[str]]:
    """Variable sets J_s(W_k) of the primes in the decomposition, one per minimal cover W_k.

    With ``check`` the intersection of the primes is compared with
    :func:`principal_jet_ideal`; a mismatch raises :class:`ConsistencyError`.
    """
    primes = sorted((lifted_cover(w, s) for w in minimal_vertex_covers(c)), key=_edge_key)
    if check:
        universe = jet_variables(c.vertices, s)
        inter = intersect_all((MonomialIdeal.prime(universe, p) for p in primes), universe)
        if inter != principal_jet_ideal(c, s):
            raise ConsistencyError(f"intersection of lifted cover primes differs from the principal jets of {c}")
    return primes


def singular_locus_ideal(c: Clutter, s: int) -> MonomialIdeal:
    """Intersection of <J_0(W_i u W_j)> over pairs of distinct minimal covers, in the jet ring."""
    universe = jet_variables(c.vertices, s)
    covers = minimal_vertex_covers(c)
    return intersect_all(
        (MonomialIdeal.prime(universe, lifted_cover(wi | wj, 0)) for wi, wj in combinations(covers, 2)),
        universe,
    )


def principal_jet_via_colon(c: Clutter, s: int) -> MonomialIdeal:
    """Principal jets as the colon of the jet edge ideal by the singular-locus ideal.

    When the clutter has a single minimal cover there is no pair to intersect
    over; the variety is smooth and the result is the jet edge ideal itself.
    """
    if len(minimal_vertex_covers(c)) < 2:
        return jet_edge_ideal(c, s)
    return quotient(jet_edge_ideal(c, s), singular_locus_ideal(c, s))


__all__ = [
    "JetClutter",
    "JetGenerator",
    "JetIdealPresentation",
    "JetPolynomial",
    "compositions",
    "jet_clutter",
    "jet_edge_ideal",
    "jet_ideal_generators",
    "jet_variables",
    "lifted_cover",
    "phi",
    "principal_jet_clutter",
    "principal_jet_decomposition",
    "principal_jet_ideal",
    "principal_jet_via_colon",
    "singular_locus_ideal",
]
