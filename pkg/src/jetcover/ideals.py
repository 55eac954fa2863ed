"""Monomials and monomial ideals over a named, ordered variable universe.

Ideal arithmetic works on integer exponent matrices (one row per generator,
one column per universe variable); every result is minimalized, so stored
generators always form a divisibility antichain.
"""

from __future__ import annotations

import re
import warnings
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, OrderTooSmallError
from .labels import jet_label, jet_universe, label_key, split_jet_label

MAX_EXPONENT = 2**31 - 1

_FACTOR = re.compile(r"^\s*([^\s*^]+)\s*(?:\^\s*(\d+))?\s*$")


class ZeroColonWarning(UserWarning):
    """``a : 0`` was requested; the whole ring is returned by convention."""


class Monomial:
    """A monomial as a map from variable label to positive exponent."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exps: dict[str, int] = {}
        for var, e in items:
            e = int(e)
            if e < 0:
                raise DomainError(f"negative exponent {e} for {var!r}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} for {var!r} exceeds {MAX_EXPONENT}")
            if e:
                exps[var] = exps.get(var, 0) + e
        self._exps = tuple(sorted(exps.items(), key=lambda kv: label_key(kv[0])))
        self._hash = hash(self._exps)

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @classmethod
    def from_vars(cls, variables: Iterable[str]) -> Monomial:
        """Squarefree product of the given variables."""
        return cls((v, 1) for v in set(variables))

    @classmethod
    def parse(cls, text: str) -> Monomial:
        return parse_monomial(text)

    def __getitem__(self, var: str) -> int:
        return dict(self._exps).get(var, 0)

    def items(self) -> tuple[tuple[str, int], ...]:
        return self._exps

    def as_dict(self) -> dict[str, int]:
        return dict(self._exps)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self._exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._exps)

    def divides(self, other: Monomial) -> bool:
        theirs = dict(other._exps)
        return all(theirs.get(v, 0) >= e for v, e in self._exps)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self._exps + other._exps)

    def __pow__(self, k: int) -> Monomial:
        return Monomial((v, e * k) for v, e in self._exps)

    def lcm(self, other: Monomial) -> Monomial:
        d = dict(self._exps)
        for v, e in other._exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def gcd(self, other: Monomial) -> Monomial:
        theirs = dict(other._exps)
        return Monomial((v, min(e, theirs.get(v, 0))) for v, e in self._exps)

    def colon(self, other: Monomial) -> Monomial:
        """``self / gcd(self, other)``: the generator of ``<self> : <other>``."""
        theirs = dict(other._exps)
        return Monomial((v, max(e - theirs.get(v, 0), 0)) for v, e in self._exps)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return self.colon(other)

    def vector(self, universe: Sequence[str]) -> np.ndarray:
        index = {v: i for i, v in enumerate(universe)}
        out = np.zeros(len(universe), dtype=np.int64)
        for v, e in self._exps:
            if v not in index:
                raise DomainError(f"variable {v!r} is not in the universe {list(universe)}")
            out[index[v]] = e
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


def parse_monomial(text: str) -> Monomial:
    """Parse ``x^2*z^2``, ``x_0*y_1`` or ``1``."""
    text = text.strip()
    if text == "1":
        return Monomial()
    if not text:
        raise DomainError("empty monomial string")
    pairs = []
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if m is None:
            raise DomainError(f"cannot parse factor {factor!r} in monomial {text!r}")
        pairs.append((m.group(1), int(m.group(2) or 1)))
    return Monomial(pairs)


def _check_universe(universe: Sequence[str]) -> tuple[str, ...]:
    universe = tuple(universe)
    if len(set(universe)) != len(universe):
        raise DomainError(f"duplicate variables in universe {list(universe)}")
    return universe


def _minimal_rows(a: np.ndarray) -> np.ndarray:
    """Rows of ``a`` not divisible by any other row (duplicates collapsed)."""
    m, n = a.shape
    if m <= 1:
        return a
    if n == 0:
        return a[:1]
    a = np.unique(a, axis=0)
    if len(a) <= 1:
        return a
    a = a[np.argsort(a.sum(axis=1), kind="stable")]
    keep = np.ones(len(a), dtype=bool)
    step = max(1, 4_000_000 // (len(a) * n))
    for lo in range(0, len(a), step):
        block = a[lo:lo + step]
        # divides[i, j]: row j divides row lo + i
        divides = (a[None, :, :] <= block[:, None, :]).all(axis=2)
        divides[np.arange(len(block)), np.arange(lo, lo + len(block))] = False
        keep[lo:lo + step] = ~divides.any(axis=1)
    return a[keep]


def _grlex_order(a: np.ndarray) -> np.ndarray:
    """Sort rows by descending graded-lex order."""
    if len(a) <= 1:
        return a
    keys = [-a[:, j] for j in reversed(range(a.shape[1]))] + [-a.sum(axis=1)]
    return a[np.lexsort(keys)]


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators."""

    __slots__ = ("universe", "_matrix", "_index")

    def __init__(self, universe: Sequence[str], generators: Iterable[Monomial | str] = ()):
        universe = _check_universe(universe)
        rows = []
        for g in generators:
            if isinstance(g, str):
                g = parse_monomial(g)
            rows.append(g.vector(universe))
        mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(universe))
        self._init(universe, mat)

    def _init(self, universe: tuple[str, ...], mat: np.ndarray) -> None:
        if mat.size and mat.max() > MAX_EXPONENT:
            raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
        self.universe = universe
        self._matrix = _grlex_order(_minimal_rows(mat))
        self._matrix.setflags(write=False)
        self._index = {v: i for i, v in enumerate(universe)}

    @classmethod
    def from_matrix(cls, universe: Sequence[str], mat: np.ndarray) -> MonomialIdeal:
        obj = cls.__new__(cls)
        universe = _check_universe(universe)
        mat = np.asarray(mat, dtype=np.int64).reshape(-1, len(universe))
        obj._init(universe, mat)
        return obj

    @classmethod
    def zero(cls, universe: Sequence[str]) -> MonomialIdeal:
        return cls(universe, [])

    @classmethod
    def unit(cls, universe: Sequence[str]) -> MonomialIdeal:
        return cls(universe, [Monomial()])

    @classmethod
    def prime(cls, universe: Sequence[str], variables: Iterable[str]) -> MonomialIdeal:
        """The ideal generated by a set of variables."""
        return cls(universe, [Monomial({v: 1}) for v in variables])

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def generators(self) -> tuple[Monomial, ...]:
        u = self.universe
        return tuple(Monomial((u[j], int(e)) for j, e in enumerate(row) if e) for row in self._matrix)

    def __len__(self) -> int:
        return len(self._matrix)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return len(self._matrix) == 0

    def is_unit(self) -> bool:
        return len(self._matrix) == 1 and not self._matrix.any()

    def is_squarefree(self) -> bool:
        return bool((self._matrix <= 1).all())

    def degrees(self) -> list[int]:
        return [int(d) for d in self._matrix.sum(axis=1)]

    def _vector(self, m: Monomial) -> np.ndarray:
        return m.vector(self.universe)

    def __contains__(self, m: Monomial | str) -> bool:
        if isinstance(m, str):
            m = parse_monomial(m)
        v = self._vector(m)
        return bool((self._matrix <= v).all(axis=1).any())

    def issubset(self, other: MonomialIdeal) -> bool:
        _same_universe(self, other)
        return all(g in other for g in self.generators)

    def __le__(self, other: MonomialIdeal) -> bool:
        return self.issubset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self._matrix, other._matrix)

    def __hash__(self) -> int:
        return hash((self.universe, self._matrix.tobytes()))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_universe(self, other)
        return MonomialIdeal.from_matrix(self.universe, np.vstack([self._matrix, other._matrix]))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_universe(self, other)
        a, b = self._matrix, other._matrix
        prod = (a[:, None, :] + b[None, :, :]).reshape(-1, len(self.universe))
        return MonomialIdeal.from_matrix(self.universe, prod)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def power(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def quotient(self, other: MonomialIdeal) -> MonomialIdeal:
        return quotient(self, other)

    def with_universe(self, universe: Sequence[str]) -> MonomialIdeal:
        """The same generators viewed in a larger (or reordered) universe."""
        return MonomialIdeal(universe, self.generators)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"<{gens}>" if gens else "<0>"


def _same_universe(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.universe != b.universe:
        raise DomainError(f"ideals live over different universes: {a.universe} vs {b.universe}")


def minimalize(gens: Iterable[Monomial | str], universe: Sequence[str] | None = None) -> MonomialIdeal:
    """Drop every generator divisible by another one.

    Without an explicit universe, the variables appearing in ``gens`` are used,
    sorted by label.
    """
    gens = [parse_monomial(g) if isinstance(g, str) else g for g in gens]
    if universe is None:
        universe = sorted({v for g in gens for v in g.support}, key=label_key)
    return MonomialIdeal(universe, gens)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Generated by the pairwise lcms of generators, then minimalized."""
    _same_universe(a, b)
    lcms = np.maximum(a.matrix[:, None, :], b.matrix[None, :, :]).reshape(-1, len(a.universe))
    return MonomialIdeal.from_matrix(a.universe, lcms)


def intersect_all(ideals: Iterable[MonomialIdeal], universe: Sequence[str]) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the whole ring."""
    acc = MonomialIdeal.unit(universe)
    for ideal in ideals:
        acc = intersect(acc, ideal)
    return acc


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise DomainError(f"power exponent must be positive, got {k}")
    acc = a
    for _ in range(k - 1):
        acc = acc * a
    return acc


def colon_monomial(a: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    v = m.vector(a.universe)
    return MonomialIdeal.from_matrix(a.universe, np.maximum(a.matrix - v, 0))


def quotient(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal ``a : b``, the intersection of ``a : g`` over generators g of b.

    ``a : 0`` is the whole ring; a :class:`ZeroColonWarning` is emitted.
    """
    _same_universe(a, b)
    if b.is_zero():
        warnings.warn("a : 0 is the whole ring", ZeroColonWarning, stacklevel=2)
        return MonomialIdeal.unit(a.universe)
    return intersect_all((colon_monomial(a, g) for g in b.generators), a.universe)


def is_squarefree(a: MonomialIdeal) -> bool:
    return a.is_squarefree()


def polarize(m: Monomial, s: int) -> Monomial:
    """Squarefree monomial over J_s(X) whose x-part is x_0*...*x_{i-1} when x^i || m."""
    out = []
    for var, e in m.items():
        if e > s + 1:
            raise OrderTooSmallError(f"exponent {e} of {var!r} exceeds s+1 = {s + 1}")
        out.extend((jet_label(var, j), 1) for j in range(e))
    return Monomial(out)


def depolarize(m: Monomial, s: int | None = None) -> Monomial:
    """Image of a jet monomial under the ring map x_i -> x."""
    out = []
    for label, e in m.items():
        base, idx = split_jet_label(label)
        if s is not None and idx > s:
            raise DomainError(f"{label!r} has index above the jet order {s}")
        out.append((base, e))
    return Monomial(out)


def polarize_ideal(a: MonomialIdeal, s: int) -> MonomialIdeal:
    return MonomialIdeal(jet_universe(a.universe, s), [polarize(g, s) for g in a.generators])


def depolarize_ideal(a: MonomialIdeal, base_universe: Sequence[str], s: int | None = None) -> MonomialIdeal:
    """Ideal generated by the depolarized generators (the image ideal of the ring map)."""
    return MonomialIdeal(base_universe, [depolarize(g, s) for g in a.generators])
