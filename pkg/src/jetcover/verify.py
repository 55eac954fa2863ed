"""Batch cross-checks of the jet/cover correspondences over clutter corpora.

Each check compares two independent computations on one instance and
returns ``None`` or a short description of the mismatch.  :func:`verify`
runs a check over a corpus, shrinks every failing input to a minimal one
and collects a :class:`VerificationReport`.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

import numpy as np

from ._bits import minimal_masks
from .clutter import Clutter, Graph, canonicalize, clutter_of_ideal, complex_from_ideal, edge_ideal, f_vector
from .covers import (
    is_very_well_covered,
    jet_covers_via_polarization,
    minimal_vertex_covers,
    symbolic_power,
)
from .errors import DomainError
from .gallery import complete_bipartite, favaron_g1, mixed_ideal, path_graph, triangle_with_tail, whisker
from .invariants import (
    betti_numbers_hochster,
    has_linear_resolution,
    transform_betti,
    transform_f_vector,
)
from .io import clutter_to_json
from .jets import (
    jet_clutter,
    principal_jet_decomposition,
    principal_jet_ideal,
    principal_jet_via_colon,
)
from .labels import split_jet_label

THEOREMS = ("thm3", "thm6", "thm7", "thm8", "thm9", "lemma1", "lemma2", "cor3")


# corpora


def _antichains(masks: list[int], max_edges: int | None) -> Iterator[tuple[int, ...]]:
    def grow(start: int, chosen: list[int]):
        yield tuple(chosen)
        if max_edges is not None and len(chosen) >= max_edges:
            return
        for i in range(start, len(masks)):
            m = masks[i]
            if all(m & c != c and m & c != m for c in chosen):
                chosen.append(m)
                yield from grow(i + 1, chosen)
                chosen.pop()

    yield from grow(0, [])


def _labels(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n])


def _from_masks(n: int, edges: Iterable[int]) -> Clutter:
    labels = _labels(n)
    es = [[labels[i] for i in range(n) if m >> i & 1] for m in edges]
    return canonicalize(labels, es)


def all_clutters(max_vertices: int, max_edges: int | None = None, min_vertices: int = 1) -> Iterator[Clutter]:
    """Every labelled clutter on vertex sets {a, b, ...} of each size up to ``max_vertices``."""
    for n in range(min_vertices, max_vertices + 1):
        masks = list(range(1, 1 << n))
        for chain in _antichains(masks, max_edges):
            yield _from_masks(n, chain)


def _canonical_form(n: int, edges: tuple[int, ...], perms: list[tuple[int, ...]]) -> tuple[int, ...]:
    best = None
    for perm in perms:
        image = []
        for m in edges:
            out = 0
            for i in range(n):
                if m >> i & 1:
                    out |= 1 << perm[i]
            image.append(out)
        key = tuple(sorted(image))
        if best is None or key < best:
            best = key
    return best


def clutters_up_to_isomorphism(max_vertices: int, max_edges: int | None = None, min_vertices: int = 1) -> list[Clutter]:
    """One representative of each isomorphism class of clutters on n = 1..max_vertices vertices."""
    out = []
    for n in range(min_vertices, max_vertices + 1):
        perms = list(permutations(range(n)))
        seen = set()
        for chain in _antichains(list(range(1, 1 << n)), max_edges):
            key = _canonical_form(n, chain, perms)
            if key not in seen:
                seen.add(key)
                out.append(_from_masks(n, key))
    return out


def random_clutters(count: int, seed: int, max_vertices: int = 5, max_edges: int = 4) -> list[Clutter]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_vertices + 1))
        k = int(rng.integers(0, max_edges + 1))
        masks = [int(rng.integers(1, 1 << n)) for _ in range(k)]
        out.append(_from_masks(n, minimal_masks(masks)))
    return out


def random_whiskered_graphs(count: int, seed: int, max_core: int = 4) -> list[Graph]:
    """Whiskers on random graphs: very well-covered graphs on up to 2 * max_core vertices."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_core + 1))
        labels = _labels(n)
        pairs = [p for p in combinations(labels, 2) if rng.random() < 0.5]
        out.append(whisker(Graph(labels, tuple(frozenset(p) for p in pairs))))
    return out


def named_fixtures() -> list[Clutter]:
    return [path_graph(), triangle_with_tail(), clutter_of_ideal(mixed_ideal())]


# single-instance checks


def check_thm3(c: Clutter, s: int) -> str | None:
    via_pol = set(jet_covers_via_polarization(c, s))
    direct = set(minimal_vertex_covers(jet_clutter(c, s).clutter))
    if via_pol != direct:
        return f"polarized covers {len(via_pol)} vs direct covers {len(direct)}; differ on {sorted(map(sorted, via_pol ^ direct))[:3]}"
    return None


def check_lemma1(c: Clutter, s: int) -> str | None:
    for w in minimal_vertex_covers(jet_clutter(c, s).clutter):
        top: dict[str, int] = {}
        count: dict[str, int] = {}
        for v in w:
            base, i = split_jet_label(v)
            top[base] = max(top.get(base, -1), i)
            count[base] = count.get(base, 0) + 1
        for base in top:
            if count[base] != top[base] + 1:
                return f"cover {sorted(w)} is not a staircase at {base}"
    return None


def check_lemma2(c: Clutter, k: int) -> str | None:
    supports = [frozenset(w) for w in minimal_vertex_covers(c)]
    for g in symbolic_power(c, k).generators:
        supp = g.support
        inside = [w for w in supports if w <= supp]
        union = frozenset().union(*inside) if inside else frozenset()
        if union != supp:
            return f"support {sorted(supp)} of {g} is not a union of minimal cover supports"
    return None


def check_thm6(g: Clutter, s: int) -> str | None:
    g = Graph.from_clutter(g)
    if not is_very_well_covered(g):
        return None
    n = len(g.vertices)
    sizes = {len(w) for w in minimal_vertex_covers(jet_clutter(g, s).clutter)}
    if sizes != {n * (s + 1) // 2}:
        return f"jet covers have sizes {sorted(sizes)}, expected {n * (s + 1) // 2}"
    return None


def check_thm7(c: Clutter, s: int) -> str | None:
    try:
        principal_jet_decomposition(c, s, check=True)
    except Exception as exc:  # noqa: BLE001 - any failure is a counterexample
        return f"decomposition: {exc}"
    if principal_jet_via_colon(c, s) != principal_jet_ideal(c, s):
        return "colon construction differs from the generator construction"
    return None


def check_thm8(c: Clutter, s: int) -> str | None:
    base = f_vector(complex_from_ideal(edge_ideal(c)))
    lifted = f_vector(complex_from_ideal(principal_jet_ideal(c, s)))
    predicted = transform_f_vector(base, s)
    if predicted != lifted:
        return f"f-vector transform {tuple(predicted)} vs direct {tuple(lifted)}"
    if lifted.krull_dimension != (s + 1) * base.krull_dimension:
        return f"dimension {lifted.krull_dimension} is not {(s + 1)} * {base.krull_dimension}"
    return None


def check_thm9(c: Clutter, s: int) -> str | None:
    base = betti_numbers_hochster(complex_from_ideal(edge_ideal(c)))
    direct = betti_numbers_hochster(complex_from_ideal(principal_jet_ideal(c, s)))
    predicted = transform_betti(base, s)
    if predicted != direct:
        return f"Betti transform {predicted.entries} vs direct {direct.entries}"
    if direct.regularity != base.regularity:
        return f"regularity {direct.regularity} vs base {base.regularity}"
    return None


def check_cor3(c: Clutter, s: int) -> str | None:
    a = has_linear_resolution(edge_ideal(c))
    b = has_linear_resolution(principal_jet_ideal(c, s))
    if a != b:
        return f"linear resolution: base {a}, principal jets {b}"
    return None


CHECKS: dict[str, Callable[[Clutter, int], str | None]] = {
    "thm3": check_thm3,
    "thm6": check_thm6,
    "thm7": check_thm7,
    "thm8": check_thm8,
    "thm9": check_thm9,
    "lemma1": check_lemma1,
    "lemma2": check_lemma2,
    "cor3": check_cor3,
}


# shrinking


def _smaller(c: Clutter) -> Iterator[Clutter]:
    for e in c.edges:
        yield type(c)(c.vertices, tuple(f for f in c.edges if f != e))
    for v in c.vertices:
        rest = tuple(u for u in c.vertices if u != v)
        yield canonicalize(rest, [e for e in c.edges if v not in e])


def shrink(c: Clutter, param: int, fails: Callable[[Clutter, int], bool]) -> Clutter:
    """Greedily delete edges and vertices while the failure persists."""
    changed = True
    while changed:
        changed = False
        for smaller in _smaller(c):
            try:
                still = fails(smaller, param)
            except DomainError:
                continue
            if still:
                c, changed = smaller, True
                break
    return c


# reports


@dataclass(frozen=True)
class Failure:
    clutter: dict
    param: int
    detail: str
    minimal: dict

    def to_json(self) -> dict:
        return {"input": self.clutter, "param": self.param, "detail": self.detail, "minimal": self.minimal}


@dataclass
class VerificationReport:
    theorem: str
    corpus: str
    seed: int
    instances: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "seed": self.seed,
            "instances": self.instances,
            "skipped": self.skipped,
            "failures": [f.to_json() for f in self.failures],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def summary(self, timing: bool = True) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        when = f", {self.elapsed:.2f}s" if timing else ""
        return f"{self.theorem}: {self.instances} instances, {status} (corpus {self.corpus}, seed {self.seed}{when})"


def _params(theorem: str, s_max: int | None) -> list[int]:
    if theorem == "lemma2":
        return list(range(1, (3 if s_max is None else s_max) + 1))
    if theorem == "cor3":
        return [s for s in (1, 2) if s_max is None or s <= s_max]
    if theorem == "thm9":
        return list(range(0, (1 if s_max is None else s_max) + 1))
    return list(range(0, (2 if s_max is None else s_max) + 1))


def default_corpus(theorem: str, seed: int) -> tuple[str, list[Clutter]]:
    if theorem in ("thm3", "lemma1"):
        return "all labelled clutters, <=4 vertices, <=3 edges, plus fixtures", list(all_clutters(4, 3)) + named_fixtures()
    if theorem == "thm6":
        graphs = [favaron_g1()] + [complete_bipartite(n) for n in (1, 2, 3)]
        return "Favaron G1, K_{n,n} n<=3, 8 random whiskered graphs", graphs + random_whiskered_graphs(8, seed)
    if theorem == "cor3":
        reps = clutters_up_to_isomorphism(4)
        return "clutters up to isomorphism, <=4 vertices, plus fixtures", reps + named_fixtures()
    reps = clutters_up_to_isomorphism(5)
    return "clutters up to isomorphism, <=5 vertices, plus fixtures", reps + named_fixtures()


def _very_well_covered_graph(c: Clutter) -> bool:
    if not (c.is_graph() and c.edges):
        return False
    g = Graph.from_clutter(c)
    return not g.isolated_vertices() and is_very_well_covered(g)


def verify(
    theorem: str,
    corpus: Iterable[Clutter] | None = None,
    seed: int = 0,
    s_max: int | None = None,
    random_extra: int = 0,
    corpus_name: str | None = None,
) -> VerificationReport:
    """Run one cross-check over a corpus; deterministic given ``seed``.

    ``random_extra`` appends that many seeded random clutters.  The jet
    cover-size check only applies to very well-covered graphs; other inputs
    are counted as skipped.
    """
    if theorem not in CHECKS:
        raise DomainError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")
    if corpus is None:
        name, items = default_corpus(theorem, seed)
    else:
        name, items = corpus_name or "user corpus", list(corpus)
    if random_extra:
        items = items + random_clutters(random_extra, seed)
        name += f", {random_extra} random"
    check = CHECKS[theorem]
    report = VerificationReport(theorem, name, seed)
    start = time.perf_counter()
    for c in items:
        if theorem == "thm6" and not _very_well_covered_graph(c):
            report.skipped += 1
            continue
        for param in _params(theorem, s_max):
            detail = check(c, param)
            report.instances += 1
            if detail is not None:
                minimal = shrink(c, param, lambda d, q: check(d, q) is not None)
                report.failures.append(Failure(clutter_to_json(c), param, detail, clutter_to_json(minimal)))
    report.elapsed = time.perf_counter() - start
    return report


def report_json(report: VerificationReport, timing: bool = False) -> str:
    return json.dumps(report.to_json(timing), sort_keys=True)


__all__ = [
    "CHECKS",
    "THEOREMS",
    "Failure",
    "VerificationReport",
    "all_clutters",
    "check_cor3",
    "check_lemma1",
    "check_lemma2",
    "check_thm3",
    "check_thm6",
    "check_thm7",
    "check_thm8",
    "check_thm9",
    "clutters_up_to_isomorphism",
    "default_corpus",
    "named_fixtures",
    "random_clutters",
    "random_whiskered_graphs",
    "shrink",
    "verify",
]
