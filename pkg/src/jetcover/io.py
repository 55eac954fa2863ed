"""JSON formats shared by the library and the CLI, and graph-corpus ingestion.

Clutters: ``{"vertices": ["x","y","z"], "edges": [["x","y"],["y","z"]]}``.
Ideals: a JSON array of monomial strings, or
``{"universe": [...], "generators": [...]}`` when the ring has variables not
occurring in any generator.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Iterable

from .clutter import Clutter, Graph, canonicalize
from .errors import DomainError, JetcoverError
from .ideals import Monomial, MonomialIdeal
from .labels import sort_labels

log = logging.getLogger(__name__)


def _load(data: Any) -> Any:
    if isinstance(data, (str, bytes)):
        try:
            return json.loads(data)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed JSON: {exc}") from None
    return data


def clutter_to_json(c: Clutter) -> dict:
    return {"vertices": list(c.vertices), "edges": [list(sort_labels(e)) for e in c.edges]}


def clutter_from_json(data: Any, canonical: bool = True) -> Clutter:
    """Parse the shared clutter format; edges containing other edges are dropped
    when ``canonical`` is set, otherwise they are an error."""
    data = _load(data)
    if not isinstance(data, dict) or "edges" not in data:
        raise DomainError('clutter JSON must be an object with an "edges" list')
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise DomainError('"edges" must be a list of vertex lists')
    vertices = data.get("vertices")
    if vertices is None:
        vertices = sorted({str(v) for e in edges for v in e})
    if not isinstance(vertices, list):
        raise DomainError('"vertices" must be a list of labels')
    known = {str(v) for v in vertices}
    for e in edges:
        for v in e:
            if str(v) not in known:
                raise DomainError(f"edge {e} uses unknown vertex {v!r}")
    if canonical:
        return canonicalize(vertices, edges)
    c = Clutter(tuple(vertices), tuple(frozenset(map(str, e)) for e in edges))
    return Graph.from_clutter(c) if c.edges and c.is_graph() else c


def ideal_to_json(i: MonomialIdeal, with_universe: bool = True) -> Any:
    gens = [str(g) for g in i.generators]
    if with_universe:
        return {"universe": list(i.universe), "generators": gens}
    return gens


def ideal_from_json(data: Any, universe: Iterable[str] | None = None) -> MonomialIdeal:
    data = _load(data)
    if isinstance(data, dict):
        if "generators" not in data:
            raise DomainError('ideal JSON object needs a "generators" list')
        universe = data.get("universe", universe)
        data = data["generators"]
    if not isinstance(data, list) or not all(isinstance(g, str) for g in data):
        raise DomainError("ideal JSON must be a list of monomial strings")
    gens = [Monomial.parse(g) for g in data]
    if universe is None:
        universe = sort_labels({v for g in gens for v in g.support})
    return MonomialIdeal(tuple(universe), gens)


def covers_to_json(covers: Iterable[frozenset[str]]) -> list[list[str]]:
    return [list(sort_labels(w)) for w in covers]


def _parse_edge_list_line(line: str) -> Graph:
    edges, vertices = [], set()
    for token in line.split():
        if "-" in token:
            parts = token.split("-")
            if len(parts) != 2 or not all(parts) or parts[0] == parts[1]:
                raise DomainError(f"bad edge token {token!r}")
            edges.append(parts)
            vertices.update(parts)
        else:
            vertices.add(token)
    c = canonicalize(vertices, edges)
    return Graph.from_clutter(c)


def ingest_graph_corpus(path: str | Path) -> list[Graph]:
    """Read graphs from a file of edge-list lines or of clutter JSON.

    A line such as ``x-y y-z`` is a path; a bare token is an isolated vertex;
    blank lines and ``#`` comments are skipped.  A file whose content is a
    JSON object or array is read as one clutter or a list of clutters.
    Malformed records are logged with their line number and skipped.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read corpus {str(path)!r}: {exc.strerror}") from None
    stripped = text.strip()
    if not stripped:
        log.warning("corpus %s is empty", path)
        return []
    if stripped[0] in "[{":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError:
            data = None
        if data is not None:
            records = data if isinstance(data, list) else [data]
            out = []
            for n, rec in enumerate(records, 1):
                try:
                    out.append(Graph.from_clutter(clutter_from_json(rec)))
                except (JetcoverError, TypeError) as exc:
                    log.warning("%s: record %d skipped: %s", path, n, exc)
            return out
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("{"):
                out.append(Graph.from_clutter(clutter_from_json(line)))
            else:
                out.append(_parse_edge_list_line(line))
        except (JetcoverError, TypeError) as exc:
            log.warning("%s:%d: skipped: %s", path, n, exc)
    if not out:
        log.warning("corpus %s contains no valid graphs", path)
    return out


__all__ = [
    "clutter_from_json",
    "clutter_to_json",
    "covers_to_json",
    "ideal_from_json",
    "ideal_to_json",
    "ingest_graph_corpus",
]
