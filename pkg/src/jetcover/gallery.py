"""Small named graphs and ideals used throughout the tests and notebooks."""

from __future__ import annotations

from .clutter import Graph
from .ideals import MonomialIdeal


def _graph(vertices: str, edges: str) -> Graph:
    return Graph(tuple(vertices), tuple(frozenset(e) for e in edges.split()))


def path_graph() -> Graph:
    """x - y - z."""
    return _graph("xyz", "xy yz")


def triangle_with_tail() -> Graph:
    """The path u - v - w joined at w to the triangle w, x, y."""
    return _graph("uvwxy", "uv vw wx xy wy")


def favaron_g1() -> Graph:
    """Very well-covered graph on a..h with the single perfect matching ae, bf, cg, dh."""
    return _graph("abcdefgh", "ae be bf cf cg ce fh eh ch dh")


def complete_bipartite(n: int) -> Graph:
    left = [f"a{i}" for i in range(1, n + 1)]
    right = [f"b{i}" for i in range(1, n + 1)]
    return Graph(tuple(left + right), tuple(frozenset((a, b)) for a in left for b in right))


def cycle(n: int) -> Graph:
    vs = [f"c{i}" for i in range(1, n + 1)]
    return Graph(tuple(vs), tuple(frozenset((vs[i], vs[(i + 1) % n])) for i in range(n)))


def path(n: int) -> Graph:
    vs = [f"p{i}" for i in range(1, n + 1)]
    return Graph(tuple(vs), tuple(frozenset((vs[i], vs[i + 1])) for i in range(n - 1)))


def whisker(g: Graph) -> Graph:
    """Attach a new pendant vertex to every vertex; the result is very well-covered."""
    new = {v: f"{v}w" for v in g.vertices}
    clash = set(new.values()) & set(g.vertices)
    if clash:
        raise ValueError(f"whisker labels {sorted(clash)} collide with existing vertices")
    edges = list(g.edges) + [frozenset((v, w)) for v, w in new.items()]
    return Graph(g.vertices + tuple(new.values()), tuple(edges))


def mixed_ideal() -> MonomialIdeal:
    """<vwx, xy, yz> on v, w, x, y, z: generators of degrees 3 and 2."""
    return MonomialIdeal(tuple("vwxyz"), ["v*w*x", "x*y", "y*z"])


def path_ideal() -> MonomialIdeal:
    return MonomialIdeal(tuple("xyz"), ["x*y", "y*z"])


__all__ = [
    "complete_bipartite",
    "cycle",
    "favaron_g1",
    "mixed_ideal",
    "path",
    "path_graph",
    "path_ideal",
    "triangle_with_tail",
    "whisker",
]
