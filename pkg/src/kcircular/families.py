"""Small named graphs used in tests, demos and the CLI."""
from __future__ import annotations

from itertools import combinations

from .graph import Multigraph


def complete_graph(n: int) -> Multigraph:
    """``K_n`` on vertices ``"1".."n"``; the edge joining i<j is labelled ``f"{i}{j}"``."""
    verts = [str(i) for i in range(1, n + 1)]
    return Multigraph(verts, [(u + v, u, v) for u, v in combinations(verts, 2)])


def cycle_graph(n: int) -> Multigraph:
    """Cycle on ``n`` vertices; ``n == 1`` gives a loop, ``n == 2`` a digon."""
    verts = [str(i) for i in range(1, n + 1)]
    return Multigraph(verts, [(f"c{i}", verts[i], verts[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    verts = [str(i) for i in range(1, n + 1)]
    return Multigraph(verts, [(f"p{i}", verts[i], verts[i + 1]) for i in range(n - 1)])


def star_graph(leaves: int) -> Multigraph:
    """``K_{1,leaves}`` with centre ``"0"``."""
    return Multigraph.from_edges([(f"s{i}", "0", str(i)) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Multigraph:
    """Centre ``"0"`` joined to every vertex of a ``rim``-cycle on ``"1".."rim"``."""
    rim_v = [str(i) for i in range(1, rim + 1)]
    edges = [(f"r{i}", rim_v[i], rim_v[(i + 1) % rim]) for i in range(rim)]
    edges += [(f"s{i + 1}", "0", v) for i, v in enumerate(rim_v)]
    return Multigraph.from_edges(edges)


def theta_graph(paths: int = 3, u: str = "a", v: str = "b", prefix: str = "t") -> Multigraph:
    """Two vertices joined by ``paths`` parallel edges."""
    return Multigraph([u, v], [(f"{prefix}{i}", u, v) for i in range(1, paths + 1)])


def isolated(*names: str) -> Multigraph:
    return Multigraph(names)
