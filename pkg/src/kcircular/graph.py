"""Edge-labelled multigraphs and the graph predicates used throughout the package.

Vertices and edges carry opaque string labels.  An edge is an unordered pair of
vertex labels; a pair with equal ends is a loop.  A loop contributes 2 to the
degree of its vertex but appears once in the vertex star.
"""
from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Optional, Union

__all__ = [
    "Multigraph",
    "Membership",
    "Split",
    "delta",
    "induced_by_edges",
    "components",
    "cycle_rank",
    "tree_forest",
    "membership",
    "is_cacti",
    "is_cactus",
    "kernel",
    "core",
    "star",
    "delete",
    "nontree_tree_split",
    "degree_profile",
    "is_3_connected",
    "wheel_check",
]


def _pair(u, v) -> tuple[str, str]:
    u, v = str(u), str(v)
    return (u, v) if u <= v else (v, u)


class Multigraph:
    """Immutable multigraph ``(V, E, phi)``.

    Parameters
    ----------
    vertices : iterable of labels
    edges : mapping ``label -> (u, v)`` or iterable of ``(label, u, v)``

    Every endpoint must be a listed vertex; use :meth:`from_edges` to collect
    the vertex set from the edges instead.
    """

    def __init__(self, vertices: Iterable = (), edges=None):
        self._vertices = frozenset(str(v) for v in vertices)
        items = edges.items() if isinstance(edges, Mapping) else (
            (e, (u, v)) for e, u, v in (edges or ())
        )
        table = {}
        for label, (u, v) in items:
            label = str(label)
            if label in table:
                raise ValueError(f"duplicate edge label {label!r}")
            table[label] = _pair(u, v)
        for label, (u, v) in table.items():
            if u not in self._vertices or v not in self._vertices:
                raise ValueError(f"edge {label!r} has an endpoint outside the vertex set")
        self._edges = MappingProxyType(dict(sorted(table.items())))

    @classmethod
    def from_edges(cls, edges, vertices: Iterable = ()) -> "Multigraph":
        if isinstance(edges, Mapping):
            edges = [(e, u, v) for e, (u, v) in edges.items()]
        edges = list(edges)
        verts = {str(v) for v in vertices}
        for _, u, v in edges:
            verts.update((str(u), str(v)))
        return cls(verts, edges)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, tuple[str, str]]:
        return self._edges

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self._edges)

    def ends(self, e: str) -> tuple[str, str]:
        try:
            return self._edges[e]
        except KeyError:
            raise KeyError(f"unknown edge {e!r}") from None

    def is_loop(self, e: str) -> bool:
        u, v = self.ends(e)
        return u == v

    @cached_property
    def _incidence(self) -> dict[str, frozenset]:
        inc = {v: set() for v in self._vertices}
        for e, (u, v) in self._edges.items():
            inc[u].add(e)
            inc[v].add(e)
        return {v: frozenset(s) for v, s in inc.items()}

    def star(self, v: str) -> frozenset:
        """Edges incident to ``v``; a loop appears once."""
        try:
            return self._incidence[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return sum(2 if self.is_loop(e) else 1 for e in self.star(v))

    def neighbours(self, v: str) -> set:
        out = set()
        for e in self.star(v):
            a, b = self._edges[e]
            out.add(b if a == v else a)
        return out

    def __len__(self) -> int:
        return len(self._vertices)

    # -- derived graphs --------------------------------------------------

    def induced(self, x: Iterable[str]) -> "Multigraph":
        """Subgraph ``G<X>``: the edges of ``x`` and only their end vertices."""
        x = set(x)
        unknown = x - self._edges.keys()
        if unknown:
            raise KeyError(f"unknown edges {sorted(unknown)}")
        return Multigraph.from_edges([(e, *self._edges[e]) for e in x])

    def delete_vertex(self, x: str) -> "Multigraph":
        drop = self.star(x)
        return Multigraph(
            self._vertices - {x},
            {e: uv for e, uv in self._edges.items() if e not in drop},
        )

    def delete_vertices(self, xs: Iterable[str]) -> "Multigraph":
        g = self
        for x in xs:
            g = g.delete_vertex(x)
        return g

    def delete_edges(self, k: Iterable[str]) -> "Multigraph":
        """Remove edges only; every vertex is kept, possibly isolated."""
        k = set(k)
        unknown = k - self._edges.keys()
        if unknown:
            raise KeyError(f"unknown edges {sorted(unknown)}")
        return Multigraph(self._vertices, {e: uv for e, uv in self._edges.items() if e not in k})

    def without_isolated(self) -> "Multigraph":
        return Multigraph(
            (v for v in self._vertices if self._incidence[v]), self._edges
        )

    def restrict(self, verts: Iterable[str]) -> "Multigraph":
        """Subgraph induced by a vertex set."""
        verts = frozenset(verts)
        return Multigraph(
            verts,
            {e: (u, v) for e, (u, v) in self._edges.items() if u in verts and v in verts},
        )

    def relabel(self, mapping: Mapping[str, str]) -> "Multigraph":
        return Multigraph(
            (mapping.get(v, v) for v in self._vertices),
            {e: (mapping.get(u, u), mapping.get(v, v)) for e, (u, v) in self._edges.items()},
        )

    def union(self, other: "Multigraph") -> "Multigraph":
        """Union of two graphs with disjoint edge labels."""
        clash = self.edge_set & other.edge_set
        if clash:
            raise ValueError(f"edge labels shared: {sorted(clash)}")
        return Multigraph(self._vertices | other._vertices, {**self._edges, **other._edges})

    # -- connectivity ----------------------------------------------------

    @cached_property
    def _vertex_components(self) -> tuple[frozenset, ...]:
        seen, comps = set(), []
        for root in sorted(self._vertices):
            if root in seen:
                continue
            stack, comp = [root], {root}
            while stack:
                v = stack.pop()
                for w in self.neighbours(v):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def components(self) -> list["Multigraph"]:
        return [self.restrict(c) for c in self._vertex_components]

    def is_connected(self) -> bool:
        return len(self._vertex_components) <= 1

    # -- value semantics -------------------------------------------------

    def _key(self):
        return (tuple(sorted(self._vertices)), tuple(self._edges.items()))

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        es = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in self._edges.items())
        return f"Multigraph(V={sorted(self._vertices)}, E={{{es}}})"

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self._vertices),
            "edges": [{"id": e, "ends": list(uv)} for e, uv in self._edges.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Multigraph":
        try:
            verts = data["vertices"]
            edges = [(item["id"], *item["ends"]) for item in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph document: {exc}") from exc
        if any(len(item) != 3 for item in edges):
            raise ValueError("each edge needs exactly two ends")
        return cls(verts, edges)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        return cls.from_dict(json.loads(text))


# ----------------------------------------------------------------------
# Module-level predicates


def delta(g: Multigraph) -> int:
    """``|E(g)| - |V(g)|``."""
    return len(g.edges) - len(g.vertices)


def induced_by_edges(g: Multigraph, x: Iterable[str]) -> Multigraph:
    return g.induced(x)


def components(g: Multigraph) -> list[Multigraph]:
    return g.components()


def cycle_rank(g: Multigraph) -> int:
    """Cyclomatic number ``|E| - |V| + #components``."""
    return len(g.edges) - len(g.vertices) + len(g._vertex_components)


def _is_tree(c: Multigraph) -> bool:
    # c is connected
    return len(c.edges) == len(c.vertices) - 1


def _is_cycle(c: Multigraph) -> bool:
    # c is connected; loops and digons count as cycles
    return len(c.vertices) > 0 and all(c.degree(v) == 2 for v in c.vertices)


def tree_forest(g: Multigraph) -> tuple[Multigraph, int]:
    """Union of the tree components (isolated vertices included) and their number."""
    trees = [c for c in g.components() if _is_tree(c)]
    f = Multigraph()
    for t in trees:
        f = f.union(t)
    return f, len(trees)


class Membership(NamedTuple):
    is_cacti: bool
    is_cactus: bool
    leaves: frozenset
    cycle_components: int


def membership(g: Multigraph) -> Membership:
    leaves = frozenset(v for v in g.vertices if g.degree(v) == 1)
    isolated = any(not g.star(v) for v in g.vertices)
    comps = g.components()
    cycles = sum(1 for c in comps if _is_cycle(c))
    cacti = not isolated and not leaves and cycles == 0
    return Membership(cacti, cacti and len(comps) <= 1, leaves, cycles)


def is_cacti(g: Multigraph) -> bool:
    return membership(g).is_cacti


def is_cactus(g: Multigraph) -> bool:
    return membership(g).is_cactus


def _prune(g: Multigraph) -> Multigraph:
    degree = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    queue = [v for v, d in degree.items() if d <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbours(v):
            if w in alive:
                degree[w] -= sum(1 for e in g.star(v) if w in g.ends(e))
                if degree[w] <= 1:
                    queue.append(w)
    return g.restrict(alive)


def kernel(g: Multigraph) -> Optional[Multigraph]:
    """Largest subgraph without leaves and isolated vertices; ``None`` for forests."""
    if cycle_rank(g) == 0:
        return None
    return _prune(g)


def core(g: Multigraph) -> Optional[Multigraph]:
    """Kernel minus its cycle components; ``None`` unless some component has two cycles."""
    if not any(cycle_rank(c) >= 2 for c in g.components()):
        return None
    out = Multigraph()
    for c in _prune(g).components():
        if not _is_cycle(c):
            out = out.union(c)
    return out


def star(g: Multigraph, v: str) -> frozenset:
    return g.star(v)


def delete(g: Multigraph, what: Union[str, Iterable[str]]) -> Multigraph:
    """``G \\ x`` for a vertex label, ``G \\ K`` (edges only) for an edge collection."""
    if isinstance(what, str):
        return g.delete_vertex(what)
    return g.delete_edges(what)


class Split(NamedTuple):
    nontree: Optional[Multigraph]
    trees: Optional[Multigraph]


def nontree_tree_split(g: Multigraph, x: str) -> Split:
    """Non-tree and tree parts of ``g \\ x``; a part with no components is ``None``."""
    rest = g.delete_vertex(x)
    nontree, trees = [], []
    for c in rest.components():
        (trees if _is_tree(c) else nontree).append(c)

    def join(parts):
        if not parts:
            return None
        out = Multigraph()
        for p in parts:
            out = out.union(p)
        return out

    return Split(join(nontree), join(trees))


def degree_profile(g: Multigraph) -> dict[str, tuple[int, int]]:
    """``vertex -> (star size, degree)``."""
    return {v: (len(g.star(v)), g.degree(v)) for v in sorted(g.vertices)}


def is_3_connected(g: Multigraph) -> bool:
    """At least 4 vertices, no loops, and no set of at most 2 vertices disconnects ``g``.

    Parallel edges are allowed and do not add connectivity.
    """
    if len(g.vertices) < 4 or any(u == v for u, v in g.edges.values()):
        return False
    if not g.is_connected():
        return False
    for r in (1, 2):
        for cut in combinations(sorted(g.vertices), r):
            if not g.delete_vertices(cut).is_connected():
                return False
    return True


def wheel_check(g: Multigraph) -> Optional[str]:
    """Vertex ``x`` with ``d(x) > |E| - |V|`` in a 3-connected graph, if any.

    For a simple 3-connected graph such a vertex is the centre of a wheel.
    """
    if not is_3_connected(g):
        raise ValueError("wheel_check needs a 3-connected graph")
    bound = delta(g)
    for v in sorted(g.vertices):
        if g.degree(v) > bound:
            return v
    return None
