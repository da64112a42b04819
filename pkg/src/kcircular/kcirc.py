"""The k-circular matroid ``M_k(G)`` and its graph-side characterisations.

For ``k >= 1`` the circuits of ``M_k(G)`` are the edge sets ``C`` with
``|C| - |V(G<C>)| == k`` whose induced subgraph is a cacti-graph (no isolated
vertices, no leaves, no cycle components).  ``k == 0`` gives the cycle matroid.

Each predicate below answers a matroid question from the graph alone and is
checked in the test-suite against the brute-force oracles of
:mod:`kcircular.matroid`.  Graphs with isolated vertices are taken literally:
an isolated vertex is a tree component, so such a graph is never a cacti-graph.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple

from . import graph as gr
from .errors import EnumerationLimitError, HypothesisError
from .graph import Multigraph
from .matroid import Matroid

__all__ = [
    "DEFAULT_MAX_EDGES",
    "KContext",
    "Ranks",
    "CocircuitType",
    "circuits_k",
    "k_matroid",
    "is_nontrivial",
    "is_connected_k",
    "in_class",
    "rank_formulas",
    "is_base_by_structure",
    "cocircuit_type",
    "predicted_fundamental_cocircuit",
    "is_nonsep_set",
]

DEFAULT_MAX_EDGES = 16


class _Indexed:
    """Edges of ``g`` as bit positions (sorted label order) with vertex bitmasks."""

    def __init__(self, g: Multigraph):
        self.labels = tuple(sorted(g.edges))
        verts = sorted(g.vertices)
        vidx = {v: i for i, v in enumerate(verts)}
        self.ends = [(vidx[u], vidx[v]) for u, v in (g.edges[e] for e in self.labels)]
        self.end_masks = [(1 << a) | (1 << b) for a, b in self.ends]

    def vertex_masks(self) -> list[int]:
        """Vertex mask of every edge subset, indexed by the subset mask."""
        m = len(self.labels)
        vm = [0] * (1 << m)
        for x in range(1, 1 << m):
            low = x & -x
            vm[x] = vm[x ^ low] | self.end_masks[low.bit_length() - 1]
        return vm

    def shape(self, x: int) -> tuple[dict, list]:
        """Degrees and vertex components of the subgraph induced by edge mask ``x``."""
        deg: dict[int, int] = {}
        parent: dict[int, int] = {}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        i = 0
        while x:
            if x & 1:
                a, b = self.ends[i]
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
                parent.setdefault(a, a)
                parent.setdefault(b, b)
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
            x >>= 1
            i += 1
        comps: dict[int, list] = {}
        for v in deg:
            comps.setdefault(find(v), []).append(v)
        return deg, list(comps.values())

    def is_cacti(self, x: int) -> bool:
        deg, comps = self.shape(x)
        if any(d < 2 for d in deg.values()):
            return False
        return not any(all(deg[v] == 2 for v in c) for c in comps)

    def is_cycle(self, x: int) -> bool:
        deg, comps = self.shape(x)
        return len(comps) == 1 and all(d == 2 for d in deg.values())


def circuits_k(g: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES) -> frozenset:
    """Circuit family of ``M_k(g)`` by exhaustive subset enumeration."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if len(g.edges) > max_edges:
        raise EnumerationLimitError(
            f"|E| = {len(g.edges)} exceeds the enumeration limit {max_edges}"
        )
    idx = _Indexed(g)
    vm = idx.vertex_masks()
    found = []
    for x in range(1, len(vm)):
        if x.bit_count() - vm[x].bit_count() != k:
            continue
        if idx.is_cycle(x) if k == 0 else idx.is_cacti(x):
            found.append(x)
    for i, a in enumerate(found):
        for b in found[i + 1:]:
            if a & b in (a, b):
                raise RuntimeError("circuit family is not an antichain")
    return frozenset(
        frozenset(idx.labels[i] for i in range(len(idx.labels)) if x >> i & 1) for x in found
    )


def k_matroid(g: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES) -> Matroid:
    return Matroid(g.edges, circuits_k(g, k, max_edges))


class KContext:
    """A graph together with ``k``; the matroid is built on first use."""

    def __init__(self, graph: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES):
        if k < 0:
            raise ValueError("k must be non-negative")
        self.graph = graph
        self.k = k
        self.max_edges = max_edges

    @cached_property
    def matroid(self) -> Matroid:
        return k_matroid(self.graph, self.k, self.max_edges)

    @cached_property
    def connected(self) -> bool:
        return self.k >= 1 and is_connected_k(self.graph, self.k)

    def __repr__(self):
        return f"KContext(k={self.k}, {self.graph!r})"


def _need_positive_k(k: int):
    if k < 1:
        raise HypothesisError("this characterisation is stated for k >= 1")


def _need_connected(ctx: KContext):
    _need_positive_k(ctx.k)
    if not ctx.connected:
        raise HypothesisError(f"M_{ctx.k}(G) is not connected")


def is_nontrivial(g: Multigraph, k: int) -> bool:
    """``k <= Delta(G) + #tree components``, i.e. ``M_k(G)`` has a circuit."""
    _need_positive_k(k)
    return k <= gr.delta(g) + gr.tree_forest(g)[1]


def in_class(g: Multigraph, k: int) -> bool:
    """Cactus membership for ``k == 1``, cacti-graph membership for ``k >= 2``."""
    m = gr.membership(g)
    return m.is_cactus if k == 1 else m.is_cacti


def is_connected_k(g: Multigraph, k: int) -> bool:
    _need_positive_k(k)
    return is_nontrivial(g, k) and in_class(g, k)


class Ranks(NamedTuple):
    rho: int
    rho_star: int


def rank_formulas(ctx: KContext) -> Ranks:
    _need_connected(ctx)
    n, m = len(ctx.graph.vertices), len(ctx.graph.edges)
    return Ranks(n - 1 + ctx.k, m - n + 1 - ctx.k)


def is_base_by_structure(ctx: KContext, b: Iterable[str]) -> bool:
    """``Delta(G<B>) == k-1``, ``B`` spans ``V(G)`` and ``G<B>`` has no tree component."""
    _need_connected(ctx)
    h = ctx.graph.induced(b)
    if gr.delta(h) != ctx.k - 1 or h.vertices != ctx.graph.vertices:
        return False
    return gr.tree_forest(h)[1] == 0


class CocircuitType(NamedTuple):
    kind: int
    component: Multigraph


def _base_component(ctx: KContext, base, e) -> tuple[frozenset, Multigraph]:
    _need_connected(ctx)
    base = frozenset(base)
    if e not in base:
        raise ValueError(f"{e!r} is not in the base")
    if not is_base_by_structure(ctx, base):
        raise ValueError("not a base of M_k(G)")
    u, _ = ctx.graph.ends(e)
    for comp in ctx.graph.induced(base).components():
        if u in comp.vertices:
            return base, comp
    raise AssertionError("edge end missing from base subgraph")


def cocircuit_type(ctx: KContext, base: Iterable[str], e: str) -> CocircuitType:
    """Type 1, 2 or 3 of the rooted cocircuit ``K(e, B)``.

    With ``A`` the component of ``G<B>`` holding ``e``: type 1 when ``e`` is
    outside the kernel of ``A``; type 2 when it is inside and ``A`` is
    unicyclic; type 3 when it is in the core of ``A``.
    """
    _, comp = _base_component(ctx, base, e)
    ker = gr.kernel(comp)
    if e not in ker.edges:
        return CocircuitType(1, comp)
    if gr.cycle_rank(comp) == 1:
        return CocircuitType(2, comp)
    assert e in gr.core(comp).edges
    return CocircuitType(3, comp)


def predicted_fundamental_cocircuit(ctx: KContext, base: Iterable[str], e: str) -> frozenset:
    """``K(e, B)`` read off the graph structure of the base component."""
    base = frozenset(base)
    kind, comp = cocircuit_type(ctx, base, e)
    g = ctx.graph
    outside = g.edge_set - base
    if kind == 3:
        return outside | {e}
    rest = comp.delete_edges([e])
    if kind == 1:
        trees = [c for c in rest.components() if gr.cycle_rank(c) == 0]
        if len(trees) != 1:
            raise RuntimeError("type-1 edge does not split off exactly one tree")
        touched = trees[0].vertices
    else:
        touched = rest.vertices
    return frozenset({e}) | {f for f in outside if set(g.ends(f)) & touched}


def is_nonsep_set(ctx: KContext, k_set: Iterable[str]) -> bool:
    """Graph test for a cocircuit ``K`` whose deletion leaves ``M_k`` connected.

    ``G \\ K`` is the edge deletion with the vertices it isolates discarded:
    ``M_k(G) \\ K`` only sees the remaining edges.  ``k_set`` is assumed to be
    a cocircuit.
    """
    _need_connected(ctx)
    rest = ctx.graph.delete_edges(k_set).without_isolated()
    return gr.delta(rest) >= ctx.k and in_class(rest, ctx.k)
