"""Is ``G`` determined (up to strong isomorphism) by ``M_k(G)``?

Two routes:

* :func:`certify_unique` checks the hypotheses of the sufficient conditions
  (all stars non-separating, all but one star non-separating, and their
  3-connected specialisations);
* :func:`search_equal_matroid` enumerates every graph on the same edge labels
  and the same number of vertices and keeps those with the same k-circular
  matroid.
"""
from __future__ import annotations

import enum
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from . import graph as gr
from .errors import EnumerationLimitError, HypothesisError
from .graph import Multigraph
from .kcirc import KContext, in_class, is_nontrivial
from .stars import Status, nonsep_stars, status

__all__ = [
    "Verdict",
    "Certificate",
    "SearchBounds",
    "SearchResult",
    "strong_isomorphism",
    "star_multiset",
    "certify_unique",
    "search_equal_matroid",
    "decide_unique",
]


def star_multiset(g: Multigraph) -> Counter:
    return Counter(g.star(v) for v in g.vertices)


def strong_isomorphism(g: Multigraph, g2: Multigraph) -> Optional[dict[str, str]]:
    """Vertex bijection carrying every edge of ``g`` onto the same edge of ``g2``.

    Vertices are matched through their stars: a strong isomorphism exists
    exactly when the two graphs have the same multiset of vertex stars.
    """
    if g.edge_set != g2.edge_set:
        raise ValueError("strong isomorphism needs identical edge labels")
    if len(g.vertices) != len(g2.vertices):
        return None
    pool = defaultdict(list)
    for v in sorted(g2.vertices):
        pool[g2.star(v)].append(v)
    nu = {}
    for v in sorted(g.vertices):
        bucket = pool.get(g.star(v))
        if not bucket:
            return None
        nu[v] = bucket.pop(0)
    for e, (u, w) in g.edges.items():
        if gr._pair(nu[u], nu[w]) != g2.edges[e]:
            return None
    return nu


# ----------------------------------------------------------------------
# Certificates


class Verdict(str, enum.Enum):
    CERTIFIED = "certified"
    NOT_UNIQUE = "not_unique"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    theorem: Optional[str] = None
    hypotheses: tuple = ()
    counterexample: Optional[Multigraph] = None
    search_complete: Optional[bool] = None
    exceptional_vertex: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "theorem": self.theorem,
            "hypotheses": [{"name": n, "holds": h} for n, h in self.hypotheses],
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "search_complete": bool(self.search_complete),
            "exceptional_vertex": self.exceptional_vertex,
        }


def _class_name(k: int) -> str:
    return "cactus" if k == 1 else "cacti-graph"


def _all_nonsep(ctx: KContext):
    hyps = [("M_k(G) connected", ctx.connected)]
    if ctx.connected:
        nc = nonsep_stars(ctx)
        hyps.append(("every vertex star is a non-separating cocircuit",
                     all(ctx.graph.star(x) in nc for x in ctx.graph.vertices)))
    return "AllNonSepUniq", hyps, None


def _vertex_deletion_ok(g: Multigraph, k: int, x: str) -> bool:
    rest = g.delete_vertex(x)
    return gr.delta(rest) >= k and in_class(rest, k)


def _all_nonsep_graph(ctx: KContext):
    g, k = ctx.graph, ctx.k
    name = "k>1AllNonSepUniq" if k >= 2 else "k=1AllNonSepUniq"
    cls = _class_name(k)
    hyps = [
        ("Delta(G) >= k", gr.delta(g) >= k),
        (f"G is a {cls}", in_class(g, k)),
        (f"Delta(G-x) >= k and G-x is a {cls} for every vertex x",
         all(_vertex_deletion_ok(g, k, x) for x in g.vertices)),
    ]
    return name, hyps, None


def _star_sizes(ctx: KContext) -> Optional[tuple[int, dict]]:
    if not ctx.connected:
        return None
    g = ctx.graph
    rho_star = len(g.edges) - len(g.vertices) + 1 - ctx.k
    return rho_star, {x: len(g.star(x)) for x in g.vertices}


def _three_connected_all_small(ctx: KContext):
    g, k = ctx.graph, ctx.k
    sizes = _star_sizes(ctx)
    hyps = [
        ("G is 3-connected", gr.is_3_connected(g)),
        ("C_k(G) is non-empty", is_nontrivial(g, k)),
        ("s(x) <= rho* for every vertex",
         sizes is not None and all(s <= sizes[0] for s in sizes[1].values())),
    ]
    return "G3-conAllSmallUniq", hyps, None


def _exceptional(ctx: KContext, good) -> Optional[str]:
    bad = [x for x in sorted(ctx.graph.vertices) if not good(x)]
    return bad[0] if len(bad) == 1 else None


def _almost_all_tail(ctx: KContext, v: Optional[str]) -> list:
    g = ctx.graph
    if v is None:
        return [
            ("every loop is incident to v", False),
            ("v is not k-big and G-v has no tree component", False),
        ]
    loops_ok = all(v in g.ends(e) for e in g.edges if g.is_loop(e))
    v_ok = (
        ctx.connected
        and status(ctx, v) is not Status.BIG
        and gr.tree_forest(g.delete_vertex(v))[1] == 0
    )
    return [
        ("every loop is incident to v", loops_ok),
        ("v is not k-big and G-v has no tree component", v_ok),
    ]


def _almost_all_nonsep(ctx: KContext):
    hyps = [("M_k(G) connected", ctx.connected)]
    v = None
    if ctx.connected:
        nc = nonsep_stars(ctx)
        v = _exceptional(ctx, lambda x: ctx.graph.star(x) in nc)
    hyps.append(("exactly one vertex v has a star outside NC*_k(G)", v is not None))
    hyps += _almost_all_tail(ctx, v)
    return "AlmostAllNonsep", hyps, v


def _almost_all_nonsep_graph(ctx: KContext):
    g, k = ctx.graph, ctx.k
    name = "k>1AlmostAllNonsepG" if k >= 2 else "k=1AlmostAllNonsepG"
    cls = _class_name(k)
    v = _exceptional(ctx, lambda x: _vertex_deletion_ok(g, k, x))
    hyps = [
        ("Delta(G) >= k", gr.delta(g) >= k),
        (f"G is a {cls}", in_class(g, k)),
        (f"Delta(G-x) >= k and G-x is a {cls} for every vertex x but one (v)", v is not None),
    ]
    hyps += _almost_all_tail(ctx, v)
    return name, hyps, v


def _three_connected_one_tight(ctx: KContext):
    g, k = ctx.graph, ctx.k
    sizes = _star_sizes(ctx)
    t = None
    if sizes is not None:
        rho_star, s = sizes
        tight = [x for x in sorted(s) if s[x] == rho_star + 1]
        if len(tight) == 1 and all(s[x] <= rho_star for x in s if x != tight[0]):
            t = tight[0]
    hyps = [
        ("G is 3-connected", gr.is_3_connected(g)),
        ("C_k(G) is non-empty", is_nontrivial(g, k)),
        ("|E| - |V| >= k", gr.delta(g) >= k),
        ("one vertex t is k-tight and every other vertex is k-small", t is not None),
    ]
    return "G3-conAlmostAllNonsep", hyps, t


# 3-connected conditions first: they need no cocircuit computation.
_THEOREMS = (
    _three_connected_all_small,
    _three_connected_one_tight,
    _all_nonsep,
    _all_nonsep_graph,
    _almost_all_nonsep,
    _almost_all_nonsep_graph,
)


def certify_unique(ctx: KContext) -> Certificate:
    """First sufficient condition whose hypotheses all hold, else ``UNKNOWN``.

    An ``UNKNOWN`` verdict proves nothing: the conditions are only sufficient.
    Its ``hypotheses`` list every evaluated condition, prefixed by theorem.
    """
    if ctx.k < 1:
        raise HypothesisError("uniqueness certificates are stated for k >= 1")
    tried = []
    for check in _THEOREMS:
        name, hyps, special = check(ctx)
        if all(h for _, h in hyps):
            return Certificate(Verdict.CERTIFIED, name, tuple(hyps), exceptional_vertex=special)
        tried += [(f"{name}: {n}", h) for n, h in hyps]
    return Certificate(Verdict.UNKNOWN, None, tuple(tried))


# ----------------------------------------------------------------------
# Exhaustive search


@dataclass(frozen=True)
class SearchBounds:
    max_vertices: Optional[int] = None
    time_limit: float = 600.0
    max_edges: int = 7


@dataclass
class SearchResult:
    graphs: list = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


def _search_order(labels, circuits) -> list[str]:
    """Edges of small circuits first, so that prefixes close circuits early."""
    order = []
    for c in sorted(circuits, key=lambda c: (len(c), sorted(c))):
        for e in sorted(c):
            if e not in order:
                order.append(e)
    return order + [e for e in sorted(labels) if e not in order]


def _is_circuit(ends, x: int, k: int) -> bool:
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
            a, b = ends[i]
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
    if k == 0:
        return len(comps) == 1 and all(d == 2 for d in deg.values())
    if any(d < 2 for d in deg.values()):
        return False
    return not any(all(deg[v] == 2 for v in c) for c in comps.values())


def search_equal_matroid(ctx: KContext, bounds: SearchBounds = SearchBounds()) -> SearchResult:
    """Graphs ``G'`` with ``M_k(G') == M_k(G)`` that are not strongly isomorphic to ``G``.

    ``G'`` ranges over all assignments of the edge labels to vertex pairs
    (loops allowed) on ``|V(G)|`` vertices, one representative per
    strong-isomorphism class.  Every subset of the assigned prefix is checked
    to be a circuit of ``M_k(G')`` exactly when it is one of ``M_k(G)``, so
    surviving leaves have the same matroid.  ``complete`` is false when the
    time limit or the vertex bound cut the search short.
    """
    g, k = ctx.graph, ctx.k
    if k >= 1 and not ctx.connected:
        raise HypothesisError(f"M_{k}(G) is not connected")
    m = len(g.edges)
    if m > bounds.max_edges:
        raise EnumerationLimitError(f"|E| = {m} exceeds the search limit {bounds.max_edges}")
    n = len(g.vertices)
    if bounds.max_vertices is not None and n > bounds.max_vertices:
        return SearchResult([], complete=False)

    order = _search_order(g.edges, ctx.matroid.circuits)
    pos = {e: i for i, e in enumerate(order)}
    target = bytearray(1 << m)
    for c in ctx.matroid.circuits:
        target[sum(1 << pos[e] for e in c)] = 1

    names = sorted(g.vertices)
    deadline = time.monotonic() + bounds.time_limit
    result = SearchResult()
    ends: list[tuple[int, int]] = []
    vm = [0]

    def options(used):
        for a in range(used):
            for b in range(a, used):
                yield (a, b), used
        if used < n:
            for a in range(used):
                yield (a, used), used + 1
            yield (used, used), used + 1
        if used + 2 <= n:
            yield (used, used + 1), used + 2

    def consistent(i: int) -> bool:
        bit = 1 << i
        em = (1 << ends[i][0]) | (1 << ends[i][1])
        for x in range(bit):
            y = x | bit
            vmask = vm[x] | em
            vm.append(vmask)
            circ = y.bit_count() - vmask.bit_count() == k and _is_circuit(ends, y, k)
            if circ != bool(target[y]):
                return False
        return True

    def emit():
        h = Multigraph(names, {order[i]: (names[a], names[b]) for i, (a, b) in enumerate(ends)})
        if strong_isomorphism(g, h) is None:
            result.graphs.append(h)

    def dfs(i: int, used: int) -> bool:
        if i == m:
            emit()
            return True
        for pair, nused in options(used):
            result.nodes += 1
            if result.nodes % 2048 == 0 and time.monotonic() > deadline:
                return False
            ends.append(pair)
            ok = consistent(i)
            if ok and not dfs(i + 1, nused):
                return False
            ends.pop()
            del vm[1 << i:]
        return True

    result.complete = dfs(0, 0)
    result.graphs.sort(key=lambda h: h.to_json())
    return result


def decide_unique(ctx: KContext, search: bool = False, bounds: SearchBounds = SearchBounds()) -> Certificate:
    """Certificate first; optionally fall back on the exhaustive search."""
    cert = certify_unique(ctx)
    if cert.verdict is Verdict.CERTIFIED or not search:
        return cert
    found = search_equal_matroid(ctx, bounds)
    if found.graphs:
        return Certificate(
            Verdict.NOT_UNIQUE, "exhaustive-search", cert.hypotheses,
            counterexample=found.graphs[0], search_complete=found.complete,
        )
    if found.complete:
        return Certificate(
            Verdict.CERTIFIED, "exhaustive-search",
            (("no other graph on |V(G)| vertices has the same matroid", True),),
            search_complete=True,
        )
    return Certificate(Verdict.UNKNOWN, None, cert.hypotheses, search_complete=False)
