"""Predicate-versus-oracle verification over a corpus of small multigraphs.

Every graph-side characterisation in :mod:`kcirc`, :mod:`stars` and
:mod:`uniqueness` is compared, instance by instance, with the brute-force
matroid computed from the circuit family.  :func:`run_suite` returns one
:class:`CheckReport` per named check; a failing report keeps every
counterexample, smallest first.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import graph as gr
from . import matroid as mt
from .graph import Multigraph
from .kcirc import (
    KContext,
    in_class,
    is_base_by_structure,
    is_connected_k,
    is_nonsep_set,
    is_nontrivial,
    predicted_fundamental_cocircuit,
    rank_formulas,
)
from .stars import (
    Status,
    dangling_witnesses,
    find_witness_base,
    nonsep_cocircuits_oracle,
    nonsep_stars,
    small_stars,
    star_is_cocircuit,
    status,
)
from .uniqueness import SearchBounds, Verdict, certify_unique, search_equal_matroid

CRITERIA = {
    "circuit_axioms": "1. circuits_k satisfies the circuit axioms",
    "nontriviality": "2. non-triviality predicate == (circuits non-empty)",
    "connectivity": "3. connectivity predicate == oracle connectivity",
    "bases_ranks": "4. base structure and rank formulas == oracle",
    "fundamental_cocircuits": "5. predicted K(e,B) == oracle K(e,B)",
    "star_cocircuit": "6. non-big star is a cocircuit iff G-x has no tree component",
    "nonseparating": "7. non-separating cocircuits: predicate == oracle, stars only, 3-connected case",
    "cocircuit_size": "8. every cocircuit has at most rho*+1 elements",
    "kernel_edges": "9. kernel edge-deletion facts",
    "soundness": "12. certified unique => equal-matroid search is empty",
}

SUPPLEMENTARY = {
    "leaf_star": "star of a leaf of a base subgraph is the fundamental cocircuit",
    "dangling": "star is a cocircuit iff every star edge has a dangling/loop witness base",
    "avoid_kernel": "base avoiding x's kernel exists iff Q-x has a cycle",
    "leaf_base": "leaf base exists under the leaf-claim hypotheses",
    "small_nontrivial": "small x gives a non-trivial M_k(G-x)",
    "small_in_class_nonsep": "small x with G-x in class gives a non-separating star",
    "nonsep_set": "non-separating test on every cocircuit == oracle",
}


@dataclass
class CheckReport:
    name: str
    description: str
    instances: int = 0
    failures: list = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, g: Multigraph, k: Optional[int], detail: str):
        self.failures.append((len(g.edges), len(g.vertices), g, k, detail))

    def witness(self):
        """Smallest failing instance as ``(graph, k, detail)``."""
        if not self.failures:
            return None
        _, _, g, k, detail = min(self.failures, key=lambda f: (f[0], f[1], f[2].to_json()))
        return g, k, detail

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        return f"[{tag}] {self.description}: {self.instances} instances, {len(self.failures)} failures{extra}"


def k_bound(g: Multigraph) -> int:
    """Largest k with a non-trivial ``M_k(g)``."""
    return gr.delta(g) + gr.tree_forest(g)[1]


def _has_isolated(g: Multigraph) -> bool:
    return any(not g.star(v) for v in g.vertices)


class Suite:
    """Accumulates reports across instances."""

    def __init__(self, predicates: Optional[dict[str, Callable]] = None,
                 search_bounds: SearchBounds = SearchBounds(time_limit=60.0)):
        self.reports = {name: CheckReport(name, desc) for name, desc in {**CRITERIA, **SUPPLEMENTARY}.items()}
        self.connected_k = (predicates or {}).get("is_connected_k", is_connected_k)
        self.search_bounds = search_bounds

    def __getitem__(self, name: str) -> CheckReport:
        return self.reports[name]

    # -- per-instance checks -----------------------------------------------

    def check_graph(self, g: Multigraph, search: bool = True):
        top = k_bound(g)
        for k in range(0, max(top, 0) + 1):
            ctx = KContext(g, k)
            self._axioms(ctx)
        for k in range(1, max(top, 0) + 2):
            ctx = KContext(g, k)
            self._nontrivial(ctx)
            oracle_connected = self._connectivity(ctx)
            if oracle_connected and not _has_isolated(g):
                self._connected_checks(ctx, search)
        self._kernel_edges(g)

    def _axioms(self, ctx: KContext):
        m = ctx.matroid
        r = self["circuit_axioms"]
        r.instances += 1
        if not mt.validate(m):
            r.fail(ctx.graph, ctx.k, "circuit axioms violated")
        r = self["cocircuit_size"]
        r.instances += 1
        bound = m.corank + 1
        big = [sorted(K) for K in m.cocircuits if len(K) > bound]
        if big:
            r.fail(ctx.graph, ctx.k, f"cocircuits larger than {bound}: {big}")

    def _nontrivial(self, ctx: KContext):
        r = self["nontriviality"]
        r.instances += 1
        if is_nontrivial(ctx.graph, ctx.k) != bool(ctx.matroid.circuits):
            r.fail(ctx.graph, ctx.k, "non-triviality predicate disagrees with circuits")

    def _connectivity(self, ctx: KContext) -> bool:
        r = self["connectivity"]
        r.instances += 1
        g, k = ctx.graph, ctx.k
        oracle = mt.is_connected(ctx.matroid)
        # isolated vertices carry no matroid elements: compare on the graph without them
        probe = g.without_isolated() if _has_isolated(g) else g
        if self.connected_k(probe, k) != oracle:
            r.fail(g, k, f"predicate {not oracle}, oracle {oracle}")
        return oracle

    def _connected_checks(self, ctx: KContext, search: bool):
        g, k, m = ctx.graph, ctx.k, ctx.matroid
        if not ctx.connected:
            return  # already recorded as a connectivity failure
        base_set = set(m.base_masks)
        labels = m.ground

        r = self["bases_ranks"]
        r.instances += 1
        ranks = rank_formulas(ctx)
        if (ranks.rho, ranks.rho_star) != (m.rho, m.corank):
            r.fail(g, k, f"formula {tuple(ranks)} vs oracle {(m.rho, m.corank)}")
        for x in range(m.full + 1):
            subset = m.members(x)
            if is_base_by_structure(ctx, subset) != (x in base_set):
                r.fail(g, k, f"base predicate wrong on {sorted(subset)}")

        r = self["fundamental_cocircuits"]
        for b in m.base_masks:
            base = m.members(b)
            for e in sorted(base):
                r.instances += 1
                want = mt.fundamental_cocircuit(m, base, e)
                got = predicted_fundamental_cocircuit(ctx, base, e)
                if got != want:
                    r.fail(g, k, f"B={sorted(base)} e={e}: predicted {sorted(got)}, oracle {sorted(want)}")

        cocircuits = m.cocircuits
        r = self["star_cocircuit"]
        for x in sorted(g.vertices):
            if status(ctx, x) is Status.BIG:
                continue
            r.instances += 1
            if star_is_cocircuit(ctx, x) != (g.star(x) in cocircuits):
                r.fail(g, k, f"vertex {x}")

        oracle_nc = nonsep_cocircuits_oracle(ctx)
        r = self["nonseparating"]
        r.instances += 1
        predicted = nonsep_stars(ctx)
        stars = {g.star(v) for v in g.vertices}
        if predicted != oracle_nc:
            r.fail(g, k, f"predicate {sorted(map(sorted, predicted))} vs oracle {sorted(map(sorted, oracle_nc))}")
        if not oracle_nc <= stars:
            r.fail(g, k, "a non-separating cocircuit is not a vertex star")
        if gr.is_3_connected(g) and gr.delta(g) >= k and oracle_nc != small_stars(ctx):
            r.fail(g, k, "3-connected graph: NC* differs from the small stars")

        r = self["nonsep_set"]
        for K in sorted(cocircuits, key=sorted):
            r.instances += 1
            if is_nonsep_set(ctx, K) != (K in oracle_nc):
                r.fail(g, k, f"K={sorted(K)}")

        self._star_claims(ctx, cocircuits, oracle_nc)

        if search:
            self._soundness(ctx)

    def _star_claims(self, ctx: KContext, cocircuits, oracle_nc):
        g, k, m = ctx.graph, ctx.k, ctx.matroid
        r = self["leaf_star"]
        for b in m.base_masks:
            base = m.members(b)
            h = g.induced(base)
            for x in sorted(g.vertices):
                own = g.star(x) & base
                if len(own) == 1:
                    r.instances += 1
                    (e,) = own
                    if mt.fundamental_cocircuit(m, base, e) != g.star(x):
                        r.fail(g, k, f"B={sorted(base)} x={x}")
                    if h.degree(x) != 1 and not g.is_loop(e):
                        r.fail(g, k, "single base edge at x that is neither dangling nor a loop")

        for x in sorted(g.vertices):
            st = status(ctx, x)
            rest = g.delete_vertex(x)
            no_tree = gr.tree_forest(rest)[1] == 0

            r = self["dangling"]
            r.instances += 1
            witnesses = dangling_witnesses(ctx, x)
            if all(w is not None for w in witnesses.values()) != (g.star(x) in cocircuits):
                r.fail(g, k, f"vertex {x}")

            if st is Status.BIG:
                continue
            q = next(c for c in g.components() if x in c.vertices)
            r = self["avoid_kernel"]
            r.instances += 1
            q_rest_cycle = gr.cycle_rank(q.delete_vertex(x)) > 0
            if (find_witness_base(ctx, x, "avoid_kernel") is not None) != q_rest_cycle:
                r.fail(g, k, f"vertex {x}")

            r = self["leaf_base"]
            if no_tree:
                r.instances += 1
                alone = len(q.vertices) == 1
                leaf = find_witness_base(ctx, x, "leaf")
                if alone == (leaf is not None):
                    r.fail(g, k, f"vertex {x}: alone={alone}, leaf base={leaf}")
                if leaf is not None:
                    (e,) = g.star(x) & leaf
                    if mt.fundamental_cocircuit(m, leaf, e) != g.star(x):
                        r.fail(g, k, f"vertex {x}: leaf edge cocircuit is not the star")

            if st is Status.SMALL:
                r = self["small_nontrivial"]
                r.instances += 1
                if not KContext(rest, k).matroid.circuits:
                    r.fail(g, k, f"vertex {x}")
                if gr.delta(rest) >= k and in_class(rest, k):
                    r = self["small_in_class_nonsep"]
                    r.instances += 1
                    if g.star(x) not in oracle_nc:
                        r.fail(g, k, f"vertex {x}")

    def _soundness(self, ctx: KContext):
        r = self["soundness"]
        cert = certify_unique(ctx)
        if cert.verdict is not Verdict.CERTIFIED:
            return
        found = search_equal_matroid(ctx, self.search_bounds)
        if not found.complete:
            r.skipped += 1
            return
        r.instances += 1
        if found.graphs:
            r.fail(ctx.graph, ctx.k, f"{cert.theorem} certified, but search found {found.graphs[0]!r}")

    def _kernel_edges(self, g: Multigraph):
        r = self["kernel_edges"]
        for a in g.components():
            if gr.cycle_rank(a) == 0:
                continue
            ker = gr.kernel(a)
            cycles = gr.cycle_rank(a)
            for e in sorted(a.edges):
                r.instances += 1
                u, v = a.ends(e)
                in_ker = e in ker.edges
                parts = a.delete_edges([e]).components()
                if in_ker != (u in ker.vertices and v in ker.vertices):
                    r.fail(g, None, f"kernel membership, edge {e}")
                if not in_ker:
                    trees = [p for p in parts if gr.cycle_rank(p) == 0]
                    others = [p for p in parts if gr.cycle_rank(p) > 0]
                    if len(parts) != 2 or len(trees) != 1 or not ker.vertices <= others[0].vertices:
                        r.fail(g, None, f"pendant edge split, edge {e}")
                if in_ker and cycles == 1 and not (len(parts) == 1 and gr.cycle_rank(parts[0]) == 0):
                    r.fail(g, None, f"unicyclic kernel edge, edge {e}")
                if in_ker and cycles >= 2 and any(gr.cycle_rank(p) == 0 for p in parts):
                    r.fail(g, None, f"multicyclic kernel edge, edge {e}")
                if len(parts) == 2:
                    for w in ker.vertices:
                        home = next(p for p in parts if w in p.vertices)
                        if gr.cycle_rank(home) == 0:
                            r.fail(g, None, f"kernel vertex on a tree side, edge {e}, vertex {w}")


def run_suite(graphs: Iterable[Multigraph], predicates: Optional[dict] = None,
              search: bool = True, search_bounds: SearchBounds = SearchBounds(time_limit=60.0)) -> Suite:
    suite = Suite(predicates, search_bounds)
    for g in graphs:
        suite.check_graph(g, search=search)
    return suite


def mutant_connectivity(g: Multigraph, k: int) -> bool:
    """Deliberately wrong connectivity predicate (drops the class condition); harness self-test."""
    return is_nontrivial(g, k)


def timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - start
