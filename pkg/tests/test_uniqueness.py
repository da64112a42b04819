import itertools
import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcircular import graph as gr
from kcircular import matroid as mt
from kcircular.errors import EnumerationLimitError, HypothesisError
from kcircular.families import complete_graph, cycle_graph, wheel_graph
from kcircular.graph import Multigraph
from kcircular.kcirc import KContext, k_matroid
from kcircular.stars import Status, classify, nonsep_cocircuits_oracle
from kcircular.uniqueness import (
    SearchBounds,
    Verdict,
    certify_unique,
    decide_unique,
    search_equal_matroid,
    star_multiset,
    strong_isomorphism,
)

from conftest import corpus, random_graphs

K4, K5 = complete_graph(4), complete_graph(5)


def brute_bijection(g, g2):
    if len(g.vertices) != len(g2.vertices):
        return None
    src, dst = sorted(g.vertices), sorted(g2.vertices)
    for perm in itertools.permutations(dst):
        nu = dict(zip(src, perm))
        if all(gr._pair(nu[u], nu[v]) == g2.edges[e] for e, (u, v) in g.edges.items()):
            return nu
    return None


def stars(g):
    return {g.star(v) for v in g.vertices}


# -- strong isomorphism ---------------------------------------------------------


def test_strong_isomorphism_examples():
    tri = cycle_graph(3)
    renamed = tri.relabel({"1": "b", "2": "c", "3": "a"})
    nu = strong_isomorphism(tri, renamed)
    assert nu == {"1": "b", "2": "c", "3": "a"}
    swapped = K4.relabel({"1": "2", "2": "1"})
    assert swapped != K4 and strong_isomorphism(K4, swapped) == {"1": "2", "2": "1", "3": "3", "4": "4"}
    with pytest.raises(ValueError):
        strong_isomorphism(K4, complete_graph(3))


def test_isolated_vertices_are_counted():
    # equal star sets (both contain the empty star) yet no bijection exists
    g = K4.union(Multigraph(["8"]))
    g2 = K4.union(Multigraph(["8", "9"]))
    assert stars(g) == stars(g2)
    assert star_multiset(g) != star_multiset(g2)
    assert strong_isomorphism(g, g2) is None


@st.composite
def graph_pairs(draw):
    g = draw(random_graphs(max_vertices=6, max_edges=8))
    if draw(st.booleans()):
        names = sorted(g.vertices)
        shuffled = draw(st.permutations(names))
        return g, g.relabel(dict(zip(names, shuffled)))
    n = len(g.vertices)
    names = [str(i + 1) for i in range(n)]
    ends = draw(st.lists(st.tuples(st.sampled_from(names), st.sampled_from(names)),
                         min_size=len(g.edges), max_size=len(g.edges)))
    return g, Multigraph(names, [(e, u, v) for e, (u, v) in zip(sorted(g.edges), ends)])


@given(graph_pairs())
@settings(max_examples=300, deadline=None)
def test_strong_isomorphism_against_brute_force(pair):
    g, g2 = pair
    nu = strong_isomorphism(g, g2)
    assert (nu is None) == (brute_bijection(g, g2) is None)
    if nu is not None:
        assert g.relabel(nu) == g2
    if len(g.vertices) == len(g2.vertices) and not any(not g.star(v) for v in g.vertices):
        assert (nu is not None) == (stars(g) == stars(g2))


# -- certificates -----------------------------------------------------------------


def test_certify_examples():
    start = time.perf_counter()
    cert = certify_unique(KContext(K5, 1))
    assert time.perf_counter() - start < 1.0
    assert cert.verdict is Verdict.CERTIFIED and cert.theorem == "G3-conAllSmallUniq"
    assert all(h for _, h in cert.hypotheses)
    assert certify_unique(KContext(K4, 1)).verdict is Verdict.UNKNOWN
    assert certify_unique(KContext(K5, 5)).verdict is Verdict.UNKNOWN
    assert certify_unique(KContext(K4, 2)).verdict is Verdict.UNKNOWN
    with pytest.raises(HypothesisError):
        certify_unique(KContext(K4, 0))


def test_certificate_json():
    d = certify_unique(KContext(K5, 1)).to_dict()
    assert set(d) >= {"verdict", "theorem", "hypotheses", "counterexample", "search_complete"}
    assert d["verdict"] == "certified" and d["counterexample"] is None
    assert all(set(h) == {"name", "holds"} for h in d["hypotheses"])


def test_unknown_lists_every_hypothesis():
    cert = certify_unique(KContext(K4, 1))
    names = {n.split(":")[0] for n, _ in cert.hypotheses}
    assert names == {"G3-conAllSmallUniq", "G3-conAlmostAllNonsep", "AllNonSepUniq",
                     "k=1AllNonSepUniq", "AlmostAllNonsep", "k=1AlmostAllNonsepG"}


# -- exhaustive search ------------------------------------------------------------


def check_hit(ctx, h):
    g, k = ctx.graph, ctx.k
    assert h.edge_set == g.edge_set
    assert k_matroid(h, k) == ctx.matroid
    assert strong_isomorphism(g, h) is None
    assert brute_bijection(g, h) is None
    assert len(h.vertices) == len(g.vertices)
    for x_star in nonsep_cocircuits_oracle(ctx):
        assert x_star in stars(h)


def test_k4_counterexamples():
    ctx = KContext(K4, 1)
    found = search_equal_matroid(ctx, SearchBounds(time_limit=600))
    assert found.complete and found.graphs
    for h in found.graphs:
        check_hit(ctx, h)
    cert = decide_unique(ctx, search=True)
    assert cert.verdict is Verdict.NOT_UNIQUE and cert.counterexample == found.graphs[0]


def test_doubled_triangle():
    g = cycle_graph(3).union(Multigraph(["1", "2"], [("d", "1", "2")]))
    ctx = KContext(g, 1)
    assert ctx.connected
    found = search_equal_matroid(ctx)
    assert found.complete
    for h in found.graphs:
        check_hit(ctx, h)
    if certify_unique(ctx).verdict is Verdict.CERTIFIED:
        assert not found.graphs


def test_search_limits():
    with pytest.raises(EnumerationLimitError):
        search_equal_matroid(KContext(K5, 1))
    with pytest.raises(HypothesisError):
        search_equal_matroid(KContext(cycle_graph(3), 1))
    partial = search_equal_matroid(KContext(K4, 1), SearchBounds(max_vertices=3))
    assert not partial.complete and not partial.graphs
    slow = search_equal_matroid(KContext(K4, 1), SearchBounds(time_limit=1e-9))
    assert not slow.complete


def test_search_hits_on_corpus():
    """Every hit is a genuine, non-strongly-isomorphic graph with the same matroid;
    certificates never contradict a complete search."""
    searched = hits = 0
    for g in corpus(4, 5, isolated=False):
        for k in (1, 2):
            ctx = KContext(g, k)
            if not ctx.connected:
                continue
            found = search_equal_matroid(ctx, SearchBounds(time_limit=60))
            assert found.complete
            searched += 1
            for h in found.graphs:
                check_hit(ctx, h)
                hits += 1
            if certify_unique(ctx).verdict is Verdict.CERTIFIED:
                assert not found.graphs, g
    assert searched > 50 and hits > 0


def test_search_is_exhaustive_on_tiny_graphs():
    """Compare with a raw enumeration of every edge assignment on the same vertex set."""
    for g in corpus(3, 4, isolated=False):
        for k in (1, 2):
            ctx = KContext(g, k)
            if not ctx.connected:
                continue
            verts = sorted(g.vertices)
            pairs = [(a, b) for i, a in enumerate(verts) for b in verts[i:]]
            labels = sorted(g.edges)
            raw = set()
            for choice in itertools.product(pairs, repeat=len(labels)):
                h = Multigraph(verts, [(e, a, b) for e, (a, b) in zip(labels, choice)])
                if any(not h.star(v) for v in verts) or k_matroid(h, k) != ctx.matroid:
                    continue
                if strong_isomorphism(g, h) is None:
                    raw.add(frozenset(star_multiset(h).items()))
            found = search_equal_matroid(ctx)
            assert {frozenset(star_multiset(h).items()) for h in found.graphs} == raw


# -- main theorem probe -------------------------------------------------------------


def status_profile(ctx):
    if gr.delta(ctx.graph) < ctx.k:
        return False
    st_ = [r.status for r in classify(ctx)]
    return all(s is Status.SMALL for s in st_) or (
        st_.count(Status.TIGHT) == 1 and st_.count(Status.SMALL) == len(st_) - 1
    )


def test_main_theorem_probe(capsys):
    cases = [
        (K4, 1), (K4, 2),
        (K4.union(Multigraph(["1", "2"], [("x", "1", "2")])), 1),
        (K4.union(Multigraph(["1", "2"], [("x", "1", "2")])), 2),
        (wheel_graph(4), 1),
        (K5, 1),
    ]
    lines = []
    for g, k in cases:
        ctx = KContext(g, k)
        assert gr.is_3_connected(g) and ctx.connected
        found = search_equal_matroid(ctx, SearchBounds(max_edges=10))
        assert found.complete
        profile, unique = status_profile(ctx), not found.graphs
        if profile:
            assert unique  # the proved direction
        lines.append(f"|E|={len(g.edges)} k={k}: status profile={profile} unique={unique} hits={len(found.graphs)}")
    with capsys.disabled():
        print("\nmain theorem probe:\n  " + "\n  ".join(lines))
