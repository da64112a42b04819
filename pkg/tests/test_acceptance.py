"""The twelve acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
Criteria 1-9 and 12 share one pass over the exhaustive corpus (every
multigraph with at most 5 vertices and 6 edges, up to isomorphism).
"""
import functools
import itertools
import sys
import time

import pytest

from kcircular.corpus import multigraphs
from kcircular.errors import EnumerationLimitError
from kcircular.families import complete_graph
from kcircular.kcirc import KContext, k_matroid, rank_formulas
from kcircular.stars import Status, classify, nonsep_cocircuits_oracle, nonsep_stars
from kcircular.uniqueness import SearchBounds, Verdict, certify_unique, search_equal_matroid, strong_isomorphism
from kcircular.verify import run_suite

CORPUS_BUDGET = 300.0  # seconds, criterion 1 target
SUITE_CRITERIA = {
    1: "circuit_axioms", 2: "nontriviality", 3: "connectivity", 4: "bases_ranks",
    5: "fundamental_cocircuits", 6: "star_cocircuit", 7: "nonseparating",
    8: "cocircuit_size", 9: "kernel_edges", 12: "soundness",
}


def emit(number, ok, text):
    line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {text}"
    print(line)
    return line


@functools.lru_cache(maxsize=None)
def corpus_run():
    start = time.perf_counter()
    graphs = list(multigraphs(5, 6))
    suite = run_suite(graphs)
    return suite, len(graphs), time.perf_counter() - start


def suite_criterion(number):
    suite, n_graphs, elapsed = corpus_run()
    report = suite[SUITE_CRITERIA[number]]
    ok = report.passed and report.instances > 0
    detail = f"{report.instances} instances over {n_graphs} graphs, {len(report.failures)} failures"
    if report.skipped:
        detail += f", {report.skipped} skipped (search incomplete)"
    if number == 1:
        ok = ok and elapsed < CORPUS_BUDGET
        detail += f"; corpus pass {elapsed:.1f}s (budget {CORPUS_BUDGET:.0f}s)"
    if not report.passed:
        g, k, why = report.witness()
        detail += f"; smallest witness k={k} {g.to_json()} ({why})"
    return ok, detail


def k4_benchmark():
    k4 = complete_graph(4)
    ctx = KContext(k4, 1)
    m = ctx.matroid
    problems = []
    if tuple(rank_formulas(ctx)) != (4, 2) or (m.rho, m.corank) != (4, 2):
        problems.append("ranks")
    if m.circuits != {frozenset(c) for c in itertools.combinations(sorted(k4.edges), 5)}:
        problems.append("circuits")
    if len(m.bases) != 15:
        problems.append("bases")
    if any(r.status is not Status.TIGHT for r in classify(ctx)):
        problems.append("status")
    if nonsep_stars(ctx) or nonsep_cocircuits_oracle(ctx):
        problems.append("NC*")
    start = time.perf_counter()
    found = search_equal_matroid(ctx, SearchBounds(time_limit=600.0))
    elapsed = time.perf_counter() - start
    valid = [h for h in found.graphs if k_matroid(h, 1) == m and strong_isomorphism(k4, h) is None]
    if not valid or len(valid) != len(found.graphs) or elapsed > 600:
        problems.append("search")
    detail = (f"rho=4 rho*=2, 6 circuits, 15 bases, all tight, NC* empty; "
              f"{len(valid)} validated counterexamples in {elapsed:.2f}s")
    return not problems, detail if not problems else f"failed: {problems}"


def k5_benchmark():
    k5 = complete_graph(5)
    ctx = KContext(k5, 1)
    problems = []
    if any(r.status is not Status.SMALL for r in classify(ctx)):
        problems.append("status")
    start = time.perf_counter()
    cert = certify_unique(KContext(k5, 1))
    elapsed = time.perf_counter() - start
    if cert.verdict is not Verdict.CERTIFIED or cert.theorem != "G3-conAllSmallUniq" or elapsed >= 1.0:
        problems.append("certificate")
    try:
        search_equal_matroid(ctx)  # default limits: certificate-only
        problems.append("default search limit")
    except EnumerationLimitError:
        pass
    # beyond the acceptance requirement: the search does finish with raised limits
    found = search_equal_matroid(ctx, SearchBounds(max_edges=10, time_limit=600.0))
    if not found.complete or found.graphs:
        problems.append("raised-limit search")
    detail = (f"all small; certified via {cert.theorem} in {elapsed * 1000:.0f}ms; "
              f"search with raised limit: complete={found.complete}, {len(found.graphs)} other graphs")
    return not problems, detail if not problems else f"failed: {problems}"


def evaluate(number):
    if number == 10:
        return k4_benchmark()
    if number == 11:
        return k5_benchmark()
    return suite_criterion(number)


TITLES = {
    1: "circuit axioms", 2: "non-triviality", 3: "matroid connectivity", 4: "bases and ranks",
    5: "fundamental cocircuits", 6: "stars as cocircuits", 7: "non-separating cocircuits",
    8: "cocircuit size bound", 9: "kernel edge facts", 10: "K4 benchmark", 11: "K5 benchmark",
    12: "certificate soundness",
}


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(number, capsys):
    ok, detail = evaluate(number)
    with capsys.disabled():
        print()
        emit(number, ok, f"{TITLES[number]}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    results = [evaluate(n) for n in range(1, 13)]
    for n, (ok, detail) in zip(range(1, 13), results):
        emit(n, ok, f"{TITLES[n]}: {detail}")
    sys.exit(0 if all(ok for ok, _ in results) else 1)
