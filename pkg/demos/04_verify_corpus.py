"""Check every graph-side characterisation against the brute-force oracles.

The corpus holds every multigraph (loops and parallel edges allowed) with at
most 5 vertices and 5 edges, up to isomorphism.  The acceptance suite runs
the same checks with 6 edges.

Run: python3 demos/04_verify_corpus.py
"""
import time

from kcircular.corpus import multigraphs
from kcircular.verify import run_suite

start = time.perf_counter()
graphs = list(multigraphs(5, 5))
suite = run_suite(graphs)
print(f"{len(graphs)} graphs in {time.perf_counter() - start:.1f}s\n")
for report in suite.reports.values():
    print(report.line())
    if not report.passed:
        g, k, detail = report.witness()
        print("    smallest counterexample:", g, "k =", k, detail)
