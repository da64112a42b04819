"""K5: every vertex is small, so a sufficient condition certifies uniqueness at once.

The exhaustive search then confirms the certificate.  It is not needed for
the verdict, and the default edge limit keeps it off.

Run: python3 demos/02_k5_certificate.py
"""
import json
import time

from kcircular import KContext, SearchBounds, certify_unique, search_equal_matroid
from kcircular.errors import EnumerationLimitError
from kcircular.families import complete_graph

ctx = KContext(complete_graph(5), 1)

start = time.perf_counter()
cert = certify_unique(ctx)
print(f"certificate in {1000 * (time.perf_counter() - start):.1f} ms")
print(json.dumps(cert.to_dict(), indent=2, sort_keys=True))

try:
    search_equal_matroid(ctx)
except EnumerationLimitError as exc:
    print("\ndefault search refuses:", exc)

start = time.perf_counter()
found = search_equal_matroid(ctx, SearchBounds(max_edges=10))
print(f"raised limit: complete={found.complete}, other graphs={len(found.graphs)}, "
      f"{found.nodes} nodes, {time.perf_counter() - start:.2f}s")
