"""K4 and its bicircular matroid: every vertex is tight, and K4 is not determined by M_1.

Run: python3 demos/01_k4_not_unique.py
"""
from kcircular import KContext, classify, rank_formulas, search_equal_matroid, strong_isomorphism
from kcircular.families import complete_graph
from kcircular.kcirc import k_matroid

k4 = complete_graph(4)
ctx = KContext(k4, 1)
m = ctx.matroid

print("K4 edges:", sorted(k4.edges))
print("M_1(K4) circuits (each misses one edge):")
for c in m.sorted_circuits():
    print("   ", c, " missing", sorted(k4.edge_set - set(c)))

rho, rho_star = rank_formulas(ctx)
print(f"\nrank {rho} (oracle {m.rho}), corank {rho_star} (oracle {m.corank}), {len(m.bases)} bases")

# A star of size rho*+1 is tight; here that is every vertex.
for r in classify(ctx):
    print(f"vertex {r.vertex}: |S|={r.size} {r.status.value:5s} cocircuit={r.is_cocircuit} "
          f"non-separating={r.is_nonseparating}")

# With no non-separating stars to anchor on, nothing forces the vertex structure.
found = search_equal_matroid(ctx)
print(f"\nsearch: complete={found.complete}, {len(found.graphs)} graphs with the same M_1 "
      f"that are not strongly isomorphic to K4 ({found.nodes} nodes)")
h = found.graphs[0]
print("first one:", h)
print("  same matroid:", k_matroid(h, 1) == m)
print("  strong isomorphism:", strong_isomorphism(k4, h))
