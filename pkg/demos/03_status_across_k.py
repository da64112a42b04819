"""How vertex status moves from small to tight to big as k grows.

For each k with a connected M_k(G) the table lists every vertex with its star
size against rho* + 1.  Raising k by one lowers rho* by one, so stars cross
the threshold one size class at a time.

Run: python3 demos/03_status_across_k.py
"""
from kcircular import KContext, classify, delta, is_connected_k, tree_forest
from kcircular.families import complete_graph, wheel_graph
from kcircular.graph import Multigraph

examples = {
    "K5": complete_graph(5),
    "wheel W5": wheel_graph(4),
    "K4 with a doubled edge": complete_graph(4).union(Multigraph(["1", "2"], [("x", "1", "2")])),
}

for name, g in examples.items():
    top = delta(g) + tree_forest(g)[1]
    verts = sorted(g.vertices)
    print(f"\n{name}: |V|={len(verts)} |E|={len(g.edges)}, non-trivial for k <= {top}")
    print("  k  rho*  " + " ".join(f"{v:>6}" for v in verts))
    for k in range(1, top + 1):
        if not is_connected_k(g, k):
            print(f"  {k}  (M_k not connected)")
            continue
        ctx = KContext(g, k)
        reports = {r.vertex: r for r in classify(ctx)}
        cells = " ".join(f"{reports[v].status.value:>6}" for v in verts)
        print(f"  {k}  {ctx.matroid.corank:4d}  {cells}")
