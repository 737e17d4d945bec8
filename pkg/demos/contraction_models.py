"""
Contraction models and the diamond
==================================

A graph H is a contraction of G when V(G) splits into connected parts, one per
vertex of H, whose adjacencies mirror H. The search returns such a partition.
"""

from ctrwqo import diamond, find_model, verify_model, complete_bipartite, cycle_graph
from ctrwqo import excludes_diamond, is_clique_cactus, enumerate_connected

# K_{2,3} contracts onto the diamond: merge one vertex of the big side
# into one vertex of the small side
g = complete_bipartite(2, 3)
model = find_model(diamond(), g)
print("model of the diamond in K_{2,3}:", {u: sorted(p) for u, p in model.items()})
print("valid:", bool(verify_model(diamond(), g, model)))

# a long cycle only ever contracts to shorter cycles, never to the diamond
print("diamond in C_7:", find_model(diamond(), cycle_graph(7)))

# the structural test needs no search at all: blocks must be cliques or cycles
report = is_clique_cactus(g)
print("K_{2,3} clique-cactus:", report.is_clique_cactus, "offending:", [sorted(b) for b in report.offending])

# how many small connected graphs avoid the diamond?
for n in range(1, 8):
    graphs = list(enumerate_connected(n))
    free = sum(excludes_diamond(x) for x in graphs)
    print(f"n={n}: {free} of {len(graphs)} connected graphs exclude the diamond")
