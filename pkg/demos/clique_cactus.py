"""
Taking a clique-cactus graph apart
==================================

A rooted clique-cactus graph is rebuilt from the block holding its root: the
pieces hanging off each block vertex are glued at one root (stick), and the
block vertices are joined as a cycle or a clique.
"""

from itertools import combinations

from ctrwqo import Graph, RootedGraph, block_decomposition, reconstruct_check
from ctrwqo.structure import Constructor, compose, dec_block

edges = [(i, (i + 1) % 6) for i in range(6)]
edges += list(combinations([0, 6, 7, 8], 2))
edges += list(combinations([2, 9, 10], 2))
edges += [(4, 11), (11, 12), (12, 13), (13, 4)]
edges += list(combinations(range(14, 19), 2)) + [(12, 14)]
g = Graph.from_edges(19, edges)

for block, kind in block_decomposition(g).items():
    print(f"{kind.value:7s} {sorted(block)}")

# the pieces around the hexagon when rooted at vertex 1
rooted = RootedGraph(g, 1)
hexagon = frozenset(range(6))
for piece in dec_block(rooted, hexagon):
    print("piece with", piece.graph.n, "vertices and", piece.graph.m, "edges")

print("rebuilt for every root:", all(reconstruct_check(RootedGraph(g, r)) for r in range(g.n)))

# the constructors on their own
k1 = RootedGraph(Graph(1, (0,)), 0)
print("cycle of four K_1:", compose(Constructor.CYCLE, [k1] * 4).graph)
