from __future__ import annotations

import networkx as nx
from hypothesis import given

from ctrwqo.blocks import BlockKind, block_decomposition
from ctrwqo.graph import Graph, complete_graph, cycle_graph, diamond, disjoint_union, path_graph
from oracles import to_nx
from test_graph import graphs


@given(graphs(max_n=10))
def test_blocks_match_networkx(g):
    dec = block_decomposition(g)
    x = to_nx(g)
    want = {frozenset(b) for b in nx.biconnected_components(x)}
    want |= {frozenset((v,)) for v in x.nodes if x.degree(v) == 0}
    assert set(dec.blocks) == want
    assert len(dec.blocks) == len(want)
    assert dec.cutvertices == frozenset(nx.articulation_points(x))


def test_block_kinds():
    assert block_decomposition(complete_graph(3)).kinds == (BlockKind.CLIQUE,)
    assert block_decomposition(complete_graph(2)).kinds == (BlockKind.EDGE,)
    assert block_decomposition(cycle_graph(5)).kinds == (BlockKind.CYCLE,)
    assert block_decomposition(diamond()).kinds == (BlockKind.OTHER,)
    assert block_decomposition(path_graph(4)).kinds == (BlockKind.EDGE,) * 3
    assert block_decomposition(Graph(1, (0,))).kinds == (BlockKind.CLIQUE,)


def test_blocks_sorted_and_cutvertices():
    # two triangles sharing vertex 2, plus a pendant at 4
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
    dec = block_decomposition(g)
    assert dec.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({4, 5}))
    assert dec.kinds == (BlockKind.CLIQUE, BlockKind.CLIQUE, BlockKind.EDGE)
    assert dec.cutvertices == {2, 4}


def test_blocks_disconnected():
    g = disjoint_union(cycle_graph(4), complete_graph(1), complete_graph(2))
    dec = block_decomposition(g)
    assert len(dec.blocks) == 3
    assert not dec.cutvertices
