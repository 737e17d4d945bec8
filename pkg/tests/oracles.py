"""Independent reference implementations used by the tests.

Most lean on networkx, which shares no code with the package.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from ctrwqo.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(x: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(x.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in x.edges])


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


class IsoBucket:
    """Set of graphs up to isomorphism, keyed by a WL hash then nx.is_isomorphic."""

    def __init__(self):
        self._buckets: dict[str, list[nx.Graph]] = {}

    def add(self, x: nx.Graph) -> bool:
        key = nx.weisfeiler_lehman_graph_hash(x)
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(x, y) for y in bucket):
            return False
        bucket.append(x)
        return True

    def __contains__(self, x: nx.Graph) -> bool:
        key = nx.weisfeiler_lehman_graph_hash(x)
        return any(nx.is_isomorphic(x, y) for y in self._buckets.get(key, []))

    def __len__(self):
        return sum(len(b) for b in self._buckets.values())

    def members(self):
        for b in self._buckets.values():
            yield from b


def nx_contract(x: nx.Graph, u, v) -> nx.Graph:
    y = nx.contracted_nodes(x, u, v, self_loops=False)
    return nx.convert_node_labels_to_integers(nx.Graph(y))


def contraction_closure(g: Graph) -> IsoBucket:
    """Every contraction of g (g included), by BFS with networkx."""
    seen = IsoBucket()
    start = to_nx(g)
    seen.add(start)
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for u, v in list(x.edges):
                y = nx_contract(x, u, v)
                if seen.add(y):
                    nxt.append(y)
        frontier = nxt
    return seen


def induced_minor_closure(g: Graph) -> IsoBucket:
    """Every induced minor of g: contractions of all induced subgraphs."""
    out = IsoBucket()
    x = to_nx(g)
    for k in range(1, g.n + 1):
        for vs in combinations(range(g.n), k):
            for y in contraction_closure(from_nx(x.subgraph(vs))).members():
                out.add(y)
    return out


def rooted_closure(g: Graph, root: int) -> list[tuple[nx.Graph, int]]:
    """Rooted contractions, with the root tracked as a node attribute."""
    start = to_nx(g)
    nx.set_node_attributes(start, {v: v == root for v in start.nodes}, "root")
    match = nx.algorithms.isomorphism.categorical_node_match("root", False)
    seen = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for u, v in list(x.edges):
                keep, gone = (v, u) if x.nodes[v]["root"] else (u, v)
                y = nx.Graph(nx.contracted_nodes(x, keep, gone, self_loops=False))
                for n in y.nodes:
                    y.nodes[n].pop("contraction", None)
                if not any(nx.is_isomorphic(y, z, node_match=match) for z in seen):
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def rooted_in(h: Graph, hroot: int, closure) -> bool:
    x = to_nx(h)
    nx.set_node_attributes(x, {v: v == hroot for v in x.nodes}, "root")
    match = nx.algorithms.isomorphism.categorical_node_match("root", False)
    return any(nx.is_isomorphic(x, z, node_match=match) for z in closure)


def embeds_exhaustive(r, s, leq) -> bool:
    """Sequence embedding by trying every increasing map."""
    return any(
        all(leq(a, s[j]) for a, j in zip(r, pos)) for pos in combinations(range(len(s)), len(r))
    )


def connected_atlas(max_n: int) -> list[nx.Graph]:
    return [x for x in nx.graph_atlas_g() if 1 <= x.number_of_nodes() <= max_n and nx.is_connected(x)]
