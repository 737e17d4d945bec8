"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitsets.

Vertex sets throughout the package are plain ``int`` bitmasks (bit ``v`` set
iff ``v`` is in the set) unless a function says otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphError, MalformedGraph6, NotAnEdge, TooLarge


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Instances are immutable
    and hashable; equality is labelled equality (use :func:`is_isomorphic`
    for isomorphism).
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; only for rows produced by package internals
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def neighborhood(self, s: int) -> int:
        """Open neighbourhood of the vertex set ``s`` (a bitmask)."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def dominating_vertices(self) -> list[int]:
        full = self.vertex_mask
        return [v for v in range(self.n) if self.adj[v] | (1 << v) == full]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in increasing order of the old labels."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(index[u], index[v]) for u, v in combinations(vs, 2) if self.adj[u] >> v & 1]
        )

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph._trusted(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int = 0

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} outside 0..{self.graph.n - 1}")


# -- named graphs -------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices ``0..a-1`` form the first side."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(r: int) -> Graph:
    """K_{1,r} with the centre at 0."""
    return complete_bipartite(1, r)


def d_graph(r: int) -> Graph:
    """D_r, the complement of 2K_1 + K_r: two adjacent dominating vertices 0, 1
    over an independent set of size ``r``."""
    edges = [(0, 1)] + [(s, 2 + j) for s in (0, 1) for j in range(r)]
    return Graph.from_edges(r + 2, edges)


def diamond() -> Graph:
    return d_graph(2)


def antihole(i: int) -> Graph:
    return complement(cycle_graph(i))


def gem() -> Graph:
    """P_4 on 0-1-2-3 plus the dominating vertex 4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)] + [(4, v) for v in range(4)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


# -- operations ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract the edge ``{u, v}``.

    The merged vertex takes the label ``min(u, v)``; labels above ``max(u, v)``
    shift down by one.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NotAnEdge(f"{{{u}, {v}}} is not an edge")
    keep, gone = min(u, v), max(u, v)
    merged = (g.adj[keep] | g.adj[gone]) & ~(1 << keep) & ~(1 << gone)
    rows = list(g.adj)
    rows[keep] = merged
    for w in bits(merged):
        rows[w] |= 1 << keep
    low = (1 << gone) - 1

    def squeeze(row: int) -> int:
        return (row & low) | (row >> (gone + 1) << gone)

    del rows[gone]
    return Graph._trusted(g.n - 1, tuple(squeeze(row) for row in rows))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by least vertex."""
    remaining = g.vertex_mask if within is None else within
    out = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(component_masks(g)) == 1


def is_connected_set(g: Graph, s: int) -> bool:
    return s != 0 and len(component_masks(g, s)) == 1


def subset_degree(g: Graph, s: Iterable[int] | int) -> int:
    """Number of vertices outside ``s`` with a neighbour in ``s``."""
    mask = s if isinstance(s, int) else mask_of(s)
    return g.neighborhood(mask).bit_count()


def independence_number(g: Graph) -> int:
    """Exact, by branching on the lowest remaining vertex."""

    def best(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        without = best(avail & ~(1 << v))
        with_v = 1 + best(avail & ~(1 << v) & ~g.adj[v])
        return max(without, with_v)

    return best(g.vertex_mask)


# -- graph6 --------------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    """Short-form graph6 (n <= 62)."""
    if g.n > 62:
        raise TooLarge(f"graph6 long form is not supported (n={g.n})")
    bitstr = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bitstr += [0] * (-len(bitstr) % 6)
    chunks = [
        sum(b << (5 - k) for k, b in enumerate(bitstr[pos : pos + 6]))
        for pos in range(0, len(bitstr), 6)
    ]
    return chr(g.n + 63) + "".join(chr(c + 63) for c in chunks)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"character outside 63..126 in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise MalformedGraph6("graph6 long form is not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data characters, got {len(body)}")
    stream = []
    for c in body:
        val = ord(c) - 63
        stream.extend(val >> (5 - k) & 1 for k in range(6))
    if any(stream[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)
