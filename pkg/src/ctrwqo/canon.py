"""Canonical labelling by colour refinement plus individualisation.

Good enough for the graph sizes this package handles (a dozen or so
vertices). Twin vertices (equal open or closed neighbourhoods) are swapped by
a transposition automorphism, so only one twin per cell is individualised;
this keeps K_{2,r}-like graphs from costing r! leaves.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import OutOfRange
from .graph import Graph, bits

CanonicalKey = tuple


def _twin_classes(g: Graph) -> list[int]:
    cls = list(range(g.n))
    for u, v in combinations(range(g.n), 2):
        if cls[v] != v:
            continue
        au, av = g.adj[u] & ~(1 << v), g.adj[v] & ~(1 << u)
        if au == av:
            cls[v] = cls[u]
    return cls


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [rank[c] for c in colors]
    ncolors = len(rank)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(nbrs))]
        ordered = sorted(set(sigs))
        if len(ordered) == ncolors:
            return colors
        rank = {s: i for i, s in enumerate(ordered)}
        colors = [rank[s] for s in sigs]
        ncolors = len(ordered)


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[CanonicalKey, list[int]]:
    """Return ``(key, perm)`` where ``g.relabel(perm)`` is the canonical form.

    ``colors`` is an optional vertex colouring that isomorphisms must respect
    (used for rooted graphs and for tracking poles).
    """
    n = g.n
    if n == 0:
        return (0, ()), []
    nbrs = [list(bits(row)) for row in g.adj]
    twins = _twin_classes(g)
    if colors is None:
        start = [0] * n
    else:
        ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
        start = [ranks[c] for c in colors]
    best_key = None
    best_perm: list[int] = []

    def leaf_key(cols: list[int]) -> tuple:
        inv = [0] * n
        for v, c in enumerate(cols):
            inv[c] = v
        rows = []
        for i in range(n):
            row = 0
            for w in nbrs[inv[i]]:
                row |= 1 << cols[w]
            rows.append(row)
        init = tuple(start[inv[i]] for i in range(n)) if colors is not None else ()
        return init, tuple(rows)

    def search(cols: list[int]) -> None:
        nonlocal best_key, best_perm
        cols = _refine(nbrs, cols)
        if len(set(cols)) == n:
            key = leaf_key(cols)
            if best_key is None or key > best_key:
                best_key, best_perm = key, cols
            return
        sizes: dict[int, int] = {}
        for c in cols:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        seen_twins = set()
        for v in range(n):
            if cols[v] != target or twins[v] in seen_twins:
                continue
            seen_twins.add(twins[v])
            nxt = [2 * c + 1 for c in cols]
            nxt[v] = 2 * cols[v]
            search(nxt)

    search(start)
    return (n, best_key), best_perm


def canonical_key(g: Graph, colors: Sequence[int] | None = None) -> CanonicalKey:
    return canonical_labeling(g, colors)[0]


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    return g.relabel(canonical_labeling(g, colors)[1])


def rooted_key(g: Graph, root: int) -> CanonicalKey:
    return canonical_key(g, [0 if v == root else 1 for v in range(g.n)])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    # every connected graph has a vertex whose deletion leaves it connected,
    # so one-vertex extensions of the (n-1)-vertex classes reach all classes
    seen: dict[CanonicalKey, Graph] = {}
    for base in _connected_classes(n - 1):
        for attach in range(1, 1 << (n - 1)):
            adj = [row | ((attach >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            adj.append(attach)
            g = Graph._trusted(n, tuple(adj))
            key, perm = canonical_labeling(g)
            if key not in seen:
                seen[key] = g.relabel(perm)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].m, k)))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    on ``n`` vertices, ordered by edge count then canonical key."""
    if not 1 <= n <= 8:
        raise OutOfRange(f"enumerate_connected supports 1 <= n <= 8, got {n}")
    yield from _connected_classes(n)
