"""Structure of diamond-contraction-free graphs.

Connected graphs that exclude the diamond as a contraction are exactly the
connected clique-cactus graphs (every block a clique or a chordless cycle).
:func:`excludes_diamond` therefore decides the question from the block
decomposition alone, in linear time; it never searches for models.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .blocks import BlockKind, block_decomposition
from .canon import rooted_key
from .errors import (
    BlockWithoutRoot,
    DisconnectedInput,
    EmptySequence,
    GraphError,
    NotACycle,
    NotCliqueCactus,
)
from .graph import Graph, RootedGraph, bits, component_masks, contract_edge, is_connected


class CycleKind(enum.Enum):
    INDUCED_CYCLE = "induced_cycle"
    INDUCES_CLIQUE = "induces_clique"
    MIXED = "mixed"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleKind
    chord: tuple[int, int] | None = None
    non_chord: tuple[int, int] | None = None


def crossing(cycle: Sequence[int], a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Whether the pairs ``a`` and ``b`` are crossing in ``cycle``: four
    distinct vertices that alternate around it."""
    if len({*a, *b}) != 4:
        return False
    pos = {v: i for i, v in enumerate(cycle)}
    lo, hi = sorted((pos[a[0]], pos[a[1]]))
    inside = [lo < pos[x] < hi for x in b]
    return inside[0] != inside[1]


def _check_cycle(g: Graph, cycle: Sequence[int]) -> None:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        raise NotACycle(f"{list(cycle)} is not a cycle of length >= 3")
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            raise NotACycle(f"{cycle[i]} and {cycle[(i + 1) % k]} are not adjacent")


def classify_cycle(g: Graph, cycle: Sequence[int]) -> CycleClass:
    """Classify a cycle of ``g`` as induced, clique-inducing, or mixed.

    For a mixed cycle the returned chord and non-chord are crossing.
    """
    _check_cycle(g, cycle)
    k = len(cycle)
    pairs = [(cycle[i], cycle[j]) for i, j in combinations(range(k), 2) if j - i not in (1, k - 1)]
    chords = [p for p in pairs if g.has_edge(*p)]
    non_chords = [p for p in pairs if not g.has_edge(*p)]
    # a triangle has neither chords nor non-chords; it counts as a clique
    if not non_chords:
        return CycleClass(CycleKind.INDUCES_CLIQUE)
    if not chords:
        return CycleClass(CycleKind.INDUCED_CYCLE)
    for nc in non_chords:
        found = _crossing_pair(g, cycle, nc)
        if found:
            return CycleClass(CycleKind.MIXED, *found)
    # the cut argument never got going (every chord touches the non-chord it
    # cut at); fall back to a direct search, which cannot come up empty
    chord, non_chord = next(
        (c, d) for c in chords for d in non_chords if crossing(cycle, c, d)
    )
    return CycleClass(CycleKind.MIXED, chord, non_chord)


def _crossing_pair(g: Graph, cycle: Sequence[int], non_chord: tuple[int, int]):
    # Cut the cycle at the non-chord {x, x'} into paths P and Q. A chord with
    # one end on each side crosses it. A chord {y, y'} inside one side, say P,
    # gives z strictly between y and y' on P and any z' on Q: either {z, z'}
    # is a chord crossing {x, x'} or a non-chord crossing {y, y'}. Chords
    # through x or x' fit neither case, so this can return None.
    i, j = sorted(cycle.index(v) for v in non_chord)
    p_side = list(cycle[i + 1 : j])
    q_side = list(cycle[j + 1 :]) + list(cycle[:i])
    for a in p_side:
        for b in q_side:
            if g.has_edge(a, b):
                return (a, b), non_chord
    for side, other in ((p_side, q_side), (q_side, p_side)):
        for s, t in combinations(range(len(side)), 2):
            if t - s >= 2 and g.has_edge(side[s], side[t]):
                z, z2 = side[s + 1], other[0]
                if g.has_edge(z, z2):
                    return (z, z2), non_chord
                return (side[s], side[t]), (z, z2)
    return None


def enumerate_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every cycle of ``g`` exactly once, starting at its least vertex and
    oriented so the second vertex is smaller than the last."""
    for start in range(g.n):
        allowed = g.vertex_mask & ~((1 << start) - 1)
        path = [start]
        on_path = 1 << start

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            nonlocal on_path
            for w in bits(g.adj[v] & allowed):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif not on_path >> w & 1 and w != start:
                    path.append(w)
                    on_path |= 1 << w
                    yield from extend(w)
                    path.pop()
                    on_path &= ~(1 << w)

        yield from extend(start)


def is_biconnected(g: Graph) -> bool:
    """2-connected: connected, at least 3 vertices, no cutvertex."""
    return g.n >= 3 and is_connected(g) and not block_decomposition(g).cutvertices


@dataclass
class CactusReport:
    is_clique_cactus: bool
    blocks: list[tuple[frozenset[int], BlockKind]] = field(default_factory=list)
    offending: list[frozenset[int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_clique_cactus


def is_clique_cactus(g: Graph) -> CactusReport:
    dec = block_decomposition(g)
    blocks = list(dec.items())
    offending = [b for b, kind in blocks if kind is BlockKind.OTHER]
    return CactusReport(not offending, blocks, offending)


def excludes_diamond(g: Graph) -> bool:
    """Whether the connected graph ``g`` has no diamond contraction."""
    if not is_connected(g):
        raise DisconnectedInput("excludes_diamond needs a connected graph")
    return is_clique_cactus(g).is_clique_cactus


# -- rooted constructors ------------------------------------------------------


class Constructor(enum.Enum):
    STICK = "stick"
    CYCLE = "cycle"
    CLIQUE = "clique"


def compose(kind: Constructor, gs: Sequence[RootedGraph]) -> RootedGraph:
    """Stick, cycle or clique of a sequence of rooted graphs.

    The graphs are placed side by side in order. Stick identifies all roots;
    cycle joins consecutive roots cyclically; clique joins every pair of
    roots. The result is rooted at the root of ``gs[0]``, which keeps label 0
    when that root is 0.
    """
    if not gs:
        raise EmptySequence("compose needs at least one rooted graph")
    kind = Constructor(kind)
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    offset = 0
    first_root = gs[0].root
    for idx, rg in enumerate(gs):
        if kind is Constructor.STICK and idx > 0:
            # vertices other than the root get fresh labels; the root maps to G_0's
            mapping = {}
            nxt = offset
            for v in range(rg.graph.n):
                if v == rg.root:
                    mapping[v] = first_root
                else:
                    mapping[v] = nxt
                    nxt += 1
            edges += [(mapping[u], mapping[v]) for u, v in rg.graph.edges()]
            offset = nxt
        else:
            edges += [(u + offset, v + offset) for u, v in rg.graph.edges()]
            roots.append(rg.root + offset)
            offset += rg.graph.n
    p = len(roots)
    if kind is Constructor.CYCLE and p >= 2:
        links = {tuple(sorted((roots[i], roots[(i + 1) % p]))) for i in range(p)}
        edges += sorted(links)
    elif kind is Constructor.CLIQUE:
        edges += list(combinations(roots, 2))
    return RootedGraph(Graph.from_edges(offset, edges), roots[0])


def _dec_parts(g: RootedGraph, block: frozenset[int] | set[int]) -> list[tuple[int, RootedGraph]]:
    gr = g.graph
    b = 0
    for v in block:
        b |= 1 << v
    if not g.root in block:
        raise BlockWithoutRoot(f"root {g.root} is not in block {sorted(block)}")
    if frozenset(block) not in block_decomposition(gr).blocks:
        raise GraphError(f"{sorted(block)} is not a block")
    out = []
    for comp in component_masks(gr, gr.vertex_mask & ~b):
        attach_b = gr.neighborhood(comp) & b
        attach = (attach_b & -attach_b).bit_length() - 1
        vs = list(bits(comp))
        index = {v: i + 1 for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in gr.edges() if u in index and v in index]
        edges += [(0, index[v]) for v in vs if gr.adj[v] & b]
        out.append((attach, RootedGraph(Graph.from_edges(len(vs) + 1, edges), 0)))
    return out


def dec_block(g: RootedGraph, block: frozenset[int] | set[int]) -> list[RootedGraph]:
    """One rooted graph per component C of ``g`` minus the block: C plus a new
    root (label 0) adjacent to the vertices of C that touch the block."""
    return [rg for _, rg in _dec_parts(g, block)]


def dec(g: RootedGraph) -> list[RootedGraph]:
    out = []
    for b in block_decomposition(g.graph).blocks:
        if g.root in b:
            out.extend(dec_block(g, b))
    return out


def _around(gr: Graph, block: frozenset[int], kind: BlockKind, root: int) -> list[int]:
    if kind is not BlockKind.CYCLE:
        return [root] + sorted(block - {root})
    mask = sum(1 << v for v in block)
    order, prev, cur = [root], -1, root
    while True:
        nxt = min(w for w in bits(gr.adj[cur] & mask) if w != prev)
        if nxt == root:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def reconstruct(g: RootedGraph) -> RootedGraph:
    """Rebuild ``g`` from the block holding its root and the rooted pieces
    hanging off each block vertex."""
    gr = g.graph
    if not is_connected(gr):
        raise NotCliqueCactus("reconstruction needs a connected graph")
    dec_ = block_decomposition(gr)
    if any(kind is BlockKind.OTHER for kind in dec_.kinds):
        raise NotCliqueCactus("graph has a block that is neither a clique nor a cycle")
    block, kind = next((b, k) for b, k in dec_.items() if g.root in b)
    groups: dict[int, list[RootedGraph]] = {v: [] for v in block}
    for attach, piece in _dec_parts(g, block):
        groups[attach].append(piece)
    single = RootedGraph(Graph(1, (0,)), 0)
    arms = [compose(Constructor.STICK, groups[v]) if groups[v] else single
            for v in _around(gr, block, kind, g.root)]
    outer = Constructor.CYCLE if kind is BlockKind.CYCLE else Constructor.CLIQUE
    return compose(outer, arms)


def reconstruct_check(g: RootedGraph) -> bool:
    r = reconstruct(g)
    return r.graph.n == g.graph.n and rooted_key(r.graph, r.root) == rooted_key(g.graph, g.root)


def contract_rooted(g: RootedGraph, u: int, v: int) -> RootedGraph:
    """Edge contraction that tracks the root."""
    keep, gone = min(u, v), max(u, v)
    r = g.root
    if r == gone:
        r = keep
    elif r > gone:
        r -= 1
    return RootedGraph(contract_edge(g.graph, u, v), r)


def rooted_downset(g: RootedGraph) -> list[RootedGraph]:
    """All rooted contractions of ``g`` (itself included) up to rooted
    isomorphism."""
    seen = {rooted_key(g.graph, g.root): g}
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            for u, v in cur.graph.edges():
                c = contract_rooted(cur, u, v)
                key = rooted_key(c.graph, c.root)
                if key not in seen:
                    seen[key] = c
                    nxt.append(c)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]
