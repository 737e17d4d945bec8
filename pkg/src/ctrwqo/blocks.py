"""Block (biconnected component) decomposition with per-block classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, bits


class BlockKind(enum.Enum):
    CLIQUE = "clique"
    CYCLE = "cycle"
    EDGE = "edge"
    OTHER = "other"


@dataclass(frozen=True)
class BlockDecomposition:
    cutvertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    kinds: tuple[BlockKind, ...]

    def items(self):
        return zip(self.blocks, self.kinds)


def classify_block(g: Graph, block: frozenset[int]) -> BlockKind:
    """Kind of the subgraph induced by ``block``.

    Triangles count as cliques; K_2 blocks are ``EDGE``.
    """
    k = len(block)
    if k == 2:
        return BlockKind.EDGE
    mask = 0
    for v in block:
        mask |= 1 << v
    inner = [(g.adj[v] & mask).bit_count() for v in block]
    if all(d == k - 1 for d in inner):
        return BlockKind.CLIQUE
    if k >= 4 and all(d == 2 for d in inner):
        # a 2-regular block is connected, hence a single chordless cycle
        return BlockKind.CYCLE
    return BlockKind.OTHER


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cutvertices (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            found.append(frozenset((root,)))
            disc[root] = counter
            counter += 1
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        vstack = [root]
        stack = [(root, -1, iter(list(bits(g.adj[root]))))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is not None:
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    vstack.append(w)
                    stack.append((w, v, iter(list(bits(g.adj[w])))))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = {parent}
                while True:
                    x = vstack.pop()
                    comp.add(x)
                    if x == v:
                        break
                found.append(frozenset(comp))
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    blocks = tuple(sorted(found, key=lambda b: sorted(b)))
    return BlockDecomposition(
        cutvertices=frozenset(cuts),
        blocks=blocks,
        kinds=tuple(classify_block(g, b) for b in blocks),
    )
