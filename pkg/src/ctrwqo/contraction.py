"""Exact decision procedures for contractions, rooted contractions and
induced minors.

A model of H in G maps every vertex of H to a connected set of G-vertices;
the sets are disjoint, and two H-vertices are adjacent exactly when their
sets are. For contractions the sets must also cover V(G). The search below
builds models one part at a time:

* pick an undecided G-vertex ``s`` (the most constrained one);
* branch on the H-vertex ``u`` whose part will contain ``s`` and on the
  connected set containing ``s`` that becomes that part.

Every model is reached exactly once along this branching (``s`` lies in a
single part), so a finished search without a model is a proof of absence.
Parts are final once placed, which makes non-adjacency constraints
propagate immediately to the undecided vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence, TypeVar

from .canon import canonical_labeling
from .errors import DisconnectedInput, KeyMismatch, SearchExhausted
from .graph import Graph, RootedGraph, bits, component_masks, contract_edge, is_connected

Model = dict[int, frozenset[int]]

T = TypeVar("T")


@dataclass
class ModelCheck:
    """Outcome of :func:`verify_model`; truthy iff the model is valid."""

    ok: bool
    condition: str | None = None
    vertices: tuple[int, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def verify_model(
    h: Graph,
    g: Graph,
    model: Mapping[int, Sequence[int] | frozenset[int] | set[int]],
    *,
    induced: bool = False,
    roots: tuple[int, int] | None = None,
) -> ModelCheck:
    """Check conditions (i) connectivity, (ii) partition, (iii) adjacency.

    With ``induced=True`` the parts need only be disjoint, not covering.
    ``roots=(rt_h, rt_g)`` additionally requires ``rt_g`` in the part of ``rt_h``.
    """
    if set(model) != set(range(h.n)):
        raise KeyMismatch(f"model keys {sorted(model)} are not the vertices 0..{h.n - 1}")
    parts = {u: _mask(model[u]) for u in range(h.n)}
    for u, p in parts.items():
        if p >> g.n:
            return ModelCheck(False, "partition", (u,), f"part of {u} leaves V(G)")
        if p == 0 or len(component_masks(g, p)) != 1:
            return ModelCheck(False, "connected", (u,), f"part of {u} is empty or disconnected")
    seen = 0
    for u, p in parts.items():
        if seen & p:
            other = next(w for w in range(u) if parts[w] & p)
            return ModelCheck(False, "partition", (other, u), f"parts of {other} and {u} overlap")
        seen |= p
    if not induced and seen != g.vertex_mask:
        missing = tuple(bits(g.vertex_mask & ~seen))
        return ModelCheck(False, "partition", missing, "parts do not cover V(G)")
    nbr = {u: g.neighborhood(p) for u, p in parts.items()}
    for u in range(h.n):
        for w in range(u + 1, h.n):
            touching = bool(nbr[u] & parts[w])
            if touching != h.has_edge(u, w):
                return ModelCheck(
                    False, "adjacency", (u, w),
                    f"H-adjacency of {u},{w} is {h.has_edge(u, w)} but parts touch={touching}",
                )
    if roots is not None and not parts[roots[0]] >> roots[1] & 1:
        return ModelCheck(False, "root", (roots[0],), "root part misses the root of G")
    return ModelCheck(True)


def _connected_sets(
    adj: Sequence[int], seed: int, region: int, maxsize: int, exclusive: Sequence[int] | None = None
) -> Iterator[int]:
    """All connected subsets of ``region`` containing ``seed`` with at most
    ``maxsize`` vertices, each exactly once.

    With ``exclusive``, a set holding ``v`` never also holds a vertex of
    ``exclusive[v]``.
    """

    def rec(part: int, cand: int, banned: int, size: int) -> Iterator[int]:
        yield part
        if size == maxsize:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            new_part = part | low
            child_banned = banned | exclusive[v] if exclusive else banned
            grown = (cand | (adj[v] & region)) & ~new_part & ~child_banned
            yield from rec(new_part, grown, child_banned, size + 1)
            banned |= low

    start = 1 << seed
    banned = exclusive[seed] if exclusive else 0
    yield from rec(start, adj[seed] & region & ~start & ~banned, banned, 1)


def _twin_reps(gr: Graph, fixed: int | None) -> list[int]:
    """Representative (least member) of each vertex's twin class.

    Twins have equal neighbourhoods apart from each other, so swapping two of
    them is an automorphism; ``fixed`` is kept out of every class.
    """
    rep = list(range(gr.n))
    for v in range(gr.n):
        if v == fixed:
            continue
        for u in range(v):
            if u != fixed and rep[u] == u and gr.adj[u] & ~(1 << v) == gr.adj[v] & ~(1 << u):
                rep[v] = u
                break
    return rep


class ModelSearch:
    """One exhaustive model search; ``nodes`` counts explored nodes.

    ``prune`` toggles the two pruning rules that are not needed for
    correctness: the part-degree bound and the dominating-vertex rule.
    """

    def __init__(
        self,
        h: Graph,
        g: Graph,
        *,
        induced: bool = False,
        roots: tuple[int, int] | None = None,
        budget: int | None = None,
        prune: bool = True,
    ):
        if induced and roots is not None:
            raise ValueError("rooted induced-minor search is not supported")
        self.h, self.g = h, g
        self.induced = induced
        self.roots = roots
        self.budget = budget
        self.prune = prune
        self.nodes = 0
        self._hdeg = h.degrees()
        # H-side symmetry: twins of H are placed in index order
        self._hrep = _twin_reps(h, roots[0] if roots else None)
        self._hprev = [
            sum(1 << w for w in range(u) if self._hrep[w] == self._hrep[u]) for u in range(h.n)
        ]
        # G-side symmetry: along each G twin class the labels (H twin class of
        # the part, or "deleted" = h.n) must be non-decreasing. Labels do not
        # change under H twin swaps, so both rules can hold at once.
        grep = _twin_reps(g, roots[1] if roots else None)
        self._gprev = [sum(1 << y for y in range(x) if grep[y] == grep[x]) for x in range(g.n)]
        self._gnext = [
            sum(1 << y for y in range(x + 1, g.n) if grep[y] == grep[x]) for x in range(g.n)
        ]
        self._has_gtwins = any(self._gprev)
        # a part of an induced-minor model never needs two twins: dropping one
        # keeps the part connected and touching the same parts
        self._exclusive = (
            [self._gprev[x] | self._gnext[x] for x in range(g.n)] if induced and self._has_gtwins else None
        )
        self._labels = [0] * (h.n + 1)
        self._order = sorted(range(h.n), key=lambda u: (-self._hdeg[u], u))
        self._part = [0] * h.n
        self._pnbr = [0] * h.n

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchExhausted(self.nodes)

    def _order_ok(self, vs: int, label: int) -> bool:
        if not self._has_gtwins:
            return True
        above = below = 0
        for k in range(label + 1, len(self._labels)):
            above |= self._labels[k]
        for k in range(label):
            below |= self._labels[k]
        for x in bits(vs):
            if self._gprev[x] & above or self._gnext[x] & below:
                return False
        return True

    def run(self) -> Model | None:
        h, g = self.h, self.g
        if h.n == 0:
            return {} if self.induced or g.n == 0 else None
        if h.n > g.n or h.m > g.m:
            return None
        if self.prune and not self.induced and g.dominating_vertices() and not h.dominating_vertices():
            return None
        if self._search(g.vertex_mask, h.vertex_mask):
            return {u: frozenset(bits(self._part[u])) for u in range(h.n)}
        return None

    def _place(self, u: int, part: int, nbr: int, recurse) -> bool:
        label = self._hrep[u]
        if not self._order_ok(part, label):
            return False
        self._part[u], self._pnbr[u] = part, nbr
        self._labels[label] |= part
        try:
            return recurse()
        finally:
            self._labels[label] &= ~part

    def _search(self, free: int, open_h: int) -> bool:
        self._tick()
        if not open_h:
            return not free or self.induced
        hadj, gadj = self.h.adj, self.g.adj
        closed = [w for w in range(self.h.n) if not open_h >> w & 1]

        allowed: dict[int, int] = {}
        forced = 0
        for x in bits(free):
            a = open_h
            for w in closed:
                if self._pnbr[w] >> x & 1:
                    a &= hadj[w]
            if a:
                allowed[x] = a
            elif self.induced:
                forced |= 1 << x
            else:
                return False
        if forced:
            return self._delete(forced, free, open_h)
        n_open = open_h.bit_count()
        if len(allowed) < n_open:
            return False

        region = {}
        for u in bits(open_h):
            reg = 0
            for x, a in allowed.items():
                if a >> u & 1:
                    reg |= 1 << x
            needs = [self._pnbr[w] & free for w in closed if hadj[u] >> w & 1]
            if not any(all(c & need for need in needs) for c in component_masks(self.g, reg)):
                return False
            region[u] = reg

        if self.roots is not None and free >> self.roots[1] & 1:
            seed = self.roots[1]
            choices = [self.roots[0]]
        else:
            seed = min(allowed, key=lambda x: (allowed[x].bit_count(), x))
            a = allowed[seed]
            # the part holding seed goes to the earliest open member of a twin class
            choices = [u for u in self._order if a >> u & 1 and not self._hprev[u] & open_h]

        maxsize = len(allowed) - n_open + 1
        for u in choices:
            if not region[u] >> seed & 1:
                continue
            needs = [self._pnbr[w] for w in closed if hadj[u] >> w & 1]
            if n_open == 1 and not self.induced:
                if region[u] != free or len(component_masks(self.g, free)) != 1:
                    continue
                candidates: Iterator[int] = iter((free,))
            else:
                candidates = _connected_sets(gadj, seed, region[u], maxsize, self._exclusive)
            for part in candidates:
                self._tick()
                if not all(part & need for need in needs):
                    continue
                nbr = self.g.neighborhood(part)
                if self.prune and nbr.bit_count() < self._hdeg[u]:
                    continue
                rest, rest_h = free & ~part, open_h & ~(1 << u)
                if self._place(u, part, nbr, lambda: self._search(rest, rest_h)):
                    return True
            self._part[u] = self._pnbr[u] = 0
        if self.induced:
            return self._delete(1 << seed, free, open_h)
        return False

    def _delete(self, vs: int, free: int, open_h: int) -> bool:
        dl = self.h.n
        if not self._order_ok(vs, dl):
            return False
        self._labels[dl] |= vs
        try:
            return self._search(free & ~vs, open_h)
        finally:
            self._labels[dl] &= ~vs


def _require_connected(*graphs: Graph) -> None:
    for gr in graphs:
        if not is_connected(gr):
            raise DisconnectedInput("contraction queries need connected graphs")


def find_model(h: Graph, g: Graph, *, budget: int | None = None, prune: bool = True) -> Model | None:
    """A contraction model of ``h`` in ``g``, or ``None`` if there is none.

    Raises :class:`SearchExhausted` if ``budget`` nodes do not suffice.
    """
    _require_connected(h, g)
    return ModelSearch(h, g, budget=budget, prune=prune).run()


def is_contraction(h: Graph, g: Graph, *, budget: int | None = None) -> bool:
    return find_model(h, g, budget=budget) is not None


def find_rooted_model(
    h: RootedGraph, g: RootedGraph, *, budget: int | None = None, prune: bool = True
) -> Model | None:
    _require_connected(h.graph, g.graph)
    return ModelSearch(h.graph, g.graph, roots=(h.root, g.root), budget=budget, prune=prune).run()


def is_rooted_contraction(h: RootedGraph, g: RootedGraph, *, budget: int | None = None) -> bool:
    return find_rooted_model(h, g, budget=budget) is not None


def find_induced_minor_model(h: Graph, g: Graph, *, budget: int | None = None) -> Model | None:
    return ModelSearch(h, g, induced=True, budget=budget).run()


def is_induced_minor(h: Graph, g: Graph, *, budget: int | None = None) -> bool:
    return find_induced_minor_model(h, g, budget=budget) is not None


def one_step_contractions(g: Graph) -> list[Graph]:
    """All single-edge contractions of ``g`` up to isomorphism, as canonical
    forms sorted by canonical key."""
    seen: dict[tuple, Graph] = {}
    for u, v in g.edges():
        c = contract_edge(g, u, v)
        key, perm = canonical_labeling(c)
        if key not in seen:
            seen[key] = c.relabel(perm)
    return [seen[k] for k in sorted(seen)]


def sequence_embeds(r: Sequence[T], s: Sequence[T], leq: Callable[[T, T], bool]) -> bool:
    """Whether ``r`` embeds in ``s``: some increasing map sends each ``r[i]``
    to an element of ``s`` above it. Greedy: earliest feasible match."""
    j = 0
    for item in r:
        while j < len(s) and not leq(item, s[j]):
            j += 1
        if j == len(s):
            return False
        j += 1
    return True
