"""Exhaustive desk-scale checks behind ``ctrwqo verify-lemma``.

Corpus checks (dec, cycles, 2c, recons, imctr) run over all connected graphs
with at most ``max_n`` vertices. Family checks (kpp1, comp, ctr, dpgraph) use
``max_n`` as the largest family parameter. cycleclique draws random sequences
of rooted clique-cactus graphs with at most ``max_n`` vertices each.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .antichains import Family, FamilySpec, make, _run_all
from .canon import enumerate_connected, is_isomorphic, rooted_key
from .contraction import is_contraction, is_induced_minor, is_rooted_contraction, one_step_contractions
from .errors import OutOfRange, SearchExhausted
from .graph import (
    Graph,
    RootedGraph,
    complete_bipartite,
    cycle_graph,
    d_graph,
    diamond,
    star_graph,
    write_graph6,
)
from .structure import (
    Constructor,
    CycleKind,
    classify_cycle,
    compose,
    enumerate_cycles,
    excludes_diamond,
    is_biconnected,
    is_clique_cactus,
    reconstruct_check,
    rooted_downset,
)

NAMES = ("dec", "cycles", "2c", "kpp1", "comp", "ctr", "dpgraph", "cycleclique", "recons", "imctr")


@dataclass
class LemmaRun:
    name: str
    max_n: int
    items: list[dict] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return any(it.get("exhausted") for it in self.items)

    @property
    def passed(self) -> bool:
        return all(it["pass"] for it in self.items)

    def to_dict(self) -> dict:
        return {
            "lemma": self.name,
            "max_n": self.max_n,
            "checked": len(self.items),
            "failed": sum(1 for it in self.items if not it["pass"]),
            "pass": self.passed,
            "items": self.items,
        }


def corpus(max_n: int) -> list[Graph]:
    if max_n > 8:
        raise OutOfRange("corpus checks support max_n <= 8")
    return [g for n in range(1, max_n + 1) for g in enumerate_connected(n)]


def _contains(h: Graph, g: Graph, budget) -> bool | None:
    try:
        return is_contraction(h, g, budget=budget)
    except SearchExhausted:
        return None


def _dec_item(args) -> dict:
    g, budget = args
    structural = excludes_diamond(g)
    found = _contains(diamond(), g, budget)
    return {
        "graph6": write_graph6(g),
        "excludes_diamond": structural,
        "diamond_contraction": found,
        "exhausted": found is None,
        "pass": found is not None and structural == (not found),
    }


def check_dec(max_n, budget=None, workers=1, **_) -> list[dict]:
    return _run_all([(g, budget) for g in corpus(max_n)], workers, _dec_item)


def check_cycles(max_n, **_) -> list[dict]:
    out = []
    for g in corpus(max_n):
        if not excludes_diamond(g):
            continue
        kinds = [classify_cycle(g, c).kind for c in enumerate_cycles(g)]
        mixed = sum(1 for k in kinds if k is CycleKind.MIXED)
        out.append({"graph6": write_graph6(g), "cycles": len(kinds), "mixed": mixed, "pass": mixed == 0})
    return out


def check_2c(max_n, **_) -> list[dict]:
    out = []
    for g in corpus(max_n):
        if not is_biconnected(g) or not excludes_diamond(g):
            continue
        shape = "complete" if g.m == g.n * (g.n - 1) // 2 else (
            "cycle" if is_isomorphic(g, cycle_graph(g.n)) else "other")
        out.append({"graph6": write_graph6(g), "shape": shape, "pass": shape != "other"})
    return out


def _law_item(h_spec: str, g_spec: str, h: Graph, g: Graph, expected: bool, budget) -> dict:
    got = _contains(h, g, budget)
    return {"h": h_spec, "g": g_spec, "expected": expected, "computed": got,
            "exhausted": got is None, "pass": got == expected}


def check_kpp1(max_n, budget=None, **_) -> list[dict]:
    out = []
    for r in range(3, max_n + 2):
        for p in range(3, max_n + 1):
            for q in range(3, max_n + 1):
                w = FamilySpec(Family.W, (p, q))
                out.append(_law_item(f"K2R:{r}", str(w), complete_bipartite(2, r), make(w), r == p + 1, budget))
    return out


def check_comp(max_n, budget=None, **_) -> list[dict]:
    grid = [FamilySpec(Family.W, (p, q)) for p in range(3, max_n + 1) for q in range(3, max_n + 1)]
    return [_law_item(str(a), str(b), make(a), make(b), a == b, budget) for a in grid for b in grid]


def check_ctr(max_n, **_) -> list[dict]:
    out = []
    for p in range(1, max_n + 1):
        got = one_step_contractions(d_graph(p))
        want = [d_graph(p - 1), star_graph(p)]
        # for p = 1 the two candidates coincide (D_0 = K_{1,1} = K_2)
        ok = all(any(is_isomorphic(x, y) for y in got) for x in want) and all(
            any(is_isomorphic(x, y) for y in want) for x in got)
        out.append({"p": p, "one_step": [write_graph6(x) for x in got], "pass": ok})
    return out


def check_dpgraph(max_n, budget=None, **_) -> list[dict]:
    return [
        _law_item(f"DR:{p}", f"K2R:{q}", d_graph(p), complete_bipartite(2, q), p < q, budget)
        for p in range(1, max_n + 1) for q in range(2, max_n + 1)
    ]


def rooted_cactus_pool(max_n: int) -> list[RootedGraph]:
    """Rooted connected clique-cactus graphs up to rooted isomorphism."""
    seen: dict = {}
    for g in corpus(max_n):
        if is_clique_cactus(g):
            for r in range(g.n):
                seen.setdefault(rooted_key(g, r), RootedGraph(g, r))
    return [seen[k] for k in sorted(seen)]


def random_sequence_pair(rng: random.Random, pool, downsets: dict, max_len: int = 4):
    """A sequence G of pool members and a sequence H with H below G in the
    sequence order: a subsequence of G with each term replaced by a rooted
    contraction of itself."""
    gs = [rng.choice(pool) for _ in range(rng.randint(1, max_len))]
    picks = sorted(rng.sample(range(len(gs)), rng.randint(1, len(gs))))
    hs = []
    for j in picks:
        key = rooted_key(gs[j].graph, gs[j].root)
        if key not in downsets:
            downsets[key] = rooted_downset(gs[j])
        hs.append(rng.choice(downsets[key]))
    return hs, gs


def check_cycleclique(max_n, trials=100, seed=0, budget=None, **_) -> list[dict]:
    from .contraction import sequence_embeds

    rng = random.Random(seed)
    pool = rooted_cactus_pool(min(max_n, 5))
    downsets: dict = {}
    out = []
    for t in range(trials):
        hs, gs = random_sequence_pair(rng, pool, downsets)
        embeds = sequence_embeds(hs, gs, lambda a, b: is_rooted_contraction(a, b, budget=budget))
        kinds = {}
        for kind in Constructor:
            try:
                kinds[kind.value] = is_rooted_contraction(compose(kind, hs), compose(kind, gs), budget=budget)
            except SearchExhausted:
                kinds[kind.value] = None
        out.append({
            "trial": t,
            "h": [[write_graph6(x.graph), x.root] for x in hs],
            "g": [[write_graph6(x.graph), x.root] for x in gs],
            "embeds": embeds,
            "composed": kinds,
            "exhausted": None in kinds.values(),
            "pass": embeds and all(v is True for v in kinds.values()),
        })
    return out


def check_recons(max_n, **_) -> list[dict]:
    out = []
    for g in corpus(max_n):
        if not is_clique_cactus(g):
            continue
        for r in range(g.n):
            out.append({"graph6": write_graph6(g), "root": r, "pass": reconstruct_check(RootedGraph(g, r))})
    return out


def check_imctr(max_n, budget=None, **_) -> list[dict]:
    dom = [g for g in corpus(max_n) if g.dominating_vertices()]
    out = []
    for g in dom:
        for h in dom:
            if h.n > g.n:
                continue
            try:
                a = is_contraction(h, g, budget=budget)
                b = is_induced_minor(h, g, budget=budget)
            except SearchExhausted:
                a = b = None
            out.append({"h": write_graph6(h), "g": write_graph6(g), "contraction": a,
                        "induced_minor": b, "exhausted": a is None, "pass": a is not None and a == b})
    return out


CHECKS = {
    "dec": check_dec,
    "cycles": check_cycles,
    "2c": check_2c,
    "kpp1": check_kpp1,
    "comp": check_comp,
    "ctr": check_ctr,
    "dpgraph": check_dpgraph,
    "cycleclique": check_cycleclique,
    "recons": check_recons,
    "imctr": check_imctr,
}


def verify_lemma(name: str, max_n: int, **options) -> LemmaRun:
    if name not in CHECKS:
        raise OutOfRange(f"unknown check {name!r}; choose from {', '.join(NAMES)}")
    if max_n < 1:
        raise OutOfRange("max_n must be positive")
    return LemmaRun(name, max_n, CHECKS[name](max_n, **options))
