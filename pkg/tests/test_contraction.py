from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from ctrwqo.canon import enumerate_connected, is_isomorphic
from ctrwqo.contraction import (
    ModelSearch,
    find_induced_minor_model,
    find_model,
    find_rooted_model,
    is_contraction,
    is_induced_minor,
    one_step_contractions,
    sequence_embeds,
    verify_model,
)
from ctrwqo.errors import DisconnectedInput, KeyMismatch, SearchExhausted
from ctrwqo.graph import (
    Graph,
    RootedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    d_graph,
    diamond,
    disjoint_union,
    empty_graph,
    gem,
    is_connected,
    path_graph,
    star_graph,
)
from oracles import (
    contraction_closure,
    embeds_exhaustive,
    induced_minor_closure,
    rooted_closure,
    rooted_in,
    to_nx,
)

SMALL = [g for n in range(1, 6) for g in enumerate_connected(n)]


def test_verify_model_reports_condition():
    g, h = path_graph(3), complete_graph(2)
    assert verify_model(h, g, {0: [0], 1: [1, 2]})
    bad = verify_model(h, g, {0: [0, 2], 1: [1]})
    assert not bad and bad.condition == "connected"
    bad = verify_model(h, g, {0: [0], 1: [1]})
    assert bad.condition == "partition"
    bad = verify_model(h, g, {0: [0, 1], 1: [1, 2]})
    assert bad.condition == "partition"
    bad = verify_model(empty_graph(2), g, {0: [0], 1: [1, 2]})
    assert bad.condition == "adjacency"
    assert verify_model(h, g, {0: [0], 1: [1]}, induced=True)
    bad = verify_model(h, g, {0: [0], 1: [1, 2]}, roots=(0, 2))
    assert bad.condition == "root"
    with pytest.raises(KeyMismatch):
        verify_model(h, g, {0: [0], 2: [1, 2]})


@pytest.mark.parametrize("h,g,expected", [
    (complete_graph(1), complete_graph(5), True),
    (complete_graph(3), cycle_graph(5), True),
    (diamond(), complete_bipartite(2, 3), True),
    (diamond(), cycle_graph(6), False),
    (d_graph(2), complete_bipartite(2, 2), False),
    (path_graph(4), complete_graph(5), False),
    (d_graph(2), complete_bipartite(2, 4), True),
    (complete_bipartite(2, 2), complete_bipartite(2, 3), False),
])
def test_find_model_examples(h, g, expected):
    model = find_model(h, g)
    assert (model is not None) == expected
    if model is not None:
        assert verify_model(h, g, model)


def test_find_model_needs_connected_inputs():
    with pytest.raises(DisconnectedInput):
        find_model(complete_graph(1), empty_graph(2))
    with pytest.raises(DisconnectedInput):
        find_model(empty_graph(2), complete_graph(3))


def test_budget_gives_exhausted():
    with pytest.raises(SearchExhausted) as info:
        find_model(complete_bipartite(2, 4), complete_bipartite(2, 7), budget=5)
    assert info.value.nodes > 5


def test_find_model_matches_networkx_closure():
    for g in SMALL:
        closure = contraction_closure(g)
        for h in SMALL:
            if h.n > g.n:
                continue
            model = find_model(h, g)
            assert (model is not None) == (to_nx(h) in closure), (h, g)
            if model is not None:
                assert verify_model(h, g, model)


def test_pruning_rules_do_not_change_answers():
    rng = random.Random(3)
    corpus = [g for n in range(2, 7) for g in enumerate_connected(n)]
    for _ in range(300):
        g, h = rng.choice(corpus), rng.choice(corpus)
        assert (find_model(h, g) is None) == (find_model(h, g, prune=False) is None)


@st.composite
def twin_heavy(draw):
    # blow up a small connected graph by replacing vertices with twin classes
    base = draw(st.sampled_from(SMALL))
    sizes = draw(st.lists(st.integers(1, 3), min_size=base.n, max_size=base.n))
    kinds = draw(st.lists(st.booleans(), min_size=base.n, max_size=base.n))
    index, start = [], 0
    for k in sizes:
        index.append(list(range(start, start + k)))
        start += k
    edges = []
    for v, vs in enumerate(index):
        if kinds[v]:
            edges += [(a, b) for a in vs for b in vs if a < b]
        for w in base.neighbors(v):
            if w > v:
                edges += [(a, b) for a in vs for b in index[w]]
    return Graph.from_edges(sum(sizes), edges)


@given(twin_heavy(), st.sampled_from([g for g in SMALL if g.n <= 4]))
def test_twin_symmetry_breaking_is_exact(g, h):
    assume(g.n <= 8 and is_connected(g))
    with_rules = find_model(h, g)
    closure = contraction_closure(g)
    assert (with_rules is not None) == (to_nx(h) in closure)
    induced = find_induced_minor_model(h, g)
    assert (induced is not None) == (to_nx(h) in induced_minor_closure(g))
    if induced is not None:
        assert verify_model(h, g, induced, induced=True)


def test_induced_minor_matches_brute_force():
    hs = [g for g in SMALL if g.n <= 4] + [empty_graph(2), disjoint_union(complete_graph(2), complete_graph(1))]
    for g in [g for n in range(1, 6) for g in enumerate_connected(n)]:
        closure = induced_minor_closure(g)
        for h in hs:
            if h.n <= g.n:
                assert is_induced_minor(h, g) == (to_nx(h) in closure), (h, g)


def test_gem_induced_minor_examples():
    assert is_induced_minor(gem(), gem())
    assert not is_induced_minor(gem(), complete_graph(6))
    assert is_induced_minor(path_graph(4), cycle_graph(7))
    assert not is_contraction(path_graph(4), cycle_graph(7))


def test_rooted_contraction_matches_oracle():
    rng = random.Random(5)
    corpus = [g for n in range(1, 6) for g in enumerate_connected(n)]
    for _ in range(120):
        g = rng.choice(corpus)
        s = rng.randrange(g.n)
        closure = rooted_closure(g, s)
        h = rng.choice([x for x in corpus if x.n <= g.n])
        r = rng.randrange(h.n)
        model = find_rooted_model(RootedGraph(h, r), RootedGraph(g, s))
        assert (model is not None) == rooted_in(h, r, closure), (h, r, g, s)
        if model is not None:
            assert verify_model(h, g, model, roots=(r, s))


def test_rooted_search_rejects_induced_mode():
    with pytest.raises(ValueError):
        ModelSearch(complete_graph(1), complete_graph(2), induced=True, roots=(0, 0))


def test_one_step_contractions():
    got = one_step_contractions(d_graph(3))
    assert len(got) == 2
    assert any(is_isomorphic(x, d_graph(2)) for x in got)
    assert any(is_isomorphic(x, star_graph(3)) for x in got)
    assert [x.n for x in one_step_contractions(complete_graph(4))] == [3]


def test_sequence_embeds_examples():
    leq = lambda a, b: a <= b
    assert sequence_embeds([1, 3], [0, 2, 1, 4], leq)
    assert not sequence_embeds([3, 3], [0, 4, 1], leq)
    assert sequence_embeds([], [1], leq)
    assert not sequence_embeds([1], [], leq)


def _random_quasi_order(rng: random.Random, k: int):
    rel = {(a, b) for a, b in product(range(k), repeat=2) if a == b or rng.random() < 0.3}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return lambda x, y: (x, y) in rel


def test_sequence_embeds_matches_exhaustive_maps():
    rng = random.Random(11)
    for _ in range(300):
        leq = _random_quasi_order(rng, 5)
        r = [rng.randrange(5) for _ in range(rng.randint(0, 4))]
        s = [rng.randrange(5) for _ in range(rng.randint(0, 4))]
        assert sequence_embeds(r, s, leq) == embeds_exhaustive(r, s, leq)
