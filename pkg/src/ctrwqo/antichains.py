"""Graph families used as antichains, their predicted comparabilities, and
desk-scale checks of the premises that turn them into fundamental antichains.

Vertex layout of the pole-based families (W, I0, I1): poles 0 and 1, then the
semipoles, then the vertices of the edgeless part, then the inner vertices.
An inner edge is an edge avoiding both poles.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_key, canonical_labeling, is_isomorphic
from .contraction import is_contraction, is_induced_minor
from .errors import ParamOutOfRange, SearchExhausted
from .graph import (
    Graph,
    antihole,
    complete_bipartite,
    contract_edge,
    d_graph,
    gem,
    star_graph,
)


class Family(enum.Enum):
    K2R = "K2R"
    DR = "DR"
    STAR = "STAR"
    ANTIHOLE = "ANTIHOLE"
    W = "W"
    I0 = "I0"
    I1 = "I1"


# family -> (arity, minimum of each parameter)
_PARAMS = {
    Family.K2R: (2,),
    Family.DR: (0,),
    Family.STAR: (0,),
    Family.ANTIHOLE: (6,),
    Family.W: (3, 3),
    Family.I0: (3, 0),
    Family.I1: (3, 0),
}


@dataclass(frozen=True, order=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        mins = _PARAMS[self.family]
        if len(self.params) != len(mins):
            raise ParamOutOfRange(f"{self.family.value} takes {len(mins)} parameter(s)")
        for x, lo in zip(self.params, mins):
            if x < lo:
                raise ParamOutOfRange(f"{self} needs parameters >= {mins}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"W:3,5"``, ``"K2R:4"`` and the like."""
        name, sep, rest = text.strip().partition(":")
        try:
            fam = Family(name.strip().upper())
            params = tuple(int(x) for x in rest.split(",")) if sep else ()
        except ValueError as exc:
            raise ParamOutOfRange(f"cannot parse family spec {text!r}") from exc
        return cls(fam, params)

    def __str__(self) -> str:
        return f"{self.family.value}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class Roles:
    poles: frozenset[int] = frozenset()
    semipoles: frozenset[int] = frozenset()
    edgeless: frozenset[int] = frozenset()  # degree-2 vertices, adjacent to the poles only
    inner: frozenset[int] = frozenset()     # the rest: neither pole, semipole nor edgeless

    def is_inner_edge(self, u: int, v: int) -> bool:
        return u not in self.poles and v not in self.poles


def make(spec: FamilySpec) -> Graph:
    return _build(spec)[0]


def roles(spec: FamilySpec) -> Roles:
    return _build(spec)[1]


def _build(spec: FamilySpec) -> tuple[Graph, Roles]:
    fam, ps = spec.family, spec.params
    if fam is Family.K2R:
        return complete_bipartite(2, ps[0]), Roles()
    if fam is Family.DR:
        return d_graph(ps[0]), Roles()
    if fam is Family.STAR:
        return star_graph(ps[0]), Roles()
    if fam is Family.ANTIHOLE:
        return antihole(ps[0]), Roles()
    if fam is Family.W:
        i, q = ps
        semis, inner = [2, 3], [4 + i + j for j in range(q)]
        edges = [(s, w) for s in semis for w in inner]
    elif fam is Family.I0:
        i, q = ps
        semis, inner = [2, 3], [4 + i + j for j in range(q)]
        edges = [(2, 3)] + [(s, w) for s in semis for w in inner]
    else:
        i, q = ps
        semis, inner = [2], [3 + i + j for j in range(q)]
        edges = [(2, w) for w in inner]
    n = 2 + len(semis) + i + q
    edges += [(pole, v) for pole in (0, 1) for v in range(2, n)]
    edgeless = range(2 + len(semis), 2 + len(semis) + i)
    r = Roles(
        poles=frozenset((0, 1)),
        semipoles=frozenset(semis),
        edgeless=frozenset(edgeless),
        inner=frozenset(inner),
    )
    return Graph.from_edges(n, edges), r


# -- predicted relations --------------------------------------------------------


class Relation(enum.Enum):
    A_BELOW_B = "A_contraction_of_B"
    B_BELOW_A = "B_contraction_of_A"
    INCOMPARABLE = "Incomparable"
    EQUAL = "Equal"
    UNKNOWN = "Unknown"


def _below(a: FamilySpec, b: FamilySpec) -> bool | None:
    """Whether ``a`` is a proper contraction of ``b`` (the two are known to be
    non-isomorphic), where the known laws decide it; ``None`` otherwise."""
    ga, gb = make(a), make(b)
    if ga.n >= gb.n or ga.m > gb.m:
        return False
    fa, fb = a.family, b.family
    x, y = a.params[0], b.params[0]
    small = (Family.DR, Family.STAR)
    if fb in small + (Family.K2R,) and fa not in small:
        # contractions of D_r and K_{1,r}, and proper ones of K_{2,r}, stay in D or S
        return False
    if fa is Family.DR and fb is Family.DR:
        return x < y
    if fa is Family.STAR and fb is Family.STAR:
        return x < y
    if fa is Family.STAR and fb is Family.DR:
        return x <= y
    if fa is Family.DR and fb is Family.STAR:
        return x == 0
    if fa is Family.DR and fb is Family.K2R:
        return x < y
    if fa is Family.STAR and fb is Family.K2R:
        return x <= y - 1
    if fa is Family.K2R and fb is Family.W and x >= 3:
        return x == y + 1
    if fa in small and fb is Family.ANTIHOLE and x >= 3:
        # x pairwise non-adjacent parts need independence number >= x
        return False
    if fa == fb and fa in (Family.K2R, Family.ANTIHOLE, Family.W):
        return False
    return None


def predicted_relation(a: FamilySpec, b: FamilySpec) -> Relation:
    if a == b or is_isomorphic(make(a), make(b)):
        return Relation.EQUAL
    ab, ba = _below(a, b), _below(b, a)
    if ab and ba is not True:
        return Relation.A_BELOW_B
    if ba and ab is not True:
        return Relation.B_BELOW_A
    if ab is False and ba is False:
        return Relation.INCOMPARABLE
    return Relation.UNKNOWN


# -- computed comparabilities ----------------------------------------------------


class Comparison(enum.Enum):
    BELOW = "below"            # row graph is a proper contraction of column graph
    ABOVE = "above"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"
    EXHAUSTED = "exhausted"


def _contains(args) -> bool | None:
    h, g, budget = args
    try:
        return is_contraction(h, g, budget=budget)
    except SearchExhausted:
        return None


def _run_all(jobs: list, workers: int, fn=_contains) -> list:
    if workers <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=1))


def compare(a: bool | None, b: bool | None) -> Comparison:
    """Combine "row below column" and "column below row" answers."""
    if a and b:
        return Comparison.EQUAL
    if a:
        return Comparison.BELOW
    if b:
        return Comparison.ABOVE
    if a is None or b is None:
        return Comparison.EXHAUSTED
    return Comparison.INCOMPARABLE


def comparability_matrix(
    gs: list[Graph], *, budget: int | None = None, workers: int = 1
) -> list[list[Comparison]]:
    """Pairwise contraction comparisons. Entry ``[i][j]`` says where ``gs[i]``
    sits relative to ``gs[j]``; the matrix is antisymmetric by construction."""
    k = len(gs)
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    answers = dict(zip(pairs, _run_all([(gs[i], gs[j], budget) for i, j in pairs], workers)))
    out = [[Comparison.EQUAL] * k for _ in range(k)]
    for i, j in pairs:
        out[i][j] = compare(answers[i, j], answers[j, i])
    return out


RELATION_OF = {
    Comparison.BELOW: Relation.A_BELOW_B,
    Comparison.ABOVE: Relation.B_BELOW_A,
    Comparison.EQUAL: Relation.EQUAL,
    Comparison.INCOMPARABLE: Relation.INCOMPARABLE,
}


# -- gem and the I classes -----------------------------------------------------------


def has_induced_p4(g: Graph) -> bool:
    """Brute force over all 4-subsets."""
    for quad in combinations(range(g.n), 4):
        sub = g.induced(quad)
        if sub.m == 3 and sorted(sub.degrees()) == [1, 1, 2, 2]:
            return True
    return False


def contains_gem_induced_minor(g: Graph, *, budget: int | None = None) -> bool:
    return is_induced_minor(gem(), g, budget=budget)


@dataclass(frozen=True)
class IClass:
    kind: str  # "I0", "I1" or "neither"
    q: int | None = None

    def __str__(self) -> str:
        return self.kind if self.q is None else f"{self.kind}({self.q})"


def classify_I(g: Graph, i: int) -> IClass:
    """Membership in I0 = {I0(i, q)} or I1 = {I1(i, q)}. As I0(i, 0) and
    I1(i, 1) coincide, I0 is reported first."""
    if i < 3:
        raise ParamOutOfRange("classify_I needs i >= 3")
    for fam, extra in ((Family.I0, 4), (Family.I1, 3)):
        q = g.n - i - extra
        if q >= 0 and is_isomorphic(g, make(FamilySpec(fam, (i, q)))):
            return IClass(fam.value, q)
    return IClass("neither")


def downset_members(g: Graph, max_steps: int) -> list[Graph]:
    """Proper contractions reachable in at most ``max_steps`` edge
    contractions, one canonical form per isomorphism class, sorted by
    canonical key."""
    seen = {canonical_key(g)}
    found: dict = {}
    frontier = [g]
    for _ in range(max_steps):
        nxt = []
        for cur in frontier:
            for u, v in cur.edges():
                c = contract_edge(cur, u, v)
                key, perm = canonical_labeling(c)
                if key not in seen:
                    seen.add(key)
                    found[key] = c.relabel(perm)
                    nxt.append(c)
        if not nxt:
            break
        frontier = nxt
    return [found[k] for k in sorted(found)]


def inner_contractions(spec: FamilySpec) -> list[Graph]:
    """Every graph reachable from ``make(spec)`` by one or more contractions of
    edges avoiding the poles, up to isomorphism fixing the pole pair."""
    g = make(spec)

    def key(x: Graph):
        # contraction keeps the smaller label, so the poles stay at 0 and 1
        return canonical_key(x, [0, 0] + [1] * (x.n - 2))

    seen = {key(g)}
    out = []
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            for u, v in cur.edges():
                if u < 2:
                    continue
                c = contract_edge(cur, u, v)
                k = key(c)
                if k not in seen:
                    seen.add(k)
                    out.append(c)
                    nxt.append(c)
        frontier = nxt
    return out


# -- premises that make W_i a fundamental antichain -------------------------------


@dataclass
class PairCheck:
    a: str
    b: str
    expected: bool
    computed: bool | None  # None: budget exhausted

    @property
    def ok(self) -> bool:
        return self.computed is not None and self.computed == self.expected


@dataclass
class DingReport:
    i_range: list[int]
    q_range: list[int]
    pairs: list[PairCheck] = field(default_factory=list)
    gem_free: dict[str, dict] = field(default_factory=dict)
    i_closure: dict[str, dict] = field(default_factory=dict)
    downset_steps: int = 1

    @property
    def exhausted(self) -> list[PairCheck]:
        return [p for p in self.pairs if p.computed is None]

    @property
    def comparabilities_ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    @property
    def gem_ok(self) -> bool:
        return all(not v["violations"] and not v["exhausted"] for v in self.gem_free.values())

    @property
    def i_closure_ok(self) -> bool:
        return all(not v["violations"] for v in self.i_closure.values())

    @property
    def ok(self) -> bool:
        return self.comparabilities_ok and self.gem_ok and self.i_closure_ok

    def to_dict(self) -> dict:
        return {
            "i_range": self.i_range,
            "q_range": self.q_range,
            "premise_iii": {
                "status": "exact",
                "ok": self.comparabilities_ok,
                "pairs_checked": len(self.pairs),
                "comparable": [[p.a, p.b] for p in self.pairs if p.computed],
                "mismatches": [[p.a, p.b] for p in self.pairs if p.computed is not None and not p.ok],
                "exhausted": [[p.a, p.b] for p in self.exhausted],
            },
            "gem_free": {"status": "bounded evidence", "downset_steps": self.downset_steps,
                         "ok": self.gem_ok, "members": self.gem_free},
            "i_closure": {"status": "bounded evidence", "ok": self.i_closure_ok,
                          "members": self.i_closure},
            "ok": self.ok,
        }


def _gem_job(args) -> bool | None:
    g, budget = args
    try:
        return contains_gem_induced_minor(g, budget=budget)
    except SearchExhausted:
        return None


def check_ding_premises(
    i_range,
    q_range,
    *,
    budget: int | None = None,
    workers: int = 1,
    downset_steps: int = 1,
) -> DingReport:
    """Check, with A_i = K_{2,i+1} and W_i = {W(i, q)}: A_i is below every
    member of W_i and no other pair of members is comparable (exact, by
    search); members and their down-sets up to ``downset_steps`` contractions
    avoid the gem as an induced minor; inner-edge contractions of W(i, q)
    land in I0 or I1."""
    i_range, q_range = sorted(set(i_range)), sorted(set(q_range))
    report = DingReport(list(i_range), list(q_range), downset_steps=downset_steps)
    members = [FamilySpec(Family.K2R, (i + 1,)) for i in i_range]
    members += [FamilySpec(Family.W, (i, q)) for i in i_range for q in q_range]
    graphs = {s: make(s) for s in members}

    ordered = [(a, b) for a in members for b in members if a != b]
    computed = _run_all([(graphs[a], graphs[b], budget) for a, b in ordered], workers)
    for (a, b), got in zip(ordered, computed):
        expected = a.family is Family.K2R and b.family is Family.W and a.params[0] == b.params[0] + 1
        report.pairs.append(PairCheck(str(a), str(b), expected, got))

    gem_jobs: list = []
    owners: list = []
    for s in members:
        family = [graphs[s]] + downset_members(graphs[s], downset_steps)
        gem_jobs += [(x, budget) for x in family]
        owners += [s] * len(family)
    gem_answers = _run_all(gem_jobs, workers, _gem_job)
    for s in members:
        mine = [ans for o, ans in zip(owners, gem_answers) if o == s]
        report.gem_free[str(s)] = {
            "checked": len(mine),
            "violations": sum(1 for x in mine if x),
            "exhausted": sum(1 for x in mine if x is None),
        }

    for s in members:
        if s.family is not Family.W:
            continue
        got = [classify_I(c, s.params[0]) for c in inner_contractions(s)]
        report.i_closure[str(s)] = {
            "checked": len(got),
            "violations": sum(1 for c in got if c.kind == "neither"),
            "classes": sorted({str(c) for c in got}),
        }
    return report
