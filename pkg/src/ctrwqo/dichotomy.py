"""Well-quasi-order verdict for the class of H-contraction-free graphs.

The class is a wqo exactly when H is a contraction of the diamond. Otherwise
the verdict carries finitely many members of an infinite antichain, each
checked by search to exclude H.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .antichains import Family, FamilySpec, make
from .canon import is_isomorphic
from .contraction import is_contraction
from .errors import DisconnectedInput, TooLarge
from .graph import Graph, diamond, is_connected, write_graph6

MAX_VERTICES = 14
WINDOW = {Family.K2R: 4, Family.ANTIHOLE: 3}


@dataclass
class Verdict:
    verdict: str  # "WQO" or "NOT_WQO"
    h: str
    justification: str
    family: str | None = None
    members: list[dict] = field(default_factory=list)
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "h": self.h,
            "justification": self.justification,
            "witness_family": self.family,
            "witness_members": self.members,
            "note": self.note,
        }


def _window(family: Family, h: Graph) -> list[FamilySpec]:
    # start near |V(h)| so that small members cannot trivially contain h,
    # and skip a member isomorphic to h
    if family is Family.K2R:
        start, size = max(2, h.n - 2), WINDOW[family]
    else:
        start, size = max(6, h.n), WINDOW[family]
    out = []
    k = start
    while len(out) < size:
        spec = FamilySpec(family, (k,))
        if not is_isomorphic(make(spec), h):
            out.append(spec)
        k += 1
    return out


def dichotomy_verdict(h: Graph, *, budget: int | None = None) -> Verdict:
    if not is_connected(h):
        raise DisconnectedInput("dichotomy needs a connected graph")
    if h.n > MAX_VERTICES:
        raise TooLarge(f"dichotomy supports at most {MAX_VERTICES} vertices")
    g6 = write_graph6(h)
    if is_contraction(h, diamond(), budget=budget):
        return Verdict("WQO", g6, "h is a contraction of the diamond")
    for family in (Family.K2R, Family.ANTIHOLE):
        specs = _window(family, h)
        if all(not is_contraction(h, make(s), budget=budget) for s in specs):
            members = [{"spec": str(s), "graph6": write_graph6(make(s)), "contains_h": False}
                       for s in specs]
            return Verdict(
                "NOT_WQO", g6,
                f"every sampled member of the {family.value} antichain excludes h",
                family.value, members,
            )
    return Verdict(
        "NOT_WQO", g6, "by the dichotomy theorem",
        note="h is not a contraction of the diamond, but no sampled antichain member excludes it",
    )
