"""
Antichains of the contraction order
===================================

K_{2,r} graphs and antiholes are pairwise incomparable. The W_{p,q} graphs
form another antichain, and K_{2,r} sits below W_{p,q} exactly when r = p+1.
"""

from ctrwqo.antichains import FamilySpec, comparability_matrix, make, predicted_relation
from ctrwqo.contraction import is_contraction
from ctrwqo.dichotomy import dichotomy_verdict
from ctrwqo.graph import d_graph, path_graph, complete_graph

specs = [FamilySpec.parse(s) for s in ("K2R:2", "K2R:3", "K2R:4", "ANTIHOLE:6", "ANTIHOLE:7")]
matrix = comparability_matrix([make(s) for s in specs])
for s, row in zip(specs, matrix):
    print(f"{str(s):12s}", " ".join(f"{e.value:12s}" for e in row))

# the K_{2,r} versus W_{p,q} table, with q fixed at 3
print("\n     " + "  ".join(f"W:{p},3" for p in range(3, 6)))
for r in range(3, 7):
    row = ["  yes " if is_contraction(make(FamilySpec.parse(f"K2R:{r}")), make(FamilySpec.parse(f"W:{p},3")))
           else "  -   " for p in range(3, 6)]
    print(f"K2R:{r}", " ".join(row))

print("\npredicted K2R:4 vs W:3,5 ->", predicted_relation(FamilySpec.parse("K2R:4"), FamilySpec.parse("W:3,5")).value)

# which H-contraction-free classes are well-quasi-ordered?
for name, h in [("K_3", complete_graph(3)), ("D_3", d_graph(3)), ("P_4", path_graph(4))]:
    v = dichotomy_verdict(h)
    print(f"{name}: {v.verdict}", v.family or "", [m["spec"] for m in v.members])
