"""
Exact values on small hosts
===========================

Branch and bound gives proven Turán numbers and anti-Ramsey numbers
for hosts with a handful of edges.  Each answer ships with a
certificate that can be checked independently.
"""
from antiramsey import (Budget, HostGraph, MotifKind, MotifSpec, ar_exact,
                        ar_lower_certificate, ex_value, find_copy, turan_exact)

K = MotifKind

res = turan_exact(HostGraph(8, 3), MotifSpec(K.LinearPath, 2))
print("ex(8,3, two edges meeting in one vertex) =", res.value, res.status.value,
      f"({res.nodes_explored} nodes)")
print("  extremal family:", res.witness)
print("  copy inside it:", find_copy(HostGraph(8, 3), res.witness, MotifSpec(K.LinearPath, 2)))

res = turan_exact(HostGraph(6, 3), MotifSpec(K.Matching, 2))
print("ex(6,3, two disjoint edges) =", res.value)

for kind in (K.LinearPath, K.LoosePath):
    res = ar_exact(HostGraph(5, 3), MotifSpec(kind, 2))
    print(f"ar(5,3,{kind.value} k=2) = {res.value} [{res.regime}]")

# the coloring certificate: value - 1 colors, no rainbow copy
res = ar_exact(HostGraph(5, 2), MotifSpec(K.LoosePath, 3))
print("ar(K5, path with 3 edges) =", res.value)
print("  certificate colors:", res.witness.colors.tolist())
print("  re-checked lower bound:", ar_lower_certificate(res.witness, MotifSpec(K.LoosePath, 3)))

# too few vertices for any copy
print("ar(4,3, P2):", ar_exact(HostGraph(4, 3), MotifSpec(K.LinearPath, 2)).status.value)

# a tight node budget still returns a valid incumbent
res = turan_exact(HostGraph(8, 2), MotifSpec(K.LinearPath, 4), Budget(node_limit=5))
print("budgeted ex(K8, P4):", res.value, res.status.value)

# for graphs the closed form is only an upper bound
rep = ex_value(MotifSpec(K.LinearPath, 4), 8, 2)
print("closed form ex(8,2,P4):", rep.value, rep.bound_type.value, "; solver:", res.value)
