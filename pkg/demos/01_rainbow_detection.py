"""
Finding rainbow paths and cycles in a colored hypergraph
========================================================

A coloring of the complete 3-uniform hypergraph on 8 vertices is
built from random labels, then searched for rainbow copies of each
motif kind.  The fast search is checked against the brute-force
oracle along the way.
"""
import random

from antiramsey import (Coloring, HostGraph, MotifKind, MotifSpec, classify_vertices,
                        find_rainbow, find_rainbow_naive, verify_witness)

host = HostGraph(8, 3)
print(f"host: n={host.n}, s={host.s}, {host.edge_count} edges")

# six colors, assigned at random
rng = random.Random(7)
coloring = Coloring.from_labels(host, [rng.randrange(6) for _ in range(host.edge_count)])
print("colors used:", coloring.num_colors)

for kind in MotifKind:
    m = MotifSpec(kind, 3)
    w = find_rainbow(coloring, m)
    naive = find_rainbow_naive(coloring, m)
    assert (w is None) == (naive is None)
    if w is None:
        print(f"{kind.value:13s} none")
        continue
    assert verify_witness(w, m, coloring)
    print(f"{kind.value:13s} {w.edges} colors={w.colors}")

# vertices of a linear path split into those on two edges and those on one
w = find_rainbow(coloring, MotifSpec(MotifKind.LinearPath, 3))
if w is not None:
    roles = classify_vertices(w)
    print("cross vertices:", sorted(v for v, r in roles.items() if r == "cross"))

# with only two colors nothing of length 3 can be rainbow
two = Coloring.from_labels(host, [r % 2 for r in range(host.edge_count)])
print("2-coloring, rainbow linear path:", find_rainbow(two, MotifSpec(MotifKind.LinearPath, 3)))
