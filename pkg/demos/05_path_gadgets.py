"""
Gluing linear paths from pieces
===============================

Long linear paths are built from (s-1)-sets joined by single link
vertices.  Two (s-1)-sets sharing one vertex form a cherry, and the
greedy search below finds vertex-disjoint cherries avoiding a
forbidden set.
"""
from itertools import combinations

from antiramsey import (HostGraph, InvalidInput, MotifSpec, NotFound, assemble_linear_path,
                        cherry_density_check, find_cherry_pairs, linear_to_berge)

host = HostGraph(12, 3)

# a0, v1, a1 b1 (cherry on vertex 4), v2, a2
g = assemble_linear_path(host, [(0, 1), 2, (3, 4), (4, 5), 6, (7, 8)])
print("assembled:", g.realized.edges)
print("as a Berge path:", linear_to_berge(g.realized).edges)

try:
    assemble_linear_path(host, [(0, 1), 2, (3, 4), (4, 5), 6, (0, 8)])
except InvalidInput as exc:
    print("rejected:", exc)

gstar = list(combinations(range(10), 2))
pairs = find_cherry_pairs(gstar, {0, 1}, 3)
print("cherries avoiding {0,1}:", pairs)

# the greedy runs out when too few vertices are left
try:
    find_cherry_pairs(list(combinations(range(12), 2)), {0, 1, 2, 3}, 4)
except NotFound as exc:
    print("not enough room; partial:", exc.partial)

print("density check (lhs, rhs, ok):", cherry_density_check(12, 3, 66, 0, 1))
