"""
Colorings with many colors and no rainbow path
==============================================

The classic lower-bound colorings: give every edge meeting a small
set its own color and paint the rest with one extra color.  We check
that no rainbow path appears, then look at the block colorings used
against Berge paths.
"""
from math import comb

from antiramsey import (FamilySpec, HostGraph, MotifKind, MotifSpec, berge_block_coloring,
                        build_family, family_size, find_rainbow, linear_path_lower_coloring,
                        rainbow_plus_one)

K = MotifKind

# even length: star around t - 1 vertices
host = HostGraph(10, 3)
col = linear_path_lower_coloring(host, 4)
print("k=4 coloring on (10,3):", col.num_colors, "colors; closed form",
      comb(10, 3) - comb(9, 3) + 1)
for kind in (K.LinearPath, K.LoosePath, K.LinearCycle, K.LooseCycle):
    print(f"  rainbow {kind.value}: {find_rainbow(col, MotifSpec(kind, 4))}")

# odd length adds a book through a fixed pair
host = HostGraph(12, 4)
col = linear_path_lower_coloring(host, 5)
print("k=5 coloring on (12,4):", col.num_colors, "colors")
print("  rainbow linear path:", find_rainbow(col, MotifSpec(K.LinearPath, 5)))

# the families themselves
for spec in (FamilySpec.star(2), FamilySpec.star_plus_book(1), FamilySpec.pair_book(),
             FamilySpec.disjoint_cliques(5)):
    fam = build_family(host, spec)
    assert len(fam) == family_size(host, spec)
    print(f"  {spec.kind.value:18s} {len(fam):4d} edges")

pb = rainbow_plus_one(host, build_family(host, FamilySpec.pair_book()))
print("pair book, rainbow plus one:", pb.num_colors, "colors; rainbow P3:",
      find_rainbow(pb, MotifSpec(K.LinearPath, 3)))

# Berge paths: disjoint blocks, each colored on its own
for n, s, k in ((21, 3, 7), (16, 3, 9)):
    for branch in (None, "cliques"):
        try:
            c = berge_block_coloring(HostGraph(n, s), k, branch=branch)
        except ValueError as exc:
            print(f"({n},{s},{k}) {branch}: {exc}")
            continue
        free = find_rainbow(c, MotifSpec(K.BergePath, k)) is None
        print(f"({n},{s},{k}) branch={branch or 'default'}: {c.num_colors} colors, "
              f"rainbow-free={free}")
