"""
How many colors force a rainbow path?
=====================================

Draw uniform surjective colorings with c colors and estimate the
chance of a rainbow copy.  Random colorings turn rainbow with very
few colors; only the structured star coloring survives up to the
anti-Ramsey number.
"""
import numpy as np

from antiramsey import (HostGraph, MotifKind, MotifSpec, ar_value, find_rainbow,
                        linear_path_lower_coloring, rainbow_probability)

host = HostGraph(10, 3)
m = MotifSpec(MotifKind.LinearPath, 4)
print("closed form ar:", ar_value(m, host.n, host.s).value, "of", host.edge_count, "edges")

cs = [2, 3, 4, 6, 8, 12, 20, 38]
probs = np.array([rainbow_probability(host, m, c, trials=100, seed=11).probability for c in cs])
for c, p in zip(cs, probs):
    print(f"c={c:3d}  P(rainbow)={p:.3f}  " + "#" * int(40 * p))

star = linear_path_lower_coloring(host, 4)
print(f"star coloring: {star.num_colors} colors, rainbow copy: {find_rainbow(star, m)}")

# same seed, same answer
a = rainbow_probability(host, m, 4, trials=50, seed=3)
b = rainbow_probability(host, m, 4, trials=50, seed=3)
print("reproducible:", a == b)
