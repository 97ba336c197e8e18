"""
Closed-form Turán and anti-Ramsey values
========================================

Every value comes back as an exact rational tagged with how much it
promises: exact, exact for large n, or a one-sided bound.
"""
from antiramsey import (MotifKind, MotifSpec, NotCovered, ar_value, berge_ar_bounds,
                        erdos_matching_value, ex_value, sandwich_check)

K = MotifKind
n, s = 30, 4

print(f"n={n}, s={s}")
for k in range(2, 9):
    row = []
    for kind in (K.LinearPath, K.LoosePath, K.LinearCycle):
        if kind.is_cycle and k < 3:
            continue
        try:
            rep = ar_value(MotifSpec(kind, k), n, s)
            row.append(f"{kind.value}={rep.value} ({rep.bound_type.value})")
        except NotCovered:
            row.append(f"{kind.value}=n/a")
    print(f"  ar, k={k}: " + "; ".join(row))

# anti-Ramsey sits just above the Turán number of the shorter motif
ar = ar_value(MotifSpec(K.LinearPath, 6), n, s).value
ex = ex_value(MotifSpec(K.LinearPath, 5), n, s).value
print("ar(P6) =", ar, " ex(P5) + 2 =", ex + 2)
print("sandwich with ex(P6):", sandwich_check(ar, ex_value(MotifSpec(K.LinearPath, 6), n, s).value))

print("matching number ex(10,3,M2):", erdos_matching_value(10, 3, 2).value)

lo, hi = berge_ar_bounds(K.BergePath, 70, 3, 8)
print(f"Berge path k=8 on (70,3): {lo.value} <= ar <= {hi.value}  [{lo.regime}]")
print(lo.to_json())
