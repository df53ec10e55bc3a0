"""Positive and negative stabilization about each binding component.

Starting from a null-homologous braid in a 3-holed page, apply a single
stabilization of each sign about every binding and watch sl: positive moves
keep it, negative ones lower it by two.
The rho exponents were picked as T s for s = (1, -1, 2), so the canonical
solution has a negative entry.
"""

from planar_sl import (
    StabilizedState,
    analyze,
    normalize_nonnegative,
    parse_instance,
    stabilize,
)

inst = parse_instance("""
r=4; A2^2 A{2,3} A{3,4}^-1 A4^3
---
n=3; s1 s2^-1 r2^2 r3^-1 s1 r4^3 r4^2
""")
report = analyze(inst.open_book, inst.braid)
mm = report.matrix
print("T =", mm.tolist(), " H_1 =", report.homology)
print("a_rho =", list(report.exponents.a_rho), " s =", list(report.solution.s), " sl =", report.sl)

state = StabilizedState(report.exponents, report.solution.s)

# %% One move about each binding
for k in range(1, mm.r + 1):
    for sign in (+1, -1):
        after = stabilize(state, sign, k, mm)
        print(f"  {'pos' if sign > 0 else 'neg'} about gamma_{k}: n = {after.record.n}, "
              f"s = {list(after.s)}, sl = {after.sl(mm)}")

# %% Making s nonnegative, as the surface construction needs
normal = normalize_nonnegative(state, mm)
print("normalized s =", list(normal.s), "after", len(normal.history), "positive moves; sl =", normal.sl(mm))
