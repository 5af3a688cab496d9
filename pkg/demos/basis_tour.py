"""Tour of the h-trigonometric B-spline basis.

Evaluates T_{j,3} on a small knot vector, checks the three evaluation paths
against each other, and watches the basis approach the classical
trigonometric B-splines as h shrinks.
"""
import numpy as np

from htrig import KnotVector, convergence_table, eval_E, eval_T

knots = [0.0, 0.4, 1.0, 1.5, 2.1, 2.8]
h = 0.5
kv = KnotVector(h, knots)
m = 3

print(f"T_(j,{m})(x; h={h}) on knots {knots}")
xs = np.linspace(0.0, 2.8, 8, endpoint=False)
print("     x  " + "  ".join(f"  T_{j}   " for j in range(kv.num_basis(m))))
for x in xs:
    row = [eval_T(kv, j, m, x) for j in range(kv.num_basis(m))]
    print(f"{x:6.3f}  " + "  ".join(f"{v:9.5f}" for v in row))

# the same number three ways: divided difference, recurrence, conjugated E
x = 1.234
vals = {meth: eval_T(kv, 1, m, x, meth) for meth in ("definition", "recurrence", "from_E")}
print("\nT_(1,3)(1.234) by", ", ".join(f"{k}: {v:.15f}" for k, v in vals.items()))
print("E_(1,3)(1.234) =", eval_E(kv, 1, m, x))

# h -> 0: first-order convergence to the classical trigonometric spline
hs, errs, ratios = convergence_table(knots[:5], m, h_start=0.1, halvings=5, points=200)
print("\n      h      max error   ratio")
for k, (hk, e) in enumerate(zip(hs, errs)):
    r = f"{ratios[k - 1]:.3f}" if k else ""
    print(f"{hk:9.5f}  {e:.4e}  {r}")
