"""Where the two-term h-derivative formulas are exact.

The formulas express Delta_h T_{j,m} through order m-1 splines.  They match
the forward difference whenever no knot falls strictly between x and x+h,
which is automatic when knots and x share an h-grid.  Elsewhere the shift
x -> x+h crosses a knot and the two disagree.
"""
import numpy as np

from htrig import KnotVector, hderiv_formula_holds, hderiv_T

kv = KnotVector(0.5, [0.0, 0.6, 1.3])
print(" x     formula     forward diff  knot in (x, x+h)?")
for x in np.arange(-0.2, 1.4, 0.1):
    a, b = hderiv_T(kv, 0, 2, x), hderiv_T(kv, 0, 2, x, "direct")
    flag = "" if hderiv_formula_holds(kv, 0, 2, x) else "yes"
    print(f"{x:4.1f}  {a:11.6f}  {b:11.6f}   {flag}")

grid = KnotVector(0.5, [0.0, 0.5, 1.5, 2.0])
worst = max(abs(hderiv_T(grid, 0, 3, x) - hderiv_T(grid, 0, 3, x, "direct"))
            for x in np.arange(-1.0, 2.5, 0.5))
print(f"\nknots on the 0.5-grid, x on the grid: max |formula - forward diff| = {worst:.1e}")
