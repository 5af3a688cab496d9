"""Global identities in action.

Marsden's identity expands the h-power kernel in normalized B-splines; the
operators L_m and M_m are conjugate; divided differences are h-integrals
against B-spline kernels when the nodes sit on an h-grid.
"""
import math

from htrig import (KnotVector, MarsdenWindow, NodeSet, OpChain, apply_op, dd_exp,
                   dd_integral, dd_trig, marsden_sides, operator_relation_residual)
from htrig.hcalc import cexp_freq

h = 0.25
kv = KnotVector(h, [0.0, 0.3, 0.9, 1.4, 2.2, 2.6, 3.3, 3.9])
m = 3
w = MarsdenWindow(kv, m, 2, 5)
print(f"Marsden, m={m}, window ({kv[2]}, {kv[5]})")
for x, y in [(1.0, -2.0), (1.7, 0.4), (2.5, 5.0)]:
    for flavor in ("exp", "trig"):
        lhs, rhs = marsden_sides(w, x, y, flavor)
        print(f"  {flavor:4s} x={x} y={y}: lhs={complex(lhs):.12f}  |lhs-rhs|={abs(lhs - rhs):.1e}")

print("\nM_4 kills e^{ikx}, k < 4; L_4 kills the centred frequencies")
M, L = OpChain(4, h, "M"), OpChain(4, h, "L")
for k in range(4):
    print(f"  k={k}: |M f|={abs(apply_op(M, cexp_freq(h, k))(0.7)):.1e}"
          f"  |L g|={abs(apply_op(L, cexp_freq(h, k - 1.5))(0.7)):.1e}")
f = lambda t: complex(math.cos(t), t * t)
print(f"  conjugation residual, m=5: {operator_relation_residual(5, h, f, 0.3):.1e}")

nodes = NodeSet(h, [0.0, 0.25, 0.75, 1.5, 2.0])
g = lambda t: math.exp(math.sin(t))
print("\nIntegral representation on grid nodes", nodes.nodes)
print(f"  exp : sum {dd_integral(nodes, g, 'exp'):.12f}  direct {dd_exp(nodes, g):.12f}")
print(f"  trig: sum {dd_integral(nodes, g, 'trig'):.12f}  direct {dd_trig(nodes, g):.12f}")
