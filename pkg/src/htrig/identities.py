"""Global identities: Marsden expansions, the difference operators ``L_m`` and
``M_m``, the constants ``A^k_h`` and the integral representations of the
exponential and trigonometric divided differences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .bsplines import KnotVector, eval_E, eval_T, eval_tilde
from .errors import GridMisalignment, InsufficientKnots, OrderOutOfRange
from .gdd import NodeSet, as_real
from .hcalc import (Evaluator, HParam, as_hparam, binom2, cexp_h, grid_steps,
                    hintegral, hintegral_nodes, mult_U, sin_h, GRID_TOL)


@dataclass(frozen=True)
class MarsdenWindow:
    """Interval ``(x_k, x_r)`` with at least ``m`` knots at or below ``x_k``
    and at least ``m`` at or above ``x_r``."""

    kv: KnotVector
    m: int
    k: int
    r: int

    def __post_init__(self):
        t = self.kv.knots
        if not (0 <= self.k < self.r < len(t)) or not t[self.k] < t[self.r]:
            raise InsufficientKnots(f"(x_{self.k}, x_{self.r}) is not a nonempty knot interval")
        if self.k - self.m + 1 < 0 or self.r + self.m - 1 >= len(t):
            raise InsufficientKnots(
                f"need {self.m} knots at or below x_{self.k} and at or above x_{self.r}"
            )

    @property
    def indices(self) -> range:
        """Summation range ``j = k-m+1 .. r-1``."""
        return range(self.k - self.m + 1, self.r)


def marsden_sides(w: MarsdenWindow, x: float, y: float, flavor: str = "exp"):
    """Left and right sides of the Marsden identity at ``(x, y)``."""
    kv, m = w.kv, w.m
    p, t = kv.p, kv.knots
    h = p.h
    if flavor == "exp":
        ey = cexp_h(p, y)
        lhs = 1.0 + 0j
        for i in range(m - 1):
            lhs *= ey - cexp_h(p, x - i * h)
        rhs = 0j
        for j in w.indices:
            dual = 1.0 + 0j
            for l in range(1, m):
                dual *= ey - cexp_h(p, t[j + l])
            rhs += eval_tilde(kv, j, m, x, "E") * dual
        return lhs, rhs
    if flavor == "trig":
        lhs = 1.0
        for i in range(m - 1):
            lhs *= sin_h(p, (y - (x - i * h)) / 2.0)
        rhs = 0.0
        for j in w.indices:
            dual = 1.0
            for l in range(1, m):
                dual *= sin_h(p, (y - t[j + l]) / 2.0)
            rhs += eval_tilde(kv, j, m, x, "T") * dual
        return lhs, rhs
    raise ValueError(f"unknown flavor {flavor!r}")


def marsden_residual(w: MarsdenWindow, x: float, y: float, flavor: str = "exp") -> float:
    """``|LHS - RHS|`` of the Marsden identity; ``x`` must lie in ``(x_k, x_r)``."""
    t = w.kv.knots
    if not t[w.k] < x < t[w.r]:
        raise ValueError(f"x={x!r} outside ({t[w.k]!r}, {t[w.r]!r})")
    lhs, rhs = marsden_sides(w, x, y, flavor)
    return abs(lhs - rhs)


@dataclass(frozen=True)
class OpChain:
    """``L_m`` or ``M_m``: a product of ``m`` shifted first-order h-differences."""

    m: int
    p: HParam
    flavor: str = "L"

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be >= 0")
        if self.flavor not in ("L", "M"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "p", as_hparam(self.p))

    def coefficients(self) -> list:
        """Shift constants ``c_j`` of the factors ``(Delta_h - c_j I)``."""
        h, m = self.p.h, self.m
        if self.flavor == "L":
            return [(cexp_h(self.p, (j - (m - 1) / 2.0) * h) - 1.0) / h for j in range(m)]
        return [(cexp_h(self.p, j * h) - 1.0) / h for j in range(m)]


def apply_stencil(c: OpChain, values: list) -> list:
    """Apply the chain to samples ``f(x), f(x+h), ..., f(x+(m+n)h)``.

    Returns ``n + 1`` values of the result at ``x, x+h, ...``.
    """
    h = c.p.h
    vals = list(values)
    # rightmost factor first
    for cj in reversed(c.coefficients()):
        vals = [(vals[i + 1] - vals[i]) / h - cj * vals[i] for i in range(len(vals) - 1)]
    return vals


def apply_op(c: OpChain, f: Evaluator) -> Evaluator:
    """Evaluator of ``(chain) f``; reading it at ``x`` samples ``f`` on ``x, ..., x+mh``."""
    if c.m == 0:
        return f
    h = c.p.h

    def g(x):
        return apply_stencil(c, [f(x + i * h) for i in range(c.m + 1)])[0]

    return g


def operator_relation_residual(m: int, p: HParam, f: Evaluator, x: float) -> float:
    """``|(L_m f)(x) - e_h^{-i C(m,2) h} (U~_m M_m U_m f)(x)|``."""
    p = as_hparam(p)
    if m == 0:
        return 0.0
    lhs = apply_op(OpChain(m, p, "L"), f)(x)
    inner = apply_op(OpChain(m, p, "M"), mult_U(m, p, f))
    rhs = cexp_h(p, -binom2(m) * p.h) * mult_U(m, p, inner, tilde=True)(x)
    return abs(lhs - rhs)


def A_coeff(k: int, p: HParam) -> complex:
    """``A^k_h = (e_h^{ih}/h)^k prod_{l=1}^k (1 - e_h^{-ilh})``, with ``A^0_h = 1``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    p = as_hparam(p)
    h = p.h
    out = 1.0 + 0j
    for l in range(1, k + 1):
        out *= cexp_h(p, h) / h * (1.0 - cexp_h(p, -l * h))
    return out


def _check_grid(nodes: NodeSet) -> None:
    # |h| so that negative h works with increasing nodes
    xs, step = nodes.nodes, abs(nodes.p.h)
    for j, x in enumerate(xs[1:], 1):
        n = grid_steps(xs[0], x, step, GRID_TOL)
        if n < 1:
            raise GridMisalignment(f"(x_{j} - x_0)/|h| = {n} is not a positive integer")


def dd_integral(nodes: NodeSet, f: Evaluator, flavor: str = "exp"):
    """Divided difference recovered as an h-integral against a B-spline kernel.

    Needs ``(x_j - x_0)/|h|`` to be a positive integer for every node.  The
    exponential flavor returns a complex number, the trigonometric one a
    real number (realness checked).

    For ``h < 0`` the sum runs over ``(x_0, x_m]``, where the half-open order
    one kernel drops ``x_m`` and misses ``x_0``; from ``m = 2`` on the kernel
    vanishes at both ends and the identity holds, so ``m = 1`` is refused.
    """
    _check_grid(nodes)
    p, xs = nodes.p, nodes.nodes
    m = len(xs) - 1
    if m < 1:
        raise ValueError("integral representation needs m >= 1")
    if m == 1 and p.h < 0:
        raise OrderOutOfRange("integral representation with h < 0 needs m >= 2")
    h = p.h
    kv = KnotVector(p, xs)
    if flavor == "exp":
        Mf = apply_op(OpChain(m, p, "M"), f)

        def integrand(y):
            return cexp_h(p, -(m - 1) * y) * eval_E(kv, 0, m, y) * Mf(y - (m - 1) * h)

        return hintegral(integrand, xs[0], xs[-1], p) / A_coeff(m - 1, p)
    if flavor == "trig":
        Lf = apply_op(OpChain(m, p, "L"), f)

        def integrand(y):
            return eval_T(kv, 0, m, y) * Lf(y - (m - 1) * h)

        pref = (2j) ** (m - 1) * cexp_h(p, -(m - 1) * (m - 4) * h / 4.0) / A_coeff(m - 1, p)
        ys, wt = hintegral_nodes(xs[0], xs[-1], p)
        terms = [integrand(y) for y in ys]
        val = pref * wt * sum(terms)
        scale = abs(pref * wt) * math.fsum(abs(v) for v in terms)
        return as_real(val, scale, "trigonometric integral representation")
    raise ValueError(f"unknown flavor {flavor!r}")

