"""Seeded residual batteries for every identity the package implements.

Each suite draws random instances for one ``h`` and returns normalized
residuals: differences divided by the natural magnitude of the quantities
compared, so a single tolerance applies across instances.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import bsplines as bs
from . import gdd
from .hcalc import (HParam, as_hparam, cexp_freq, cexp_h, hderiv, hintegral, mult_U,
                    trig_h)
from .identities import (MarsdenWindow, OpChain, apply_op, dd_integral, marsden_sides,
                         operator_relation_residual)
from .sampling import (random_grid_knots, random_grid_nodes, random_knots, random_nodes,
                       smooth_function)


@dataclass
class CheckReport:
    suite: str
    h: float
    seed: int
    samples: int
    cases: int
    max_residual: float
    mean_residual: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def rel(a, b, floor: float = 0.0) -> float:
    d = abs(a - b)
    if d == 0:
        return 0.0
    return d / max(abs(a), abs(b), floor)


# -- h-calculus -------------------------------------------------------------

def trig_identity_residuals(p: HParam, x: float, y: float) -> list:
    """Pointwise residuals of the h-trigonometric identity battery."""
    c, s = trig_h(p, x)
    cy, sy = trig_h(p, y)
    cp, sp = trig_h(p, x + y)
    cm, sm = trig_h(p, x - y)
    c2, s2 = trig_h(p, 2 * x)
    ex, ey = cexp_h(p, x), cexp_h(p, y)
    half, sd, cd = cexp_h(p, (x + y) / 2), trig_h(p, (x - y) / 2)[1], trig_h(p, (x - y) / 2)[0]
    return [
        abs(cp - (c * cy - s * sy)),
        abs(cm - (c * cy + s * sy)),
        abs(sp - (s * cy + c * sy)),
        abs(sm - (s * cy - c * sy)),
        abs(s * s + c * c - 1.0),
        abs(c2 - (c * c - s * s)),
        abs(c2 - (1.0 - 2.0 * s * s)),
        abs(c2 - (2.0 * c * c - 1.0)),
        abs(s2 - 2.0 * s * c),
        abs(s * cy - 0.5 * (sp + sm)),
        abs(s * sy - 0.5 * (cm - cp)),
        abs(c * cy - 0.5 * (cp + cm)),
        abs(cexp_h(p, x + y) - ex * ey),
        abs(cexp_h(p, x - y) - ex * cexp_h(p, -y)),
        abs(ex - ey - 2j * half * sd),
        abs(ex + ey - 2.0 * half * cd),
        abs(abs(ex) - 1.0),
        abs(ex - complex(c, s)),
    ]


def suite_trig_identities(p, rng, samples):
    out = []
    for _ in range(samples):
        x, y = rng.uniform(-10, 10, 2)
        out += trig_identity_residuals(p, x, y)
    return out


def suite_hcalc(p, rng, samples):
    """Product rule, fundamental theorem and integration by parts."""
    out = []
    h = p.h
    for _ in range(samples):
        f = smooth_function(rng, True)
        g = smooth_function(rng, True)
        x = rng.uniform(-5, 5)
        lhs = hderiv(lambda t: f(t) * g(t), p, x)
        rhs = g(x) * hderiv(f, p, x) + f(x + h) * hderiv(g, p, x)
        out.append(rel(lhs, rhs, abs(f(x) * g(x)) / abs(h) + 1.0))
        a = rng.uniform(-3, 3)
        b = a + h * int(rng.integers(-12, 13))
        ftc = hintegral(lambda t: hderiv(f, p, t), a, b, p)
        out.append(rel(ftc, f(b) - f(a), abs(f(a)) + abs(f(b)) + 1.0))
        lhs = hintegral(lambda t: f(t) * hderiv(g, p, t), a, b, p)
        rhs = f(b) * g(b) - f(a) * g(a) - hintegral(lambda t: g(t + h) * hderiv(f, p, t), a, b, p)
        out.append(rel(lhs, rhs, abs(f(a) * g(a)) + abs(f(b) * g(b)) + 1.0))
    return out


# -- divided differences ------------------------------------------------------

def suite_dd_oracles(p, rng, samples, max_order=6):
    out = []
    for m in range(max_order + 1):
        for _ in range(samples):
            nodes = random_nodes(rng, p, m)
            f = smooth_function(rng)
            el = gdd.dd_exp(nodes, f, "lagrange")
            out.append(rel(gdd.dd_exp(nodes, f, "recursive"), el))
            out.append(rel(gdd.dd_det_oracle(nodes, f, "exp"), el))
            tl = gdd.dd_trig(nodes, f, "lagrange")
            out.append(rel(gdd.dd_trig(nodes, f, "via_exp"), tl))
            out.append(rel(gdd.dd_trig(nodes, f, "threeterm"), tl))
            out.append(rel(gdd.dd_det_oracle(nodes, f, "trig"), tl))
    return out


def suite_dd_structure(p, rng, samples, max_order=6):
    """Annihilation, leading coefficient, Leibniz rule, symmetry."""
    out = []
    for m in range(1, max_order + 1):
        for _ in range(samples):
            nodes = random_nodes(rng, p, m)
            xs = nodes.nodes
            for k in range(m):
                fk = cexp_freq(p, k)
                scale = math.fsum(abs(t) for t in _exp_terms(p, xs, fk))
                out.append(abs(gdd.dd_exp(nodes, fk)) / scale)
            out.append(abs(gdd.dd_exp(nodes, cexp_freq(p, m)) - 1.0))
            for k in range(m):
                # trig basis of the order-m space: e^{i(k-(m-1)/2)x}, real and imaginary parts
                c = k - (m - 1) / 2.0
                for part in (lambda t, c=c: math.cos(c * t * p.omega),
                             lambda t, c=c: math.sin(c * t * p.omega)):
                    scale = gdd.trig_scale(p, xs, part)
                    out.append(abs(gdd.dd_trig(nodes, part)) / max(scale, 1e-300))
            if m <= 5:
                f, g = smooth_function(rng, True), smooth_function(rng, True)
                lhs = gdd.dd_exp(nodes, lambda t: f(t) * g(t))
                terms = [gdd.dd_exp(nodes.sub(0, k + 1), f) * gdd.dd_exp(nodes.sub(k, m + 1), g)
                         for k in range(m + 1)]
                out.append(abs(lhs - sum(terms)) / max(math.fsum(abs(t) for t in terms), abs(lhs)))
            f = smooth_function(rng)
            perm = rng.permutation(m + 1)
            shuffled = [xs[i] for i in perm]
            a = gdd._exp_lagrange(p, shuffled, f)
            out.append(rel(a, gdd.dd_exp(nodes, f, "lagrange")))
    return out


def _exp_terms(p, xs, f):
    es = [cexp_h(p, x) for x in xs]
    out = []
    for j, ej in enumerate(es):
        den = 1.0
        for k, ek in enumerate(es):
            if k != j:
                den *= ej - ek
        out.append(f(xs[j]) / den)
    return out


# -- B-splines ----------------------------------------------------------------

def suite_bspline_equiv(p, rng, samples, max_order=5, points=10):
    out = []
    for m in range(1, max_order + 1):
        for _ in range(samples):
            kv = random_knots(rng, p, m + 1, m)
            t = kv.knots
            for x in rng.uniform(t[0], t[-1], points):
                td = bs.eval_T(kv, 0, m, x, "definition")
                tr = bs.eval_T(kv, 0, m, x, "recurrence")
                e = bs.eval_E(kv, 0, m, x, "recurrence")
                z = bs.from_E_factor(kv, 0, m, x) * e
                out += [rel(td, tr), rel(z.real, tr), rel(z.real, td),
                        abs(z.imag) / (1.0 + abs(z.real)),
                        rel(bs.eval_E(kv, 0, m, x, "definition"), e)]
            for x in list(rng.uniform(t[0] - 2, t[0], 2)) + list(rng.uniform(t[-1], t[-1] + 2, 2)) + [t[-1]]:
                out += [abs(bs.eval_T(kv, 0, m, x, meth)) for meth in ("definition", "recurrence", "from_E")]
                out += [abs(bs.eval_E(kv, 0, m, x, meth)) for meth in ("definition", "recurrence")]
            x = rng.uniform(t[0], t[-1])
            bridge = bs.tilde_bridge_factor(kv, 0, m, x) * bs.eval_tilde(kv, 0, m, x, "E")
            out.append(rel(bridge, bs.eval_tilde(kv, 0, m, x, "T"), 1.0))
    return out


def suite_derivatives(p, rng, samples, max_order=5, points=10):
    """Derivative formulas against the literal forward difference.

    Uses knots on an h-grid and off-grid knots, sampled only at points where
    the formulas hold (see :func:`bsplines.hderiv_formula_holds`).
    """
    out = []
    step = abs(p.h)
    fit = int(0.9 * p.window / step)
    for m in range(2, max_order + 1):
        for _ in range(samples):
            cases = []
            if fit >= m:
                kv = random_grid_knots(rng, p, m + 1, m)
                t = kv.knots
                n = int(round((t[-1] - t[0]) / step))
                xs = [t[0] + step * int(k) for k in rng.integers(-2, n + 2, points)]
                cases += [(kv, x) for x in xs if bs.hderiv_formula_holds(kv, 0, m, x)]
            kv = random_knots(rng, p, m + 1, m)
            t = kv.knots
            xs = [x for x in rng.uniform(t[0] - 1, t[-1] + 1, 4 * points)
                  if bs.hderiv_formula_holds(kv, 0, m, x)][:points]
            cases += [(kv, x) for x in xs]
            for kv, x in cases:
                out.append(rel(bs.hderiv_E(kv, 0, m, x, "formula"), bs.hderiv_E(kv, 0, m, x, "direct"), 1.0))
                out.append(rel(bs.hderiv_T(kv, 0, m, x, "formula"), bs.hderiv_T(kv, 0, m, x, "direct"), 1.0))
    return out


# -- identities ---------------------------------------------------------------

def suite_marsden(p, rng, samples, max_order=5, windows=5):
    out = []
    for m in range(1, max_order + 1):
        n = 2 * m + 2
        for _ in range(windows):
            kv = random_knots(rng, p, n, m)
            k, r = m - 1, n - m
            w = MarsdenWindow(kv, m, k, r)
            t = kv.knots
            for _ in range(samples):
                x = rng.uniform(t[k], t[r])
                y = rng.uniform(-10, 10)
                for flavor in ("exp", "trig"):
                    lhs, rhs = marsden_sides(w, x, y, flavor)
                    out.append(abs(lhs - rhs) / (1.0 + abs(lhs)))
    return out


def chain_scale(c: OpChain, values) -> float:
    """Bound on ``|(chain f)(x)|`` from the stencil samples."""
    bound = max(abs(v) for v in values)
    for cj in c.coefficients():
        bound *= 2.0 / abs(c.p.h) + abs(cj)
    return max(bound, 1e-300)


def suite_operators(p, rng, samples, max_order=6, points=20):
    out = []
    h = p.h
    for m in range(0, max_order + 1):
        L, M = OpChain(m, p, "L"), OpChain(m, p, "M")
        for x in rng.uniform(-5, 5, points):
            for k in range(m):
                fk = cexp_freq(p, k)
                vals = [fk(x + i * h) for i in range(m + 1)]
                out.append(abs(apply_op(M, fk)(x)) / chain_scale(M, vals))
                gk = cexp_freq(p, k - (m - 1) / 2.0)
                vals = [gk(x + i * h) for i in range(m + 1)]
                out.append(abs(apply_op(L, gk)(x)) / chain_scale(L, vals))
        for _ in range(samples):
            f = smooth_function(rng, True)
            x = rng.uniform(-5, 5)
            vals = [f(x + i * h) for i in range(m + 1)]
            out.append(operator_relation_residual(m, p, f, x) / chain_scale(L, vals))
    out += _piece_annihilation(p, rng, samples, max_order)
    return out


def _piece_annihilation(p, rng, samples, max_order):
    """``L_m`` kills ``T_{j,m}`` on stencils inside a single knot interval."""
    out = []
    h = p.h
    step = abs(h)
    for m in range(1, max_order + 1):
        L = OpChain(m, p, "L")
        for _ in range(max(samples // 4, 1)):
            # intervals longer than m|h| while m-spans stay inside the window
            gap = rng.uniform(1.05, 1.6) * (m + 1) * step
            if m * gap >= 0.95 * p.window:
                break
            t = rng.uniform(-3, 3) + gap * np.arange(m + 1) * rng.uniform(0.9, 1.0, m + 1).cumsum() / np.arange(1, m + 2)
            kv = bs.KnotVector(p, tuple(np.sort(t)))
            tk = kv.knots
            for i in range(m):
                a, b = tk[i], tk[i + 1]
                if b - a <= m * step:
                    continue
                lo = a if h > 0 else a + m * step
                hi = b - m * step if h > 0 else b
                x = rng.uniform(lo, hi)
                if not all(a <= x + s * h < b for s in range(m + 1)):
                    continue
                f = lambda u: bs.eval_T(kv, 0, m, u)
                vals = [f(x + s * h) for s in range(m + 1)]
                out.append(abs(apply_op(L, f)(x)) / chain_scale(L, vals))
    return out


def suite_integrals(p, rng, samples, max_order=4):
    out = []
    fit = int(0.9 * p.window / abs(p.h))
    # order one needs h > 0, see dd_integral
    for m in range(1 if p.h > 0 else 2, min(max_order, fit) + 1):
        for _ in range(samples):
            nodes = random_grid_nodes(rng, p, m)
            f = smooth_function(rng)
            out.append(rel(dd_integral(nodes, f, "exp"), gdd.dd_exp(nodes, f)))
            out.append(rel(dd_integral(nodes, f, "trig"), gdd.dd_trig(nodes, f)))
    return out


# name -> (runner, default tolerance, default samples)
SUITES = {
    "trig-identities": (suite_trig_identities, 1e-12, 1000),
    "hcalc": (suite_hcalc, 1e-12, 200),
    "dd-oracles": (suite_dd_oracles, 1e-8, 200),
    "dd-structure": (suite_dd_structure, 1e-9, 50),
    "bspline-equiv": (suite_bspline_equiv, 1e-8, 40),
    "derivatives": (suite_derivatives, 1e-10, 40),
    "marsden": (suite_marsden, 1e-10, 100),
    "operators": (suite_operators, 1e-10, 30),
    "integrals": (suite_integrals, 1e-8, 50),
}


def run_suite(name: str, h: float, seed: int, samples: int | None = None,
              tol: float | None = None) -> CheckReport:
    runner, default_tol, default_samples = SUITES[name]
    p = as_hparam(h)
    samples = default_samples if samples is None else samples
    tol = default_tol if tol is None else tol
    rng = np.random.default_rng([seed, _suite_salt(name)])
    res = np.asarray(runner(p, rng, samples), dtype=float)
    if res.size == 0:
        res = np.zeros(1)
    mx, mean = float(res.max()), float(res.mean())
    return CheckReport(suite=name, h=p.h, seed=seed, samples=samples, cases=int(res.size),
                       max_residual=mx, mean_residual=mean, tol=tol,
                       passed=bool(np.isfinite(mx) and mx < tol))


def _suite_salt(name: str) -> int:
    # stable across processes, unlike hash()
    return sum((i + 1) * ord(ch) for i, ch in enumerate(name))
