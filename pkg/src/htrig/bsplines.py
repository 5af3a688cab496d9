"""h-trigonometric B-splines ``T_{j,m}`` and their exponential partners ``E_{j,m}``.

Both families are supported on ``[x_j, x_{j+m})`` and vanish identically
when ``x_{j+m} = x_j``.  Each evaluator offers the defining divided
difference of a truncated power together with the faster two-term
recurrence; ``T`` can additionally be obtained from ``E`` by conjugation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OrderOutOfRange, SingularD
from .gdd import NodeSet, as_real, check_window, dd_exp, dd_trig
from .hcalc import HParam, as_hparam, binom2, cexp_h, cos_h, sin_h, trunc_power

MAX_ORDER = 12


@dataclass(frozen=True)
class KnotVector:
    """Non-decreasing knots ``x_0 <= x_1 <= ...`` paired with ``h``."""

    p: HParam
    knots: tuple
    max_order: int = MAX_ORDER

    def __post_init__(self):
        p = as_hparam(self.p)
        xs = tuple(float(x) for x in self.knots)
        for a, b in zip(xs, xs[1:]):
            if b < a:
                raise ValueError(f"knots must be non-decreasing, got {a!r} then {b!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "knots", xs)

    def __len__(self):
        return len(self.knots)

    def __getitem__(self, i):
        return self.knots[i]

    def check(self, j: int, m: int) -> None:
        """Validate the index pair and the window condition for ``T_{j,m}``."""
        if not 1 <= m <= self.max_order:
            raise OrderOutOfRange(f"order m={m} outside 1..{self.max_order}")
        if j < 0 or j + m >= len(self.knots):
            raise OrderOutOfRange(f"T_{{{j},{m}}} needs knots x_{j}..x_{j + m}; have {len(self.knots)}")
        span = self.knots[j + m] - self.knots[j]
        if span > 0:
            check_window(self.p, span, f"knot span x_{j + m} - x_{j}")

    def num_basis(self, m: int) -> int:
        return max(len(self.knots) - m, 0)


def _order_one(kv: KnotVector, j: int, x: float, flavor: str):
    a, b = kv.knots[j], kv.knots[j + 1]
    if not (a <= x < b):
        return 0.0
    if flavor == "T":
        return 1.0 / sin_h(kv.p, (b - a) / 2.0)
    return 1.0 / (cexp_h(kv.p, b) - cexp_h(kv.p, a))


def _recurrence(kv: KnotVector, j: int, m: int, x: float, flavor: str):
    """Triangular two-term recurrence from order 1 up to order ``m``."""
    p, t = kv.p, kv.knots
    h = p.h
    vals = [_order_one(kv, i, x, flavor) for i in range(j, j + m)]
    for k in range(2, m + 1):
        shifted = x - (k - 2) * h
        nxt = []
        for i in range(j, j + m - k + 1):
            left, right = vals[i - j], vals[i - j + 1]
            if t[i + k] == t[i]:
                # 0/0 := 0 across coincident knots
                nxt.append(0.0)
                continue
            if flavor == "T":
                den = sin_h(p, (t[i + k] - t[i]) / 2.0)
                w0 = sin_h(p, (shifted - t[i]) / 2.0)
                w1 = sin_h(p, (t[i + k] - shifted) / 2.0)
            else:
                es = cexp_h(p, shifted)
                den = cexp_h(p, t[i + k]) - cexp_h(p, t[i])
                w0 = es - cexp_h(p, t[i])
                w1 = cexp_h(p, t[i + k]) - es
            nxt.append((w0 * left + w1 * right) / den)
        vals = nxt
    return vals[0]


def _definition_nodes(kv: KnotVector, j: int, m: int) -> NodeSet:
    xs = kv.knots[j:j + m + 1]
    if len(set(xs)) != len(xs):
        raise SingularD("definition path needs distinct knots x_j..x_{j+m}; use the recurrence")
    return NodeSet(kv.p, xs)


def eval_E(kv: KnotVector, j: int, m: int, x: float, method: str = "recurrence") -> complex:
    """Complex h-exponential basis function ``E_{j,m}(x; h)``.

    ``method="definition"`` applies the exponential divided difference in
    ``y`` to the truncated power ``(e_h^{iy} - e_h^{ix})_+^{m-1}``;
    ``method="recurrence"`` runs the two-term recurrence.
    """
    kv.check(j, m)
    if kv.knots[j + m] == kv.knots[j]:
        return 0j
    if method == "recurrence":
        return complex(_recurrence(kv, j, m, x, "E"))
    if method == "definition":
        nodes = _definition_nodes(kv, j, m)
        p = kv.p
        return dd_exp(nodes, lambda y: trunc_power(p, m, x, y, "exp"), "lagrange")
    raise ValueError(f"unknown method {method!r}")


def from_E_factor(kv: KnotVector, j: int, m: int, x: float) -> complex:
    """Phase ``2i e_h^{(i/2)(sum x_{j+k} + C(m-1,2) h)} e_h^{-i(m-1)x/2}`` taking ``E`` to ``T``."""
    p = kv.p
    s = math.fsum(kv.knots[j:j + m + 1]) + binom2(m - 1) * p.h
    return 2j * cexp_h(p, 0.5 * s - 0.5 * (m - 1) * x)


def eval_T(kv: KnotVector, j: int, m: int, x: float, method: str = "recurrence") -> float:
    """h-trigonometric B-spline ``T_{j,m}(x; h)``.

    ``method`` is one of ``"definition"`` (trigonometric divided difference of
    the truncated sine power), ``"recurrence"`` or ``"from_E"`` (conjugation
    of ``E_{j,m}``, realness checked).
    """
    kv.check(j, m)
    if kv.knots[j + m] == kv.knots[j]:
        return 0.0
    if method == "recurrence":
        return float(_recurrence(kv, j, m, x, "T"))
    if method == "definition":
        nodes = _definition_nodes(kv, j, m)
        p = kv.p
        return dd_trig(nodes, lambda y: trunc_power(p, m, x, y, "sin"), "lagrange")
    if method == "from_E":
        e = eval_E(kv, j, m, x, "recurrence")
        z = from_E_factor(kv, j, m, x) * e
        # |T| <= 2|E|, so roundoff in the imaginary part scales with |E|
        return as_real(z, 2.0 * abs(e), "T via E")
    raise ValueError(f"unknown method {method!r}")


def hderiv_E(kv: KnotVector, j: int, m: int, x: float, method: str = "formula") -> complex:
    """h-derivative of ``E_{j,m}`` in ``x``.

    ``"direct"`` is the literal forward difference; ``"formula"`` is the
    two-term expression in ``E_{j,m-1}`` and ``E_{j+1,m-1}``.
    """
    kv.check(j, m)
    if m < 2:
        raise OrderOutOfRange("h-derivative formula needs m >= 2")
    p, t = kv.p, kv.knots
    h = p.h
    if method == "direct":
        return (eval_E(kv, j, m, x + h) - eval_E(kv, j, m, x)) / h
    if method == "formula":
        if t[j + m] == t[j]:
            return 0j
        pref = (cexp_h(p, -(m - 1) * h) - 1.0) * cexp_h(p, x + h)
        pref /= (cexp_h(p, t[j + m]) - cexp_h(p, t[j])) * h
        return pref * (eval_E(kv, j + 1, m - 1, x) - eval_E(kv, j, m - 1, x))
    raise ValueError(f"unknown method {method!r}")


def hderiv_T(kv: KnotVector, j: int, m: int, x: float, method: str = "formula") -> float:
    """h-derivative of ``T_{j,m}`` in ``x`` (``"formula"`` or ``"direct"``)."""
    kv.check(j, m)
    if m < 2:
        raise OrderOutOfRange("h-derivative formula needs m >= 2")
    p, t = kv.p, kv.knots
    h = p.h
    if method == "direct":
        return (eval_T(kv, j, m, x + h) - eval_T(kv, j, m, x)) / h
    if method == "formula":
        if t[j + m] == t[j]:
            return 0.0
        shift = (m - 3) * h / 2.0
        pref = 1j * cexp_h(p, (m - 1) * h / 4.0) * (cexp_h(p, -(m - 1) * h / 2.0) - 1.0)
        pref /= h * sin_h(p, (t[j + m] - t[j]) / 2.0)
        a = cos_h(p, (x - shift - t[j]) / 2.0) * eval_T(kv, j, m - 1, x)
        b = cos_h(p, (t[j + m] - x + shift) / 2.0) * eval_T(kv, j + 1, m - 1, x)
        return as_real(pref * (a - b), abs(pref) * (abs(a) + abs(b)), "h-derivative of T")
    raise ValueError(f"unknown method {method!r}")


def eval_tilde(kv: KnotVector, j: int, m: int, x: float, flavor: str = "T",
               method: str = "recurrence"):
    """Normalized variants ``E~ = (e_h^{ix_{j+m}} - e_h^{ix_j}) E`` and ``T~ = sin_h((x_{j+m}-x_j)/2) T``."""
    p, t = kv.p, kv.knots
    if flavor == "E":
        return (cexp_h(p, t[j + m]) - cexp_h(p, t[j])) * eval_E(kv, j, m, x, method)
    if flavor == "T":
        return sin_h(p, (t[j + m] - t[j]) / 2.0) * eval_T(kv, j, m, x, method)
    raise ValueError(f"unknown flavor {flavor!r}")


def tilde_bridge_factor(kv: KnotVector, j: int, m: int, x: float) -> complex:
    """Factor ``e_h^{(i/2)(sum_{k=1}^{m-1} x_{j+k} + C(m-1,2) h)} e_h^{-i(m-1)x/2}`` with ``T~ = factor * E~``."""
    p = kv.p
    s = math.fsum(kv.knots[j + 1:j + m]) + binom2(m - 1) * p.h
    return cexp_h(p, 0.5 * s - 0.5 * (m - 1) * x)


def hderiv_formula_holds(kv: KnotVector, j: int, m: int, x: float) -> bool:
    """Whether the two-term h-derivative formulas are exact at ``x``.

    They are unless a knot of ``T_{j,m}`` sits strictly between ``x`` and
    ``x + h`` (or, for ``h < 0`` and ``m = 2``, exactly at ``x``): there the
    truncation ``y > x`` does not commute with the shift ``x -> x + h``.
    Knots and ``x`` on a common h-grid satisfy this except in that last case.
    """
    h = kv.p.h
    lo, hi = min(x, x + h), max(x, x + h)
    for t in kv.knots[j:j + m + 1]:
        if lo < t < hi:
            return False
        if h < 0 and m == 2 and t == x:
            return False
    return True
