"""Classical trigonometric B-splines, the ``h -> 0`` limit of ``T_{j,m}``."""
from __future__ import annotations

import math

import numpy as np

from .bsplines import KnotVector, eval_T
from .errors import OrderOutOfRange, WindowViolation


def eval_T_classical(knots, j: int, m: int, x: float) -> float:
    """Classical trigonometric B-spline by the two-term sine-weight recurrence.

    Order one is ``1/sin((x_{j+1} - x_j)/2)`` on ``[x_j, x_{j+1})``; spans
    ``x_{j+m} - x_j`` must stay below ``2*pi``.
    """
    t = [float(v) for v in knots]
    if m < 1 or j < 0 or j + m >= len(t):
        raise OrderOutOfRange(f"T_{{{j},{m}}} not defined on {len(t)} knots")
    if not t[j + m] - t[j] < 2 * math.pi:
        raise WindowViolation("classical trigonometric B-splines need spans below 2*pi")
    vals = []
    for i in range(j, j + m):
        a, b = t[i], t[i + 1]
        vals.append(1.0 / math.sin((b - a) / 2) if a <= x < b else 0.0)
    for k in range(2, m + 1):
        nxt = []
        for i in range(j, j + m - k + 1):
            if t[i + k] == t[i]:
                nxt.append(0.0)
                continue
            w0 = math.sin((x - t[i]) / 2)
            w1 = math.sin((t[i + k] - x) / 2)
            nxt.append((w0 * vals[i - j] + w1 * vals[i - j + 1]) / math.sin((t[i + k] - t[i]) / 2))
        vals = nxt
    return vals[0]


def convergence_table(knots, m: int, h_start: float = 0.1, halvings: int = 6,
                      points: int = 400):
    """Max deviation of ``T_{j,m}(.; h)`` from the classical spline as ``h`` halves.

    The maximum runs over all ``j`` with ``x_{j+m} > x_j`` and ``points``
    equally spaced samples of ``[x_0, x_last)``.  Returns ``(hs, errors,
    ratios)`` where ``ratios[k] = errors[k] / errors[k+1]``.
    """
    t = [float(v) for v in knots]
    xs = np.linspace(t[0], t[-1], points, endpoint=False)
    hs, errs = [], []
    for k in range(halvings + 1):
        h = h_start * 0.5 ** k
        kv = KnotVector(h, t)
        err = 0.0
        for j in range(len(t) - m):
            if t[j + m] == t[j]:
                continue
            for x in xs:
                err = max(err, abs(eval_T(kv, j, m, x) - eval_T_classical(t, j, m, x)))
        hs.append(h)
        errs.append(err)
    ratios = [a / b if b else math.inf for a, b in zip(errs, errs[1:])]
    return hs, errs, ratios
