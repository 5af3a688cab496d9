"""Seeded random instances: node sets, knot vectors and smooth test functions.

All generators draw from a :class:`numpy.random.Generator` (PCG64), so a seed
reproduces the same instances on every platform.
"""
from __future__ import annotations

import math

import numpy as np

from .bsplines import KnotVector
from .gdd import NodeSet
from .hcalc import HParam, as_hparam

MIN_GAP = 0.25


def _gaps(rng, n):
    # gap ratios bounded away from zero keep the nodes well separated
    return rng.uniform(MIN_GAP, 1.0, n)


def random_nodes(rng: np.random.Generator, p: HParam, m: int,
                 span=(0.2, 0.9), offset: float = 3.0) -> NodeSet:
    """``m + 1`` nodes spanning a random fraction of the window."""
    p = as_hparam(p)
    x0 = rng.uniform(-offset, offset)
    if m == 0:
        return NodeSet(p, (x0,))
    g = _gaps(rng, m)
    total = rng.uniform(*span) * p.window
    xs = x0 + np.concatenate([[0.0], np.cumsum(g)]) * (total / g.sum())
    return NodeSet(p, tuple(xs))


def random_knots(rng: np.random.Generator, p: HParam, n: int, m: int,
                 span=(0.3, 0.9), offset: float = 3.0) -> KnotVector:
    """``n`` distinct knots whose every ``m``-span stays inside the window."""
    p = as_hparam(p)
    g = _gaps(rng, n - 1)
    widest = max(g[i:i + m].sum() for i in range(max(n - m, 1)))
    g = g * (rng.uniform(*span) * p.window / widest)
    x0 = rng.uniform(-offset, offset)
    return KnotVector(p, tuple(x0 + np.concatenate([[0.0], np.cumsum(g)])))


def random_grid_nodes(rng: np.random.Generator, p: HParam, m: int,
                      max_step: int = 3, offset: float = 3.0) -> NodeSet:
    """Nodes with ``(x_j - x_0)/|h|`` positive integers, inside the window."""
    p = as_hparam(p)
    step = abs(p.h)
    limit = int(0.9 * p.window / step)
    if limit < m:
        raise ValueError(f"window holds only {limit} grid steps; cannot place {m + 1} nodes")
    steps = rng.integers(1, max_step + 1, m)
    while steps.sum() > limit:
        steps[np.argmax(steps)] -= 1
    x0 = rng.uniform(-offset, offset)
    return NodeSet(p, tuple(x0 + step * np.concatenate([[0], np.cumsum(steps)])))


def random_grid_knots(rng: np.random.Generator, p: HParam, n: int, m: int,
                      max_step: int = 3, offset: float = 3.0) -> KnotVector:
    """Distinct knots on ``x_0 + |h| Z`` with every ``m``-span inside the window."""
    p = as_hparam(p)
    step = abs(p.h)
    limit = int(0.9 * p.window / step)
    if limit < m:
        raise ValueError(f"window holds only {limit} grid steps; need {m}")
    steps = rng.integers(1, max_step + 1, n - 1)
    for i in range(max(n - m, 1)):
        while steps[i:i + m].sum() > limit:
            k = i + int(np.argmax(steps[i:i + m]))
            steps[k] -= 1
    x0 = rng.uniform(-offset, offset)
    return KnotVector(p, tuple(x0 + step * np.concatenate([[0], np.cumsum(steps)])))


def smooth_function(rng: np.random.Generator, complex_valued: bool = False):
    """A random smooth evaluator of moderate size on ``|x| <= 20``."""
    c = rng.normal(size=5)
    a, b = rng.uniform(0.3, 1.7, 2)

    def real_part(x, c=c, a=a, b=b):
        return c[0] + c[1] * math.sin(a * x) + c[2] * math.cos(b * x) + 0.05 * c[3] * x * x \
            + 0.3 * c[4] * math.exp(math.sin(x))

    if not complex_valued:
        return real_part
    d = rng.normal(size=5)
    e, g = rng.uniform(0.3, 1.7, 2)

    def f(x):
        return complex(real_part(x), real_part(x, d, e, g))

    return f
