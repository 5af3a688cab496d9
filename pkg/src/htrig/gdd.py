"""Generalized divided differences over ``span{gamma1, gamma2}``.

The generic engine works for any admissible pair; the h-exponential
divided difference is the special case ``gamma1 = 1``,
``gamma2 = e_h^{ix}``.  The h-trigonometric divided difference is offered in
three algebraically equivalent forms (Lagrange, bridge through the
exponential one, three-term recurrence) plus a determinant-ratio oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ComplexResidue, OrderOutOfRange, SingularD, SingularMatrix, WindowViolation
from .hcalc import Evaluator, HParam, Scalar, as_hparam, cexp_h, mult_U, sin_h

WINDOW_EPS = 1e-12
REAL_RTOL = 1e-9
REAL_ATOL = 1e-12
DET_MAX_ORDER = 8


def check_window(p: HParam, span: float, what: str = "node span") -> None:
    if not span < p.window * (1.0 - WINDOW_EPS):
        raise WindowViolation(
            f"{what} {span!r} must be below 2*pi*h/ln(1+h) = {p.window!r} (h={p.h!r})"
        )


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing nodes ``x_0 < ... < x_m`` inside one window."""

    p: HParam
    nodes: tuple

    def __post_init__(self):
        p = as_hparam(self.p)
        xs = tuple(float(x) for x in self.nodes)
        if not xs:
            raise ValueError("need at least one node")
        for a, b in zip(xs, xs[1:]):
            if not b > a:
                raise SingularD(f"nodes must be strictly increasing, got {a!r} then {b!r}")
        check_window(p, xs[-1] - xs[0])
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "nodes", xs)

    @property
    def m(self) -> int:
        return len(self.nodes) - 1

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def sub(self, start: int, stop: int) -> "NodeSet":
        """Nodes ``x_start .. x_{stop-1}``."""
        return NodeSet(self.p, self.nodes[start:stop])


@dataclass(frozen=True)
class GammaPair:
    gamma1: Callable[[float], Scalar]
    gamma2: Callable[[float], Scalar]

    def d(self, x1: float, x2: float) -> Scalar:
        return self.gamma1(x1) * self.gamma2(x2) - self.gamma1(x2) * self.gamma2(x1)


def exp_pair(p: HParam) -> GammaPair:
    p = as_hparam(p)
    return GammaPair(lambda x: 1.0, lambda x: cexp_h(p, x))


def polynomial_pair() -> GammaPair:
    """``gamma1 = 1``, ``gamma2 = x``: classical divided differences."""
    return GammaPair(lambda x: 1.0, lambda x: x)


@dataclass(frozen=True)
class ThreeTermCoeffs:
    alpha: float
    beta: float
    gamma: float


def _xs(nodes) -> tuple:
    return tuple(getattr(nodes, "nodes", nodes))


def generic_dd(gp: GammaPair, nodes, f: Evaluator) -> Scalar:
    """Recursive divided difference ``[x_0, ..., x_m]_{gamma1,gamma2} f``.

    Evaluated as a triangular table, so each sub-difference is computed once.
    """
    xs = _xs(nodes)
    if len(set(xs)) != len(xs):
        raise SingularD("divided differences need distinct nodes")
    row = [f(x) for x in xs]
    m = len(xs) - 1
    for k in range(1, m + 1):
        nxt = []
        for i in range(m - k + 1):
            d = gp.d(xs[i], xs[i + k])
            if d == 0:
                raise SingularD(f"d({xs[i]!r}, {xs[i + k]!r}) vanishes")
            nxt.append((row[i + 1] - row[i]) / d)
        row = nxt
    return row[0]


def _exp_lagrange(p: HParam, xs: Sequence[float], f: Evaluator) -> complex:
    es = [cexp_h(p, x) for x in xs]
    total = 0j
    for j, ej in enumerate(es):
        den = 1.0 + 0j
        for k, ek in enumerate(es):
            if k != j:
                den *= ej - ek
        if den == 0:
            raise SingularD("coincident nodes modulo the window")
        total += f(xs[j]) / den
    return total


def dd_exp(nodes: NodeSet, f: Evaluator, method: str = "recursive") -> complex:
    """h-exponential divided difference ``[x_0, ..., x_m; h]_e f``."""
    p = nodes.p
    if method == "recursive":
        return complex(generic_dd(exp_pair(p), nodes.nodes, f))
    if method == "lagrange":
        return _exp_lagrange(p, nodes.nodes, f)
    raise ValueError(f"unknown method {method!r}")


def c0m(p: HParam, xs: Sequence[float]) -> complex:
    """Bridge constant ``(2i)^m e_h^{(i/2) sum x_k}``."""
    m = len(xs) - 1
    return (2j) ** m * cexp_h(p, 0.5 * math.fsum(xs))


def _trig_terms(p: HParam, xs: Sequence[float], f: Evaluator) -> list:
    out = []
    for j, xj in enumerate(xs):
        den = 1.0
        for k, xk in enumerate(xs):
            if k != j:
                den *= sin_h(p, (xj - xk) / 2.0)
        if den == 0:
            raise SingularD("sin_h factor vanishes (repeated or aliased nodes)")
        out.append(f(xj) / den)
    return out


def trig_scale(p: HParam, xs: Sequence[float], f: Evaluator) -> float:
    """Sum of absolute Lagrange terms: the roundoff scale of ``[..; h]_t f``."""
    return math.fsum(abs(t) for t in _trig_terms(p, xs, f))


def as_real(z: Scalar, scale: float = 1.0, what: str = "value") -> float:
    """Return ``z.real`` after checking the imaginary part is roundoff.

    Accepted when ``|im| <= 1e-9 |re| + 1e-12 max(1, scale)``, where ``scale``
    is the magnitude of the terms that produced ``z``.
    """
    im = getattr(z, "imag", 0.0)
    re = getattr(z, "real", z)
    if abs(im) > REAL_RTOL * abs(re) + REAL_ATOL * max(1.0, scale):
        raise ComplexResidue(f"{what} has imaginary part {im!r} (real part {re!r})")
    return float(re)


def _threeterm_coeffs(p: HParam, xs: Sequence[float]) -> ThreeTermCoeffs:
    m = len(xs) - 1
    if m < 2:
        raise OrderOutOfRange("three-term recurrence needs m >= 2")

    def s(t):
        return sin_h(p, t / 2.0)

    a = s(xs[m] - xs[0])
    b = s(xs[m] - xs[1])
    c = s(xs[m - 1] - xs[0])
    if a == 0 or b == 0 or c == 0:
        raise SingularD("vanishing sine factor in three-term coefficients")
    gamma = 1.0 / (a * b)
    beta = -s(xs[m] + xs[m - 1] - xs[1] - xs[0]) / (a * b * c)
    alpha = 1.0 / (a * c)
    return ThreeTermCoeffs(alpha=alpha, beta=beta, gamma=gamma)


def threeterm_coeffs(nodes: NodeSet) -> ThreeTermCoeffs:
    return _threeterm_coeffs(nodes.p, nodes.nodes)


def _trig_threeterm(p: HParam, xs: Sequence[float], f: Evaluator) -> Scalar:
    fx = [f(x) for x in xs]
    memo = {}

    def dd(a, b):
        # nodes xs[a..b] inclusive
        key = (a, b)
        if key in memo:
            return memo[key]
        if a == b:
            val = fx[a]
        elif b == a + 1:
            den = sin_h(p, (xs[b] - xs[a]) / 2.0)
            if den == 0:
                raise SingularD("sin_h factor vanishes")
            val = (fx[b] - fx[a]) / den
        else:
            c = _threeterm_coeffs(p, xs[a:b + 1])
            val = c.gamma * dd(a + 2, b) + c.beta * dd(a + 1, b - 1) + c.alpha * dd(a, b - 2)
        memo[key] = val
        return val

    return dd(0, len(xs) - 1)


def dd_trig_complex(nodes: NodeSet, f: Evaluator, method: str = "lagrange") -> Scalar:
    """h-trigonometric divided difference without the realness check.

    Linear in ``f``; useful when ``f`` itself is complex valued.
    """
    p, xs = nodes.p, nodes.nodes
    if method == "lagrange":
        return sum(_trig_terms(p, xs, f))
    if method == "via_exp":
        m = len(xs) - 1
        return c0m(p, xs) * dd_exp(nodes, mult_U(m, p, f), "recursive")
    if method == "threeterm":
        return _trig_threeterm(p, xs, f)
    raise ValueError(f"unknown method {method!r}")


def dd_trig(nodes: NodeSet, f: Evaluator, method: str = "lagrange") -> float:
    """h-trigonometric divided difference ``[x_0, ..., x_m; h]_t f`` of a real ``f``.

    Methods: ``"lagrange"`` (sum over sine products), ``"via_exp"`` (constant
    ``c_{0,m}`` times the exponential divided difference of ``U_m f``) and
    ``"threeterm"`` (recurrence on three order ``m-2`` sub-differences).
    Raises :class:`ComplexResidue` if the result is not real to roundoff.
    """
    val = dd_trig_complex(nodes, f, method)
    if isinstance(val, complex):
        scale = trig_scale(nodes.p, nodes.nodes, f)
        return as_real(val, scale, f"[..;h]_t f ({method})")
    return float(val)


def _trig_columns(m: int, numerator: bool) -> list:
    """Frequencies and kinds of the trigonometric collocation columns.

    Returns ``(freq, kind)`` pairs with ``kind`` in ``{"1", "cos", "sin"}``.
    """
    odd = m % 2 == 1
    # numerator of odd m and denominator of even m use integer frequencies
    integer = odd == numerator
    ncols = m if numerator else m + 1
    cols = []
    if integer:
        cols.append((0.0, "1"))
        k = 1
        while len(cols) < ncols:
            cols += [(float(k), "cos"), (float(k), "sin")]
            k += 1
    else:
        k = 0
        while len(cols) < ncols:
            cols += [(k + 0.5, "cos"), (k + 0.5, "sin")]
            k += 1
    assert len(cols) == ncols
    return cols


def _column(p: HParam, freq: float, kind: str, x: float) -> float:
    if kind == "1":
        return 1.0
    a = freq * x * p.omega
    return math.cos(a) if kind == "cos" else math.sin(a)


def _det_ratio(num: np.ndarray, den: np.ndarray) -> complex:
    dn = np.linalg.det(den)
    hadamard = float(np.prod(np.linalg.norm(den, axis=1)))
    if not abs(dn) > 1e-13 * hadamard:
        raise SingularMatrix("collocation determinant is numerically zero")
    return complex(np.linalg.det(num) / dn)


def dd_det_oracle(nodes: NodeSet, f: Evaluator, flavor: str = "exp") -> complex:
    """Determinant-ratio form of the exponential or trigonometric divided difference.

    Determinants come from LU factorization with partial pivoting; this is a
    cross-check, not a production path.
    """
    p, xs = nodes.p, nodes.nodes
    m = len(xs) - 1
    if m > DET_MAX_ORDER:
        raise OrderOutOfRange(f"determinant oracle limited to m <= {DET_MAX_ORDER}")
    fx = [complex(f(x)) for x in xs]
    if flavor == "exp":
        e = np.array([cexp_h(p, x) for x in xs])
        powers = np.vander(e, m + 1, increasing=True)
        num = powers.copy()
        num[:, m] = fx
        return _det_ratio(num, powers)
    if flavor == "trig":
        ncols = _trig_columns(m, numerator=True)
        dcols = _trig_columns(m, numerator=False)
        num = np.array([[_column(p, fr, kd, x) for fr, kd in ncols] + [fx[i]]
                        for i, x in enumerate(xs)], dtype=complex)
        den = np.array([[_column(p, fr, kd, x) for fr, kd in dcols] for x in xs], dtype=complex)
        pref = 2.0 ** (m - 1) if m % 2 == 1 else 2.0 ** m
        return pref * _det_ratio(num, den)
    raise ValueError(f"unknown flavor {flavor!r}")


def vandermonde_product(p: HParam, xs: Sequence[float]) -> complex:
    """``prod_{j<k} (e_h^{ix_k} - e_h^{ix_j})`` for any nodes, repeated ones included."""
    p = as_hparam(p)
    es = [cexp_h(p, x) for x in xs]
    out = 1.0 + 0j
    for k in range(len(es)):
        for j in range(k):
            out *= es[k] - es[j]
    return out


def vandermonde_h(nodes: NodeSet) -> complex:
    return vandermonde_product(nodes.p, nodes.nodes)


def vandermonde_sine_form(nodes: NodeSet) -> complex:
    """Same determinant written with half-angle sines and phases."""
    p, xs = nodes.p, nodes.nodes
    m = len(xs) - 1
    out = (2j) ** (m * (m + 1) // 2)
    for k in range(len(xs)):
        for j in range(k):
            out *= cexp_h(p, (xs[k] + xs[j]) / 2.0) * sin_h(p, (xs[k] - xs[j]) / 2.0)
    return out
