import math

import numpy as np
import pytest

from htrig.errors import ComplexResidue, SingularD, WindowViolation
from htrig.gdd import (NodeSet, as_real, c0m, dd_det_oracle, dd_exp, dd_trig, dd_trig_complex,
                       exp_pair, generic_dd, polynomial_pair, threeterm_coeffs, vandermonde_h,
                       vandermonde_sine_form)
from htrig.hcalc import HParam, cexp_freq, cexp_h, sin_h
from htrig.sampling import random_nodes, smooth_function


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def test_nodeset_validation():
    with pytest.raises(SingularD):
        NodeSet(1.0, (0.0, 1.0, 1.0))
    with pytest.raises(SingularD):
        NodeSet(1.0, (0.0, 2.0, 1.0))
    p = HParam(1.0)
    with pytest.raises(WindowViolation):
        NodeSet(p, (0.0, p.window))
    NodeSet(p, (0.0, 0.99 * p.window))


def test_generic_dd_order_zero_and_one():
    f = lambda x: x ** 3 - 2.0
    assert generic_dd(polynomial_pair(), [1.5], f) == f(1.5)
    gp = exp_pair(0.7)
    x0, x1 = 0.2, 1.1
    want = (gp.gamma2(x1) - gp.gamma2(x0)) / gp.d(x0, x1)
    assert abs(generic_dd(gp, [x0, x1], gp.gamma2) - want) < 1e-15


def test_generic_dd_is_classical_for_polynomial_pair(rng):
    for m in range(1, 6):
        coef = rng.normal(size=m + 1)
        xs = np.sort(rng.uniform(-2, 2, m + 1))
        got = generic_dd(polynomial_pair(), xs, lambda x: np.polyval(coef, x))
        assert got == pytest.approx(coef[0], rel=1e-8)


def test_generic_dd_repeated_nodes():
    with pytest.raises(SingularD):
        generic_dd(polynomial_pair(), [0.0, 1.0, 0.0], lambda x: x)


def test_dd_exp_closed_form_order_one():
    nodes = NodeSet(1.0, (0.0, 1.0))
    # 1/(e^{i ln 2} - 1), mpmath
    want = complex(-0.5, -1.384464886175308211)
    assert abs(dd_exp(nodes, lambda x: x * x) - want) < 1e-15
    assert abs(dd_exp(nodes, lambda x: x * x, "lagrange") - want) < 1e-15


def test_dd_exp_annihilation_and_leading(h, rng):
    for m in range(1, 7):
        nodes = random_nodes(rng, h, m)
        assert abs(dd_exp(nodes, lambda x: 1.0)) < 1e-10
        for k in range(m):
            assert abs(dd_exp(nodes, cexp_freq(h, k))) < 1e-10
        assert abs(dd_exp(nodes, cexp_freq(h, m)) - 1.0) < 1e-9
        assert abs(dd_det_oracle(nodes, cexp_freq(h, m), "exp") - 1.0) < 1e-9


def test_dd_trig_order_one_constant():
    nodes = NodeSet(1.0, (0.0, 1.0))
    assert dd_trig(nodes, lambda x: 1.0) == 0.0
    assert abs(dd_det_oracle(nodes, lambda x: 1.0, "trig")) < 1e-15
    assert dd_trig(NodeSet(1.0, (0.3,)), math.exp) == math.exp(0.3)


def test_dd_trig_methods_agree(h, rng):
    for m in range(0, 7):
        for _ in range(10):
            nodes = random_nodes(rng, h, m)
            f = smooth_function(rng)
            ref = dd_trig(nodes, f)
            assert rel(dd_trig(nodes, f, "via_exp"), ref) < 1e-9
            assert rel(dd_trig(nodes, f, "threeterm"), ref) < 1e-9
            assert rel(dd_det_oracle(nodes, f, "trig"), ref) < 1e-8
            assert rel(dd_det_oracle(nodes, f, "exp"), dd_exp(nodes, f, "lagrange")) < 1e-8
            assert rel(dd_exp(nodes, f), dd_exp(nodes, f, "lagrange")) < 1e-9


def test_dd_trig_complex_is_linear(rng):
    nodes = random_nodes(rng, 0.5, 4)
    f, g = smooth_function(rng), smooth_function(rng)
    z = dd_trig_complex(nodes, lambda x: complex(f(x), g(x)))
    assert abs(z - complex(dd_trig(nodes, f), dd_trig(nodes, g))) < 1e-12 * abs(z)


def test_as_real():
    assert as_real(2.0 + 1e-14j) == 2.0
    with pytest.raises(ComplexResidue):
        as_real(1.0 + 1e-3j)


def test_threeterm_gamma_pinned():
    c = threeterm_coeffs(NodeSet(1.0, (0.0, 1.0, 2.0)))
    # 1/(sin(ln 2) sin(ln 2 / 2)), mpmath
    assert c.gamma == pytest.approx(4.60743439398095989, rel=1e-14)
    # equally spaced nodes: alpha = gamma
    assert c.alpha == pytest.approx(c.gamma, rel=1e-14)


def test_vandermonde():
    assert abs(vandermonde_h(NodeSet(0.5, (0.0, 0.8))) - (cexp_h(0.5, 0.8) - 1.0)) < 1e-15
    nodes = NodeSet(1.0, (0.0, 1.0, 2.0))
    v = vandermonde_h(nodes)
    assert abs(v) == pytest.approx(0.589789624432051763, rel=1e-14)
    assert abs(v - vandermonde_sine_form(nodes)) < 1e-15


def test_c0m_bridge(rng):
    nodes = random_nodes(rng, 0.25, 3)
    xs = nodes.nodes
    assert abs(abs(c0m(nodes.p, xs)) - 8.0) < 1e-14
    # dd_trig with the Lagrange sine form vs bridge through dd_exp
    f = smooth_function(rng)
    assert rel(dd_trig(nodes, f, "via_exp"), sum(
        f(xj) / math.prod(sin_h(nodes.p, (xj - xk) / 2) for xk in xs if xk != xj) for xj in xs)) < 1e-9


def test_oracle_disagreement_tracks_conditioning(rng):
    # near-cancelling data lose relative accuracy in every form alike;
    # against the size of the Lagrange terms the forms agree to roundoff
    from htrig.gdd import trig_scale
    for h in (0.25, 1.0):
        p = HParam(h)
        for i in range(700):
            nodes = random_nodes(rng, p, i % 7)
            f = smooth_function(rng)
            scale = trig_scale(p, nodes.nodes, f)
            ref = dd_trig(nodes, f)
            for other in (dd_trig(nodes, f, "via_exp"), dd_trig(nodes, f, "threeterm"),
                          dd_det_oracle(nodes, f, "trig").real):
                assert abs(other - ref) < 1e-13 * scale
