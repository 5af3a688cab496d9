import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htrig.errors import GridMisalignment, InvalidH
from htrig.hcalc import (HParam, cexp_freq, cexp_h, cos_h, exp_h, grid_steps, hderiv,
                         hintegral, hpow_eval, mult_U, sin_h, trig_h, trunc_power)

admissible_h = st.floats(-0.95, 4.0).filter(lambda v: abs(v) > 1e-3)


@pytest.mark.parametrize("bad", [0.0, -1.0, -2.0, float("nan"), float("inf")])
def test_invalid_h(bad):
    with pytest.raises(InvalidH):
        HParam(bad)


def test_omega_and_window():
    p = HParam(1.0)
    assert p.omega == pytest.approx(math.log(2.0), rel=1e-15)
    assert p.window == pytest.approx(2 * math.pi / math.log(2.0), rel=1e-15)
    # negative h: omega = ln(1+h)/h stays positive
    assert HParam(-0.5).omega == pytest.approx(2 * math.log(2.0), rel=1e-15)


def test_exp_h_pinned():
    assert exp_h(1.0, 1.0) == 2.0
    assert exp_h(1.0, 3.0) == 8.0
    assert exp_h(0.5, 0.0) == 1.0
    assert exp_h(1.0, 0.5) == pytest.approx(math.sqrt(2.0), rel=1e-15)


def test_cexp_h_values():
    assert cexp_h(1.0, 0.0) == 1 + 0j
    z = cexp_h(1.0, math.pi / math.log(2.0))
    assert abs(z - (-1.0)) < 1e-15
    # mpmath, 30 digits
    assert abs(cexp_h(0.25, 2.0) - complex(-0.212714384651753396, 0.977114420404399670)) < 1e-15


def test_sin_h_zero():
    assert abs(sin_h(1.0, math.pi / math.log(2.0))) < 1e-14
    assert trig_h(1.0, 0.0) == (1.0, 0.0)
    c, s = trig_h(1.0, math.pi / math.log(2.0))
    assert abs(c + 1.0) < 1e-15 and abs(s) < 1e-14


def test_trig_pair_unit():
    c, s = trig_h(2.0, 0.7)
    assert abs(c * c + s * s - 1.0) < 1e-15
    assert cos_h(2.0, 0.7) == c and sin_h(2.0, 0.7) == s


@settings(max_examples=200, deadline=None)
@given(admissible_h, st.floats(-20, 20), st.floats(-20, 20))
def test_addition_theorems(h, x, y):
    assert abs(sin_h(h, x + y) - (sin_h(h, x) * cos_h(h, y) + cos_h(h, x) * sin_h(h, y))) < 1e-12
    assert abs(cos_h(h, x + y) - (cos_h(h, x) * cos_h(h, y) - sin_h(h, x) * sin_h(h, y))) < 1e-12
    assert abs(cexp_h(h, x + y) - cexp_h(h, x) * cexp_h(h, y)) < 1e-12


def test_hpow():
    assert hpow_eval(lambda x: 2.0, 3, 0.7, 1.3) == 8.0
    assert hpow_eval(lambda x: x, 2, 1.0, 5.0) == 20.0
    assert hpow_eval(lambda x: x, 0, 1.0, 5.0) == 1.0


def test_hderiv_exp_h_is_fixed():
    assert hderiv(lambda x: exp_h(1.0, x), 1.0, 2.0) == 4.0
    assert hderiv(lambda x: 3.0, 0.3, 1.1) == 0.0


@pytest.mark.parametrize("c", [0.5, 1.0, -2.0])
def test_hderiv_cexp_chain_rule_fails(h, c):
    x = 0.8
    got = hderiv(cexp_freq(h, c), h, x)
    want = (cexp_h(h, c * h) - 1.0) / h * cexp_h(h, c * x)
    assert abs(got - want) < 1e-13


def test_hintegral_basics(h):
    assert hintegral(lambda t: 1.0, 0.0, 3 * h, h) == pytest.approx(3 * h, rel=1e-14)
    assert hintegral(lambda t: 1.0, 0.7, 0.7, h) == 0.0
    g = lambda t: math.sin(t) + t * t
    a, b = 0.3, 0.3 + 7 * h
    ftc = hintegral(lambda t: hderiv(g, h, t), a, b, h)
    assert ftc == pytest.approx(g(b) - g(a), rel=1e-12)
    # reversed limits flip the sign
    assert hintegral(g, b, a, h) == pytest.approx(-hintegral(g, a, b, h), rel=1e-13)


def test_hintegral_off_grid():
    with pytest.raises(GridMisalignment):
        hintegral(lambda t: 1.0, 0.0, 0.55, 0.25)
    assert grid_steps(0.0, 0.75, 0.25) == 3
    assert grid_steps(0.0, -0.75, 0.25) == -3


def test_trunc_power():
    assert trunc_power(0.4, 3, 1.0, 1.0, "sin") == 0.0
    assert trunc_power(0.4, 3, 1.0, 0.5, "exp") == 0.0
    assert trunc_power(0.4, 1, 1.0, 2.0, "sin") == 1.0
    # sin(ln(2)/2), mpmath
    assert trunc_power(1.0, 2, 0.0, 1.0, "sin") == pytest.approx(0.339677125102668544, rel=1e-14)
    p = HParam(0.3)
    x, y = 0.2, 1.4
    want = (cexp_h(p, y) - cexp_h(p, x)) * (cexp_h(p, y) - cexp_h(p, x - 0.3))
    assert abs(trunc_power(p, 3, x, y, "exp") - want) < 1e-15


def test_mult_U(rng):
    f = lambda t: complex(math.cos(3 * t), t)
    assert mult_U(1, 0.5, f) is f
    g = mult_U(3, 0.5, lambda t: 1.0)
    for x in rng.uniform(-5, 5, 20):
        assert abs(g(x) - cexp_h(0.5, x)) < 1e-15
        back = mult_U(4, 0.5, mult_U(4, 0.5, f), tilde=True)
        assert abs(back(x) - f(x)) < 1e-14
