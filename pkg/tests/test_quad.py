import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cflp import NoConvergence, cflp, conformable_quad, gauss_legendre, inner_product, sclp
from cflp.quad import legendre_and_derivative, legendre_roots

F = Fraction


def test_one_point_rule_is_midpoint():
    rule = gauss_legendre(1)
    assert rule.nodes == (0.5,)
    assert rule.weights[0] == pytest.approx(1.0, abs=1e-15)


def test_two_point_rule():
    rule = gauss_legendre(2)
    s = math.sqrt(3)
    assert rule.nodes == pytest.approx(((3 - s) / 6, (3 + s) / 6), abs=1e-15)
    assert rule.weights == pytest.approx((0.5, 0.5), abs=1e-15)
    assert rule.integrate(lambda u: u**3) == pytest.approx(0.25, abs=1e-16)


@pytest.mark.parametrize("order", [3, 7, 16, 33, 64, 128, 256])
def test_matches_numpy_leggauss(order):
    z, w = np.polynomial.legendre.leggauss(order)
    rule = gauss_legendre(order)
    assert np.allclose(rule.nodes, (z + 1) / 2, rtol=0, atol=1e-14)
    assert np.allclose(rule.weights, w / 2, rtol=0, atol=1e-14)


@given(st.integers(1, 40), st.data())
def test_polynomial_exactness(order, data):
    deg = data.draw(st.integers(0, 2 * order - 1))
    rule = gauss_legendre(order)
    assert rule.integrate(lambda u: (deg + 1) * u**deg) == pytest.approx(1.0, abs=1e-13)


@given(st.integers(1, 100))
def test_weights_positive_and_sum_to_one(order):
    rule = gauss_legendre(order)
    assert all(w > 0 for w in rule.weights)
    assert math.fsum(rule.weights) == pytest.approx(1.0, abs=1e-14)
    assert list(rule.nodes) == sorted(rule.nodes)


def test_order_bounds():
    with pytest.raises(ValueError):
        gauss_legendre(0)
    with pytest.raises(ValueError):
        gauss_legendre(257)
    with pytest.raises(ValueError):
        legendre_roots(0)


def test_newton_budget_exhausted():
    # a tolerance below the float spacing can never be met
    with pytest.raises(NoConvergence):
        legendre_roots(5, tol=1e-300)


@given(st.integers(1, 30), st.floats(-0.99, 0.99))
def test_legendre_value_and_derivative(k, z):
    c = [0] * k + [1]
    p, dp = legendre_and_derivative(k, z)
    assert p == pytest.approx(np.polynomial.legendre.legval(z, c), abs=1e-12)
    ref = np.polynomial.legendre.legval(z, np.polynomial.legendre.legder(c))
    assert dp == pytest.approx(ref, rel=1e-10, abs=1e-9)


def test_integrate_on_subinterval():
    assert gauss_legendre(8).integrate(math.exp, 1.0, 2.0) == pytest.approx(math.e**2 - math.e, rel=1e-14)


def test_conformable_quad_examples():
    assert conformable_quad(lambda t: 1.0, 0, 1, F(1, 2)) == pytest.approx(2.0, abs=1e-12)
    assert conformable_quad(lambda t: sclp(1, 1)(t) ** 2, 0, 1, 1) == pytest.approx(1 / 3, abs=1e-12)


@pytest.mark.parametrize("a", [F(1), F(1, 2), F(1, 3), F(2, 3)])
def test_conformable_quad_against_exact(a):
    p, q = cflp(1, a), cflp(2, a)
    exact = inner_product(p, q, a, "[0,1]")
    assert conformable_quad(lambda t: p(t) * q(t), 0, 1, a) == pytest.approx(float(exact), abs=1e-12)


def test_conformable_quad_interval_checked():
    with pytest.raises(ValueError):
        conformable_quad(lambda t: 1.0, 1, 0, 1)
