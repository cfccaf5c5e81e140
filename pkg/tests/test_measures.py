import math
import warnings

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeformed import AccuracyLoss, DomainError, QParams, basis_phi, make_quadrature, radial_measure, radial_moment, weight_omega, weight_omega_qgauss, x_factorial
from qdeformed.measures import g_product
from qdeformed.orthopoly import rogers_szego

mp.mp.dps = 30


def mp_weight(theta, q, alpha):
    """Al-Salam-Chihara density for b = -a in the variable x = 2 cos(theta)/sqrt(1-q)."""
    q, alpha, theta = mp.mpf(q), mp.mpf(alpha), mp.mpf(theta)
    e2 = mp.expj(2 * theta)
    num = abs(mp.qp(e2, q)) ** 2
    den = abs(mp.qp(alpha * e2, q * q)) ** 2
    w_xi = mp.qp(q, q) * mp.qp(-alpha, q) / (2 * mp.pi * mp.sin(theta)) * num / den
    return float(w_xi * mp.sqrt(1 - q) / 2)


def test_moment_identity(params):
    m = radial_measure(params)
    for n in range(13):
        assert radial_moment(m, n) == pytest.approx(x_factorial(n, params), rel=1e-12)
    assert np.all(m.weights > 0)
    assert math.fsum(m.weights) == pytest.approx(1.0, abs=1e-12)


def test_atoms_layout(params):
    m = radial_measure(params)
    k = np.arange(len(m.radii))
    assert np.allclose(m.radii, params.q ** (k / 2) / math.sqrt(1 - params.q))
    assert m.radii[0] == pytest.approx(params.disk_radius)
    for j in (0, 3, 7):
        h = rogers_szego(j, -params.alpha / params.q, params.q)
        ref = float(mp.qp(-params.alpha, params.q) * mp.qp(params.q, params.q) / mp.qp(params.q, params.q, j)) * params.q**j * h
        assert m.weights[j] == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_arik_coon_atoms(q):
    m = radial_measure(QParams(q))
    for j in range(len(m.weights)):
        ref = float(mp.qp(q, q) * mp.mpf(q) ** j / mp.qp(q, q, j))
        assert m.weights[j] == pytest.approx(ref, rel=1e-12)


def test_tail_control():
    p = QParams(0.8, -0.5)
    coarse = radial_measure(p, tol=1e-6)
    fine = radial_measure(p, tol=1e-15)
    assert len(coarse.weights) < len(fine.weights)
    assert all(fine.tail_estimate(n) < 1e-15 * x_factorial(n, p) for n in range(13))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyLoss)
        assert radial_moment(coarse, 12) == pytest.approx(x_factorial(12, p), rel=1e-5)


def test_atoms_csv():
    m = radial_measure(QParams(0.5, 0.25))
    lines = m.to_csv().splitlines()
    assert lines[0] == "index,radius,weight"
    assert len(lines) == len(m.weights) + 1
    assert lines[1].split(",")[1] == f"{m.radii[0]:.16e}"


@pytest.mark.parametrize("q,alpha", [(0.3, -0.5), (0.5, 0.25), (0.8, 0.0), (0.8, 0.7), (0.5, -0.9)])
def test_weight_oracle(q, alpha):
    p = QParams(q, alpha)
    for th in (0.1, 0.9, math.pi / 2, 2.3, 3.0):
        assert float(weight_omega(p=p, theta=th)) == pytest.approx(mp_weight(th, q, alpha), rel=1e-12)


def test_weight_x_and_theta_agree(params):
    x = np.linspace(-0.99, 0.99, 11) * params.interval_halfwidth
    from qdeformed import x_to_theta

    assert np.allclose(weight_omega(x, params), weight_omega(p=params, theta=x_to_theta(x, params.q)), rtol=1e-13)


def test_weight_endpoints_and_domain():
    p = QParams(0.5, 0.25)
    assert float(weight_omega(p.interval_halfwidth, p)) == 0.0
    assert float(weight_omega(-p.interval_halfwidth, p)) == 0.0
    with pytest.raises(DomainError):
        weight_omega(p.interval_halfwidth * 1.01, p)
    with pytest.raises(DomainError):
        weight_omega(p=p, theta=-0.1)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_alpha_zero_is_q_gaussian(q):
    th = np.linspace(0, math.pi, 41)
    assert np.max(np.abs(weight_omega(p=QParams(q), theta=th) - weight_omega_qgauss(th, q))) < 1e-13


def test_g_product_literal():
    q, gamma, x = 0.5, 0.4, 0.7
    s = gamma * x * math.sqrt(1 - q)
    ref = mp.nprod(lambda k: 1 - s * mp.mpf(q) ** k + gamma**2 * mp.mpf(q) ** (2 * k), [0, mp.inf])
    assert complex(g_product(x, gamma, q)).real == pytest.approx(float(ref), rel=1e-13)


def test_quadrature_normalized_and_positive(params):
    quad = make_quadrature(params, 400)
    assert np.all(quad.weights > 0)
    assert quad.integrate(lambda x: np.ones_like(x)) == pytest.approx(1.0, abs=1e-13)
    assert np.all(np.abs(quad.nodes) < params.interval_halfwidth)
    assert quad.integrate(lambda x: x) == pytest.approx(0.0, abs=1e-14)


def test_orthonormality(params):
    quad = make_quadrature(params, 400)
    phi = basis_phi(10, quad.nodes, params)
    g = quad.integrate(phi[:, None, :] * phi[None, :, :])
    assert np.max(np.abs(g - np.eye(11))) < 1e-7
    assert np.max(np.abs(g - np.eye(11))) < 1e-12


def test_quadrature_order_stability():
    p = QParams(0.8, -0.5)
    f = lambda x: np.cos(x) ** 2 * np.exp(0.3 * x)
    assert make_quadrature(p, 400).integrate(f) == pytest.approx(make_quadrature(p, 800).integrate(f), rel=1e-13)
    with pytest.raises(ValueError):
        make_quadrature(p, 1)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 0.9), st.floats(-0.85, 0.9))
def test_quadrature_second_moment(q, a):
    # int x^2 omega = x_1 (the first recurrence coefficient)
    p = QParams(q, min(a, 0.9 * q))
    quad = make_quadrature(p, 400)
    assert quad.integrate(lambda x: x**2) == pytest.approx(x_factorial(1, p), rel=1e-11)


def test_quadrature_needs_more_nodes_near_alpha_minus_one():
    # the weight peaks at theta = pi/2 with width ~ (1 + alpha)
    p = QParams(0.5, -0.95)
    err = lambda order: abs(make_quadrature(p, order).integrate(lambda x: x**2) - x_factorial(1, p))
    assert err(400) > 1e-9
    assert err(800) < 1e-12


def test_quadrature_csv():
    quad = make_quadrature(QParams(0.5), 8)
    lines = quad.to_csv().splitlines()
    assert lines[0] == "index,node,weight" and len(lines) == 9


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(0.0, 1.0))
def test_rogers_szego_weights_positive(q, frac):
    # alpha in (0, q): h_k(-alpha/q | q) enters every atom weight
    alpha = frac * q * 0.999
    m = radial_measure(QParams(q, alpha), tol=1e-12, n_max=6)
    assert np.all(m.weights > 0)
