import math
import warnings

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeformed import (
    AccuracyLoss,
    DomainError,
    NonConvergent,
    PoleError,
    QParams,
    SeriesControl,
    basic_hypergeometric,
    q_bracket,
    q_exp,
    q_exp_product,
    q_factorial,
    q_pochhammer,
    q_pochhammer_inf,
    x_factorial,
    x_seq,
)

mp.mp.dps = 30
qs = st.floats(0.05, 0.95)


def test_params_validation():
    QParams(0.5, 0.0)
    QParams(0.5, -0.99)
    for q, a in [(0.0, 0.0), (1.0, 0.0), (0.5, 0.5), (0.5, -1.0), (0.3, 0.3)]:
        with pytest.raises(DomainError):
            QParams(q, a)
    p = QParams(0.5, 0.1)
    assert p.disk_radius == pytest.approx(math.sqrt(2))
    assert p.interval_halfwidth == pytest.approx(2 * math.sqrt(2))


def test_frozen_values():
    assert q_bracket(3, 0.5) == pytest.approx(1.75, abs=1e-15)
    assert q_bracket(0, 0.5) == 0.0
    assert q_pochhammer(-0.25, 0.5, 2).real == pytest.approx(1.40625, abs=1e-15)
    assert q_pochhammer(0.3, 0.5, 0) == 1
    p = QParams(0.5, 0.25)
    assert x_seq(3, p) == pytest.approx(1.859375, abs=1e-15)
    assert x_seq(0, p) == 0.0
    assert x_factorial(2, p) == pytest.approx(2.109375, abs=1e-15)
    assert x_factorial(0, p) == 1.0


@given(st.integers(0, 40), qs)
def test_bracket_matches_geometric_sum(n, q):
    assert q_bracket(n, q) == pytest.approx(math.fsum(q**k for k in range(n)), rel=1e-13)


def test_bracket_near_one():
    # 1 - q^n loses digits as q -> 1; the sum does not
    q = 1 - 1e-10
    assert q_bracket(5, q) == pytest.approx(float(sum(mp.mpf(q) ** k for k in range(5))), rel=1e-14)


@given(st.integers(0, 25), qs)
def test_factorial_product(n, q):
    assert q_factorial(n, q) == pytest.approx(math.prod(q_bracket(k, q) for k in range(1, n + 1)), rel=1e-12)


@given(st.floats(-0.9, 0.9), st.floats(-0.9, 0.9), qs)
def test_pochhammer_inf_oracle(re, im, q):
    a = complex(re, im)
    ref = complex(mp.qp(mp.mpc(a), q))
    assert abs(q_pochhammer_inf(a, q) - ref) <= 1e-12 * max(1.0, abs(ref))


@given(st.floats(-2, 2), st.integers(0, 30), qs)
def test_pochhammer_finite_oracle(a, n, q):
    ref = float(mp.qp(a, q, n))
    assert q_pochhammer(a, q, n).real == pytest.approx(ref, rel=1e-11, abs=1e-14)


def test_pochhammer_factorization():
    a, q = 0.37 - 0.2j, 0.6
    assert abs(q_pochhammer_inf(a, q) - q_pochhammer(a, q, 7) * q_pochhammer_inf(a * q**7, q)) < 1e-14


@settings(max_examples=60)
@given(st.floats(0, 0.95), st.floats(0, 2 * math.pi), st.floats(0.05, 0.8))
def test_qexp_duality(rho, phase, q):
    xi = rho / (1 - q) * complex(math.cos(phase), math.sin(phase))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyLoss)
        s = q_exp(xi, q)
    pr = q_exp_product(xi, q)
    assert abs(s - pr) <= 1e-12 * abs(pr)


def test_qexp_product_oracle_near_one():
    q = 0.95
    xi = 0.9 / (1 - q) * complex(math.cos(2.0), math.sin(2.0))
    ref = complex(1 / mp.qp(mp.mpc(xi) * (1 - q), q))
    assert abs(q_exp_product(xi, q) - ref) <= 1e-12 * abs(ref)


def test_qexp_warns_on_cancellation():
    q = 0.95
    with pytest.warns(AccuracyLoss):
        q_exp(-0.9 / (1 - q), q)
    with warnings.catch_warnings():
        warnings.simplefilter("error", AccuracyLoss)
        q_exp(0.9 / (1 - q), q)


def test_qexp_domain():
    with pytest.raises(DomainError):
        q_exp(2.0, 0.5)


def test_qexp_to_exp():
    assert q_exp(0.7, 1 - 1e-6).real == pytest.approx(math.exp(0.7), rel=1e-5)


@pytest.mark.parametrize(
    "a,b,xi",
    [
        ([0.3, -0.2], [0.5], 0.4),
        ([0.0, 0.0], [-0.25], 0.8),
        ([0.1 + 0.2j, 0.4], [0.7, -0.3], 0.35 - 0.1j),
        ([0.2], [], 0.9),
        ([0.2, 0.3, 0.4], [0.5, 0.6], 0.6j),
    ],
)
def test_basic_hypergeometric_oracle(a, b, xi):
    q = 0.55
    ref = complex(mp.qhyper([mp.mpc(x) for x in a], [mp.mpc(x) for x in b], q, mp.mpc(xi)))
    assert abs(basic_hypergeometric(a, b, q, xi) - ref) <= 1e-12 * max(1, abs(ref))


def test_basic_hypergeometric_terminating():
    q, n = 0.5, 4
    a = [q**-n, 0.3, 0.7]
    # terminating series converge for any argument; reference is the finite sum
    big = sum(
        mp.qp(a[0], q, k) * mp.qp(a[1], q, k) * mp.qp(a[2], q, k) / (mp.qp(0.2, q, k) * mp.qp(0.9, q, k) * mp.qp(q, q, k)) * 50**k
        for k in range(n + 1)
    )
    big = float(big)
    assert abs(basic_hypergeometric(a, [0.2, 0.9], q, 50) - big) <= 1e-10 * abs(big)


def test_basic_hypergeometric_errors():
    with pytest.raises(PoleError):
        basic_hypergeometric([0.1], [4.0], 0.5, 0.3)
    with pytest.raises(NonConvergent):
        basic_hypergeometric([0.1, 0.2], [0.3], 0.999, 0.9999, SeriesControl(max_terms=50))


@given(st.integers(1, 30), qs, st.floats(-0.99, 0.05))
def test_x_seq_positive_increasing_factorial(n, q, a):
    p = QParams(q, min(a, q / 2))
    assert x_seq(n, p) > 0
    assert x_factorial(n, p) == pytest.approx(x_factorial(n - 1, p) * x_seq(n, p), rel=1e-13)


def test_x_seq_alpha_zero_is_bracket():
    p = QParams(0.7)
    assert all(x_seq(n, p) == pytest.approx(q_bracket(n, 0.7), rel=1e-15) for n in range(20))


def test_x_factorial_pochhammer_form(params):
    for n in range(12):
        ref = q_pochhammer(-params.alpha, params.q, n).real * q_factorial(n, params.q)
        assert x_factorial(n, params) == pytest.approx(ref, rel=1e-13)
