"""Bargmann-type transform onto holomorphic functions on the disk C_q.

    B[f](z) = int_{I_q} T(z, xi) f(xi) omega(xi) dxi,

    T(z, xi) = 1/(z s e^{-i theta}; q)_inf
               * 2phi1(a e^{-i theta}, -a e^{-i theta}; -alpha | q; z s e^{i theta}),

with ``s = sqrt(1 - q)``, ``a = sqrt(alpha)`` (imaginary for alpha < 0) and
``xi = 2 cos(theta) / s``.  ``T(z, .)`` expands as ``sum z^n phi_n / sqrt(x_n!)``.

Angular integrals over circles are done by FFT on a circle well inside the
disk; only the radial direction uses the atomic measure.
"""

import cmath
import math

import numpy as np

from ._series import qpoch_inf_array, sum_series_array
from .errors import DomainError
from .measures import make_quadrature, radial_measure, radial_moment
from .orthopoly import basis_phi
from .qcore import DEFAULT_CONTROL


def kernel_eval(z, theta, p, ctrl=DEFAULT_CONTROL):
    """Transform kernel ``T(z, xi(theta))``; ``z`` and ``theta`` broadcast."""
    z = np.asarray(z, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    s = math.sqrt(1.0 - p.q)
    if np.any(np.abs(z) * s >= 1.0):
        raise DomainError("kernel_eval needs |z| sqrt(1-q) < 1")
    q, alpha = p.q, p.alpha
    a = cmath.sqrt(alpha)
    em = np.exp(-1j * theta)
    z, em = np.broadcast_arrays(z, em)
    y = z * s / em
    ae = a * em

    def ratio(k):
        qk = q**k
        return (1.0 - ae * qk) * (1.0 + ae * qk) / ((1.0 + alpha * qk) * (1.0 - q * qk)) * y

    series = sum_series_array(ratio, z.shape, ctrl, what="kernel 2phi1")
    out = series / qpoch_inf_array(z * s * em, q, ctrl)
    return out if out.ndim else complex(out)


def alpha0_kernel(z, theta, q, ctrl=DEFAULT_CONTROL):
    """``1 / (z s e^{-i theta}, z s e^{i theta}; q)_inf``, the kernel at alpha = 0."""
    z = np.asarray(z, dtype=complex)
    e = np.exp(1j * np.asarray(theta, dtype=float))
    z, e = np.broadcast_arrays(z, e)
    t = z * math.sqrt(1.0 - q)
    out = 1.0 / (qpoch_inf_array(t / e, q, ctrl) * qpoch_inf_array(t * e, q, ctrl))
    return out if out.ndim else complex(out)


def _fft_points(n_max, decay, alias_tol=1e-14):
    # coefficients fall like decay^n on the sampling circle; alias from n + M must be below alias_tol
    need = max(2 * (n_max + 1), math.log(alias_tol) / math.log(decay))
    return 1 << max(4, math.ceil(math.log2(need)))


def taylor_coefficients(samples_fn, radius, n_max, decay=0.5):
    """Taylor coefficients ``a_0..a_{n_max}`` of a function holomorphic on ``|z| < radius / decay``.

    ``samples_fn`` maps an array of points on the circle ``|z| = radius``
    to function values (extra trailing axes allowed after the first).
    """
    m = _fft_points(n_max, decay)
    phis = 2.0 * math.pi * np.arange(m) / m
    vals = np.asarray(samples_fn(radius * np.exp(1j * phis)))
    coef = np.fft.fft(vals, axis=0) / m
    scale = radius ** -np.arange(n_max + 1, dtype=float)
    return coef[: n_max + 1] * scale.reshape((-1,) + (1,) * (coef.ndim - 1))


def _node_values(f, p, quad):
    if callable(f):
        return np.asarray(f(quad.nodes), dtype=complex)
    coeffs = np.asarray(f, dtype=complex)
    phi = basis_phi(len(coeffs) - 1, quad.nodes, p)
    return coeffs @ phi


def transform(f, z, p, quad, ctrl=DEFAULT_CONTROL):
    """``B[f](z)`` by quadrature.

    ``f`` is either a callable of x or a Fock vector (coefficients on phi_n).
    ``z`` may be an array; the result has its shape.
    """
    vals = _node_values(f, p, quad) * quad.weights
    z = np.asarray(z, dtype=complex)
    kern = kernel_eval(z.reshape(-1, 1), quad.theta.reshape(1, -1), p, ctrl)
    out = kern @ vals
    return out.reshape(z.shape) if z.ndim else complex(out[0])


def transform_coefficients(f, p, quad, n_max, ctrl=DEFAULT_CONTROL):
    """Taylor coefficients of ``B[f]``; for ``f = phi_m`` they are ``delta_{nm} / sqrt(x_m!)``."""
    radius = 0.5 * p.disk_radius
    return taylor_coefficients(lambda zs: transform(f, zs, p, quad, ctrl), radius, n_max)


def _fock(n):
    v = np.zeros(n + 1)
    v[n] = 1.0
    return v


def isometry_check(m, n, p, meas=None, quad=None, ctrl=DEFAULT_CONTROL):
    """``<B[phi_m], B[phi_n]>`` in ``L^2(C_q, nu)``; should equal ``delta_{mn}``.

    Angular integration is exact through the Taylor coefficients, the radial
    part uses the atoms: ``sum_j a_j conj(b_j) int r^(2j) d rho``.
    """
    if meas is None:
        meas = radial_measure(p, n_max=max(m, n, 12))
    if quad is None:
        quad = make_quadrature(p, 400)
    top = max(m, n) + 4
    a = transform_coefficients(_fock(m), p, quad, top, ctrl)
    b = a if m == n else transform_coefficients(_fock(n), p, quad, top, ctrl)
    moments = np.array([radial_moment(meas, j) for j in range(top + 1)])
    return complex(np.sum(a * np.conj(b) * moments))


def isometry_matrix(n_max, p, meas=None, quad=None, ctrl=DEFAULT_CONTROL):
    """Matrix of :func:`isometry_check` over ``0..n_max`` (one coefficient pass per index)."""
    if meas is None:
        meas = radial_measure(p, n_max=max(n_max + 4, 12))
    if quad is None:
        quad = make_quadrature(p, 400)
    top = n_max + 4

    def sample(zs):
        kern = kernel_eval(zs.reshape(-1, 1), quad.theta.reshape(1, -1), p, ctrl)
        phi = basis_phi(n_max, quad.nodes, p)
        return kern @ (phi * quad.weights).T

    coef = taylor_coefficients(sample, 0.5 * p.disk_radius, top)  # (top+1, n_max+1)
    moments = np.array([radial_moment(meas, j) for j in range(top + 1)])
    return (coef * moments[:, None]).T @ np.conj(coef)


def asc_integral_representation(n, theta, p, meas=None, ctrl=DEFAULT_CONTROL):
    """``int conj((z sqrt(1-q))^n) T(z, xi) nu(d^2 z)`` at ``xi = 2 cos(theta)/sqrt(1-q)``.

    Equals ``Q_n(xi sqrt(1-q)/2; sqrt(alpha), -sqrt(alpha) | q)``.  The
    angular integral picks the n-th Taylor coefficient of ``T(., xi)``,
    which is taken by FFT on the circle of half the disk radius.
    """
    if meas is None:
        meas = radial_measure(p, n_max=max(n, 12))
    coef = taylor_coefficients(lambda zs: kernel_eval(zs, theta, p, ctrl), 0.5 * p.disk_radius, n)
    val = (1.0 - p.q) ** (n / 2.0) * coef[n] * radial_moment(meas, n)
    return complex(val).real
