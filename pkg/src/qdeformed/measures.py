"""Radial atomic measure, orthogonality weight and quadrature on I_q.

The radial measure puts mass

    w_k = (-alpha, q; q)_inf q^k h_k(-alpha/q | q) / (q; q)_k

at radius ``r_k = q^(k/2) / sqrt(1 - q)``; its even moments are
``int r^(2n) d rho = x_n!``.  The weight ``omega`` is the density (in x) of
the orthogonality measure of the basis ``phi_n``.
"""

import csv
import io
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._series import qpoch_inf_array
from .errors import AccuracyLoss, DomainError, NonConvergent, PositivityViolation
from .orthopoly import rogers_szego_sequence, theta_to_x, x_to_theta
from .qcore import DEFAULT_CONTROL, QParams, q_pochhammer_inf


@dataclass(frozen=True)
class DiscreteRadialMeasure:
    """Finitely many atoms ``(radius, weight)`` of the radial measure."""

    params: QParams
    radii: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    tol: float = 1e-15

    @property
    def atoms(self):
        return list(zip(self.radii.tolist(), self.weights.tolist()))

    @property
    def tail_bound(self):
        """Estimated mass of the discarded atoms."""
        return self.tail_estimate(0)

    def tail_estimate(self, n):
        """Estimate of ``sum_{k > N} w_k r_k^(2n)`` from the asymptotic atom ratio."""
        rho = max(self.params.q, abs(self.params.alpha)) * self.params.q**n
        last = self.weights[-1] * self.radii[-1] ** (2 * n)
        return 2.0 * abs(last) * rho / (1.0 - rho)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "radius", "weight"])
        for k, (r, wt) in enumerate(zip(self.radii, self.weights)):
            w.writerow([k, f"{r:.16e}", f"{wt:.16e}"])
        return buf.getvalue()


def radial_measure(p, tol=1e-15, n_max=12):
    """Atoms ``k = 0..N`` with N the first index where the tail of every moment
    of order ``<= n_max`` is estimated below ``tol`` (relative to x_n!).

    Raises
    ------
    PositivityViolation
        If a computed weight is below ``-tol``.
    """
    q, alpha = p.q, p.alpha
    const = (q_pochhammer_inf(-alpha, q) * q_pochhammer_inf(q, q)).real
    rho = max(q, abs(alpha))
    # stop index from  C * rho^N / (1 - rho) < tol  plus slack, refined below
    n_atoms = int(math.ceil(math.log(tol * (1.0 - rho)) / math.log(rho))) + 10
    while True:
        h = rogers_szego_sequence(n_atoms, -alpha / q, q)
        ratio = np.empty(n_atoms + 1)  # q^k / (q;q)_k
        ratio[0] = 1.0
        for k in range(1, n_atoms + 1):
            ratio[k] = ratio[k - 1] * q / (1.0 - q**k)
        weights = const * ratio * h
        radii = q ** (np.arange(n_atoms + 1) / 2.0) / math.sqrt(1.0 - q)
        meas = DiscreteRadialMeasure(p, radii, weights, tol)
        if all(meas.tail_estimate(n) < tol for n in range(n_max + 1)):
            break
        n_atoms *= 2
    if np.any(weights < -tol):
        k = int(np.argmin(weights))
        raise PositivityViolation(f"atom {k} has weight {weights[k]!r} at q={q}, alpha={alpha}")
    return meas


def radial_moment(m, n):
    """``sum_k w_k r_k^(2n)``; should equal ``x_n!``."""
    if m.tail_estimate(n) > m.tol:
        warnings.warn(f"moment {n}: tail estimate {m.tail_estimate(n):.3e} exceeds tol", AccuracyLoss)
    return math.fsum(m.weights * m.radii ** (2 * n))


def g_product(x, gamma, q, ctrl=DEFAULT_CONTROL):
    """``g(x, gamma; q) = prod_k (1 - gamma x sqrt(1-q) q^k + gamma^2 q^(2k))``, literal form."""
    s = complex(gamma) * complex(x) * math.sqrt(1.0 - q)
    g2 = complex(gamma) ** 2
    out = 1.0 + 0j
    qk = 1.0
    small = 0
    for _ in range(ctrl.max_terms):
        out *= 1.0 - s * qk + g2 * qk * qk
        qk *= q
        if (abs(s) * qk + abs(g2) * qk * qk) / (1.0 - q) < ctrl.rel_tol:
            small += 1
            if small >= ctrl.consecutive_small:
                return out
    raise NonConvergent("g_product: max_terms reached")


def _pair_product(cos2, gamma_sq, q, start, ctrl):
    """``prod_{k>=start} [(1 + g2 q^2k)^2 - 4 g2 cos^2(theta) q^2k]`` = ``g(x,g) g(x,-g)`` from ``start``.

    Only ``gamma^2`` enters, so the product is real for real ``gamma^2`` of
    either sign.
    """
    out = np.ones_like(cos2)
    if gamma_sq == 0.0:
        return out
    q2k = q ** (2 * start)
    small = 0
    for _ in range(ctrl.max_terms):
        u = gamma_sq * q2k
        out *= (1.0 + u) ** 2 - 4.0 * u * cos2
        q2k *= q * q
        if 6.0 * abs(gamma_sq) * q2k / (1.0 - q * q) < ctrl.rel_tol:
            small += 1
            if small >= ctrl.consecutive_small:
                return out
    raise NonConvergent("g-pair product: max_terms reached")


def _omega_theta(theta, p, ctrl):
    q, alpha = p.q, p.alpha
    theta = np.asarray(theta, dtype=float)
    cos2 = np.cos(theta) ** 2
    const = (q_pochhammer_inf(q, q, ctrl) * q_pochhammer_inf(-alpha, q, ctrl)).real
    # k = 0 factor of g(x,1)g(x,-1) is 4 sin^2(theta); it cancels the 1/(2 sin theta) of the Jacobian
    num = _pair_product(cos2, 1.0, q, 1, ctrl) * _pair_product(cos2, q, q, 0, ctrl)
    den = _pair_product(cos2, alpha, q, 0, ctrl)
    sin = np.where((theta <= 0.0) | (theta >= math.pi), 0.0, np.sin(theta))
    return const * math.sqrt(1.0 - q) / math.pi * sin * num / den


def weight_omega(x=None, p=None, ctrl=DEFAULT_CONTROL, theta=None):
    """Orthogonality density ``omega_{q,alpha}(x)`` on I_q.

    Pass either ``x`` or ``theta`` (with ``x = 2 cos(theta) / sqrt(1-q)``);
    the angle is preferred near the endpoints.  Returns 0 at the endpoints.
    """
    if p is None:
        raise TypeError("weight_omega needs params")
    if theta is None:
        x = np.asarray(x, dtype=float)
        if np.any(np.abs(x) > p.interval_halfwidth * (1.0 + 1e-14)):
            raise DomainError(f"x outside I_q = (-{p.interval_halfwidth}, {p.interval_halfwidth})")
        theta = x_to_theta(x, p.q)
    else:
        theta = np.asarray(theta, dtype=float)
        if np.any((theta < 0) | (theta > math.pi)):
            raise DomainError("theta must lie in [0, pi]")
    return _omega_theta(theta, p, ctrl)


def weight_omega_qgauss(theta, q, ctrl=DEFAULT_CONTROL):
    """q-Gaussian density ``(q;q)_inf sqrt(1-q)/pi sin(theta) prod_{n>=1} |1 - q^n e^{2i theta}|^2``."""
    theta = np.asarray(theta, dtype=float)
    e2 = np.exp(2j * theta)
    prod = qpoch_inf_array(q * e2, q, ctrl)
    const = q_pochhammer_inf(q, q, ctrl).real
    sin = np.where((theta <= 0.0) | (theta >= math.pi), 0.0, np.sin(theta))
    return const * math.sqrt(1.0 - q) / math.pi * sin * np.abs(prod) ** 2


@dataclass(frozen=True)
class Quadrature:
    """Rule with ``integrate(f) ~ int_{I_q} f(x) omega(x) dx``.

    ``weights`` already contain ``omega(x(theta)) |dx/dtheta|`` times the
    Gauss-Legendre weight in theta.
    """

    params: QParams
    theta: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    order: int

    @property
    def nodes(self):
        return theta_to_x(self.theta, self.params.q)

    def integrate(self, f):
        """Apply the rule to ``f``: a callable of x or an array of node values.

        Arrays may carry leading axes; the last axis runs over the nodes.
        """
        vals = f(self.nodes) if callable(f) else np.asarray(f)
        return vals @ self.weights

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "node", "weight"])
        for k, (x, wt) in enumerate(zip(self.nodes, self.weights)):
            w.writerow([k, f"{x:.16e}", f"{wt:.16e}"])
        return buf.getvalue()


def make_quadrature(p, order=400, ctrl=DEFAULT_CONTROL):
    """Gauss-Legendre in theta on ``[0, pi]`` pushed forward to I_q.

    For alpha close to -1 the weight develops a peak of width ~(1 + alpha)
    at theta = pi/2; order 400 is at rounding level down to alpha ~ -0.9,
    beyond that raise ``order`` (about 800 at -0.95, 1600+ at -0.99).
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    t, w = np.polynomial.legendre.leggauss(order)
    theta = 0.5 * math.pi * (t + 1.0)
    jac = 2.0 * np.sin(theta) / math.sqrt(1.0 - p.q)
    weights = 0.5 * math.pi * w * jac * weight_omega(p=p, theta=theta, ctrl=ctrl)
    return Quadrature(p, theta, weights, order)
