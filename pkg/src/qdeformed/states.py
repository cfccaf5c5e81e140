"""Generalized q-coherent states.

A state labelled by ``z`` in the disk ``|z|^2 (1 - q) < 1`` is

    theta_z = N(|z|^2)^(-1/2) sum_n conj(z)^n / sqrt(x_n!) phi_n,

with ``N(r^2) = 2phi1(0, 0; -alpha | q; r^2 (1 - q))``.  Fock vectors are
plain complex arrays indexed by ``n = 0..n_max``; inner products are
antilinear in the first slot.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._series import qpoch_inf_array, sum_series, sum_series_array
from .errors import AccuracyLoss, DomainError, TruncationWarning
from .measures import radial_measure, radial_moment
from .orthopoly import basis_phi
from .qcore import DEFAULT_CONTROL, basic_hypergeometric, x_factorial, x_seq


def _check_disk(r2, p, what):
    if r2 * (1.0 - p.q) >= 1.0:
        raise DomainError(f"{what}: |z|^2 (1-q) = {r2 * (1.0 - p.q)!r} is not < 1")


def normalization(r2, p, ctrl=DEFAULT_CONTROL):
    """``N(r^2) = 2phi1(0, 0; -alpha | q; r^2 (1 - q))``."""
    r2 = float(r2)
    _check_disk(r2, p, "normalization")
    val = basic_hypergeometric([0.0, 0.0], [-p.alpha], p.q, r2 * (1.0 - p.q), ctrl)
    return val.real


def normalization_series(r2, p, ctrl=DEFAULT_CONTROL):
    """``sum_n r^(2n) / x_n!``, the same quantity summed term by term."""
    r2 = float(r2)
    _check_disk(r2, p, "normalization")
    return sum_series(lambda k: r2 / x_seq(k + 1, p), ctrl, what="N series").real


def reproducing_kernel(z, w, p, ctrl=DEFAULT_CONTROL):
    """``K(z, w) = 2phi1(0, 0; -alpha | q; z conj(w) (1 - q))``."""
    u = complex(z) * complex(w).conjugate()
    if abs(u) * (1.0 - p.q) >= 1.0:
        raise DomainError(f"reproducing_kernel: |z w|(1-q) = {abs(u) * (1.0 - p.q)!r} is not < 1")
    return basic_hypergeometric([0.0, 0.0], [-p.alpha], p.q, u * (1.0 - p.q), ctrl)


def kernel_series(z, w, p, ctrl=DEFAULT_CONTROL):
    """``sum_j (z conj(w))^j / x_j!``."""
    u = complex(z) * complex(w).conjugate()
    if abs(u) * (1.0 - p.q) >= 1.0:
        raise DomainError("kernel_series: outside the convergence bidisk")
    return sum_series(lambda k: u / x_seq(k + 1, p), ctrl, what="kernel series")


def default_truncation(r2, p, rel=1e-16):
    """Smallest n with ``|c_n| = r^n / sqrt(x_n!) < rel * sqrt(N(r^2))``.

    The bound is on the coefficient itself, not its square, so the neglected
    part of a wavefunction sits at the rounding level of the normalized state.
    """
    if r2 == 0:
        return 0
    target = rel * rel * normalization(r2, p)
    term, n = 1.0, 0
    while term >= target:
        n += 1
        term *= r2 / x_seq(n, p)
        if n > 100_000:
            raise DomainError("default_truncation: label too close to the disk boundary")
    return n


@dataclass(frozen=True)
class CoherentState:
    """Coefficients ``c_n = conj(z)^n / sqrt(x_n!)`` for ``n <= n_max`` (unnormalized)."""

    z: complex
    params: object
    n_max: int
    coeffs: np.ndarray = field(repr=False)

    @property
    def norm2(self):
        """Partial sum ``sum_{n <= n_max} |c_n|^2``."""
        return math.fsum(np.abs(self.coeffs) ** 2)

    def normalized(self):
        """Coefficients divided by ``sqrt(N(|z|^2))``."""
        return self.coeffs / math.sqrt(normalization(abs(self.z) ** 2, self.params))

    def overlap(self, other):
        """``<self, other>`` of the normalized states, antilinear in ``self``."""
        n = min(self.n_max, other.n_max) + 1
        return complex(np.vdot(self.normalized()[:n], other.normalized()[:n]))


def cs_coefficients(z, n_max=None, p=None):
    """Build a :class:`CoherentState`; ``n_max`` defaults to :func:`default_truncation`."""
    z = complex(z)
    r2 = abs(z) ** 2
    _check_disk(r2, p, "cs_coefficients")
    if n_max is None:
        n_max = default_truncation(r2, p)
    c = np.empty(n_max + 1, dtype=complex)
    c[0] = 1.0
    zb = z.conjugate()
    for n in range(1, n_max + 1):
        c[n] = c[n - 1] * zb / math.sqrt(x_seq(n, p))
    return CoherentState(z, p, n_max, c)


def wavefunction_series(z, x, p, n_max=None):
    """``theta_z(x)`` summed over the basis up to ``n_max``.

    Returns ``(value, tail)`` where ``tail`` bounds the next coefficient
    times ``max |phi_n|`` seen, a rough size of the neglected part.
    """
    cs = cs_coefficients(z, n_max, p)
    phi = basis_phi(cs.n_max, x, p)
    c = cs.normalized()
    val = np.tensordot(c, phi, axes=(0, 0))
    tail = abs(c[-1]) * float(np.max(np.abs(phi[-1])))
    return val, tail


def _generating_sum(t, theta, alpha, q, ctrl):
    """``1/(t e^{i theta}; q)_inf * 2phi1(a e^{i theta}, -a e^{i theta}; -alpha | q; t e^{-i theta})``, a^2 = alpha.

    The numerator pair is merged into ``(alpha e^{2 i theta}; q^2)_k`` so only
    alpha enters.
    """
    e = np.exp(1j * np.asarray(theta, dtype=complex))
    e2 = e * e
    y = t / e
    if np.any(np.abs(t * e) >= 1.0) or np.any(np.abs(y) >= 1.0):
        raise DomainError("generating function evaluated outside its disk of convergence")

    def ratio(k):
        return (1.0 - alpha * e2 * q ** (2 * k)) / ((1.0 + alpha * q**k) * (1.0 - q ** (k + 1))) * y

    s = sum_series_array(ratio, e.shape, ctrl, what="wavefunction 2phi1")
    return s / qpoch_inf_array(t * e, q, ctrl)


def wavefunction_closed(z, theta, p, ctrl=DEFAULT_CONTROL):
    """Closed form of ``theta_z(x)``, ``x = 2 cos(theta) / sqrt(1 - q)``.

    ``theta`` may be complex (needed by the q -> 1 substitution); arrays
    are evaluated elementwise.
    """
    z = complex(z)
    _check_disk(abs(z) ** 2, p, "wavefunction_closed")
    t = z.conjugate() * math.sqrt(1.0 - p.q)
    val = _generating_sum(t, theta, p.alpha, p.q, ctrl)
    val = val / math.sqrt(normalization(abs(z) ** 2, p, ctrl))
    return val if np.ndim(theta) else complex(val)


def alpha0_wavefunction(z, theta, q, ctrl=DEFAULT_CONTROL):
    """Arik-Coon wavefunction ``N^(-1/2) / (t e^{i theta}, t e^{-i theta}; q)_inf``, ``t = conj(z) sqrt(1-q)``."""
    t = complex(z).conjugate() * math.sqrt(1.0 - q)
    e = np.exp(1j * np.asarray(theta, dtype=complex))
    r2 = abs(z) ** 2
    n0 = (1.0 / qpoch_inf_array(np.array(r2 * (1.0 - q)), q, ctrl)).real
    return 1.0 / (qpoch_inf_array(t * e, q, ctrl) * qpoch_inf_array(t / e, q, ctrl)) / np.sqrt(n0)


def inner(u, v):
    """``sum conj(u_n) v_n``."""
    return complex(np.vdot(u, v))


def ladder_apply(v, which, p):
    """Lowering ``a phi_n = sqrt(2 x_n) phi_{n-1}`` or raising ``a* phi_n = sqrt(2 x_{n+1}) phi_{n+1}``.

    The output keeps the length of ``v``; raising warns with
    :class:`TruncationWarning` if the top component is nonzero.
    """
    v = np.asarray(v, dtype=complex)
    n_max = len(v) - 1
    out = np.zeros_like(v)
    if which == "lower":
        for n in range(1, n_max + 1):
            out[n - 1] = math.sqrt(2.0 * x_seq(n, p)) * v[n]
    elif which == "raise":
        if v[n_max] != 0:
            warnings.warn("raising operator pushed weight past n_max", TruncationWarning, stacklevel=2)
        for n in range(n_max):
            out[n + 1] = math.sqrt(2.0 * x_seq(n + 1, p)) * v[n]
    else:
        raise ValueError(f"which must be 'lower' or 'raise', got {which!r}")
    return out


def position_apply(v, p):
    """``Q = (a + a*) / sqrt(2)``, so ``Q phi_n = sqrt(x_n) phi_{n-1} + sqrt(x_{n+1}) phi_{n+1}``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        up = ladder_apply(v, "raise", p)
    if np.asarray(v)[-1] != 0:
        warnings.warn("position operator pushed weight past n_max", TruncationWarning, stacklevel=2)
    return (ladder_apply(v, "lower", p) + up) / math.sqrt(2.0)


def momentum_apply(v, p):
    """``P = (a - a*) / (i sqrt(2))``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        up = ladder_apply(v, "raise", p)
    return (ladder_apply(v, "lower", p) - up) / (1j * math.sqrt(2.0))


def position_matrix(size, p):
    """Matrix of ``Q`` on ``span{phi_0 .. phi_{size-1}}`` (real symmetric tridiagonal)."""
    off = np.sqrt([x_seq(n, p) for n in range(1, size)])
    return np.diag(off, 1) + np.diag(off, -1)


def identity_resolution_check(n, m, p, meas=None, tol=1e-8):
    """Matrix element ``<phi_n | O | phi_m>`` of the coherent-state projector integral.

    The angular integral gives ``delta_{nm}`` exactly; the radial part is the
    atomic moment ``int r^(2n) d rho`` divided by ``x_n!``.
    """
    if n != m:
        return 0.0
    if meas is None:
        meas = radial_measure(p, n_max=max(n, 12))
    if meas.tail_estimate(n) / x_factorial(n, p) > tol:
        warnings.warn(f"identity check at n={n}: radial tail above {tol}", AccuracyLoss, stacklevel=2)
    return radial_moment(meas, n) / x_factorial(n, p)


def identity_resolution_matrix(n_max, p, meas=None):
    """``(n_max+1) x (n_max+1)`` matrix of :func:`identity_resolution_check` entries."""
    if meas is None:
        meas = radial_measure(p, n_max=max(n_max, 12))
    out = np.zeros((n_max + 1, n_max + 1))
    for n in range(n_max + 1):
        out[n, n] = identity_resolution_check(n, n, p, meas)
    return out
