"""Polynomial families: Al-Salam-Chihara, the orthonormal basis phi_n,
continuous q-Hermite, Rogers-Szego and Meixner-Pollaczek.

Evaluators return an array of shape ``(n_max + 1,) + np.shape(x)`` holding
degrees ``0..n_max``; all recurrences run forward from degree 0.
"""

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .qcore import QParams, basic_hypergeometric, q_pochhammer, x_seq


def theta_to_x(theta, q):
    """Map an angle in ``[0, pi]`` to ``x = 2 cos(theta) / sqrt(1 - q)`` in I_q."""
    return 2.0 * np.cos(theta) / np.sqrt(1.0 - q)


def x_to_theta(x, q):
    """Inverse of :func:`theta_to_x`."""
    c = np.asarray(x) * np.sqrt(1.0 - q) / 2.0
    return np.arccos(np.clip(c, -1.0, 1.0))


def _check_interval(x, p):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > p.interval_halfwidth * (1.0 + 1e-14)):
        raise DomainError(f"x must lie in the closed interval |x| <= {p.interval_halfwidth!r}")
    return x


def asc_eval_sym(n_max, x, p, theta=None):
    """Al-Salam-Chihara ``Q_n(x sqrt(1-q)/2; sqrt(alpha), -sqrt(alpha) | q)``, n <= n_max.

    Uses the three-term recurrence

        Q_{n+1} = 2 xi Q_n - (1 - q^n)(1 + alpha q^(n-1)) Q_{n-1},

    which involves only ``alpha = a^2`` and therefore stays real for alpha < 0.
    If ``theta`` is given, ``xi = cos(theta)`` and ``x`` is ignored.
    """
    q, alpha = p.q, p.alpha
    if theta is not None:
        two_xi = 2.0 * np.cos(np.asarray(theta, dtype=float))
    else:
        two_xi = np.asarray(x, dtype=float) * math.sqrt(1.0 - q)
    out = np.empty((n_max + 1,) + two_xi.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = two_xi
    for n in range(1, n_max):
        out[n + 1] = two_xi * out[n] - (1.0 - q**n) * (1.0 + alpha * q ** (n - 1)) * out[n - 1]
    return out


class _GaussRat:
    """Exact complex rational, just enough arithmetic for a terminating sum."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=Fraction(0)):
        self.re, self.im = Fraction(re), Fraction(im)

    @classmethod
    def of(cls, z):
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    def __add__(self, o):
        o = o if isinstance(o, _GaussRat) else _GaussRat(o)
        return _GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return _GaussRat(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-(o if isinstance(o, _GaussRat) else _GaussRat(o)))

    def __rsub__(self, o):
        return _GaussRat(o) - self

    def __mul__(self, o):
        o = o if isinstance(o, _GaussRat) else _GaussRat(o)
        return _GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = o if isinstance(o, _GaussRat) else _GaussRat(o)
        d = o.re * o.re + o.im * o.im
        return _GaussRat((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _asc_3phi2_exact(n, cos_theta, a, b, q):
    # (a e^{it}; q)_k (a e^{-it}; q)_k = prod (1 - 2 a cos(t) q^j + a^2 q^{2j}), so only cos(t) enters
    q = Fraction(q)
    c = Fraction(cos_theta)
    a = _GaussRat.of(a)
    b = _GaussRat.of(b)
    ab = a * b
    qn_inv = Fraction(1) / q**n
    term = _GaussRat(1)
    total = _GaussRat(1)
    qk = Fraction(1)
    for k in range(n):
        num = (1 - qn_inv * qk) * (1 - 2 * c * qk * a + a * a * qk * qk)
        den = (1 - ab * qk) * (1 - qk * q)
        term = term * num / den * q
        total = total + term
        qk *= q
    pre = _GaussRat(1)
    qk = Fraction(1)
    for _ in range(n):
        pre = pre * (1 - ab * qk)
        qk *= q
    a_pow = _GaussRat(1)
    for _ in range(n):
        a_pow = a_pow * a
    return complex(pre * total / a_pow)


def asc_eval_3phi2(n, theta, a, b, q, method="exact"):
    """Al-Salam-Chihara ``Q_n(cos theta; a, b | q)`` from its terminating 3phi2.

    ``(ab; q)_n a^(-n) 3phi2(q^-n, a e^{i theta}, a e^{-i theta}; ab, 0 | q; q)``.

    The terms of this sum grow like ``q^(-n(n-1)/2)`` while the sum itself is
    O(a^n), so in floating point it loses all accuracy by n ~ 10 for q <= 0.5.
    ``method="exact"`` therefore sums it in exact rational arithmetic over the
    binary values of the (float) inputs and rounds once at the end.
    ``method="float"`` runs the literal complex-valued series through
    :func:`basic_hypergeometric`.
    """
    a = complex(a)
    b = complex(b)
    if a == 0:
        raise DomainError("asc_eval_3phi2 needs a != 0 (prefactor a^-n)")
    if n == 0:
        return 1.0 + 0j
    if method == "exact":
        return _asc_3phi2_exact(n, math.cos(theta), a, b, q)
    if method != "float":
        raise ValueError(f"unknown method {method!r}")
    e = cmath.exp(1j * theta)
    s = basic_hypergeometric([q**-n, a * e, a / e], [a * b, 0.0], q, q)
    return q_pochhammer(a * b, q, n) * a**-n * s


def _basis_norms(n_max, p):
    """``sqrt((-alpha, q; q)_n)`` for n = 0..n_max."""
    out = np.empty(n_max + 1)
    acc = 1.0
    out[0] = 1.0
    for n in range(n_max):
        acc *= (1.0 + p.alpha * p.q**n) * (1.0 - p.q ** (n + 1))
        out[n + 1] = math.sqrt(acc)
    return out


def basis_phi(n_max, x, p, theta=None):
    """Orthonormal basis ``phi_n(x) = Q_n(x sqrt(1-q)/2; sqrt(a), -sqrt(a) | q) / sqrt((-alpha, q; q)_n)``.

    Pass ``theta`` instead of ``x`` to evaluate at ``x = 2 cos(theta) / sqrt(1 - q)``.
    """
    if theta is None:
        x = _check_interval(x, p)
        vals = asc_eval_sym(n_max, x, p)
    else:
        vals = asc_eval_sym(n_max, None, p, theta=theta)
    norms = _basis_norms(n_max, p).reshape((-1,) + (1,) * (vals.ndim - 1))
    return vals / norms


def p_monic_eval(n_max, x, p):
    """Monic polynomials ``P_{n+1} = x P_n - x_n P_{n-1}`` with ``P_0 = 1``, ``P_1 = x``."""
    x = _check_interval(x, p)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = x
    for n in range(1, n_max):
        out[n + 1] = x * out[n] - x_seq(n, p) * out[n - 1]
    return out


def q_hermite_cont(n_max, theta, q):
    """Continuous q-Hermite ``H_n(cos theta | q)`` from ``2 xi H_n = H_{n+1} + (1 - q^n) H_{n-1}``."""
    QParams(q)
    two_xi = 2.0 * np.cos(np.asarray(theta, dtype=float))
    out = np.empty((n_max + 1,) + two_xi.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = two_xi
    for n in range(1, n_max):
        out[n + 1] = two_xi * out[n] - (1.0 - q**n) * out[n - 1]
    return out


def gaussian_binomial(n, k, q):
    """``(q;q)_n / ((q;q)_k (q;q)_{n-k})``."""
    if k < 0 or k > n:
        return 0.0
    k = min(k, n - k)
    out = 1.0
    for j in range(k):
        out *= (1.0 - q ** (n - j)) / (1.0 - q ** (j + 1))
    return out


def rogers_szego(n, z, q):
    """Rogers-Szego polynomial ``h_n(z | q) = sum_k [n choose k]_q z^k``."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"need 0 < q < 1, got q={q!r}")
    return math.fsum(gaussian_binomial(n, k, q) * z**k for k in range(n + 1))


def rogers_szego_sequence(n_max, z, q):
    """``h_0(z|q) .. h_{n_max}(z|q)`` without cancellation for real z.

    For ``z >= 0`` the defining sum has positive terms; for ``z < 0`` the
    recurrence ``h_{n+1} = (1 + z) h_n - z (1 - q^n) h_{n-1}`` has positive
    coefficients as long as ``z > -1``.
    """
    z = float(z)
    if z >= 0.0 or z <= -1.0:
        return np.array([rogers_szego(n, z, q) for n in range(n_max + 1)])
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + z
    for n in range(1, n_max):
        out[n + 1] = (1.0 + z) * out[n] - z * (1.0 - q**n) * out[n - 1]
    return out


def meixner_pollaczek(n_max, x, nu):
    """Meixner-Pollaczek ``P_n^nu(x; pi/2)``: ``(n+1) P_{n+1} = 2x P_n - (n + 2nu - 1) P_{n-1}``."""
    if not nu > 0:
        raise DomainError(f"need nu > 0, got {nu!r}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * x
    for n in range(1, n_max):
        out[n + 1] = (2.0 * x * out[n] - (n + 2.0 * nu - 1.0) * out[n - 1]) / (n + 1)
    return out


def meixner_pollaczek_norm(n_max, x, nu):
    """Normalized ``P_n^nu(x; pi/2) sqrt(n! / (2 nu)_n)``."""
    vals = meixner_pollaczek(n_max, x, nu)
    n = np.arange(n_max + 1)
    log_scale = 0.5 * (np.array([math.lgamma(k + 1) for k in n]) + math.lgamma(2 * nu)
                       - np.array([math.lgamma(2 * nu + k) for k in n]))
    return vals * np.exp(log_scale).reshape((-1,) + (1,) * vals[0].ndim)
