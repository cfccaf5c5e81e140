"""Degenerations of the construction.

* alpha = 0: Arik-Coon states, continuous q-Hermite basis, q-Gaussian weight.
* q -> 1 with alpha = -q^(2 nu): Barut-Girardello states built on
  Meixner-Pollaczek polynomials.  The q-side is evaluated after the
  substitutions ``z -> z sqrt(1-q)``, ``alpha -> -q^(2 nu)``,
  ``e^{i theta} -> i q^{i x}``.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._series import sum_series
from .errors import DomainError, PoleError
from .measures import radial_measure
from .orthopoly import basis_phi, meixner_pollaczek_norm, q_hermite_cont
from .qcore import DEFAULT_CONTROL, QParams, q_exp, q_pochhammer_inf, x_factorial
from .states import normalization, wavefunction_closed

DEFAULT_Q_LIST = (0.9, 0.99, 0.999)


@dataclass(frozen=True)
class BGTarget:
    """Evaluation point ``(nu, z, x)`` of a Barut-Girardello wavefunction."""

    nu: float
    z: complex
    x: float

    def __post_init__(self):
        if not self.nu > 0:
            raise DomainError(f"need nu > 0, got {self.nu!r}")


def bessel_i(sigma, x, ctrl=DEFAULT_CONTROL):
    """Modified Bessel ``I_sigma(x) = sum (x/2)^(2k+sigma) / (k! Gamma(k+sigma+1))`` for ``x >= 0``."""
    if x < 0:
        raise DomainError("bessel_i needs x >= 0")
    if sigma < 0 and float(sigma).is_integer():
        sigma = -sigma
    if x == 0:
        return 1.0 if sigma == 0 else (0.0 if sigma > 0 else math.inf)
    h = x / 2.0
    first = h**sigma / math.gamma(sigma + 1.0)
    h2 = h * h
    return sum_series(lambda k: h2 / ((k + 1) * (k + sigma + 1.0)), ctrl, first, what="I_sigma").real


def hyp1f1(a, b, x, ctrl=DEFAULT_CONTROL):
    """Kummer ``1F1(a; b; x) = sum (a)_k / (b)_k x^k / k!``."""
    a, b, x = complex(a), complex(b), complex(x)
    if b.imag == 0 and b.real <= 0 and float(b.real).is_integer():
        raise PoleError(f"1F1 with nonpositive integer b={b.real!r}")
    return sum_series(lambda k: (a + k) / ((b + k) * (k + 1)) * x, ctrl, what="1F1")


def bg_normalization(nu, r, ctrl=DEFAULT_CONTROL):
    """``Gamma(2 nu) r^(1 - 2 nu) I_{2 nu - 1}(2 r)``, the closed form of ``sum r^(2n)/(n! (2nu)_n)``."""
    return math.gamma(2 * nu) * r ** (1 - 2 * nu) * bessel_i(2 * nu - 1, 2 * r, ctrl)


def bg_normalization_series(nu, r, ctrl=DEFAULT_CONTROL):
    r2 = r * r
    return sum_series(lambda k: r2 / ((k + 1) * (2 * nu + k)), ctrl, what="BG norm").real


def bg_wavefunction(t, ctrl=DEFAULT_CONTROL):
    """Barut-Girardello wavefunction

        |z|^(nu-1/2) / sqrt(Gamma(2nu) I_{2nu-1}(2|z|)) e^{i conj z} 1F1(nu + i x; 2 nu; -2 i conj z).
    """
    if t.z == 0:
        raise DomainError("bg_wavefunction closed form needs z != 0")
    r = abs(t.z)
    zb = complex(t.z).conjugate()
    pre = r ** (t.nu - 0.5) / math.sqrt(math.gamma(2 * t.nu) * bessel_i(2 * t.nu - 1, 2 * r, ctrl))
    return pre * cmath.exp(1j * zb) * hyp1f1(t.nu + 1j * t.x, 2 * t.nu, -2j * zb, ctrl)


def bg_wavefunction_series(t, n_max=None, ctrl=DEFAULT_CONTROL):
    """Same wavefunction summed over normalized Meixner-Pollaczek polynomials."""
    r = abs(t.z)
    if n_max is None:
        # coefficients fall like r^n / n!; stop well past the rounding level
        n_max = 20
        log_c = lambda n: n * math.log(max(r, 1e-300)) - 0.5 * (math.lgamma(n + 1) + math.lgamma(2 * t.nu + n) - math.lgamma(2 * t.nu))
        while log_c(n_max) > math.log(1e-18):
            n_max += 10
    n = np.arange(n_max + 1)
    log_den = 0.5 * (np.array([math.lgamma(k + 1) + math.lgamma(2 * t.nu + k) for k in n]) - math.lgamma(2 * t.nu))
    c = complex(t.z).conjugate() ** n * np.exp(-log_den)
    phi = meixner_pollaczek_norm(n_max, t.x, t.nu)
    norm = bg_normalization_series(t.nu, r, ctrl)
    return complex(np.dot(c, phi)) / math.sqrt(norm)


def substituted_theta(x, q):
    """Angle with ``e^{i theta} = i q^{i x}``, i.e. ``theta = pi/2 + x ln q`` (complex for complex x)."""
    # only e^{i theta} is used downstream, so no branch choice is needed
    return math.pi / 2 + complex(x) * math.log(q)


def substitution_in_domain(nu, z, x, q):
    """Check every series argument stays inside its disk of convergence after the substitution."""
    alpha = -(q ** (2 * nu))
    if not -1.0 < alpha < q:
        return False
    label = complex(z) * math.sqrt(1.0 - q)
    if abs(label) ** 2 * (1.0 - q) >= 1.0:
        return False
    t = abs(label) * math.sqrt(1.0 - q)
    e = abs(cmath.exp(1j * substituted_theta(x, q)))
    return t * e < 1.0 and t / e < 1.0


def substituted_wavefunction(nu, z, x, q, ctrl=DEFAULT_CONTROL):
    """q-side of the limit: the closed-form wavefunction after the substitutions."""
    if not substitution_in_domain(nu, z, x, q):
        raise DomainError(f"substitution leaves the convergence domain at q={q!r}")
    p = QParams(q, -(q ** (2 * nu)))
    theta = substituted_theta(x, q)
    if abs(theta.imag) < 1e-300:
        theta = theta.real
    return wavefunction_closed(complex(z) * math.sqrt(1.0 - q), theta, p, ctrl)


def limit_sweep_q_to_1(nu, z, x, q_list=DEFAULT_Q_LIST, ctrl=DEFAULT_CONTROL):
    """``|q-side - Barut-Girardello target|`` for each q in ``q_list``."""
    target = bg_wavefunction(BGTarget(nu, z, x), ctrl)
    return [abs(substituted_wavefunction(nu, z, x, q, ctrl) - target) for q in q_list]


def coefficient_limit(n, nu, q):
    """``((1-q)^n / x_n!, 1 / (n! (2nu)_n))`` with ``alpha = -q^(2 nu)``."""
    p = QParams(q, -(q ** (2 * nu)))
    lhs = (1.0 - q) ** n / x_factorial(n, p)
    rhs = 1.0 / (math.factorial(n) * math.exp(math.lgamma(2 * nu + n) - math.lgamma(2 * nu)))
    return lhs, rhs


def arik_coon_reduction_report(p, n_max=10, ctrl=DEFAULT_CONTROL):
    """Largest residuals of the three alpha = 0 collapses.

    Keys: ``measure`` (atoms vs ``(q;q)_inf q^k / (q;q)_k``), ``basis``
    (phi_n vs normalized continuous q-Hermite) and ``normalization``
    (N vs e_q, relative).
    """
    if p.alpha != 0:
        raise DomainError("arik_coon_reduction_report needs alpha = 0")
    q = p.q
    meas = radial_measure(p)
    qq = q_pochhammer_inf(q, q, ctrl).real
    k = np.arange(len(meas.weights))
    ref = np.empty(len(k))
    acc = 1.0
    for j in k:
        if j:
            acc *= 1.0 - q**j
        ref[j] = qq * q**j / acc
    measure_res = float(np.max(np.abs(meas.weights - ref)))

    theta = np.linspace(0.02, math.pi - 0.02, 41)
    phi = basis_phi(n_max, None, p, theta=theta)
    herm = q_hermite_cont(n_max, theta, q)
    qn = np.cumprod(np.r_[1.0, 1.0 - q ** np.arange(1, n_max + 1)])
    basis_res = float(np.max(np.abs(phi - herm / np.sqrt(qn)[:, None])))

    r2s = np.linspace(0.0, 0.95, 11) * p.disk_radius**2
    norm_res = max(abs(normalization(r2, p, ctrl) - q_exp(r2, q, ctrl).real) / q_exp(r2, q, ctrl).real for r2 in r2s)
    return {"measure": measure_res, "basis": basis_res, "normalization": norm_res}
