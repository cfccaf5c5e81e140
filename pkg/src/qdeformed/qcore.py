"""q-calculus primitives and the deformed sequence x_n = (1 + alpha q^(n-1)) [n]_q.

Everything here is computed in complex arithmetic; the real-valued
helpers (``q_factorial``, ``x_factorial``, ...) check that the imaginary
part vanishes before returning a float.
"""

import math
import sys
import warnings
from dataclasses import dataclass

from ._series import csum, sum_series
from .errors import AccuracyLoss, DomainError, NonConvergent, PoleError

_IMAG_TOL = 1e-12
EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class QParams:
    """The deformation pair ``(q, alpha)`` with ``0 < q < 1`` and ``-1 < alpha < q``."""

    q: float
    alpha: float = 0.0

    def __post_init__(self):
        q, alpha = float(self.q), float(self.alpha)
        if not 0.0 < q < 1.0:
            raise DomainError(f"need 0 < q < 1, got q={q!r}")
        if not -1.0 < alpha < q:
            raise DomainError(f"need -1 < alpha < q, got alpha={alpha!r} with q={q!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "alpha", alpha)

    @property
    def disk_radius(self):
        """Radius ``(1 - q)^(-1/2)`` of the label disk C_q."""
        return (1.0 - self.q) ** -0.5

    @property
    def interval_halfwidth(self):
        """Half-width ``2 (1 - q)^(-1/2)`` of the support interval I_q."""
        return 2.0 * self.disk_radius


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control shared by all series and infinite products."""

    rel_tol: float = 1e-13
    max_terms: int = 100_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if self.max_terms < 1 or self.consecutive_small < 1:
            raise DomainError("max_terms and consecutive_small must be >= 1")


DEFAULT_CONTROL = SeriesControl()


def _real(value, what):
    value = complex(value)
    if abs(value.imag) > _IMAG_TOL * max(1.0, abs(value.real)):
        raise ArithmeticError(f"{what}: unexpected imaginary part {value.imag!r}")
    return value.real


def _check_q(q):
    if not 0.0 < q < 1.0:
        raise DomainError(f"need 0 < q < 1, got q={q!r}")


def q_bracket(n, q):
    """``[n]_q = (1 - q^n) / (1 - q)``."""
    _check_q(q)
    if n == 0:
        return 0.0
    # expm1 keeps full relative accuracy as q -> 1
    return math.expm1(n * math.log(q)) / math.expm1(math.log(q))


def q_factorial(n, q):
    """``[n]_q! = [1]_q [2]_q ... [n]_q`` (1 for n = 0)."""
    out = 1.0 + 0j
    for k in range(1, n + 1):
        out *= q_bracket(k, q)
    return _real(out, "q_factorial")


def q_pochhammer(a, q, n):
    """Finite q-Pochhammer symbol ``(a; q)_n = prod_{k<n} (1 - a q^k)``."""
    _check_q(q)
    a = complex(a)
    out = 1.0 + 0j
    qk = 1.0
    for _ in range(n):
        out *= 1.0 - a * qk
        qk *= q
    return out


def q_pochhammer_inf(a, q, ctrl=DEFAULT_CONTROL):
    """Infinite product ``(a; q)_inf``.

    Factors are multiplied until ``consecutive_small`` successive tail bounds
    ``|a| q^k / (1 - q)`` fall below ``ctrl.rel_tol``.
    """
    _check_q(q)
    a = complex(a)
    if a == 0:
        return 1.0 + 0j
    out = 1.0 + 0j
    factor = a
    small = 0
    for _ in range(ctrl.max_terms):
        out *= 1.0 - factor
        factor *= q
        if abs(factor) / (1.0 - q) < ctrl.rel_tol:
            small += 1
            if small >= ctrl.consecutive_small:
                return out
    raise NonConvergent(f"(a;q)_inf with a={a!r}, q={q!r}: max_terms reached")


def q_exp(xi, q, ctrl=DEFAULT_CONTROL):
    """q-exponential ``e_q(xi) = sum xi^n / [n]_q!`` for ``|xi| (1 - q) < 1``.

    The terms sum in absolute value to ``e_q(|xi|)``, so the series is
    ill-conditioned when ``e_q(|xi|) / |e_q(xi)|`` is large (q near 1, xi
    away from the positive axis).  An :class:`AccuracyLoss` warning is
    issued when that ratio times machine epsilon exceeds ``ctrl.rel_tol``;
    :func:`q_exp_product` has no such cancellation.
    """
    _check_q(q)
    xi = complex(xi)
    if abs(xi) * (1.0 - q) >= 1.0:
        raise DomainError(f"q_exp needs |xi|(1-q) < 1, got {abs(xi) * (1.0 - q)!r}")
    w = xi * (1.0 - q)
    val = sum_series(lambda k: w / (1.0 - q ** (k + 1)), ctrl, what="e_q")
    if w.imag != 0 or w.real < 0:
        cond = abs(1.0 / q_pochhammer_inf(abs(w), q, ctrl)) / abs(val)
        if cond * EPS > ctrl.rel_tol:
            warnings.warn(f"e_q series: cancellation factor {cond:.1e}, expect ~{cond * EPS:.0e} relative error", AccuracyLoss, stacklevel=2)
    return val


def q_exp_product(xi, q, ctrl=DEFAULT_CONTROL):
    """Product form ``1 / (xi (1 - q); q)_inf`` of the q-exponential."""
    xi = complex(xi)
    if abs(xi) * (1.0 - q) >= 1.0:
        raise DomainError(f"q_exp needs |xi|(1-q) < 1, got {abs(xi) * (1.0 - q)!r}")
    return 1.0 / q_pochhammer_inf(xi * (1.0 - q), q, ctrl)


def _terminating_order(a, q):
    """Return N if ``a == q^(-N)`` for a nonnegative integer N, else None."""
    a = complex(a)
    if a.imag != 0 or a.real < 1.0:
        return None
    n = round(math.log(a.real) / -math.log(q))
    if n >= 0 and math.isclose(a.real, q ** (-n), rel_tol=1e-12):
        return n
    return None


def basic_hypergeometric(a, b, q, xi, ctrl=DEFAULT_CONTROL):
    r"""Basic hypergeometric series :math:`{}_m\phi_s(a; b | q; \xi)`.

    .. math::

        \sum_k \frac{(a_1,\dots,a_m;q)_k}{(b_1,\dots,b_s;q)_k}
        \left((-1)^k q^{\binom{k}{2}}\right)^{1+s-m} \frac{\xi^k}{(q;q)_k}

    If some numerator parameter equals ``q^(-N)`` the series terminates and
    exactly ``N + 1`` terms are summed.

    Raises
    ------
    PoleError
        If a denominator factor ``1 - b_j q^k`` vanishes.
    NonConvergent
        If a nonterminating series misses the tail criterion.
    """
    _check_q(q)
    a = [complex(v) for v in a]
    b = [complex(v) for v in b]
    xi = complex(xi)
    excess = 1 + len(b) - len(a)
    orders = [n for n in (_terminating_order(v, q) for v in a) if n is not None]

    def ratio(k):
        num = 1.0 + 0j
        for v in a:
            num *= 1.0 - v * q**k
        den = 1.0 - q ** (k + 1)
        for v in b:
            f = 1.0 - v * q**k
            if f == 0:
                raise PoleError(f"denominator (b;q)_k vanishes at b={v!r}, k={k + 1}")
            den *= f
        return num / den * (-(q**k)) ** excess * xi

    if orders:
        n_terms = min(orders)
        terms = [1.0 + 0j]
        for k in range(n_terms):
            terms.append(terms[-1] * ratio(k))
        return csum(terms)
    return sum_series(ratio, ctrl, what=f"{len(a)}phi{len(b)}")


def x_seq(n, p):
    """``x_n = (1 + alpha q^(n-1)) [n]_q``; zero for n = 0."""
    if n == 0:
        return 0.0
    return (1.0 + p.alpha * p.q ** (n - 1)) * q_bracket(n, p.q)


def x_factorial(n, p):
    """Generalized factorial ``x_n! = (-alpha; q)_n [n]_q!`` with ``x_0! = 1``."""
    return _real(q_pochhammer(-p.alpha, p.q, n), "x_factorial") * q_factorial(n, p.q)
