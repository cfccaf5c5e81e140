"""Summation kernels used by every series in the package.

Scalar series are accumulated term by term and summed exactly at the end
with ``math.fsum`` (separately on real and imaginary parts).  Array series
use vectorised Neumaier summation.  Both stop once ``consecutive_small``
successive terms pass the tail test

    |t_k| * max(1, r / (1 - r)) <= rel_tol * |S_k|,   r = |t_k / t_{k-1}|,

i.e. the geometric tail extrapolated from the current ratio is negligible.
"""

import math

import numpy as np

from .errors import NonConvergent


def csum(terms):
    """Exactly rounded sum of a list of complex numbers."""
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def _tail_small(new, old, running, rel_tol):
    a = abs(new)
    b = abs(old)
    if b == 0.0:
        return False
    r = a / b
    if r >= 1.0:
        return False
    return a * max(1.0, r / (1.0 - r)) <= rel_tol * abs(running)


def sum_series(ratio, ctrl, first=1.0 + 0j, what="series"):
    """Sum ``t_0 + t_1 + ...`` where ``t_0 = first`` and ``t_{k+1} = t_k * ratio(k)``.

    A term that is exactly zero ends the series (terminating case).
    """
    term = complex(first)
    terms = [term]
    running = term
    small = 0
    for k in range(ctrl.max_terms):
        new = term * ratio(k)
        if new == 0:
            return csum(terms)
        terms.append(new)
        running += new
        if _tail_small(new, term, running, ctrl.rel_tol):
            small += 1
            if small >= ctrl.consecutive_small:
                return csum(terms)
        else:
            small = 0
        term = new
    raise NonConvergent(f"{what}: no convergence after {ctrl.max_terms} terms")


def _two_sum_update(s, c, x):
    t = s + x
    c = c + np.where(np.abs(s) >= np.abs(x), (s - t) + x, (x - t) + s)
    return t, c


def sum_series_array(ratio, shape, ctrl, first=None, what="series"):
    """Vectorised :func:`sum_series`; ``ratio(k)`` returns an array of ``shape``.

    Every element must pass the tail test before the loop stops.
    """
    term = np.ones(shape, dtype=complex) if first is None else np.array(first, dtype=complex)
    sr, cr = term.real.copy(), np.zeros(shape)
    si, ci = term.imag.copy(), np.zeros(shape)
    small = np.zeros(shape, dtype=int)
    for k in range(ctrl.max_terms):
        new = term * ratio(k)
        sr, cr = _two_sum_update(sr, cr, new.real)
        si, ci = _two_sum_update(si, ci, new.imag)
        running = (sr + cr) + 1j * (si + ci)
        a = np.abs(new)
        b = np.abs(term)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.where(b > 0, a / b, 0.0)
            factor = np.where(r < 1.0, np.maximum(1.0, r / (1.0 - r)), np.inf)
            ok = (a == 0) | (a * factor <= ctrl.rel_tol * np.abs(running))
        small = np.where(ok, small + 1, 0)
        term = new
        if np.all(small >= ctrl.consecutive_small):
            return running
    raise NonConvergent(f"{what}: no convergence after {ctrl.max_terms} terms")


def qpoch_inf_array(a, q, ctrl):
    """``(a; q)_inf`` elementwise for an array ``a``.

    Stops when the remaining factors can move the product by less than
    ``rel_tol``: ``sum_{j>=k} |a| q^j = |a| q^k / (1 - q)``.
    """
    a = np.asarray(a, dtype=complex)
    out = np.ones(a.shape, dtype=complex)
    amax = float(np.max(np.abs(a))) if a.size else 0.0
    if amax == 0.0:
        return out
    qk = 1.0
    small = 0
    for _ in range(ctrl.max_terms):
        out *= 1.0 - a * qk
        qk *= q
        if amax * qk / (1.0 - q) < ctrl.rel_tol:
            small += 1
            if small >= ctrl.consecutive_small:
                return out
    raise NonConvergent(f"(a;q)_inf: no convergence after {ctrl.max_terms} factors")
