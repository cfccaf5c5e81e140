"""Named invariant suites with pass/fail residual reports.

Each suite runs over a parameter grid and returns a list of :class:`Check`
records; the CLI ``verify`` command serializes them.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import bargmann, limits, measures, orthopoly, states
from .qcore import QParams, x_factorial

DEFAULT_Q = (0.3, 0.5, 0.8)
DEFAULT_ALPHA = (-0.5, 0.0, 0.25)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    q: float
    alpha: float
    residual: float
    threshold: float

    @property
    def passed(self):
        return bool(self.residual < self.threshold)

    def as_dict(self):
        d = asdict(self)
        d["passed"] = self.passed
        return d


def default_grid(q=None, alpha=None):
    qs = DEFAULT_Q if q is None else (q,)
    alphas = DEFAULT_ALPHA if alpha is None else (alpha,)
    return [QParams(a, b) for a in qs for b in alphas if -1.0 < b < a]


def suite_moments(grid, n_max=12, atoms_tol=1e-15):
    out = []
    for p in grid:
        m = measures.radial_measure(p, tol=atoms_tol, n_max=n_max)
        res = max(abs(measures.radial_moment(m, n) - x_factorial(n, p)) / x_factorial(n, p) for n in range(n_max + 1))
        out.append(Check("moments", f"moment identity n<={n_max}", p.q, p.alpha, res, 1e-8))
        out.append(Check("moments", "atom weights nonnegative", p.q, p.alpha, max(0.0, -float(m.weights.min())), 1e-300))
    return out


def gram_matrix(p, n_max, order):
    quad = measures.make_quadrature(p, order)
    phi = orthopoly.basis_phi(n_max, None, p, theta=quad.theta)
    return (phi * quad.weights) @ phi.T


def suite_gram(grid, n_max=10, order=400):
    out = []
    for p in grid:
        g = gram_matrix(p, n_max, order)
        out.append(Check("gram", f"orthonormality n<={n_max}", p.q, p.alpha, float(np.max(np.abs(g - np.eye(n_max + 1)))), 1e-7))
        theta = np.linspace(0.0, math.pi, 101)[1:-1]
        w = measures.weight_omega(p=p, theta=theta)
        out.append(Check("gram", "weight positive inside I_q", p.q, p.alpha, float(w.min() <= 0), 0.5))
    return out


def genfun_residual(p, radii=(0.1, 0.5, 0.9), phases=(0.0, 1.0, 2.5, -2.0), thetas=None):
    """Largest relative gap between the series and closed-form wavefunctions."""
    if thetas is None:
        thetas = np.linspace(0.05, math.pi - 0.05, 9)
    x = orthopoly.theta_to_x(thetas, p.q)
    worst = 0.0
    for r in radii:
        for ph in phases:
            z = r * p.disk_radius * np.exp(1j * ph)
            series, _ = states.wavefunction_series(z, x, p)
            closed = states.wavefunction_closed(z, thetas, p)
            worst = max(worst, float(np.max(np.abs(series - closed) / np.maximum(1.0, np.abs(closed)))))
    return worst


def suite_genfun(grid):
    return [Check("genfun", "series vs closed form", p.q, p.alpha, genfun_residual(p), 1e-9) for p in grid]


def _sample_labels(p):
    r = p.disk_radius
    return [0.3 * r, 0.5j * r, (-0.4 + 0.3j) * r, 0.7 * r * np.exp(2j), 0.1 + 0.0j]


def suite_kernel(grid):
    out = []
    for p in grid:
        zs = _sample_labels(p)
        series = max(abs(states.kernel_series(z, w, p) - states.reproducing_kernel(z, w, p)) / max(1.0, abs(states.reproducing_kernel(z, w, p)))
                     for z in zs for w in zs)
        diag = max(abs(states.reproducing_kernel(z, z, p) - states.normalization(abs(z) ** 2, p)) / states.normalization(abs(z) ** 2, p)
                   for z in zs)
        min_eig = math.inf
        for i in range(len(zs) - 2):
            trio = zs[i : i + 3]
            k = np.array([[states.reproducing_kernel(a, b, p) for b in trio] for a in trio])
            min_eig = min(min_eig, float(np.linalg.eigvalsh(k).min()))
        out.append(Check("kernel", "power series vs 2phi1", p.q, p.alpha, series, 1e-10))
        out.append(Check("kernel", "K(z,z) = N(|z|^2)", p.q, p.alpha, diag, 1e-13))
        out.append(Check("kernel", "3-point Gram min eigenvalue (negated)", p.q, p.alpha, max(0.0, -min_eig), 1e-10))
    return out


def suite_isometry(grid, n_max=8, order=400):
    out = []
    for p in grid:
        quad = measures.make_quadrature(p, order)
        meas = measures.radial_measure(p, n_max=n_max + 4)
        zs = np.array(_sample_labels(p))
        worst = 0.0
        for n in range(n_max + 1):
            v = np.zeros(n + 1)
            v[n] = 1.0
            vals = bargmann.transform(v, zs, p, quad)
            worst = max(worst, float(np.max(np.abs(vals - zs**n / math.sqrt(x_factorial(n, p))))))
        g = bargmann.isometry_matrix(n_max, p, meas, quad)
        out.append(Check("isometry", f"B[phi_n] = z^n/sqrt(x_n!) n<={n_max}", p.q, p.alpha, worst, 1e-7))
        out.append(Check("isometry", f"transform Gram {n_max + 1}x{n_max + 1}", p.q, p.alpha, float(np.max(np.abs(g - np.eye(n_max + 1)))), 1e-7))
    return out


def suite_corollary(grid, n_max=6, thetas=(0.3, 1.0, math.pi / 3, 2.5)):
    out = []
    for p in grid:
        meas = measures.radial_measure(p, n_max=n_max)
        worst = 0.0
        for th in thetas:
            ref = orthopoly.asc_eval_sym(n_max, None, p, theta=th)
            for n in range(n_max + 1):
                worst = max(worst, abs(bargmann.asc_integral_representation(n, th, p, meas) - ref[n]))
        out.append(Check("corollary", f"integral representation n<={n_max}", p.q, p.alpha, worst, 1e-6))
    return out


def suite_alpha0(grid):
    out = []
    for q in sorted({p.q for p in grid}):
        p = QParams(q, 0.0)
        rep = limits.arik_coon_reduction_report(p)
        for key, val in rep.items():
            out.append(Check("alpha0", key, q, 0.0, val, 1e-11))
        thetas = np.linspace(0.05, math.pi - 0.05, 9)
        zs = np.array(_sample_labels(p))[:, None]
        kern = bargmann.kernel_eval(zs, thetas[None, :], p)
        ref = bargmann.alpha0_kernel(zs, thetas[None, :], q)
        out.append(Check("alpha0", "kernel vs double Pochhammer", q, 0.0, float(np.max(np.abs(kern - ref) / np.maximum(1, np.abs(ref)))), 1e-11))
        w = measures.weight_omega(p=p, theta=thetas)
        out.append(Check("alpha0", "weight vs q-Gaussian", q, 0.0, float(np.max(np.abs(w - measures.weight_omega_qgauss(thetas, q)))), 1e-11))
    return out


QLIMIT_POINTS = ((1.0, 0.4, 0.2), (1.0, 0.3 + 0.4j, 0.7), (0.7, -0.5 + 0.2j, -1.1), (2.0, 0.8j, 1.5))


def suite_qlimit(points=QLIMIT_POINTS, q_list=limits.DEFAULT_Q_LIST):
    out = []
    for nu, z, x in points:
        errs = limits.limit_sweep_q_to_1(nu, z, x, q_list)
        increases = max(0.0, max(b - a for a, b in zip(errs, errs[1:])))
        label = f"nu={nu}, z={z}, x={x}"
        out.append(Check("qlimit", f"error decreasing ({label})", q_list[-1], -(q_list[-1] ** (2 * nu)), float(increases > 0), 0.5))
        out.append(Check("qlimit", f"error at q={q_list[-1]} ({label})", q_list[-1], -(q_list[-1] ** (2 * nu)), errs[-1], 1e-2))
    for n in range(5):
        lhs, rhs = limits.coefficient_limit(n, 1.0, 0.999)
        out.append(Check("qlimit", f"coefficient limit n={n}", 0.999, -(0.999**2), abs(lhs / rhs - 1.0), 0.01))
    return out


SUITES = {
    "moments": lambda grid, cfg: suite_moments(grid, atoms_tol=cfg.get("atoms_tol", 1e-15)),
    "gram": lambda grid, cfg: suite_gram(grid, n_max=cfg.get("n_max", 10), order=cfg.get("quad_order", 400)),
    "genfun": lambda grid, cfg: suite_genfun(grid),
    "kernel": lambda grid, cfg: suite_kernel(grid),
    "isometry": lambda grid, cfg: suite_isometry(grid, order=cfg.get("quad_order", 400)),
    "corollary": lambda grid, cfg: suite_corollary(grid),
    "alpha0": lambda grid, cfg: suite_alpha0(grid),
    "qlimit": lambda grid, cfg: suite_qlimit(),
}


def run(suite, grid, cfg=None):
    """Run one suite (or ``"all"``) and return its checks."""
    cfg = cfg or {}
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        checks.extend(SUITES[name](grid, cfg))
    return checks
