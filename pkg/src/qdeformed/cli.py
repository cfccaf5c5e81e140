"""Command-line front end: ``qdeformed eval|verify|export``.

Tables are written as CSV (floats as ``%.16e``, fixed column order) or JSON.
Complex values are split into ``*_re`` / ``*_im`` columns.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import limits, measures, orthopoly, qcore, states, verify
from .errors import DomainError, NonConvergent, PoleError
from .qcore import QParams, SeriesControl

OUTDIR_ENV = "QDEFORMED_OUTDIR"

CSV_HELP = f"""\
CSV columns
  eval <subject>        subject, <inputs...>, value_re, value_im, tol
  verify <suite>        suite, name, q, alpha, residual, threshold, passed
  export atoms          index, radius, weight        (footer: # sum_weight=...)
  export quadrature     index, node, weight          (node = x in I_q)
  export weight-curve   x, weight                    (--qgauss: x, weight, qgauss)
  export wavefunction-grid  theta, x, value_re, value_im
  export sweep          q, error

Floats use 17 significant digits in scientific notation.  Without --out,
eval/verify print to stdout and export writes <subject>.<format> into
${OUTDIR_ENV} if it is set, else prints to stdout.

Exit codes: 0 ok, 1 failed verification, 2 domain error, 3 convergence failure,
4 file error (the message names the path).
"""


@dataclass(frozen=True)
class RunConfig:
    q: float | None = None
    alpha: float | None = None
    n_max: int = 10
    tol: float = 1e-13
    quad_order: int = 400
    atoms_tol: float = 1e-15
    max_terms: int = 100_000
    fmt: str = "csv"
    out: str | None = None

    @property
    def params(self):
        return QParams(0.5 if self.q is None else self.q, 0.0 if self.alpha is None else self.alpha)

    @property
    def ctrl(self):
        return SeriesControl(rel_tol=self.tol, max_terms=self.max_terms)


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".16e")
    return str(v)


def _split_complex(row):
    out = {}
    for k, v in row.items():
        if isinstance(v, (complex, np.complexfloating)):
            out[k + "_re"] = float(v.real)
            out[k + "_im"] = float(v.imag)
        else:
            out[k] = v
    return out


def render(rows, fmt, footer=()):
    """Serialize a list of dict rows (same keys, same order) to text."""
    rows = [_split_complex(r) for r in rows]
    if fmt == "json":
        clean = [{k: (v.item() if hasattr(v, "item") else v) for k, v in r.items()} for r in rows]
        doc = {"rows": clean}
        for line in footer:
            key, _, val = line.partition("=")
            doc[key] = float(val)
        return json.dumps(doc, indent=1) + "\n"
    if not rows:
        return ""
    cols = list(rows[0])
    lines = [",".join(cols)]
    lines += [",".join(_fmt(r[c]) for c in cols) for r in rows]
    lines += [f"# {f}" for f in footer]
    return "\n".join(lines) + "\n"


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


# ---- eval -------------------------------------------------------------------

EPS = 2.220446049250313e-16


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise DomainError(f"eval {args.subject} needs --{name.replace('_', '-')}")
    return v


def eval_rows(args, cfg):
    s = args.subject
    p, ctrl = cfg.params, cfg.ctrl
    q = p.q
    if s == "bracket":
        n = _need(args, "n")
        return [{"subject": s, "n": n, "q": q, "value": complex(qcore.q_bracket(n, q)), "tol": EPS}]
    if s == "factorial":
        n = _need(args, "n")
        return [{"subject": s, "n": n, "q": q, "value": complex(qcore.q_factorial(n, q)), "tol": EPS * max(n, 1)}]
    if s == "pochhammer":
        a = complex(_need(args, "a"))
        if args.n is None:
            return [{"subject": s, "a": a, "n": "inf", "q": q, "value": qcore.q_pochhammer_inf(a, q, ctrl), "tol": ctrl.rel_tol}]
        return [{"subject": s, "a": a, "n": args.n, "q": q, "value": qcore.q_pochhammer(a, q, args.n), "tol": EPS * max(args.n, 1)}]
    if s == "qexp":
        xi = complex(_need(args, "xi"))
        return [{"subject": s, "xi": xi, "q": q, "value": qcore.q_exp(xi, q, ctrl), "tol": ctrl.rel_tol}]
    if s in ("phi", "asc"):
        n = _need(args, "n")
        if args.theta is not None:
            vals = (orthopoly.basis_phi if s == "phi" else orthopoly.asc_eval_sym)(n, None, p, theta=args.theta)
            x = float(orthopoly.theta_to_x(args.theta, q))
        else:
            x = _need(args, "x")
            vals = orthopoly.basis_phi(n, x, p) if s == "phi" else orthopoly.asc_eval_sym(n, orthopoly._check_interval(x, p), p)
        return [{"subject": s, "n": n, "x": x, "q": q, "alpha": p.alpha, "value": complex(float(vals[n])), "tol": EPS * (n + 1)}]
    if s == "kernel":
        z, w = complex(_need(args, "z")), complex(_need(args, "w"))
        return [{"subject": s, "z": z, "w": w, "q": q, "alpha": p.alpha, "value": states.reproducing_kernel(z, w, p, ctrl), "tol": ctrl.rel_tol}]
    if s == "normalization":
        r2 = _need(args, "r2")
        return [{"subject": s, "r2": r2, "q": q, "alpha": p.alpha, "value": complex(states.normalization(r2, p, ctrl)), "tol": ctrl.rel_tol}]
    if s == "wavefunction":
        z = complex(_need(args, "z"))
        theta = args.theta if args.theta is not None else float(orthopoly.x_to_theta(orthopoly._check_interval(_need(args, "x"), p), q))
        val = states.wavefunction_closed(z, theta, p, ctrl)
        return [{"subject": s, "z": z, "theta": theta, "q": q, "alpha": p.alpha, "value": val, "tol": ctrl.rel_tol}]
    if s == "weight":
        if args.theta is not None:
            theta = args.theta
        else:
            theta = float(orthopoly.x_to_theta(orthopoly._check_interval(_need(args, "x"), p), q))
        val = float(measures.weight_omega(p=p, theta=theta, ctrl=ctrl))
        x = float(orthopoly.theta_to_x(theta, q))
        return [{"subject": s, "x": x, "q": q, "alpha": p.alpha, "value": complex(val), "tol": ctrl.rel_tol}]
    raise DomainError(f"unknown eval subject {s!r}")


# ---- export -----------------------------------------------------------------


def export_table(args, cfg):
    """Return ``(rows, footer)`` for an export subject."""
    s = args.subject
    p, ctrl = cfg.params, cfg.ctrl
    if s == "atoms":
        m = measures.radial_measure(p, tol=cfg.atoms_tol, n_max=cfg.n_max)
        rows = [{"index": k, "radius": float(r), "weight": float(w)} for k, (r, w) in enumerate(m.atoms)]
        return rows, [f"sum_weight={math.fsum(m.weights):.16e}"]
    if s == "quadrature":
        quad = measures.make_quadrature(p, cfg.quad_order, ctrl)
        return [{"index": k, "node": float(x), "weight": float(w)} for k, (x, w) in enumerate(zip(quad.nodes, quad.weights))], []
    if s == "weight-curve":
        x = np.linspace(-p.interval_halfwidth, p.interval_halfwidth, args.points)
        theta = orthopoly.x_to_theta(x, p.q)
        w = measures.weight_omega(p=p, theta=theta, ctrl=ctrl)
        if args.qgauss:
            g = measures.weight_omega_qgauss(theta, p.q, ctrl)
            return [{"x": float(a), "weight": float(b), "qgauss": float(c)} for a, b, c in zip(x, w, g)], []
        return [{"x": float(a), "weight": float(b)} for a, b in zip(x, w)], []
    if s == "wavefunction-grid":
        z = complex(args.z if args.z is not None else "0.5")
        theta = np.linspace(0.0, math.pi, args.points)
        vals = states.wavefunction_closed(z, theta, p, ctrl)
        x = orthopoly.theta_to_x(theta, p.q)
        return [{"theta": float(t), "x": float(a), "value": complex(v)} for t, a, v in zip(theta, x, vals)], []
    if s == "sweep":
        nu = args.nu
        z = complex(args.z if args.z is not None else "0.4")
        x = 0.2 if args.x is None else args.x
        qs = tuple(args.q_list) if args.q_list else limits.DEFAULT_Q_LIST
        errs = limits.limit_sweep_q_to_1(nu, z, x, qs, ctrl)
        return [{"q": float(a), "error": float(e)} for a, e in zip(qs, errs)], []
    raise DomainError(f"unknown export subject {s!r}")


# ---- argument parsing --------------------------------------------------------


def _common(parser):
    g = parser.add_argument_group("run configuration")
    g.add_argument("--q", type=float, default=None, help="deformation parameter, 0 < q < 1 (eval/export default 0.5)")
    g.add_argument("--alpha", type=float, default=None, help="second parameter, -1 < alpha < q (eval/export default 0)")
    g.add_argument("--nmax", type=int, default=10, help="largest degree used (default 10)")
    g.add_argument("--tol", type=float, default=1e-13, help="relative stopping tolerance of series (default 1e-13)")
    g.add_argument("--quad-order", type=int, default=400, help="Gauss-Legendre order (default 400)")
    g.add_argument("--atoms-tol", type=float, default=1e-15, help="tail tolerance of the atomic measure (default 1e-15)")
    g.add_argument("--max-terms", type=int, default=100_000, help="series term cap before reporting non-convergence")
    g.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
    g.add_argument("--out", default=None, metavar="PATH", help="output file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdeformed",
        description="Generalized q-deformed coherent states: evaluation, verification and export.",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one quantity", epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    pe.add_argument("subject", choices=("bracket", "factorial", "pochhammer", "qexp", "phi", "asc", "kernel", "normalization", "wavefunction", "weight"))
    pe.add_argument("--n", type=int)
    pe.add_argument("--x", type=float, help="point of I_q")
    pe.add_argument("--theta", type=float, help="angle, x = 2 cos(theta)/sqrt(1-q)")
    pe.add_argument("--a", help="Pochhammer base (complex literal, e.g. 0.5+0.1j)")
    pe.add_argument("--xi", help="q-exponential argument (complex literal)")
    pe.add_argument("--z", help="label (complex literal)")
    pe.add_argument("--w", help="second kernel label (complex literal)")
    pe.add_argument("--r2", type=float, help="|z|^2 for the normalization")
    _common(pe)

    pv = sub.add_parser("verify", help="run an invariant suite", epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    pv.add_argument("suite", choices=tuple(verify.SUITES) + ("all",))
    _common(pv)

    px = sub.add_parser("export", help="write a table for plotting", epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    px.add_argument("subject", choices=("atoms", "quadrature", "weight-curve", "wavefunction-grid", "sweep"))
    px.add_argument("--points", type=int, default=201, help="grid size for curves (default 201)")
    px.add_argument("--qgauss", action="store_true", help="weight-curve: add the q-Gaussian column")
    px.add_argument("--z", help="wavefunction-grid/sweep label (complex literal)")
    px.add_argument("--x", type=float, help="sweep: Meixner-Pollaczek variable (default 0.2)")
    px.add_argument("--nu", type=float, default=1.0, help="sweep: nu > 0 (default 1)")
    px.add_argument("--q-list", type=float, nargs="+", help="sweep: q values (default 0.9 0.99 0.999)")
    _common(px)
    return parser


def config_from(args):
    cfg = RunConfig(args.q, args.alpha, args.nmax, args.tol, args.quad_order, args.atoms_tol, args.max_terms, args.fmt, args.out)
    # validate at parse time
    cfg.ctrl
    if cfg.q is not None or cfg.alpha is not None:
        cfg.params
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from(args)
        if args.command == "eval":
            _emit(render(eval_rows(args, cfg), cfg.fmt), cfg.out)
            return 0
        if args.command == "verify":
            grid = verify.default_grid(cfg.q, cfg.alpha)
            if not grid:
                raise DomainError("no valid (q, alpha) pair in the requested grid")
            opts = {"n_max": cfg.n_max, "quad_order": cfg.quad_order, "atoms_tol": cfg.atoms_tol}
            checks = verify.run(args.suite, grid, opts)
            failed = [c for c in checks if not c.passed]
            _emit(render([c.as_dict() for c in checks], cfg.fmt), cfg.out)
            worst = max(c.residual / c.threshold for c in checks)
            print(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} passed, worst residual/threshold {worst:.3e}", file=sys.stderr)
            return 1 if failed else 0
        rows, footer = export_table(args, cfg)
        path = cfg.out
        if path is None and os.environ.get(OUTDIR_ENV):
            path = os.path.join(os.environ[OUTDIR_ENV], f"{args.subject}.{cfg.fmt}")
        _emit(render(rows, cfg.fmt, footer), path)
        return 0
    except (DomainError, PoleError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except NonConvergent as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
