"""Generalized q-deformed coherent states built on x_n = (1 + alpha q^(n-1)) [n]_q."""

from .errors import AccuracyLoss, DomainError, NonConvergent, PoleError, PositivityViolation, TruncationWarning
from .qcore import (
    DEFAULT_CONTROL,
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
from .orthopoly import (
    asc_eval_3phi2,
    asc_eval_sym,
    basis_phi,
    meixner_pollaczek,
    p_monic_eval,
    q_hermite_cont,
    rogers_szego,
    theta_to_x,
    x_to_theta,
)
from .measures import make_quadrature, radial_measure, radial_moment, weight_omega, weight_omega_qgauss
from .states import (
    CoherentState,
    cs_coefficients,
    normalization,
    reproducing_kernel,
    wavefunction_closed,
    wavefunction_series,
)
from .bargmann import isometry_matrix, kernel_eval, transform
from .limits import bg_wavefunction, limit_sweep_q_to_1

__version__ = "0.1.0"
