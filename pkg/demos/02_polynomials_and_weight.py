# the orthonormal basis phi_n and its weight on I_q
import math

import numpy as np

from qdeformed import QParams, asc_eval_3phi2, asc_eval_sym, basis_phi, make_quadrature, weight_omega, x_to_theta

p = QParams(0.5, -0.5)
R = p.interval_halfwidth
x = np.linspace(-R, R, 7)
print("I_q half width:", R)
print("omega on a coarse grid:", np.round(weight_omega(x, p), 5))

# orthonormality under Gauss-Legendre in theta
quad = make_quadrature(p, 400)
phi = basis_phi(10, quad.nodes, p)
gram = (phi * quad.weights) @ phi.T
print("max |Gram - I| =", np.abs(gram - np.eye(11)).max())

# recurrence vs the terminating 3phi2 (alpha > 0 so sqrt(alpha) is real)
p2 = QParams(0.5, 0.3)
a = math.sqrt(p2.alpha)
th = float(x_to_theta(0.7, 0.5))
print("Q_12(0.7) recurrence:", asc_eval_sym(12, 0.7, p2)[12])
print("Q_12(0.7) 3phi2     :", asc_eval_3phi2(12, th, a, -a, 0.5).real)
print("same sum in floats  :", asc_eval_3phi2(12, th, a, -a, 0.5, method="float").real, "(cancellation)")
