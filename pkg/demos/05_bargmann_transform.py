# the Bargmann-type transform onto holomorphic functions on the disk
import numpy as np

from qdeformed import QParams, isometry_matrix, make_quadrature, radial_measure, transform, x_factorial
from qdeformed.bargmann import asc_integral_representation
from qdeformed.orthopoly import asc_eval_sym

p = QParams(0.5, -0.5)
quad = make_quadrature(p, 400)
z = np.array([0.3, 0.5j, -0.6 + 0.2j])

# phi_3 goes to the monomial z^3 / sqrt(x_3!)
v = np.zeros(4)
v[3] = 1.0
print("B[phi_3](z):      ", transform(v, z, p, quad))
print("z^3/sqrt(x_3!):   ", z**3 / np.sqrt(x_factorial(3, p)))

# a function given by samples works the same way
print("B[exp(-x^2)](z):  ", transform(lambda x: np.exp(-(x**2)), z, p, quad))

meas = radial_measure(p)
g = isometry_matrix(8, p, meas, quad)
print("isometry: max |G - I| =", np.abs(g - np.eye(9)).max())

th = np.pi / 3
print("Q_n by integral:  ", [round(asc_integral_representation(n, th, p, meas), 10) for n in range(5)])
print("Q_n by recurrence:", asc_eval_sym(4, None, p, theta=th).round(10).tolist())
