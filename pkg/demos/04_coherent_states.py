# coherent states: normalization, overlaps and wavefunctions
import numpy as np

from qdeformed import QParams, cs_coefficients, normalization, reproducing_kernel, wavefunction_closed, wavefunction_series
from qdeformed.states import ladder_apply

p = QParams(0.5, 0.25)
z = 0.8 * np.exp(0.6j)
w = -0.3 + 0.9j
print("N(|z|^2) =", normalization(abs(z) ** 2, p))

a, b = cs_coefficients(z, None, p), cs_coefficients(w, None, p)
print("truncation order for z:", a.n_max)
print("<z|z> =", a.overlap(a))
print("<z|w> =", a.overlap(b))
print("K(z,w)/sqrt(N N) =", reproducing_kernel(z, w, p) / np.sqrt(normalization(abs(z) ** 2, p) * normalization(abs(w) ** 2, p)))

# states are eigenvectors of the lowering operator, eigenvalue sqrt(2) conj(z)
low = ladder_apply(a.coeffs, "lower", p)
print("a theta_z / theta_z:", (low[:5] / a.coeffs[:5]).round(12))

# basis series vs closed form
theta = np.linspace(0.2, 2.9, 5)
x = 2 * np.cos(theta) / np.sqrt(1 - p.q)
s, tail = wavefunction_series(z, x, p)
c = wavefunction_closed(z, theta, p)
print("series - closed:", np.abs(s - c).max(), " tail estimate:", tail)
