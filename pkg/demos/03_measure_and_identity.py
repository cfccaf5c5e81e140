# atoms of the radial measure and the resolution of the identity
import numpy as np

from qdeformed import QParams, radial_measure, radial_moment, x_factorial
from qdeformed.states import identity_resolution_matrix

for alpha in (-0.5, 0.0, 0.25):
    p = QParams(0.5, alpha)
    m = radial_measure(p)
    err = max(abs(radial_moment(m, n) / x_factorial(n, p) - 1) for n in range(13))
    print(f"alpha={alpha:+.2f}: {len(m.weights)} atoms, sum w = {m.weights.sum():.15f}, worst moment error {err:.1e}")

p = QParams(0.8, -0.5)
m = radial_measure(p)
print("first atoms (radius, weight):")
print(np.array(m.atoms[:5]))
print("identity check, diagonal:", np.round(np.diag(identity_resolution_matrix(8, p, m)), 14))
