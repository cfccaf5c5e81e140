# alpha = -q^(2 nu), q -> 1: Barut-Girardello states appear
from qdeformed.limits import BGTarget, bg_wavefunction, coefficient_limit, limit_sweep_q_to_1

nu, z, x = 1.0, 0.4 + 0.2j, 0.3
print("target:", bg_wavefunction(BGTarget(nu, z, x)))
# error drops about tenfold per decade of 1 - q
# (beyond q = 0.999 the infinite products need more than the default max_terms)
qs = (0.9, 0.99, 0.999)
for q, err in zip(qs, limit_sweep_q_to_1(nu, z, x, qs)):
    print(f"q={q}: error {err:.2e}")

for n in range(5):
    lhs, rhs = coefficient_limit(n, nu, 0.999)
    print(f"n={n}: (1-q)^n/x_n! = {lhs:.6f}   1/(n!(2nu)_n) = {rhs:.6f}")
