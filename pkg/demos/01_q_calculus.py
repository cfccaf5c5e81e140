# q-numbers, Pochhammer symbols and the q-exponential
import numpy as np

from qdeformed import QParams, q_bracket, q_exp, q_exp_product, q_pochhammer_inf, x_factorial, x_seq

q = 0.5
print("[n]_q for n=0..5:", [q_bracket(n, q) for n in range(6)])
print("(q;q)_inf =", q_pochhammer_inf(q, q).real)

# the two routes to e_q agree inside the disk |xi|(1-q) < 1
for xi in (0.5, 1.9, -1.9, 1.2j):
    print(f"e_q({xi}) series={q_exp(xi, q):.15f}  product={q_exp_product(xi, q):.15f}")

# the deformed sequence behind the states: x_n = (1 + alpha q^(n-1)) [n]_q
p = QParams(q, 0.25)
print("x_n:", np.round([x_seq(n, p) for n in range(6)], 6))
print("x_n!:", np.round([x_factorial(n, p) for n in range(6)], 6))
