"""Three matrices over ℕ whose twisted product is not associative.

Phi is a single row of ones and Theta a single column of ones.  Between
them sits Psi, the bidiagonal matrix with 1 on the diagonal and -1 above it.  Every pairwise
product is defined, yet the two bracketings of Phi Psi Theta differ.
"""

from filtersums import operators as op
from filtersums.interp import show
from filtersums.suites import nonassoc_matrices

phi, psi, theta = nonassoc_matrices()
for name, M in (("Phi", phi), ("Psi", psi), ("Theta", theta)):
    print(f"{name:6}", show(M))

phi_psi = op.mat_mul(phi, psi)
psi_theta = op.mat_mul(psi, theta)
print("Phi Psi  =", show(phi_psi))
print("Psi Theta=", show(psi_theta))

left = op.mat_mul(phi_psi, theta).entry(0, 0)
right = op.mat_mul(phi, psi_theta).entry(0, 0)
print(f"(Phi Psi) Theta = {left}")
print(f"Phi (Psi Theta) = {right}")

try:
    op.alternating_product([phi, psi, theta])
except ArithmeticError as e:
    print("alternating_product refuses:", e)
