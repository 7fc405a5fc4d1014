"""
Hermitian forms at real q
=========================

Finite-dimensional modules are unitary for the compact star structure: every
Hermitian Gram matrix is positive definite at rational q0 > 0.
"""

# %%
from fractions import Fraction

from qforms.cartan import format_drop, get_datum
from qforms.coeffs import q_pow
from qforms.hwmodule import build
from qforms.unitarity import StarData, positivity_check, sl2_norm, sl2_norm_printed

# %%
A2 = get_datum("A2")
print("omega o star = bar:", StarData(A2).omega_star_is_bar())

# %%
M = build(A2, (1, 1), "irreducible", 4)
rep = positivity_check(M, Fraction(11, 10))
print("passed:", rep.passed)
for d, minors in rep.minors.items():
    print(f"  {format_drop(d):>7}: {[str(x) for x in minors]}")

# %%
# The sl2 norm of f^m 1 in L(n), and the printed closed form it differs from by q^(2m)
for m, n in [(1, 1), (1, 3), (2, 3)]:
    print(m, n, sl2_norm(m, n) == sl2_norm_printed(m, n) * q_pow(-2 * m), sl2_norm(m, n))
