"""
q-numbers and the contravariant form
====================================

Exact arithmetic in Q(v) with q = v^D, and the form on words in the f's.
"""

# %%
from fractions import Fraction

from qforms.cartan import get_datum
from qforms.coeffs import eval_q, qbinom, qint, session_degree
from qforms.hwmodule import build
from qforms.words import WordForm, serre_element

# %%
# q-integers are Laurent polynomials in v; [2] = q + q^-1
print("[2] =", qint(2), "  at q=2:", eval_q(qint(2), 2))
print("[3]_q choose 1 =", qbinom(3, 1))

# %%
# The Gram matrix of the form on the A2 weight space 2a1+a2 of a Verma module
A2 = get_datum("A2")
lam = (Fraction(1, 2), Fraction(2, 3))
D = session_degree(lam)
F = WordForm(A2, lam, D)
print("D =", D, " words:", F.words((2, 1)))
for row in F.gram((2, 1)):
    print("  ", [str(x) for x in row])

# %%
# The quantum Serre element lies in the radical for every weight
s = serre_element(A2, 0, 1, D)
vec = s.to_vector(F.words(s.drop))
print("Serre element pairs to zero:", all(sum(g * c for g, c in zip(row, vec)) == 0 for row in F.gram(s.drop)))

# %%
# Irreducible quotients: weight multiplicities of L(1,1) (the adjoint, dimension 8)
L = build(A2, (1, 1), "irreducible", 4)
print("dims by height:", L.dims_by_height())
