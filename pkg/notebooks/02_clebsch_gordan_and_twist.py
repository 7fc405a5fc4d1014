"""
Singular vectors and the extremal twist
=======================================

For L(m) x L(n) over A1 the singular vectors sit at drops 0..min(m, n) and the
canonical form is non-degenerate on each of them.
"""

# %%
from qforms.cartan import format_drop, get_datum
from qforms.hwmodule import build
from qforms.tensor import TensorProduct, canonical_gram, singular_space, theta, verdict

A1 = get_datum("A1")

# %%
for m, n in [(1, 1), (2, 1), (3, 2)]:
    T = TensorProduct(build(A1, (m,), "irreducible", m + n), build(A1, (n,), "irreducible", m + n))
    res = verdict(T, None, m + n)
    sing = [format_drop(r["drop"]) for r in res.records if r["dim_singular"]]
    print(f"L({m}) x L({n}): {res.conclusion}, singular at {sing}")

# %%
# The twist reproduces the canonical form: <theta v_i, v_j> = <u_i, u_j>
T = TensorProduct(build(A1, (2,), "irreducible", 4), build(A1, (2,), "irreducible", 4))
for d in [(0,), (1,), (2,)]:
    rep = theta(T, d)
    print(format_drop(d), "theta =", [str(x) for x in rep.matrix[0]], " pullback:", rep.pullback_ok)
    print("    canonical Gram =", [str(x) for x in canonical_gram(T, singular_space(T, d))[0]])

# %%
# A2: the fundamental modules L(1,0) x L(0,1) decompose as L(1,1) + L(0,0)
A2 = get_datum("A2")
T = TensorProduct(build(A2, (1, 0), "irreducible", 4), build(A2, (0, 1), "irreducible", 4))
res = verdict(T, None, 4)
print(res.conclusion, [format_drop(r["drop"]) for r in res.records if r["dim_singular"]])
