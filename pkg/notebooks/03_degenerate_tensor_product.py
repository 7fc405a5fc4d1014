"""
A tensor product that is not completely reducible
=================================================

L(1) x M(zeta) for integral zeta >= -1 carries a singular vector on which the
canonical form vanishes. The closure oracle, which knows nothing about forms,
agrees with the verdict.
"""

# %%
from qforms.cartan import format_drop, get_datum
from qforms.hwmodule import build
from qforms.tensor import TensorProduct, canonical_gram, closure_oracle, singular_space, verdict

A1 = get_datum("A1")

# %%
T = TensorProduct(build(A1, (1,), "irreducible", 3), build(A1, (-1,), "verma", 3))
res = verdict(T, None, 3)
print(res.conclusion)
for r in res.records:
    print(f"  {format_drop(r['drop']):>4}: dim singular {r['dim_singular']}, gram rank {r['gram_rank']}")
S = singular_space(T, (1,))
print("canonical Gram at a1:", [[str(x) for x in row] for row in canonical_gram(T, S)])
print("oracle:", closure_oracle(T, 3))

# %%
# Sweep zeta: defects appear exactly where the oracle finds them
for zeta in range(-3, 4):
    T = TensorProduct(build(A1, (1,), "irreducible", 4), build(A1, (zeta,), "verma", 4))
    res = verdict(T, None, 4)
    print(f"zeta={zeta:>2}: {res.conclusion:<32} oracle completely reducible: {closure_oracle(T, 4)['completely_reducible']}")
