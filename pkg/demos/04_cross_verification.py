"""
Three methods, one answer
=========================

Closed form, class reduction and exhaustive enumeration side by side, plus
the literal general-formula reading that does not always agree.
"""

# %%
from qhpotent import eval_theorem21, verify

for record in verify(13, 6):
    print(record.k, record.values, "agree" if record.agree else "MISMATCH")

# %%
# At p = 29, k = 5 the three methods agree on a value other than the published one.
row = verify(29, 5)[-1]
print(row.values)
for note in row.notes:
    print("note:", note)

# %%
# The literal general formula is exact for k = 3 once the scalar term is kept,
# and overcounts at p = 5, k = 5 by the 30 tripotent pure quaternions of norm -1.
for p, k in ((3, 3), (7, 4), (5, 5), (13, 5)):
    r = eval_theorem21(p, k)
    print(f"p={p} k={k}: literal {r.literal}, with scalars {r.with_scalars}, class count {r.general}")
