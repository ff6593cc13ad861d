"""
Solutions of x^k = 1
====================

Units whose powers return to 1 are grouped by the exact exponent d that
brings them home; d + 1 is then their potency index.
"""

# %%
from qhpotent import count_roots, eval_theorem22
from qhpotent.oracle import oracle_count_roots

for p, k in ((3, 4), (3, 6), (5, 4), (7, 1)):
    r = count_roots(p, k)
    print(f"N_{p}({k}) = {r.breakdown()} = {r.total}")

# %%
# The same totals from potent counts by divisor, and from brute force.
for p in (3, 5, 7):
    row = [(k, count_roots(p, k).total, eval_theorem22(p, k), oracle_count_roots(p, k)) for k in range(1, 9)]
    print(f"p={p}:", " ".join(f"{k}:{a}" for k, a, b, c in row))
    assert all(a == b == c for _, a, b, c in row)
