"""
Counting k-potent quaternions
=============================

Closed forms for k = 2..5, the class reduction for any k, and the tables
they produce.
"""

# %%
from qhpotent import closed_kpotent, count_kpotent, kpotent_spectrum
from qhpotent.closed import fivepotent_terms, fourpotent_terms
from qhpotent.fp import odd_primes

primes = odd_primes(29)
print(" p " + "".join(f"{'k=' + str(k):>8}" for k in (2, 3, 4, 5)))
for p in primes:
    print(f"{p:>2} " + "".join(f"{closed_kpotent(p, k):>8}" for k in (2, 3, 4, 5)))

# %%
# The 4- and 5-potent forms split into a zero-norm part and a sphere part.
for p in (7, 13, 29):
    f4, f5 = fourpotent_terms(p), fivepotent_terms(p)
    print(f"p={p}: k=4 theta={f4.theta} upsilon={f4.upsilon} sphere={f4.sphere} -> {f4.total};"
          f" k=5 theta={f5.theta} upsilon={f5.upsilon} sphere={f5.sphere} -> {f5.total}")

# %%
# The class reduction agrees and keeps going past k = 5.
for p in (3, 5, 7):
    spectrum = kpotent_spectrum(p)
    print(f"p={p}: nonzero nilpotents {p * p - 1}, spectrum {spectrum}, total {p * p - 1 + sum(spectrum.values())}")

# %%
assert all(closed_kpotent(p, k) == count_kpotent(p, k) for p in primes for k in (2, 3, 4, 5))
print("closed forms match the class reduction for p <=", primes[-1])
