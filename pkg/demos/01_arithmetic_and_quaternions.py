"""
Arithmetic in Z_p and the quaternions over it
=============================================

Field elements carry their modulus, quaternions are four residues, and
every element obeys x^2 - t x + n = 0.
"""

# %%
from qhpotent import FpElement, Quaternion, legendre, mult_order, potency_index
from qhpotent.general import CharPair

a = FpElement(3, 7)
print("3 * 5 mod 7 =", a * 5)
print("3^-1 mod 7 =", 1 / a)
print("order of 3 mod 7:", mult_order(a))
print("is 2 a square mod 7?", legendre(FpElement(2, 7)).name)

# %%
# The basis relations i^2 = j^2 = k^2 = -1, ij = k.
p = 11
i = Quaternion((0, 1, 0, 0), p)
j = Quaternion((0, 0, 1, 0), p)
print("i*j =", i * j, "  j*i =", j * i, "  i*i =", i * i)

# %%
# Trace and norm collapse powers to a two-term recurrence.
q = Quaternion.parse("1,2,3,4", 7)
t, n = q.trace(), q.norm()
print(f"q = {q}: trace {t}, norm {n}")
print("q^2 - t q + n =", q * q - q * t + Quaternion.scalar(n, 7))

# %%
# So the minimal potency index is a function of (t, n) once q is not a scalar.
for text in ("0,1,1,1", "6,0,0,0", "0,1,0,0", "1,2,3,4"):
    q = Quaternion.parse(text, 7)
    cls = potency_index(q)
    label = "scalar" if q.is_scalar else CharPair.of_quaternion(q).kind.value
    print(f"{text:>9}  {cls.kind.value:<10} index={cls.index}  class={label}")
