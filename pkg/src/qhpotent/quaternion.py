"""Quaternions over Z_p with basis (1, i, j, k) and i^2 = j^2 = k^2 = -1.

The product is written once, in :func:`mul_components`, as plain arithmetic
on four coefficient slots.  It accepts Python ints or equal-shaped integer
numpy arrays, so the exhaustive oracle and the scalar :class:`Quaternion`
type run on the same table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ModulusMismatch
from .fp import FpElement, check_prime

__all__ = [
    "PotencyClass",
    "PotencyKind",
    "Quaternion",
    "conjugate",
    "default_cap",
    "is_nilpotent",
    "is_zero_divisor",
    "mul_components",
    "norm",
    "potency_index",
    "quat_mul",
    "quat_pow",
    "trace",
]


def mul_components(a, b, p):
    """Hamilton product of coefficient 4-tuples, reduced mod ``p``.

    Basis table: ij = k, jk = i, ki = j, ji = -k, kj = -i, ik = -j.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3) % p,
        (a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2) % p,
        (a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1) % p,
        (a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0) % p,
    )


Scalar = Union[int, FpElement]


@dataclass(frozen=True, slots=True)
class Quaternion:
    """``c0 + c1*i + c2*j + c3*k`` over Z_p.

    Coefficients are stored as canonical ints; ``c0`` .. ``c3`` expose them
    as :class:`FpElement`.
    """

    coeffs: tuple[int, int, int, int]
    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if len(self.coeffs) != 4:
            raise ValueError("a quaternion has exactly four coefficients")
        object.__setattr__(self, "coeffs", tuple(int(c) % self.p for c in self.coeffs))

    @classmethod
    def of(cls, p: int, c0: Scalar = 0, c1: Scalar = 0, c2: Scalar = 0, c3: Scalar = 0) -> Quaternion:
        return cls(tuple(int(c) for c in (c0, c1, c2, c3)), p)

    @classmethod
    def scalar(cls, s: Scalar, p: int) -> Quaternion:
        return cls((int(s), 0, 0, 0), p)

    @classmethod
    def one(cls, p: int) -> Quaternion:
        return cls((1, 0, 0, 0), p)

    @classmethod
    def zero(cls, p: int) -> Quaternion:
        return cls((0, 0, 0, 0), p)

    @classmethod
    def parse(cls, literal: str, p: int) -> Quaternion:
        """Parse the comma list ``"c0,c1,c2,c3"``; negative entries are reduced."""
        parts = [s.strip() for s in literal.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated residues, got {literal!r}")
        try:
            coeffs = tuple(int(s) for s in parts)
        except ValueError:
            raise ValueError(f"non-integer coefficient in {literal!r}") from None
        return cls(coeffs, p)

    @property
    def c0(self) -> FpElement:
        return FpElement(self.coeffs[0], self.p)

    @property
    def c1(self) -> FpElement:
        return FpElement(self.coeffs[1], self.p)

    @property
    def c2(self) -> FpElement:
        return FpElement(self.coeffs[2], self.p)

    @property
    def c3(self) -> FpElement:
        return FpElement(self.coeffs[3], self.p)

    @property
    def is_scalar(self) -> bool:
        return self.coeffs[1] == self.coeffs[2] == self.coeffs[3] == 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: Quaternion) -> None:
        if other.p != self.p:
            raise ModulusMismatch(f"mod {self.p} vs mod {other.p}")

    def __add__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.p)

    def __sub__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)), self.p)

    def __neg__(self) -> Quaternion:
        return Quaternion(tuple(-x for x in self.coeffs), self.p)

    def __mul__(self, other: Union[Quaternion, Scalar]) -> Quaternion:
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, FpElement):
            if other.modulus != self.p:
                raise ModulusMismatch(f"mod {self.p} vs mod {other.modulus}")
            other = other.value
        if isinstance(other, int):
            return Quaternion(tuple(x * other for x in self.coeffs), self.p)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> Quaternion:
        # scalars are central, so left and right scaling agree
        return self.__mul__(other)

    def __pow__(self, e: int) -> Quaternion:
        return quat_pow(self, e)

    def conjugate(self) -> Quaternion:
        return conjugate(self)

    def trace(self) -> FpElement:
        return trace(self)

    def norm(self) -> FpElement:
        return norm(self)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    if a.p != b.p:
        raise ModulusMismatch(f"mod {a.p} vs mod {b.p}")
    return Quaternion(mul_components(a.coeffs, b.coeffs, a.p), a.p)


def conjugate(q: Quaternion) -> Quaternion:
    c0, c1, c2, c3 = q.coeffs
    return Quaternion((c0, -c1, -c2, -c3), q.p)


def trace(q: Quaternion) -> FpElement:
    """``q + conj(q)``, which is the scalar ``2*c0``."""
    return FpElement(2 * q.coeffs[0], q.p)


def norm(q: Quaternion) -> FpElement:
    """``q * conj(q)``, the sum of the four squared coefficients."""
    return FpElement(sum(c * c for c in q.coeffs), q.p)


def quat_pow(q: Quaternion, e: int) -> Quaternion:
    """``q**e`` by repeated multiplication; ``q**0`` is 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    out = (1, 0, 0, 0)
    for _ in range(e):
        out = mul_components(out, q.coeffs, q.p)
    return Quaternion(out, q.p)


def is_nilpotent(q: Quaternion) -> bool:
    """True iff trace and norm both vanish, i.e. ``q*q == 0``.  Includes 0."""
    return trace(q).value == 0 and norm(q).value == 0


def is_zero_divisor(q: Quaternion) -> bool:
    return not q.is_zero and norm(q).value == 0


class PotencyKind(str, enum.Enum):
    POTENT = "potent"
    NILPOTENT = "nilpotent"
    NO_INDEX = "no-index-within-cap"


@dataclass(frozen=True)
class PotencyClass:
    """Classification of one element.

    ``index`` is the least ``k >= 2`` with ``q**k == q`` for potent elements,
    2 (the nilpotency index) for nonzero nilpotents, and None when the cap
    ran out first.  Zero is filed as potent with index 2.
    """

    kind: PotencyKind
    index: Optional[int]


def default_cap(p: int) -> int:
    """Largest possible minimal potency index: multiplicative orders stay below p**2."""
    return p * p + 1


def potency_index(q: Quaternion, cap: Optional[int] = None) -> PotencyClass:
    if cap is None:
        cap = default_cap(q.p)
    if cap < 2:
        raise ValueError("cap must be at least 2")
    square = mul_components(q.coeffs, q.coeffs, q.p)
    if square == q.coeffs:
        return PotencyClass(PotencyKind.POTENT, 2)
    if not any(square):
        return PotencyClass(PotencyKind.NILPOTENT, 2)
    cur = square
    for k in range(3, cap + 1):
        cur = mul_components(cur, q.coeffs, q.p)
        if cur == q.coeffs:
            return PotencyClass(PotencyKind.POTENT, k)
    return PotencyClass(PotencyKind.NO_INDEX, None)
