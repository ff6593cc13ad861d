"""Exact arithmetic in the prime field Z_p.

Residues are kept canonical in ``[0, p - 1]``; negative literals are reduced
when an element is built.  Everything here is integer arithmetic: the sign
factor ``sin(p*pi/2)`` that appears in the counting formulas is computed by
:func:`chi4` from ``p mod 4``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import ModulusMismatch, NotInvertible, NotPrime

__all__ = [
    "FpElement",
    "Legendre",
    "OrderCensus",
    "check_prime",
    "chi4",
    "count_order",
    "count_power_solutions",
    "divisors",
    "fp_inv",
    "fp_pow",
    "legendre",
    "mult_order",
    "odd_primes",
    "order_census",
]

IntLike = Union[int, "FpElement"]


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged if it is an odd prime, else raise :class:`NotPrime`."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrime(f"modulus must be an integer, got {p!r}")
    if p < 3 or not _is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    return p


def odd_primes(upper: int) -> list[int]:
    """Odd primes ``3 <= p <= upper`` in ascending order."""
    return [n for n in range(3, upper + 1, 2) if _is_prime(n)]


def _factor(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True, slots=True)
class FpElement:
    """A residue of Z_p, reduced into ``[0, modulus - 1]`` on construction."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        check_prime(self.modulus)
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other: IntLike) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def _new(self, value: int) -> FpElement:
        return FpElement(value, self.modulus)

    def __add__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value - o)

    def __rsub__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o - self.value)

    def __mul__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self) -> FpElement:
        return self._new(-self.value)

    def __truediv__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * fp_inv(self._new(o))

    def __rtruediv__(self, other: IntLike) -> FpElement:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return fp_inv(self) * o

    def __pow__(self, e: int) -> FpElement:
        return fp_pow(self, e)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def _as_fp(a: IntLike, p: int) -> FpElement:
    if isinstance(a, FpElement):
        if a.modulus != p:
            raise ModulusMismatch(f"mod {a.modulus} vs mod {p}")
        return a
    return FpElement(a, p)


def fp_inv(a: FpElement) -> FpElement:
    """Multiplicative inverse; raises :class:`NotInvertible` for zero."""
    if a.value == 0:
        raise NotInvertible(f"0 has no inverse mod {a.modulus}")
    return FpElement(pow(a.value, -1, a.modulus), a.modulus)


def fp_pow(a: FpElement, e: int) -> FpElement:
    """``a**e`` for ``e >= 0``; ``0**0`` is 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return FpElement(pow(a.value, e, a.modulus), a.modulus)


class Legendre(enum.IntEnum):
    NON_RESIDUE = -1
    ZERO = 0
    RESIDUE = 1


def legendre(a: FpElement) -> Legendre:
    """Quadratic character of ``a`` by Euler's criterion."""
    if a.value == 0:
        return Legendre.ZERO
    r = pow(a.value, (a.modulus - 1) // 2, a.modulus)
    return Legendre.RESIDUE if r == 1 else Legendre.NON_RESIDUE


def mult_order(a: FpElement) -> int:
    """Multiplicative order of a nonzero residue.

    Starts from ``p - 1`` and strips prime factors while the power stays 1,
    so the result always divides ``p - 1``.
    """
    if a.value == 0:
        raise NotInvertible(f"0 has no multiplicative order mod {a.modulus}")
    p = a.modulus
    d = p - 1
    for q in _factor(p - 1):
        while d % q == 0 and pow(a.value, d // q, p) == 1:
            d //= q
    return d


@lru_cache(maxsize=256)
def _order_table(p: int) -> tuple[int, ...]:
    # index a -> order of a; slot 0 unused
    return (0,) + tuple(mult_order(FpElement(a, p)) for a in range(1, p))


def count_order(p: int, d: int) -> int:
    """How many elements of Z_p* have multiplicative order exactly ``d``."""
    check_prime(p)
    if d < 1:
        raise ValueError("order must be positive")
    return sum(1 for o in _order_table(p)[1:] if o == d)


def count_power_solutions(p: int, e: int, c: IntLike) -> int:
    """Number of ``t`` in Z_p* with ``t**e == c``, by scanning Z_p*."""
    check_prime(p)
    if e < 1:
        raise ValueError("exponent must be positive")
    target = _as_fp(c, p).value
    return sum(1 for t in range(1, p) if pow(t, e, p) == target)


def chi4(p: int) -> int:
    """+1 when ``p = 1 (mod 4)``, -1 when ``p = 3 (mod 4)``."""
    check_prime(p)
    return 1 if p % 4 == 1 else -1


@dataclass(frozen=True)
class OrderCensus:
    """Element counts of Z_p* by exact multiplicative order."""

    p: int
    theta: dict[int, int]

    def __getitem__(self, d: int) -> int:
        return self.theta.get(d, 0)

    @property
    def total(self) -> int:
        return sum(self.theta.values())


def order_census(p: int) -> OrderCensus:
    check_prime(p)
    counts = Counter(_order_table(p)[1:])
    return OrderCensus(p, {d: counts.get(d, 0) for d in divisors(p - 1)})
