"""Closed-form censuses of special elements and of k-potents for k = 2..5.

Conventions on the trivial elements: the idempotent count includes 0 and 1,
and the nilpotent and zero-divisor counts include 0.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import InvalidIndex
from .fp import FpElement, Legendre, check_prime, count_order, count_power_solutions, legendre
from .forms import form_context, sphere_count

__all__ = [
    "CensusResult",
    "FourPotentTerms",
    "FivePotentTerms",
    "closed_kpotent",
    "fivepotent_count",
    "fivepotent_terms",
    "fourpotent_count",
    "fourpotent_terms",
    "idempotent_count",
    "nilpotent_count",
    "tripotent_count",
    "zero_divisor_count",
    "zero_norm_nonzero_trace_count",
]

CLOSED_FORM_KS = (2, 3, 4, 5)


@dataclass(frozen=True)
class CensusResult:
    """A named count and the method that produced it.

    ``method`` is one of ``closed-form``, ``general``, ``paper-literal``,
    ``oracle``.
    """

    p: int
    kind: str
    count: int
    method: str
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if not 0 <= self.count <= self.p**4:
            raise ValueError(f"count {self.count} outside [0, p^4]")

    def to_dict(self) -> dict:
        d = asdict(self)
        return {key: d[key] for key in ("p", "kind", "k", "count", "method")}


def zero_divisor_count(p: int) -> int:
    """Quaternions of norm 0, zero included (the non-units of the split algebra).

    Excluding 0 gives ``p**3 + p**2 - p - 1``; compare
    :func:`qhpotent.quaternion.is_zero_divisor`, which is False for 0.
    """
    check_prime(p)
    return p**3 + p**2 - p


def nilpotent_count(p: int) -> int:
    """Elements with ``x*x == 0``, zero included."""
    check_prime(p)
    return p**2


def idempotent_count(p: int) -> int:
    """Elements with ``x*x == x``, both 0 and 1 included."""
    check_prime(p)
    return p**2 + p + 2


def zero_norm_nonzero_trace_count(p: int) -> int:
    check_prime(p)
    return p**3 - p


def tripotent_count(p: int) -> int:
    """Elements of minimal potency index 3.

    ``p(p+1)`` with norm 0 and trace -1 or 1 of order 2, ``p(p+1)`` pure
    imaginary elements of norm -1, and the scalar -1.
    """
    check_prime(p)
    return p * (p + 1) + p * (p + 1) + 1


def _excluding_scalar(p: int, radius: FpElement) -> int:
    # a zero radius also admits the all-zero imaginary part, which is the scalar t/2
    count = sphere_count(p, radius)
    return count - 1 if radius.value == 0 else count


@dataclass(frozen=True)
class FourPotentTerms:
    p: int
    theta: int
    upsilon: int
    sphere: int
    three_is_square: Legendre

    @property
    def total(self) -> int:
        return self.theta * (self.p**2 + self.p + 1) + self.upsilon * self.sphere


def fourpotent_terms(p: int) -> FourPotentTerms:
    """Ingredients of the 4-potent count.

    ``theta`` counts scalars of order 3 (each gives ``p(p+1)`` norm-0
    elements plus itself), ``upsilon`` the traces t with t^3 = -1, and
    ``sphere`` the non-scalar elements of one such trace with norm t^2.
    """
    check_prime(p)
    # any root of t^3 = -1 gives the same count; p - 1 always is one
    t = FpElement(-1, p)
    return FourPotentTerms(
        p=p,
        theta=count_order(p, 3),
        upsilon=count_power_solutions(p, 3, -1),
        sphere=_excluding_scalar(p, 3 * t * t / 4),
        three_is_square=legendre(FpElement(3, p)),
    )


def fourpotent_count(p: int) -> int:
    return fourpotent_terms(p).total


@dataclass(frozen=True)
class FivePotentTerms:
    p: int
    theta: int
    upsilon: int
    sphere: int

    @property
    def total(self) -> int:
        return self.theta * (self.p**2 + self.p + 1) + (self.upsilon + 1) * self.sphere


def fivepotent_terms(p: int) -> FivePotentTerms:
    """Ingredients of the 5-potent count.

    ``theta`` scalars of order 4, ``upsilon`` traces with t^4 = -4 (norm
    t^2/2), and ``sphere`` the common class size, which also counts the
    pure imaginary square roots of -1 (the ``+ 1`` multiplier).
    """
    check_prime(p)
    ctx = form_context(p)
    return FivePotentTerms(
        p=p,
        theta=count_order(p, 4),
        upsilon=count_power_solutions(p, 4, -4),
        sphere=2 * ctx.n0 + (p - 2) * ctx.circle,
    )


def fivepotent_count(p: int) -> int:
    return fivepotent_terms(p).total


def closed_kpotent(p: int, k: int) -> int:
    """Closed-form count of minimal-index-k elements; only k in 2..5."""
    if k == 2:
        return idempotent_count(p)
    if k == 3:
        return tripotent_count(p)
    if k == 4:
        return fourpotent_count(p)
    if k == 5:
        return fivepotent_count(p)
    raise InvalidIndex(f"no closed form for k={k}; closed forms cover k in {CLOSED_FORM_KS}")
