"""Potency and root censuses for arbitrary k, by (trace, norm) class.

Every non-scalar quaternion x satisfies its minimal polynomial
X^2 - t X + n with t = trace(x), n = norm(x), so ``x**m = a*x + b`` where
``(a, b)`` come from the linear recurrence

    (a, b) -> (a*t + b, -a*n),   starting at m = 1 with (1, 0).

Whether x is k-potent, or a root of x**k = 1, therefore depends only on the
pair (t, n), and the population of each class is a sphere count.  Scalars
(whose minimal polynomial is linear) are handled by their multiplicative
order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidIndex, ModulusMismatch, NilpotentClass
from .fp import FpElement, Legendre, check_prime, count_order, divisors, legendre, mult_order
from .forms import sphere_count
from .quaternion import Quaternion, default_cap, norm, trace

__all__ = [
    "CharPair",
    "ClassKind",
    "ReductionState",
    "RootCountResult",
    "Theorem21Reading",
    "charpoly_min_index",
    "class_pairs",
    "count_kpotent",
    "count_roots",
    "eval_theorem21",
    "eval_theorem22",
    "kpotent_spectrum",
    "nonscalar_class_count",
    "power_state",
    "reduce_step",
]


class ClassKind(str, enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class CharPair:
    """The (trace, norm) pair of a class of non-scalar quaternions."""

    t: FpElement
    n: FpElement

    def __post_init__(self) -> None:
        if self.t.modulus != self.n.modulus:
            raise ModulusMismatch(f"mod {self.t.modulus} vs mod {self.n.modulus}")

    @classmethod
    def of(cls, t: int, n: int, p: int) -> CharPair:
        return cls(FpElement(t, p), FpElement(n, p))

    @classmethod
    def of_quaternion(cls, q: Quaternion) -> CharPair:
        return cls(trace(q), norm(q))

    @property
    def p(self) -> int:
        return self.t.modulus

    @property
    def discriminant(self) -> FpElement:
        return self.t * self.t - 4 * self.n

    @property
    def kind(self) -> ClassKind:
        d = legendre(self.discriminant)
        if d is Legendre.ZERO:
            return ClassKind.RAMIFIED
        return ClassKind.SPLIT if d is Legendre.RESIDUE else ClassKind.INERT


@dataclass(frozen=True)
class ReductionState:
    """``X**m = a*X + b`` modulo the class quadratic."""

    a: FpElement
    b: FpElement
    m: int

    @classmethod
    def start(cls, p: int) -> ReductionState:
        return cls(FpElement(1, p), FpElement(0, p), 1)


def reduce_step(state: ReductionState, pair: CharPair) -> ReductionState:
    """Advance from X**m to X**(m+1) using X**2 = t*X - n."""
    a, b = state.a, state.b
    return ReductionState(a * pair.t + b, -(a * pair.n), state.m + 1)


def power_state(pair: CharPair, m: int) -> ReductionState:
    if m < 1:
        raise ValueError("m must be at least 1")
    state = ReductionState.start(pair.p)
    while state.m < m:
        state = reduce_step(state, pair)
    return state


# Integer fast paths used by the census loops.  Same recurrence as reduce_step.


def _min_index(t: int, n: int, p: int, cap: int) -> Optional[int]:
    """Least k in [2, cap] with X**k = X, or None."""
    a, b = 1, 0
    for k in range(2, cap + 1):
        a, b = (a * t + b) % p, (-a * n) % p
        if a == 1 and b == 0:
            return k
    return None


def _unit_exponent(t: int, n: int, p: int, bound: int) -> Optional[int]:
    """Least m in [1, bound] with X**m = 1, or None."""
    a, b = 1, 0
    for m in range(1, bound + 1):
        if a == 0 and b == 1:
            return m
        a, b = (a * t + b) % p, (-a * n) % p
    return None


def _state_at(t: int, n: int, p: int, m: int) -> tuple[int, int]:
    a, b = 1, 0
    for _ in range(m - 1):
        a, b = (a * t + b) % p, (-a * n) % p
    return a, b


def _class_size(t: int, n: int, p: int) -> int:
    # x = t/2 + v with |v|^2 = n - t^2/4; v = 0 is the scalar, present only for a zero radius
    inv4 = pow(4, -1, p)
    radius = (n - t * t * inv4) % p
    count = sphere_count(p, radius)
    return count - 1 if radius == 0 else count


def class_pairs(p: int):
    """All (t, n) in Z_p^2 except (0, 0), as ints, in lexicographic order."""
    for t in range(p):
        for n in range(p):
            if t or n:
                yield t, n


def charpoly_min_index(pair: CharPair, cap: Optional[int] = None) -> Optional[int]:
    """Minimal potency index shared by the non-scalar elements of ``pair``."""
    p = pair.p
    if pair.t.value == 0 and pair.n.value == 0:
        raise NilpotentClass("trace 0 and norm 0: nonzero nilpotents have no potency index")
    if cap is None:
        cap = default_cap(p)
    if cap < 2:
        raise ValueError("cap must be at least 2")
    return _min_index(pair.t.value, pair.n.value, p, cap)


def nonscalar_class_count(pair: CharPair) -> int:
    """Number of non-scalar quaternions with this trace and norm."""
    return _class_size(pair.t.value, pair.n.value, pair.p)


def _check_k(p: int, k: int) -> None:
    if not isinstance(k, int) or k < 2 or k > default_cap(p):
        raise InvalidIndex(f"k={k} outside [2, {default_cap(p)}] for p={p}")


def count_kpotent(p: int, k: int) -> int:
    """Number of quaternions whose minimal potency index is exactly k.

    Zero is counted at k = 2, as an idempotent.
    """
    check_prime(p)
    _check_k(p, k)
    total = count_order(p, k - 1)
    if k == 2:
        total += 1
    for t, n in class_pairs(p):
        if _min_index(t, n, p, k) == k:
            total += _class_size(t, n, p)
    return total


def kpotent_spectrum(p: int) -> dict[int, int]:
    """Counts by minimal potency index for every index that occurs.

    Together with the ``p**2 - 1`` nonzero nilpotents this partitions all
    ``p**4`` elements.
    """
    check_prime(p)
    cap = default_cap(p)
    spectrum: dict[int, int] = {2: 1}
    for s in range(1, p):
        k = mult_order(FpElement(s, p)) + 1
        spectrum[k] = spectrum.get(k, 0) + 1
    for t, n in class_pairs(p):
        k = _min_index(t, n, p, cap)
        if k is None:  # pragma: no cover - the cap is a proven bound
            raise RuntimeError(f"class ({t}, {n}) exceeded cap {cap}")
        spectrum[k] = spectrum.get(k, 0) + _class_size(t, n, p)
    return dict(sorted(spectrum.items()))


@dataclass(frozen=True)
class RootCountResult:
    """Solutions of x**k = 1, bucketed by their exact multiplicative order d | k."""

    p: int
    k: int
    total: int
    per_divisor: dict[int, int]

    def breakdown(self) -> str:
        return "+".join(str(self.per_divisor[d]) for d in sorted(self.per_divisor))


def count_roots(p: int, k: int) -> RootCountResult:
    """Count quaternions with ``x**k == 1`` by class enumeration."""
    check_prime(p)
    if not isinstance(k, int) or k < 1:
        raise InvalidIndex("k must be a positive integer")
    per = {d: 0 for d in divisors(k)}
    for s in range(1, p):
        d = mult_order(FpElement(s, p))
        if k % d == 0:
            per[d] += 1
    for t, n in class_pairs(p):
        if n == 0:
            continue  # zero norm: never a unit
        d = _unit_exponent(t, n, p, k)
        if d is not None and k % d == 0:
            per[d] += _class_size(t, n, p)
    return RootCountResult(p, k, sum(per.values()), per)


def eval_theorem22(p: int, k: int) -> int:
    """Root count assembled from potent counts over the divisors of k.

    Each solution of minimal order d > 1 is a (d+1)-potent unit; the
    (d+1)-potents of norm 0 number ``count_order(p, d) * p * (p+1)`` and are
    subtracted.
    """
    check_prime(p)
    if not isinstance(k, int) or k < 1:
        raise InvalidIndex("k must be a positive integer")
    total = 1
    for d in divisors(k)[1:]:
        if d + 1 > default_cap(p):
            continue  # orders of units stay below p**2
        total += count_kpotent(p, d + 1) - count_order(p, d) * p * (p + 1)
    return total


@dataclass(frozen=True)
class Theorem21Reading:
    """Term-by-term evaluation of the published general k-potent formula.

    ``literal`` is the three-term sum as printed; ``with_scalars`` adds the
    scalar elements of order k - 1 that the k = 4, 5 formulas carry and the
    general one omits.  ``general`` is :func:`count_kpotent`, the reference.
    """

    p: int
    k: int
    zero_norm_term: int
    psi: int
    degenerate_term: int
    scalar_term: int
    general: Optional[int]
    notes: tuple[str, ...] = field(default=())

    @property
    def literal(self) -> int:
        return self.zero_norm_term + self.psi + self.degenerate_term

    @property
    def with_scalars(self) -> int:
        return self.literal + self.scalar_term

    @property
    def discrepancy(self) -> Optional[int]:
        """``with_scalars - general``; None when the general count is unavailable."""
        if self.general is None:
            return None
        return self.with_scalars - self.general

    @property
    def agrees(self) -> bool:
        return self.discrepancy == 0


def eval_theorem21(p: int, k: int) -> Theorem21Reading:
    """Literal reading, term by term.

    * zero-norm term: scalars t of order k - 1, each with ``p(p+1)`` norm-0
      elements of trace t;
    * psi: for odd k only, pure imaginary x with norm alpha in
      S = {alpha : alpha**(k-1) = 1 and (-alpha)**((k-1)/2) = 1}, weighted by
      the sphere count of alpha; no minimality is imposed;
    * degenerate term: pairs with t != 0 whose reduction gives X**(k-1) = 1
      (a = 0, b = 1 at m = k - 1), each weighted by the full solution count of
      x1^2 + x2^2 + x3^2 = n - t^2/4, scalar solution included.
    """
    check_prime(p)
    if not isinstance(k, int) or k < 3:
        raise InvalidIndex("the general formula starts at k = 3")
    theta = count_order(p, k - 1)
    zero_norm_term = theta * p * (p + 1)

    psi = 0
    if k % 2 == 1:
        half = (k - 1) // 2
        for alpha in range(1, p):
            if pow(alpha, k - 1, p) == 1 and pow(-alpha % p, half, p) == 1:
                psi += sphere_count(p, alpha)

    inv4 = pow(4, -1, p)
    degenerate = 0
    for t in range(1, p):
        for n in range(1, p):
            if pow(n, k - 1, p) == 1 and _state_at(t, n, p, k - 1) == (0, 1):
                degenerate += sphere_count(p, (n - t * t * inv4) % p)

    general = count_kpotent(p, k) if k <= default_cap(p) else None
    reading = Theorem21Reading(p, k, zero_norm_term, psi, degenerate, theta, general)
    notes = []
    if general is not None and reading.with_scalars != general:
        notes.append(
            f"literal reading gives {reading.literal} ({reading.with_scalars} with scalar term); "
            f"class enumeration gives {general}"
        )
    return Theorem21Reading(p, k, zero_norm_term, psi, degenerate, theta, general, tuple(notes))
