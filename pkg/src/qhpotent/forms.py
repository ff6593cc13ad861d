"""Point counts of the diagonal forms x^2 + y^2 = g and x^2 + y^2 + z^2 = g over Z_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import BruteLimit
from .fp import FpElement, Legendre, check_prime, chi4, legendre

__all__ = [
    "BRUTE_FORM_LIMIT",
    "FormCountContext",
    "brute_form_count",
    "circle_count",
    "fixed_trace_zero_norm_count",
    "form_context",
    "sphere_count",
]

BRUTE_FORM_LIMIT = 101


@dataclass(frozen=True)
class FormCountContext:
    """Per-prime constants: ``n0`` solutions of x^2 + y^2 = 0, ``chi = chi4(p)``."""

    p: int
    n0: int
    chi: int

    @property
    def circle(self) -> int:
        """Solutions of x^2 + y^2 = g for any fixed g != 0."""
        return self.p - self.chi


def form_context(p: int) -> FormCountContext:
    chi = chi4(p)
    return FormCountContext(p, 2 * p - 1 if chi == 1 else 1, chi)


def _residue(g: Union[int, FpElement], p: int) -> FpElement:
    return g if isinstance(g, FpElement) and g.modulus == p else FpElement(int(g), p)


def circle_count(p: int, g: Union[int, FpElement]) -> int:
    ctx = form_context(p)
    return ctx.n0 if _residue(g, p).value == 0 else ctx.circle


def sphere_count(p: int, g: Union[int, FpElement]) -> int:
    """Number of triples with x^2 + y^2 + z^2 = g.

    Depends only on whether g is zero, a nonzero square or a non-square.
    """
    ctx = form_context(p)
    kind = legendre(_residue(g, p))
    if kind is Legendre.ZERO:
        return p * p
    if kind is Legendre.NON_RESIDUE:
        return p * ctx.circle
    # z = +-sqrt(g) leaves x^2 + y^2 = 0; the other p - 2 values leave a nonzero circle
    return 2 * ctx.n0 + (p - 2) * ctx.circle


def fixed_trace_zero_norm_count(p: int) -> int:
    """Quaternions of norm 0 with one prescribed nonzero trace: ``p*(p+1)``."""
    check_prime(p)
    return p * (p + 1)


def brute_form_count(p: int, dims: int, g: Union[int, FpElement], limit: int = BRUTE_FORM_LIMIT) -> int:
    """Exhaustive count of ``dims``-tuples whose squares sum to g (mod p)."""
    check_prime(p)
    if dims not in (2, 3):
        raise ValueError("dims must be 2 or 3")
    if p > limit:
        raise BruteLimit(f"p={p} exceeds the brute-force form limit {limit}")
    target = _residue(g, p).value
    sq = (np.arange(p, dtype=np.int64) ** 2) % p
    total = sq
    for _ in range(dims - 1):
        total = (total[..., None] + sq) % p
    return int(np.count_nonzero(total == target))
