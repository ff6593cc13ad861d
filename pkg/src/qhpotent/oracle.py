"""Exhaustive enumeration of all p**4 quaternions.

This is the ground truth the formula paths are checked against.  Work is
split into p slices by the first coefficient; each slice is vectorised with
numpy and the partial counts are summed, so the result never depends on the
number of workers (``QHP_THREADS``, default: all CPUs).
"""

from __future__ import annotations

import os
import warnings
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, TypeVar

import numpy as np

from .errors import BruteLimit, InvalidIndex
from .fp import FpElement, check_prime, mult_order
from .quaternion import default_cap, mul_components

__all__ = [
    "DEFAULT_LIMIT",
    "SpecialCensus",
    "SpectrumTable",
    "oracle_count_kpotent",
    "oracle_count_roots",
    "oracle_count_where",
    "oracle_special_censuses",
    "oracle_spectrum",
    "thread_count",
]

DEFAULT_LIMIT = 31
THREADS_ENV = "QHP_THREADS"

T = TypeVar("T")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            n = 0
        if n >= 1:
            return n
        warnings.warn(f"ignoring invalid {THREADS_ENV}={raw!r}", RuntimeWarning, stacklevel=2)
    return os.cpu_count() or 1


def _check_limit(p: int, limit: int) -> None:
    check_prime(p)
    if p > limit:
        raise BruteLimit(f"p={p} exceeds the brute-force limit {limit}; raise it with --brute-limit")
    if p > DEFAULT_LIMIT:
        warnings.warn(f"exhaustive scan of {p**4} elements; this may take minutes", RuntimeWarning, stacklevel=3)


def _slice(p: int, c0: int) -> tuple[np.ndarray, ...]:
    """All quaternions with first coefficient c0; the scalar c0 sits at index 0."""
    rest = np.indices((p, p, p), dtype=np.int64).reshape(3, -1)
    return (np.full(rest.shape[1], c0, dtype=np.int64), rest[0], rest[1], rest[2])


def _map_slices(p: int, work: Callable[[int], T]) -> list[T]:
    workers = min(thread_count(), p)
    if workers == 1:
        return [work(c0) for c0 in range(p)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, range(p)))


def _equal(a, b) -> np.ndarray:
    return (a[0] == b[0]) & (a[1] == b[1]) & (a[2] == b[2]) & (a[3] == b[3])


@dataclass(frozen=True)
class SpectrumTable:
    """Every element filed once: nonzero nilpotent, by minimal index, or overflow."""

    p: int
    cap: int
    nilpotent_nonzero: int
    by_index: dict[int, int]
    overflow: int = 0

    @property
    def total(self) -> int:
        return self.nilpotent_nonzero + sum(self.by_index.values()) + self.overflow

    def __getitem__(self, k: int) -> int:
        return self.by_index.get(k, 0)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "cap": self.cap,
            "nilpotent_nonzero": self.nilpotent_nonzero,
            "by_index": {str(k): v for k, v in self.by_index.items()},
            "overflow": self.overflow,
        }


def _slice_spectrum(p: int, c0: int, cap: int) -> tuple[int, Counter, int]:
    q = _slice(p, c0)
    counts: Counter = Counter()
    # scalar shortcut: c0 itself has index ord(c0) + 1, and 0 is idempotent
    k = 2 if c0 == 0 else mult_order(FpElement(c0, p)) + 1
    if k <= cap:
        counts[k] += 1
        scalar_overflow = 0
    else:
        scalar_overflow = 1
    q = tuple(c[1:] for c in q)

    square = mul_components(q, q, p)
    nil = (square[0] == 0) & (square[1] == 0) & (square[2] == 0) & (square[3] == 0)
    nilpotent = int(np.count_nonzero(nil))
    active = ~nil
    q = tuple(c[active] for c in q)
    cur = tuple(c[active] for c in square)
    m = 2
    while q[0].size and m <= cap:
        hit = _equal(cur, q)
        n_hit = int(np.count_nonzero(hit))
        if n_hit:
            counts[m] += n_hit
            keep = ~hit
            q = tuple(c[keep] for c in q)
            cur = tuple(c[keep] for c in cur)
        m += 1
        if q[0].size and m <= cap:
            cur = mul_components(cur, q, p)
    return nilpotent, counts, int(q[0].size) + scalar_overflow


def oracle_spectrum(p: int, cap: Optional[int] = None, limit: int = DEFAULT_LIMIT) -> SpectrumTable:
    """Classify all p**4 elements by minimal potency index up to ``cap``."""
    _check_limit(p, limit)
    if cap is None:
        cap = default_cap(p)
    if cap < 2:
        raise InvalidIndex("cap must be at least 2")
    parts = _map_slices(p, lambda c0: _slice_spectrum(p, c0, cap))
    nil = sum(part[0] for part in parts)
    counts: Counter = Counter()
    for part in parts:
        counts.update(part[1])
    overflow = sum(part[2] for part in parts)
    return SpectrumTable(p, cap, nil, dict(sorted(counts.items())), overflow)


def oracle_count_kpotent(p: int, k: int, limit: int = DEFAULT_LIMIT) -> int:
    """Elements with ``q**k == q`` and ``q**m != q`` for 1 < m < k."""
    check_prime(p)
    if not isinstance(k, int) or k < 2 or k > default_cap(p):
        raise InvalidIndex(f"k={k} outside [2, {default_cap(p)}]")
    return oracle_spectrum(p, cap=k, limit=limit)[k]


def _power(q, e: int, p: int):
    result = tuple(np.full_like(q[0], v) for v in (1, 0, 0, 0))
    base = q
    while e:
        if e & 1:
            result = mul_components(result, base, p)
        e >>= 1
        if e:
            base = mul_components(base, base, p)
    return result


def oracle_count_roots(p: int, k: int, limit: int = DEFAULT_LIMIT) -> int:
    """Elements with ``q**k == 1``."""
    _check_limit(p, limit)
    if not isinstance(k, int) or k < 1:
        raise InvalidIndex("k must be a positive integer")

    def work(c0: int) -> int:
        r = _power(_slice(p, c0), k, p)
        return int(np.count_nonzero((r[0] == 1) & (r[1] == 0) & (r[2] == 0) & (r[3] == 0)))

    return sum(_map_slices(p, work))


def oracle_count_where(p: int, predicate: Callable[[tuple, int], np.ndarray], limit: int = DEFAULT_LIMIT) -> int:
    """Count elements satisfying a vectorised predicate ``predicate(q, p) -> bool array``."""
    _check_limit(p, limit)
    return sum(_map_slices(p, lambda c0: int(np.count_nonzero(predicate(_slice(p, c0), p)))))


@dataclass(frozen=True)
class SpecialCensus:
    p: int
    nilpotent: int
    idempotent: int
    zero_divisor: int
    zero_norm_nonzero_trace: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "nilpotent": self.nilpotent,
            "idempotent": self.idempotent,
            "zero_divisor": self.zero_divisor,
            "zero_norm_nonzero_trace": self.zero_norm_nonzero_trace,
        }


def oracle_special_censuses(p: int, limit: int = DEFAULT_LIMIT) -> SpecialCensus:
    """Counts by definition over all elements.

    nilpotent: ``q*q == 0`` (0 included); idempotent: ``q*q == q`` (0 and 1
    included); zero_divisor: norm 0, i.e. the non-units, 0 included as the
    trivial zero divisor; zero_norm_nonzero_trace: norm 0 and trace != 0.
    """
    _check_limit(p, limit)

    def work(c0: int) -> np.ndarray:
        q = _slice(p, c0)
        sq = mul_components(q, q, p)
        nrm = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]) % p
        nil = (sq[0] == 0) & (sq[1] == 0) & (sq[2] == 0) & (sq[3] == 0)
        return np.array(
            [
                np.count_nonzero(nil),
                np.count_nonzero(_equal(sq, q)),
                np.count_nonzero(nrm == 0),
                np.count_nonzero((nrm == 0) & ((2 * q[0]) % p != 0)),
            ],
            dtype=np.int64,
        )

    totals = sum(_map_slices(p, work))
    return SpecialCensus(p, *(int(v) for v in totals))
