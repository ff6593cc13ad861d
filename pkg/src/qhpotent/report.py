"""Cross-method verification and table rows behind the command-line tool."""

from __future__ import annotations

from dataclasses import dataclass, field

from .closed import CLOSED_FORM_KS, CensusResult, closed_kpotent
from .errors import InvalidIndex
from .fp import check_prime
from .general import count_kpotent, eval_theorem21
from .oracle import DEFAULT_LIMIT, oracle_count_kpotent, oracle_spectrum
from .quaternion import default_cap

__all__ = [
    "METHODS",
    "PUBLISHED_KPOTENT",
    "VerificationRecord",
    "kpotent_census",
    "table_rows",
    "verify",
]

# CLI spelling -> provenance tag
METHODS = {
    "closed": "closed-form",
    "general": "general",
    "paper": "paper-literal",
    "brute": "oracle",
}

# Published worked examples and program outputs, keyed by (p, k).
PUBLISHED_KPOTENT: dict[tuple[int, int], int] = {
    (7, 3): 113,
    (3, 4): 8,
    (5, 4): 20,
    (7, 4): 282,
    (11, 4): 110,
    (13, 4): 912,
    (17, 4): 272,
    (19, 4): 1902,
    (23, 4): 506,
    (29, 4): 812,
    (3, 5): 6,
    (5, 5): 212,
    (7, 5): 42,
    (11, 5): 110,
    (13, 5): 1276,
    (17, 5): 2144,
    (19, 5): 342,
    (23, 5): 506,
    (29, 5): 4872,
}


def kpotent_census(p: int, k: int, method: str = "general", limit: int = DEFAULT_LIMIT) -> CensusResult:
    """Count elements of minimal potency index k with the named method."""
    check_prime(p)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method == "closed":
        count = closed_kpotent(p, k)
    elif method == "general":
        count = count_kpotent(p, k)
    elif method == "paper":
        count = eval_theorem21(p, k).literal
    else:
        count = oracle_count_kpotent(p, k, limit=limit)
    return CensusResult(p=p, kind="kpotent", k=k, count=count, method=METHODS[method])


@dataclass
class VerificationRecord:
    """Counts for one (p, k) from each method that applies.

    ``agree`` covers closed-form, general and oracle only; the literal
    general-formula reading and published values are reported in ``notes``.
    """

    p: int
    k: int
    values: dict[str, int]
    agree: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "values": dict(self.values), "agree": self.agree, "notes": list(self.notes)}


BLOCKING = ("closed-form", "general", "oracle")


def verify(p: int, k_max: int, brute: bool = True, limit: int = DEFAULT_LIMIT) -> list[VerificationRecord]:
    check_prime(p)
    if k_max < 2:
        raise InvalidIndex("k_max must be at least 2")
    k_max = min(k_max, default_cap(p))
    spectrum = oracle_spectrum(p, cap=k_max, limit=limit) if brute else None

    records = []
    for k in range(2, k_max + 1):
        values: dict[str, int] = {}
        notes: list[str] = []
        if k in CLOSED_FORM_KS:
            values["closed-form"] = closed_kpotent(p, k)
        values["general"] = count_kpotent(p, k)
        if spectrum is not None:
            values["oracle"] = spectrum[k]
        if k >= 3:
            reading = eval_theorem21(p, k)
            values["paper-literal"] = reading.literal
            notes.extend(reading.notes)
        blocking = {values[m] for m in BLOCKING if m in values}
        published = PUBLISHED_KPOTENT.get((p, k))
        if published is not None and published not in blocking:
            sources = ", ".join(f"{m} {values[m]}" for m in BLOCKING if m in values)
            notes.append(f"published value {published} not reproduced ({sources})")
        records.append(VerificationRecord(p, k, values, agree=len(blocking) == 1, notes=notes))
    return records


def table_rows(primes: list[int], k_max: int, method: str = "general", limit: int = DEFAULT_LIMIT) -> list[CensusResult]:
    """One census per (p, k), p ascending then k from 2 to ``k_max``."""
    rows = []
    for p in sorted(primes):
        check_prime(p)
        for k in range(2, min(k_max, default_cap(p)) + 1):
            rows.append(kpotent_census(p, k, method=method, limit=limit))
    return rows

