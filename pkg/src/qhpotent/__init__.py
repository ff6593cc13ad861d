"""Exact censuses of k-potent elements and roots of unity in the quaternion algebra over Z_p.

Three independent routes compute every count: closed forms (k = 2..5),
a class enumeration over (trace, norm) pairs for any k, and exhaustive
enumeration of all p**4 elements.
"""

from .closed import (
    CensusResult,
    closed_kpotent,
    fivepotent_count,
    fourpotent_count,
    idempotent_count,
    nilpotent_count,
    tripotent_count,
    zero_divisor_count,
    zero_norm_nonzero_trace_count,
)
from .errors import (
    BruteLimit,
    InvalidIndex,
    ModulusMismatch,
    NilpotentClass,
    NotInvertible,
    NotPrime,
    QuaternionCensusError,
)
from .forms import brute_form_count, circle_count, fixed_trace_zero_norm_count, sphere_count
from .fp import (
    FpElement,
    Legendre,
    chi4,
    count_order,
    count_power_solutions,
    fp_inv,
    fp_pow,
    legendre,
    mult_order,
)
from .general import (
    CharPair,
    ReductionState,
    RootCountResult,
    charpoly_min_index,
    count_kpotent,
    count_roots,
    eval_theorem21,
    eval_theorem22,
    kpotent_spectrum,
    nonscalar_class_count,
    reduce_step,
)
from .oracle import (
    SpectrumTable,
    oracle_count_kpotent,
    oracle_count_roots,
    oracle_special_censuses,
    oracle_spectrum,
)
from .quaternion import (
    PotencyClass,
    PotencyKind,
    Quaternion,
    conjugate,
    is_nilpotent,
    is_zero_divisor,
    norm,
    potency_index,
    quat_mul,
    quat_pow,
    trace,
)
from .report import VerificationRecord, kpotent_census, verify

__version__ = "0.1.0"
