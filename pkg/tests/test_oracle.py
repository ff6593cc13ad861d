import itertools
import warnings

import numpy as np
import pytest

from qhpotent import oracle
from qhpotent.errors import BruteLimit, InvalidIndex, NotPrime
from qhpotent.general import count_kpotent, count_roots, eval_theorem22
from qhpotent.oracle import (
    oracle_count_kpotent,
    oracle_count_roots,
    oracle_count_where,
    oracle_special_censuses,
    oracle_spectrum,
    thread_count,
)
from qhpotent.quaternion import PotencyKind, Quaternion, default_cap, potency_index

SMALL = [3, 5, 7, 11, 13]


def test_spectrum_p3():
    table = oracle_spectrum(3)
    assert table.nilpotent_nonzero == 8
    assert table.by_index == {2: 14, 3: 25, 4: 8, 5: 6, 7: 8, 9: 12}
    assert table.overflow == 0 and table.total == 81
    assert table[6] == 0


def test_spectrum_matches_element_objects_p3():
    # same census through the scalar Quaternion path
    counts = {}
    nil = 0
    for c in itertools.product(range(3), repeat=4):
        cls = potency_index(Quaternion(c, 3))
        if cls.kind is PotencyKind.NILPOTENT:
            nil += 1
        else:
            counts[cls.index] = counts.get(cls.index, 0) + 1
    table = oracle_spectrum(3)
    assert nil == table.nilpotent_nonzero
    assert counts == table.by_index


@pytest.mark.parametrize("p", [3, 5, 7])
def test_spectrum_partition(p):
    table = oracle_spectrum(p)
    assert table.cap == default_cap(p)
    assert table.overflow == 0
    assert table.total == p**4
    assert table.nilpotent_nonzero == p * p - 1


def test_capped_spectrum_overflow():
    table = oracle_spectrum(5, cap=4)
    assert table.total == 5**4
    assert max(table.by_index) <= 4
    assert table.overflow == 5**4 - table.nilpotent_nonzero - sum(table.by_index.values()) > 0


@pytest.mark.parametrize("p", SMALL)
def test_kpotent_matches_general(p):
    k_max = min(10, default_cap(p))
    table = oracle_spectrum(p, cap=k_max)
    for k in range(2, k_max + 1):
        assert table[k] == count_kpotent(p, k)


@pytest.mark.parametrize("p,k,count", [(7, 3, 113), (11, 4, 110), (13, 5, 1276), (3, 4, 8)])
def test_reference_program_outputs(p, k, count):
    assert oracle_count_kpotent(p, k) == count


def test_non_minimal_fifth_powers_differ():
    # q^5 = q without minimality over Z_13
    def fifth_power_fixed(q, p):
        r = oracle._power(q, 5, p)
        return oracle._equal(r, q)

    assert oracle_count_where(13, fifth_power_fixed) == 1825 != oracle_count_kpotent(13, 5)


@pytest.mark.parametrize("p,k,total", [(3, 4, 20), (3, 6, 30), (5, 4, 184)])
def test_root_examples(p, k, total):
    assert oracle_count_roots(p, k) == count_roots(p, k).total == eval_theorem22(p, k) == total


@pytest.mark.parametrize("p", [3, 5, 7])
def test_roots_match_class_counts(p):
    for k in range(1, 13):
        assert oracle_count_roots(p, k) == count_roots(p, k).total


@pytest.mark.parametrize("p", SMALL)
def test_special_censuses(p):
    c = oracle_special_censuses(p)
    assert c.nilpotent == p * p
    assert c.idempotent == p * p + p + 2
    assert c.zero_divisor == p**3 + p**2 - p
    assert c.zero_norm_nonzero_trace == p**3 - p
    assert c.to_dict()["p"] == p


def test_thread_count_does_not_change_results(monkeypatch):
    monkeypatch.setenv("QHP_THREADS", "1")
    assert thread_count() == 1
    one = (oracle_spectrum(7).to_dict(), oracle_count_roots(7, 6), oracle_special_censuses(7))
    monkeypatch.setenv("QHP_THREADS", "4")
    assert thread_count() == 4
    four = (oracle_spectrum(7).to_dict(), oracle_count_roots(7, 6), oracle_special_censuses(7))
    assert one == four


def test_bad_thread_setting_warns(monkeypatch):
    monkeypatch.setenv("QHP_THREADS", "zero")
    with pytest.warns(RuntimeWarning):
        assert thread_count() >= 1


def test_limits():
    with pytest.raises(BruteLimit):
        oracle_spectrum(37)
    with pytest.raises(BruteLimit):
        oracle_count_roots(13, 2, limit=11)
    with pytest.raises(NotPrime):
        oracle_spectrum(9)
    with pytest.raises(InvalidIndex):
        oracle_count_kpotent(3, 11)
    with pytest.raises(InvalidIndex):
        oracle_spectrum(3, cap=1)


def test_raised_limit_warns():
    with pytest.warns(RuntimeWarning):
        assert oracle_count_where(37, lambda q, p: q[0] == 0, limit=37) == 37**3


def test_default_limit_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert oracle_count_where(31, lambda q, p: np.ones_like(q[0], dtype=bool)) == 31**4
