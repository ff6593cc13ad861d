import math

import pytest
from hypothesis import given, strategies as st

from qhpotent.errors import ModulusMismatch, NotInvertible, NotPrime
from qhpotent.fp import (
    FpElement,
    Legendre,
    check_prime,
    chi4,
    count_order,
    count_power_solutions,
    divisors,
    fp_inv,
    fp_pow,
    legendre,
    mult_order,
    odd_primes,
    order_census,
)

PRIMES = odd_primes(100)


def naive_order(a, p):
    x, d = a % p, 1
    while x != 1:
        x = x * a % p
        d += 1
    return d


primes = st.sampled_from(PRIMES)


@st.composite
def nonzero(draw):
    p = draw(primes)
    return FpElement(draw(st.integers(1, p - 1)), p)


def test_construction_reduces_negative_literals():
    assert FpElement(-4, 11).value == 7
    assert FpElement(30, 7).value == 2


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 1001])
def test_rejects_non_odd_primes(bad):
    with pytest.raises(NotPrime):
        FpElement(1, bad)
    with pytest.raises(NotPrime):
        check_prime(bad)


def test_odd_primes():
    assert odd_primes(30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(PRIMES) == 24


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        FpElement(1, 5) + FpElement(1, 7)


@pytest.mark.parametrize("a,p,inv", [(4, 11, 3), (4, 13, 10), (1, 5, 1), (1, 97, 1)])
def test_inverse_examples(a, p, inv):
    assert fp_inv(FpElement(a, p)).value == inv


def test_inverse_of_zero():
    with pytest.raises(NotInvertible):
        fp_inv(FpElement(0, 7))
    with pytest.raises(NotInvertible):
        mult_order(FpElement(0, 7))


@given(nonzero())
def test_inverse_property(a):
    assert (a * fp_inv(a)).value == 1
    assert 1 / a == fp_inv(a)
    assert (3 / a) * a == FpElement(3, a.modulus)


def test_reflected_division_by_zero():
    with pytest.raises(NotInvertible):
        1 / FpElement(0, 7)


@pytest.mark.parametrize("a,e,p,expected", [(5, 4, 13, 1), (2, 4, 17, 16), (6, 1, 7, 6), (0, 0, 5, 1)])
def test_pow_examples(a, e, p, expected):
    assert fp_pow(FpElement(a, p), e).value == expected


@pytest.mark.parametrize(
    "a,p,kind",
    [
        (3, 5, Legendre.NON_RESIDUE),
        (12, 13, Legendre.RESIDUE),
        (5, 17, Legendre.NON_RESIDUE),
        (0, 11, Legendre.ZERO),
    ],
)
def test_legendre_examples(a, p, kind):
    assert legendre(FpElement(a, p)) is kind


@given(primes, st.integers(0, 10**6))
def test_legendre_matches_square_roots(p, raw):
    a = FpElement(raw, p)
    roots = count_power_solutions(p, 2, a)
    kind = legendre(a)
    if a.value == 0:
        assert kind is Legendre.ZERO
    elif kind is Legendre.RESIDUE:
        assert roots == 2
    else:
        assert roots == 0


@pytest.mark.parametrize("a,p,order", [(2, 7, 3), (4, 7, 3), (5, 13, 4), (8, 13, 4), (1, 31, 1), (12, 13, 2)])
def test_order_examples(a, p, order):
    assert mult_order(FpElement(a, p)) == order


@given(nonzero())
def test_order_matches_naive_and_divides(a):
    d = mult_order(a)
    assert d == naive_order(a.value, a.modulus)
    assert (a.modulus - 1) % d == 0


@pytest.mark.parametrize("p,d,count", [(7, 3, 2), (3, 4, 0), (13, 4, 2), (13, 3, 2), (17, 4, 2), (5, 4, 2)])
def test_count_order_examples(p, d, count):
    assert count_order(p, d) == count


@pytest.mark.parametrize("p", PRIMES)
def test_order_census_laws(p):
    census = order_census(p)
    assert census.total == p - 1
    assert census[1] == 1
    assert census[2] == 1
    assert sum(count_order(p, d) for d in divisors(p - 1)) == p - 1
    # phi(d) elements of each order d | p - 1 in a cyclic group
    for d in divisors(p - 1):
        phi = sum(1 for r in range(1, d + 1) if math.gcd(r, d) == 1)
        assert census[d] == phi
    assert count_order(p, p) == 0


@pytest.mark.parametrize(
    "p,e,c,count",
    [(7, 3, -1, 3), (5, 4, -4, 4), (11, 4, -4, 0), (13, 4, -4, 4), (17, 4, -4, 4), (3, 4, -4, 0), (13, 3, -1, 3)],
)
def test_power_solution_examples(p, e, c, count):
    assert count_power_solutions(p, e, c) == count


def test_power_solution_set_example():
    assert [t for t in range(1, 7) if pow(t, 3, 7) == 6] == [3, 5, 6]


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("e", range(1, 13))
def test_power_solutions_of_one_is_gcd(p, e):
    assert count_power_solutions(p, e, 1) == math.gcd(e, p - 1)


@pytest.mark.parametrize("p,sign", [(5, 1), (7, -1), (13, 1), (3, -1), (97, 1)])
def test_chi4_examples(p, sign):
    assert chi4(p) == sign


@pytest.mark.parametrize("p", PRIMES)
def test_chi4_tracks_quarter_turns(p):
    # sin(p*pi/2) cycles through 0, 1, 0, -1 as p mod 4 runs 0..3
    assert chi4(p) == {1: 1, 3: -1}[p % 4]


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(49) == [1, 7, 49]
