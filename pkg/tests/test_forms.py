import itertools

import pytest

from qhpotent.errors import BruteLimit
from qhpotent.fp import FpElement, Legendre, legendre, odd_primes
from qhpotent.forms import (
    brute_form_count,
    circle_count,
    fixed_trace_zero_norm_count,
    form_context,
    sphere_count,
)

SMALL = odd_primes(31)
ALL = odd_primes(97)


def loop_count(p, dims, g):
    return sum(1 for xs in itertools.product(range(p), repeat=dims) if sum(x * x for x in xs) % p == g % p)


@pytest.mark.parametrize("p", ALL)
def test_context(p):
    ctx = form_context(p)
    assert ctx.n0 == (2 * p - 1 if ctx.chi == 1 else 1)


@pytest.mark.parametrize("p,g,count", [(5, 1, 4), (5, 0, 9), (7, 0, 1), (7, 3, 8), (13, 0, 25)])
def test_circle_examples(p, g, count):
    assert circle_count(p, g) == count


@pytest.mark.parametrize("p,g,count", [(5, 3, 20), (13, 12, 182), (17, 5, 272), (3, 0, 9), (13, 4, 182)])
def test_sphere_examples(p, g, count):
    assert sphere_count(p, g) == count


@pytest.mark.parametrize("p,g,count", [(3, 0, 9), (3, 2, 12), (3, 1, 6)])
def test_brute_examples(p, g, count):
    assert brute_form_count(p, 3, g) == count
    assert loop_count(p, 3, g) == count


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_brute_matches_plain_loops(p):
    for g in range(p):
        assert brute_form_count(p, 2, g) == loop_count(p, 2, g)
        assert brute_form_count(p, 3, g) == loop_count(p, 3, g)


def test_brute_limits_and_dims():
    with pytest.raises(BruteLimit):
        brute_form_count(37, 3, 1, limit=31)
    with pytest.raises(ValueError):
        brute_form_count(5, 4, 1)


@pytest.mark.parametrize("p", ALL)
def test_totals(p):
    assert sum(circle_count(p, g) for g in range(p)) == p * p
    assert sum(sphere_count(p, g) for g in range(p)) == p**3


@pytest.mark.parametrize("p", SMALL)
def test_closed_counts_match_enumeration(p):
    for g in range(p):
        assert circle_count(p, g) == brute_form_count(p, 2, g)
        assert sphere_count(p, g) == brute_form_count(p, 3, g)


@pytest.mark.parametrize("p", ALL)
def test_sphere_depends_only_on_square_class(p):
    by_class = {}
    for g in range(p):
        by_class.setdefault(legendre(FpElement(g, p)), set()).add(sphere_count(p, g))
    assert all(len(v) == 1 for v in by_class.values())
    assert set(by_class) == {Legendre.ZERO, Legendre.RESIDUE, Legendre.NON_RESIDUE}


@pytest.mark.parametrize("p,count", [(3, 12), (7, 56), (13, 182)])
def test_fixed_trace_examples(p, count):
    assert fixed_trace_zero_norm_count(p) == count


@pytest.mark.parametrize("p", ALL)
def test_fixed_trace_count_is_a_sphere(p):
    # norm 0 with trace t: x0 = t/2 and x1^2 + x2^2 + x3^2 = -t^2/4
    for t in range(1, p):
        radius = -FpElement(t, p) * t / 4
        assert sphere_count(p, radius) == fixed_trace_zero_norm_count(p)
    assert sphere_count(p, -1) == p * (p + 1)


def test_fixed_trace_count_by_enumeration():
    p = 7
    for t in range(1, p):
        x0 = t * pow(2, -1, p) % p
        hits = sum(
            1 for xs in itertools.product(range(p), repeat=3) if (x0 * x0 + sum(x * x for x in xs)) % p == 0
        )
        assert hits == fixed_trace_zero_norm_count(p)
