import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincpow.exact_core import (
    DivergentIntegral,
    ExactValue,
    GaussianRational,
    IntegralSpec,
    InvalidDomain,
    alternating_sum,
    binomial,
    c_constant,
    closed_form,
    normalize_log_terms,
)

from conftest import valid_pairs


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(0, 0) == 1


def test_binomial_large_against_factorial_ratio():
    expected = math.factorial(60) // (math.factorial(30) * math.factorial(30))
    assert expected == 118264581564861424
    assert binomial(60, 30) == expected


@pytest.mark.parametrize("n,k", [(3, 4), (-1, 0), (3, -1)])
def test_binomial_domain(n, k):
    with pytest.raises(InvalidDomain):
        binomial(n, k)


def test_alternating_sum_examples():
    assert alternating_sum(3, 2) == 0
    assert alternating_sum(1, 1) == 1
    # 25 - 5*9 + 10*1
    assert alternating_sum(5, 3) == -10


def test_alternating_sum_floor_excludes_middle_term():
    # n = 4: k runs over 0, 1 only; the k = 2 term has base 0
    assert alternating_sum(4, 2) == 4 - 4 * 2
    assert alternating_sum(4, 1) == 1 - 4


@pytest.mark.parametrize("n", range(3, 61))
def test_alternating_sum_vanishes(n):
    for q in range(2, n):
        if (n + q) % 2:
            assert alternating_sum(n, q) == 0


def test_alternating_sum_exceeds_64_bits():
    assert abs(alternating_sum(40, 40)) > 2**63


@pytest.mark.parametrize(
    "nq,expected",
    [
        ((1, 1), ExactValue.pi_multiple(Fraction(1, 2))),
        ((2, 2), ExactValue.pi_multiple(Fraction(1, 2))),
        ((3, 3), ExactValue.pi_multiple(Fraction(3, 8))),
        ((4, 2), ExactValue.pi_multiple(Fraction(1, 4))),
        ((3, 2), ExactValue.log_combination({3: Fraction(3, 4)})),
        ((4, 3), ExactValue.log_combination({2: Fraction(1)})),
    ],
)
def test_closed_form_golden(nq, expected):
    assert closed_form(nq) == expected
    assert closed_form(IntegralSpec(*nq)) == expected


def test_closed_form_hand_evaluation_3_3():
    # (pi/16)(9 - 3)
    assert closed_form((3, 3)).pi_coefficient == Fraction(9 - 3, 16)


def test_closed_form_errors():
    with pytest.raises(DivergentIntegral, match="divergent: q=1 requires odd n"):
        closed_form((2, 1))
    with pytest.raises(InvalidDomain, match="requires n >= q >= 1"):
        closed_form((2, 3))
    with pytest.raises(InvalidDomain):
        closed_form((0, 0))
    with pytest.raises(InvalidDomain):
        IntegralSpec(3, -1)


@pytest.mark.parametrize("nq", valid_pairs(16))
def test_case_split_and_bases(nq):
    n, q = nq
    v = closed_form(nq)
    assert v.kind == ("pi" if (n + q) % 2 == 0 else "log")
    for base, coeff in v.log_terms:
        assert base >= 2 and coeff != 0
        assert base % 2 == n % 2
    bases = [b for b, _ in v.log_terms]
    assert bases == sorted(set(bases))


@pytest.mark.parametrize("nq", [(n, q) for n, q in valid_pairs(14) if n % 2 == 0])
def test_even_n_positive(nq):
    assert float(closed_form(nq)) > 0


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11, 13])
def test_odd_n_envelope(n):
    for q in range(1, n + 1):
        assert 0 < float(closed_form((n, q))) <= n * math.pi


def test_log_normalizer():
    terms = [(1, Fraction(5)), (4, Fraction(1, 2)), (2, Fraction(-1)), (3, Fraction(0)), (9, Fraction(1)), (6, Fraction(1))]
    # log 4 -> 2 log 2 cancels the -log 2; log 9 -> 2 log 3
    assert normalize_log_terms(terms) == ((3, Fraction(2)), (6, Fraction(1)))
    assert normalize_log_terms([(8, 1), (2, 1)]) == ((2, Fraction(4)),)


@given(st.lists(st.tuples(st.integers(1, 200), st.fractions(max_denominator=50)), max_size=8))
def test_normalizer_idempotent(terms):
    once = normalize_log_terms(terms)
    assert normalize_log_terms(once) == once
    assert all(c != 0 and m >= 2 for m, c in once)


def test_sign_with_negative_exponent():
    # (q - n)/2 = -1 for (3, 1): coefficient must still come out positive
    assert closed_form((3, 1)).pi_coefficient == Fraction(-1, 8) * alternating_sum(3, 1)
    assert closed_form((3, 1)).pi_coefficient == Fraction(1, 4)


def test_exact_value_validation():
    with pytest.raises(ValueError):
        ExactValue("pi")
    with pytest.raises(ValueError):
        ExactValue("log", pi_coefficient=Fraction(1))
    with pytest.raises(ValueError):
        ExactValue("sqrt", pi_coefficient=Fraction(1))


def test_c_constant_examples():
    assert c_constant(1) == 0
    assert c_constant(2) == GaussianRational(0, 1)
    assert c_constant(4) == GaussianRational(0, Fraction(-11, 36))
    with pytest.raises(InvalidDomain):
        c_constant(0)


@pytest.mark.parametrize("q", range(1, 31))
def test_c_constant_recursion(q):
    i = GaussianRational(0, 1)
    lhs = GaussianRational.i_power(q) / (math.factorial(q) * q) + i * c_constant(q) / q
    assert lhs == c_constant(q + 1)


@given(st.fractions(max_denominator=30), st.fractions(max_denominator=30), st.fractions(max_denominator=30), st.fractions(max_denominator=30))
@settings(max_examples=50)
def test_gaussian_rational_field(a, b, c, d):
    x, y = GaussianRational(a, b), GaussianRational(c, d)
    assert complex(x * y) == pytest.approx(complex(x) * complex(y), rel=1e-12, abs=1e-12)
    assert x + y - y == x
    if y:
        assert (x / y) * y == x
    assert GaussianRational(0, 1) ** 4 == 1
