import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sincpow.exact_core import ExactValue, closed_form
from sincpow.render import (
    MAX_DIGITS,
    RenderRequest,
    ResourceLimit,
    log_fixed,
    parse_exact,
    parse_json,
    pi_fixed,
    render,
    render_decimal,
    render_exact,
    render_json,
    render_latex,
)

from conftest import valid_pairs

ZERO = ExactValue.log_combination({})

pi_values = st.fractions(max_denominator=10**6).filter(lambda c: c != 0).map(ExactValue.pi_multiple)
log_values = st.dictionaries(st.integers(2, 60), st.fractions(max_denominator=10**4), max_size=6).map(
    ExactValue.log_combination
)
exact_values = st.one_of(pi_values, log_values)


def mp_value(value, dps):
    with mpmath.workdps(dps):
        if value.kind == "pi":
            c = value.pi_coefficient
            return mpmath.mpf(c.numerator) / c.denominator * mpmath.pi
        return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * mpmath.log(m) for m, c in value.log_terms)


def test_render_exact_examples():
    assert render_exact(closed_form((3, 3))) == "3/8 * pi"
    assert render_exact(closed_form((4, 3))) == "1 * log(2)"
    assert render_exact(ZERO) == "0"
    assert render_exact(closed_form((5, 4))) == "-45/32 * log(3) + 125/96 * log(5)"
    assert render_exact(ExactValue.log_combination({3: Fraction(1, 2), 5: Fraction(-2)})) == "1/2 * log(3) - 2 * log(5)"


def test_render_latex_examples():
    assert render_latex(closed_form((3, 3))) == r"\frac{3}{8}\pi"
    assert render_latex(closed_form((3, 2))) == r"\frac{3}{4}\log 3"
    assert render_latex(ExactValue.pi_multiple(Fraction(-3, 8))) == r"-\frac{3}{8}\pi"
    assert render_latex(closed_form((4, 3))) == r"\log 2"
    assert render_latex(ZERO) == "0"


def test_render_decimal_examples():
    assert render_decimal(ExactValue.pi_multiple(Fraction(1, 2)), 20) == "1.5707963267948966192"
    assert render_decimal(closed_form((4, 3)), 15) == "0.693147180559945"
    assert render_decimal(ZERO, 5) == "0.00000"


def test_digits_cap():
    with pytest.raises(ResourceLimit):
        render_decimal(closed_form((3, 3)), MAX_DIGITS + 1)
    with pytest.raises(ResourceLimit):
        RenderRequest(closed_form((3, 3)), "decimal", MAX_DIGITS + 1)
    with pytest.raises(ValueError):
        RenderRequest(closed_form((3, 3)), "yaml")


def test_fixed_point_constants_against_mpmath():
    places = 500
    with mpmath.workdps(places + 20):
        assert abs(pi_fixed(places) - int(mpmath.floor(mpmath.pi * 10**places))) <= 2
        for m in (2, 3, 5, 7, 10, 12, 59, 1000003):
            assert abs(log_fixed(m, places) - int(mpmath.floor(mpmath.log(m) * 10**places))) <= 2


@pytest.mark.parametrize("nq", valid_pairs(10))
def test_decimal_within_one_unit(nq):
    value = closed_form(nq)
    text = render_decimal(value, 40)
    ref = mp_value(value, 80)
    with mpmath.workdps(80):
        err = abs(mpmath.mpf(text) - ref)
        # one unit in the 40th significant digit
        unit = mpmath.mpf(10) ** (mpmath.floor(mpmath.log10(abs(ref))) - 39)
        assert err <= unit


@given(exact_values)
def test_decimal_of_generated_values(value):
    text = render_decimal(value, 25)
    if value.is_zero:
        assert text == "0." + "0" * 25
        return
    ref = mp_value(value, 60)
    with mpmath.workdps(60):
        unit = mpmath.mpf(10) ** (mpmath.floor(mpmath.log10(abs(ref))) - 24)
        assert abs(mpmath.mpf(text) - ref) <= unit


@pytest.mark.parametrize("nq", [(1, 1), (3, 2), (3, 3), (4, 3), (5, 4), (6, 5), (7, 3), (8, 5), (9, 9), (12, 7)])
@pytest.mark.parametrize("digits", [10, 30, 100])
def test_decimal_truncation_consistency(nq, digits):
    value = closed_form(nq)
    short = render_decimal(value, digits)
    longer = render_decimal(value, digits + 5)
    assert longer.startswith(short)


@given(exact_values)
def test_exact_round_trip(value):
    assert parse_exact(render_exact(value)) == value


def test_parse_exact_rejects_garbage():
    for bad in ["pi", "1/2 * log(x)", "1/2 * log(3) +", "1/2 * log(3) * 2"]:
        with pytest.raises(ValueError):
            parse_exact(bad)


@given(exact_values, st.integers(1, 50), st.integers(1, 50))
def test_json_round_trip(value, n, q):
    text = render_json(value, n, q, digits=30)
    record = parse_json(text)
    assert record.value == value
    assert record.to_json() == text
    assert render_json(record.value, record.n, record.q, 30) == text


def test_json_schema_and_big_integers():
    value = closed_form((40, 40))
    obj = json.loads(render_json(value, 40, 40))
    assert set(obj) == {"n", "q", "kind", "pi", "logs", "decimal"}
    assert obj["kind"] == "pi" and obj["logs"] == []
    assert isinstance(obj["pi"]["num"], str)
    assert Fraction(int(obj["pi"]["num"]), int(obj["pi"]["den"])) == value.pi_coefficient
    assert value.pi_coefficient.denominator > 2**64
    obj = json.loads(render_json(closed_form((8, 5)), 8, 5))
    assert obj["pi"] is None
    assert [t["base"] for t in obj["logs"]] == [2, 6]


def test_render_dispatch():
    v = closed_form((3, 3))
    assert render(RenderRequest(v, "exact")) == "3/8 * pi"
    assert render(RenderRequest(v, "latex")) == r"\frac{3}{8}\pi"
    assert render(RenderRequest(v, "decimal", 5)) == "1.1780"
    assert json.loads(render(RenderRequest(v, "json", 5), 3, 3))["decimal"] == "1.1780"
