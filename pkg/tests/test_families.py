from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyzero.families import (
    Family,
    FamilySpec,
    c_identity_sides,
    check_identity_1_2,
    check_polya_limit_identity,
    g_ratio,
    g_sequence,
    make_D,
    make_D_numerator,
    make_F,
    make_H,
    make_I,
    numerator_recurrence_check,
)
from polyzero.polycore import ExactPoly, antiderivative_minus_one, evaluate, nth_derivative

import oracles


def test_F_shape():
    assert make_F(3) == ExactPoly([-1, -1, -1, 1])


@pytest.mark.parametrize("l", range(1, 7))
def test_D_zero_is_factorial(l):
    assert make_D(0, l) == ExactPoly([math.factorial(l)])


@pytest.mark.parametrize("l", [1, 2, 3, 4])
@pytest.mark.parametrize("j", range(0, 12))
def test_D_matches_repeated_derivative(j, l):
    assert make_D(j, l) == ExactPoly(oracles.brute_force_D(j, l))
    assert make_D(j, l) == nth_derivative(make_F(j + l), l)


def test_I_is_integral_of_F():
    for j in range(1, 15):
        assert make_I(j) == antiderivative_minus_one(make_F(j))


def test_I5_coefficients():
    want = [-1, -1, Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 4), Fraction(-1, 5), Fraction(1, 6)]
    assert make_I(5) == ExactPoly(want)


@pytest.mark.parametrize("l", [-1, 0, 1, 2, 3])
def test_H_matches_repeated_integral(l):
    for k in range(l + 2, l + 14):
        assert make_H(k, l) == ExactPoly(oracles.brute_force_H(k, l))


def test_H_with_l_minus_one_is_I():
    for k in range(1, 10):
        assert make_H(k, -1) == make_I(k)


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(Family.D, 3, 0)
    with pytest.raises(ValueError):
        FamilySpec(Family.H, 2, 1)
    with pytest.raises(ValueError):
        FamilySpec("I", 0)


def test_spec_json_round_trip():
    s = FamilySpec("D", 7, 2)
    assert s.to_json() == {"family": "D", "k": 7, "l": 2}
    assert FamilySpec.from_json(s.to_json()) == s
    assert s.build() == make_D(7, 2)


def test_numerator_exact_cases():
    assert make_D_numerator(4, 1) == ExactPoly([-1, 0, 0, 8, -11, 4])
    assert make_D_numerator(3, 1) == ExactPoly([-1, 0, 6, -8, 3])


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_numerator_recurrence_sign(l):
    for k in range(l + 1, l + 8):
        res = numerator_recurrence_check(k, l)
        assert res["plus"] and not res["minus"]


def test_g_sequence_against_brute_force():
    for k in range(2, 8):
        assert list(g_sequence(k, 40).terms) == oracles.brute_force_G(k, 40)
    assert g_sequence(4, 7).to_lines() == "1\n1\n2\n4\n8\n15\n29\n"


def test_g_ratio_fibonacci():
    assert abs(g_ratio(2, 60) - (1 + 5**0.5) / 2) < 1e-12


def test_g_sequence_validation():
    with pytest.raises(ValueError):
        g_sequence(1, 5)
    with pytest.raises(ValueError):
        g_sequence(3, 0)


def test_c_identity_example():
    assert set(c_identity_sides(2, 0)) == {Fraction(-1, 4)}


@given(
    st.fractions(min_value=-50, max_value=50, max_denominator=50).filter(lambda c: c not in (0, -1)),
    st.integers(min_value=0, max_value=10),
)
def test_c_identity_property(c, n):
    assert check_identity_1_2(c, n)


def test_c_identity_rejects_bad_c():
    with pytest.raises(ValueError):
        check_identity_1_2(-1, 2)
    with pytest.raises(ValueError):
        check_identity_1_2(0, 2)


def test_c_limit_identity():
    assert all(check_polya_limit_identity(n) for n in range(21))


def test_listed_special_zeros():
    F = lambda k, m: nth_derivative(make_F(k), m)  # noqa: E731
    assert evaluate(F(3, 1), 1) == 0
    assert evaluate(F(2, 1), Fraction(1, 2)) == 0
    assert evaluate(F(3, 2), Fraction(1, 3)) == 0
    assert evaluate(F(5, 2), 1) == 0
    # (1 + sqrt(11/3))/4 = (3 + sqrt(33))/12 is a root of 6x^2 - 3x - 1
    assert oracles.exact_divides(F(4, 2), ExactPoly([-1, -3, 6]))
