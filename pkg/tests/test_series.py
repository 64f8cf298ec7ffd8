from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from phi_descent.series import (
    IntPoly,
    NonIntegralCoefficient,
    RatPoly,
    poly_add,
    poly_eval,
    poly_mul_exact,
    series_mul,
    series_sqrt,
    to_integer_poly,
)


def test_poly_add_examples():
    assert poly_add(RatPoly([1, 1]), RatPoly([1, -1])) == RatPoly([2])
    assert poly_add(RatPoly([0, 0, 1]), RatPoly([])) == RatPoly([0, 0, 1])
    assert poly_add(RatPoly([0, F(1, 2)]), RatPoly([0, F(1, 3)])) == RatPoly([0, F(5, 6)])


def test_poly_add_takes_min_order():
    assert poly_add(RatPoly([1, 2, 3], 2), RatPoly([1], 1)).order == 1


def test_series_mul_examples():
    assert series_mul(RatPoly([1, 1]), RatPoly([1, -1]), 2).coeffs == (1, 0, -1)
    assert series_mul(RatPoly([1, 1]), RatPoly([1, 1]), 1).coeffs == (1, 2)
    assert series_mul(RatPoly([1, 1, 1]), RatPoly([1, -1]), 3).coeffs == (1, 0, 0, -1)


def test_series_sqrt_examples():
    assert series_sqrt(RatPoly([1, 2, 1]), 5).coeffs == (1, 1)
    assert series_sqrt(RatPoly([1, 1]), 2).coeffs == (1, F(1, 2), F(-1, 8))
    s = series_sqrt(RatPoly([1, 1, 1, 1, 1]), 2)
    assert s.coeffs == (1, F(1, 2), F(3, 8))
    assert series_mul(s, s, 2).coeffs == (1, 1, 1)


def test_series_sqrt_rejects_bad_constant():
    with pytest.raises(ValueError):
        series_sqrt(RatPoly([2, 1]), 3)


def test_to_integer_poly():
    assert to_integer_poly(RatPoly([2, 1, 2])) == IntPoly([2, 1, 2])
    assert to_integer_poly(RatPoly([])) == IntPoly([])
    with pytest.raises(NonIntegralCoefficient) as err:
        to_integer_poly(RatPoly([1, F(1, 2)]))
    assert (err.value.degree, err.value.value) == (1, F(1, 2))


def test_poly_mul_exact_and_eval():
    A = IntPoly([2, 1, 2])
    assert poly_mul_exact(A, A) == IntPoly([4, 4, 9, 4, 4])
    assert poly_mul_exact(A, A) - IntPoly([0, 0, 5]) == IntPoly([4] * 5)
    assert poly_eval(IntPoly([0, 1]), 9) == 9
    assert poly_eval(A, 3) == 23
    assert poly_eval(IntPoly([]), 5) == 0


def test_no_trailing_zeros():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert RatPoly([1, 0]).coeffs == (1,)


small_ints = st.integers(min_value=-9, max_value=9)
unit_polys = st.lists(small_ints, min_size=0, max_size=8).map(lambda cs: RatPoly([1] + cs))
polys = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), max_size=8).map(RatPoly)


@settings(max_examples=60, deadline=None)
@given(unit_polys, st.integers(min_value=0, max_value=16))
def test_sqrt_round_trip(P, N):
    S = series_sqrt(P, N)
    assert series_mul(S, S, N) == P.truncate(N)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys, st.integers(min_value=0, max_value=10))
def test_ring_laws(P, Q, R, N):
    assert series_mul(series_mul(P, Q, N), R, N) == series_mul(P, series_mul(Q, R, N), N)
    assert series_mul(P, poly_add(Q, R), N) == poly_add(series_mul(P, Q, N), series_mul(P, R, N))


@given(st.lists(st.integers(min_value=-10 ** 30, max_value=10 ** 30), max_size=10))
def test_integer_injection_round_trip(cs):
    P = IntPoly(cs)
    assert to_integer_poly(RatPoly.from_int(P)) == P


@given(st.lists(small_ints, max_size=6), st.lists(small_ints, max_size=6), st.integers(-20, 20))
def test_mul_then_eval_is_eval_then_mul(a, b, x):
    P, Q = IntPoly(a), IntPoly(b)
    assert poly_eval(P * Q, x) == poly_eval(P, x) * poly_eval(Q, x)
