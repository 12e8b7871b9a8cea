"""Field-layer tests: exact cyclotomic arithmetic and q-combinatorics.

Expected values below were computed by an independent route (polynomial
arithmetic over Q by hand / fractions-only scripts) before the field type
existed, and are frozen here.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfbench.cyclofield import (CycField, Poly, ScalarSyntaxError,
                                  cyclotomic_polynomial, format_scalar,
                                  make_context, parse_scalar, q_binomial,
                                  q_factorial, q_integer, random_scalar)

F3 = make_context(3)
F5 = make_context(5)
F7 = make_context(7)
F9 = make_context(9)


def scalars(field):
    frac = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.lists(frac, min_size=0, max_size=field.degree).map(field.from_coeffs)


# --- construction ----------------------------------------------------------

def test_cyclotomic_polynomials_small():
    as_ints = lambda p: [int(c) for c in p]
    assert as_ints(cyclotomic_polynomial(1)) == [-1, 1]
    assert as_ints(cyclotomic_polynomial(3)) == [1, 1, 1]
    assert as_ints(cyclotomic_polynomial(5)) == [1, 1, 1, 1, 1]
    assert as_ints(cyclotomic_polynomial(7)) == [1] * 7
    # frozen: Phi_9 = X^6 + X^3 + 1
    assert as_ints(cyclotomic_polynomial(9)) == [1, 0, 0, 1, 0, 0, 1]
    assert F9.degree == 6


def test_order_validation():
    for bad in (1, 2, 4, 6, 0, -3, "5"):
        with pytest.raises(ValueError):
            CycField(bad)


def test_root_of_unity_is_primitive():
    for F in (F3, F5, F7, F9):
        assert F.q ** F.order == F.one
        for k in range(1, F.order):
            assert F.q ** k != F.one


def test_frozen_identities_at_n3():
    q = F3.q
    assert (F3.one + q) * (F3.one + q ** 2) == F3.one
    inv = (F3.one - q ** 2).inverse()
    assert inv * (F3.one - q ** 2) == F3.one
    assert q_integer(-1, q ** 2) == -(q ** 2).inverse()


# --- field axioms (property) -----------------------------------------------

@settings(max_examples=60, deadline=None)
@given(scalars(F9), scalars(F9), scalars(F9))
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + F9.zero == a
    assert a * F9.one == a
    if b:
        assert b * b.inverse() == F9.one
        assert (a / b) * b == a


@settings(max_examples=30, deadline=None)
@given(scalars(F5))
def test_mixed_int_fraction_arithmetic(a):
    assert a + 0 == a and 1 * a == a
    assert a - Fraction(1, 2) == a - F5.scalar(Fraction(1, 2))
    assert 2 * a == a + a


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        F3.q + F5.q


def test_zero_inverse_rejected():
    with pytest.raises(ZeroDivisionError):
        F3.zero.inverse()


# --- q-combinatorics --------------------------------------------------------

def test_q_integer_times_one_minus_t():
    for F in (F3, F7):
        N = F.order
        for t in (F.q, F.q ** 2, F.q.inverse()):
            for m in range(-2 * N, 2 * N + 1):
                assert q_integer(m, t) * (F.one - t) == F.one - t ** m


def test_q_integer_rejects_t_equal_one():
    with pytest.raises(ValueError):
        q_integer(3, F5.one)
    with pytest.raises(ValueError):
        q_integer(0, F5.q ** 5)  # q^5 = 1


def test_q_integer_zero():
    assert not q_integer(0, F5.q)


def test_q_binomial_frozen_values():
    q3 = F3.q
    assert q_binomial(2, 1, q3) == F3.one + q3
    # binom(N, i)_{q^2} vanishes for 0 < i < N: the heart of x^N relations
    for F in (F3, F5, F7):
        t = F.q ** 2
        for i in range(1, F.order):
            assert not q_binomial(F.order, i, t)
        assert q_binomial(F.order, 0, t) == F.one
        assert q_binomial(F.order, F.order, t) == F.one


def test_q_binomial_out_of_range():
    assert not q_binomial(3, -1, F5.q)
    assert not q_binomial(3, 4, F5.q)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=8), st.integers(min_value=-2, max_value=10),
       st.sampled_from([1, 2, 3, 4, 6]))
def test_q_pascal_both_forms(n, i, e):
    """binom(n,i) = binom(n-1,i-1) + t^i binom(n-1,i)
                  = t^(n-i) binom(n-1,i-1) + binom(n-1,i)  for n >= 1."""
    t = F7.q ** e
    if n == 0:
        return
    b = q_binomial(n, i, t)
    assert b == q_binomial(n - 1, i - 1, t) + t ** i * q_binomial(n - 1, i, t)
    assert b == t ** (n - i) * q_binomial(n - 1, i - 1, t) + q_binomial(n - 1, i, t)


def test_q_binomial_matches_factorial_quotient():
    # where the denominator is invertible the Pascal route must agree with
    # the factorial quotient
    t = F7.q
    for n in range(6):
        for i in range(n + 1):
            lhs = q_binomial(n, i, t) * q_factorial(i, t) * q_factorial(n - i, t)
            assert lhs == q_factorial(n, t)


# --- scalar grammar ---------------------------------------------------------

def test_parse_examples():
    q = F5.q
    assert parse_scalar("q^2", F5) == q ** 2
    assert parse_scalar("q^-2", F5) == q ** 3
    assert parse_scalar("1 - q^2", F5) == F5.one - q ** 2
    assert parse_scalar("3/2 * q + (2 - q^4)", F5) == \
        F5.scalar(Fraction(3, 2)) * q + F5.scalar(2) - q ** 4
    assert parse_scalar("-q", F5) == -q
    assert parse_scalar(" ( q + 1 ) * ( q - 1 ) ", F5) == q * q - F5.one
    assert parse_scalar("0", F5) == F5.zero


def test_parse_errors():
    for bad in ("q +", "2 // 3", "x", "(q", "q ^ q", "1 2"):
        with pytest.raises(ScalarSyntaxError):
            parse_scalar(bad, F5)


def test_format_zero_and_one():
    assert format_scalar(F5.zero) == "0"
    assert format_scalar(F5.one) == "1"
    assert format_scalar(-F5.one) == "-1"
    assert format_scalar(F5.q) == "q"


@settings(max_examples=100, deadline=None)
@given(scalars(F9))
def test_parse_format_roundtrip(s):
    assert parse_scalar(format_scalar(s), F9) == s


def test_parse_format_roundtrip_seeded():
    rng = random.Random(20260822)
    for F in (F3, F5, F7, F9):
        for _ in range(100):
            s = random_scalar(F, rng, height=5, max_terms=4)
            assert parse_scalar(format_scalar(s), F) == s


# --- polynomials ------------------------------------------------------------

def test_poly_divmod_and_gcd():
    X = Poly.x(F5)
    one = Poly.constant(F5, F5.one)
    p = (X - one * F5.q) * (X - one * F5.q ** 2) ** 2
    q_, r = p.divmod(X - one * F5.q)
    assert r.is_zero()
    assert q_ == (X - one * F5.q ** 2) ** 2
    g = p.gcd(p.derivative())
    assert g == (X - one * F5.q ** 2)  # the repeated root survives in the gcd


def test_poly_eval_and_derivative():
    X = Poly.x(F3)
    p = X ** 3 - Poly.constant(F3, F3.scalar(2)) * X + Poly.constant(F3, F3.one)
    q = F3.q
    assert p(q) == q ** 3 - F3.scalar(2) * q + F3.one
    assert p.derivative()(q) == F3.scalar(3) * q ** 2 - F3.scalar(2)


def test_poly_xn_minus_c_squarefree():
    # gcd(X^N - c, N X^(N-1)) is constant iff c != 0
    for F in (F3, F5):
        X = Poly.x(F)
        c = F.q ** 2
        p = X ** F.order - Poly.constant(F, c)
        assert p.gcd(p.derivative()).degree == 0
        p0 = X ** F.order
        assert p0.gcd(p0.derivative()).degree > 0


def test_poly_format_reparses_coefficients():
    X = Poly.x(F5)
    p = X ** 2 - Poly.constant(F5, F5.q + F5.one) * X + Poly.constant(F5, F5.q ** 3)
    s = p.format()
    assert "X^2" in s and "X" in s
