import itertools
import threading
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rqkernel.errors import ConsistencyError, EvaluationError
from rqkernel.exactnum import (
    QPoly,
    QRat,
    binom2,
    poly_gcd,
    q_binomial,
    q_binomial_quotient,
    q_factorial,
    q_number,
)
from rqkernel.parser import parse_scalar

from conftest import nonzero_polys, nonzero_qrats, polys, qrats

qs = sympy.Symbol("q")


def P(*coeffs):
    return QPoly(coeffs)


def to_sympy(p: QPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * qs**i for i, c in enumerate(map(Fraction, p.coeffs)))


def from_sympy(expr) -> QPoly:
    poly = sympy.Poly(sympy.expand(expr), qs)
    return QPoly(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))


def subset_sum_binomial(n, p):
    # Gaussian binomial as a generating function over p-subsets of {0, .., n-1}
    counts = {}
    for s in itertools.combinations(range(n), p):
        e = sum(s) - binom2(p)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPoly()
    return QPoly(counts.get(i, 0) for i in range(max(counts) + 1))


def test_q_number_examples():
    assert q_number(3) == P(1, 1, 1)
    assert q_number(0) == QPoly()
    assert q_number(-2) == QPoly()
    assert q_number(1) == P(1)
    assert q_number(3, 2) == P(1, 0, 1, 0, 1)


def test_q_factorial_examples():
    assert q_factorial(0) == P(1)
    assert q_factorial(1) == P(1)
    assert q_factorial(3) == P(1, 2, 2, 1)
    assert q_factorial(-4) == P(1)


def test_q_factorial_against_sympy_products():
    for n in range(1, 9):
        expected = sympy.prod([sum(qs**l for l in range(k)) for k in range(1, n + 1)])
        assert q_factorial(n) == from_sympy(expected)


def test_q_binomial_examples():
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert q_binomial(3, 5) == QPoly()
    assert q_binomial(7, 0) == P(1)
    assert q_binomial(7, 7) == P(1)
    assert q_binomial(5, -1) == QPoly()


def test_q_binomial_subset_oracle():
    for n in range(0, 10):
        for p in range(0, n + 1):
            assert q_binomial(n, p) == subset_sum_binomial(n, p), (n, p)


def test_q_binomial_pascal_matches_quotient():
    for n in range(0, 16):
        for p in range(-1, n + 2):
            assert q_binomial(n, p) == q_binomial_quotient(n, p)


def test_pascal_both_forms():
    for n in range(0, 13):
        for p in range(0, n + 1):
            up = q_binomial(n + 1, p)
            assert q_binomial(n, p - 1) + q_binomial(n, p).shift(p) == up
            assert q_binomial(n, p - 1).shift(n + 1 - p) + q_binomial(n, p) == up


def test_one_minus_q_times_q_number():
    for n in range(0, 31):
        assert P(1, -1) * q_number(n) == P(1) - QPoly.monomial(n)


def test_q_number_shift():
    for n in range(0, 21):
        for k in range(0, 21):
            assert q_number(n + k) == q_number(n).shift(k) + q_number(k)


def test_q_number_product():
    for r in range(0, 11):
        for n in range(0, 11):
            assert q_number(r * n) == q_number(n) * q_number(r, n)


def test_q_binomial_memo_is_thread_safe():
    expected = {(n, p): q_binomial_quotient(n, p) for n in range(20, 28) for p in range(n + 1)}
    errors = []

    def work(offset):
        for n in range(27 - offset, 19, -1):
            for p in range(n + 1):
                if q_binomial(n, p) != expected[n, p]:
                    errors.append((n, p))

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert errors == []


def test_exact_div_raises_on_remainder():
    with pytest.raises(ConsistencyError):
        P(1, 0, 1).exact_div(P(1, 1))
    assert P(-1, 0, 1).exact_div(P(1, 1)) == P(-1, 1)


@settings(max_examples=150, deadline=None)
@given(polys, nonzero_polys)
def test_poly_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b))
    assert g == from_sympy(expected).monic()


@settings(max_examples=150, deadline=None)
@given(polys, nonzero_polys)
def test_qrat_matches_sympy_cancel(a, b):
    r = QRat(a, b)
    num, den = sympy.fraction(sympy.cancel(to_sympy(a) / to_sympy(b)))
    # sympy's canonical pair agrees with ours up to a rational scalar
    lc = sympy.Poly(den, qs).LC()
    assert r.num == from_sympy(num / lc)
    assert r.den == from_sympy(den / lc)
    assert r.den.leading == 1


@settings(max_examples=150, deadline=None)
@given(polys, nonzero_polys, nonzero_polys)
def test_canonicalization_is_structural(a, b, f):
    r1 = QRat(a, b)
    r2 = QRat(a * f, b * f)
    assert r1 == r2
    assert (r1.num.coeffs, r1.den.coeffs) == (r2.num.coeffs, r2.den.coeffs)
    assert hash(r1) == hash(r2)
    assert str(r1) == str(r2)


@settings(max_examples=200, deadline=None)
@given(qrats, qrats, qrats)
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=200, deadline=None)
@given(nonzero_qrats)
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1
    assert a ** -2 * a ** 2 == 1


@settings(max_examples=200, deadline=None)
@given(qrats)
def test_text_round_trip(a):
    assert parse_scalar(str(a)) == a
    assert parse_scalar(a.format(compact=True)) == a


def test_text_form():
    assert str(QRat(P(1, 1, 0, -3), P(1, -1))) == "(1 + q - 3*q^3)/(1 - q)"
    # 1 + q - 2*q^3 shares the factor 1 - q with the denominator
    assert str(QRat(P(1, 1, 0, -2), P(1, -1))) == "1 + 2*q + 2*q^2"
    assert str(QRat(P(0, 1), P(1, -1))) == "q/(1 - q)"
    assert str(QRat(Fraction(1, 2))) == "1/2"
    assert str(QRat.q(-2)) == "1/q^2"
    assert str(QRat(0)) == "0"


def test_zero_is_canonical():
    z = QRat(QPoly(), P(3, 4))
    assert z.is_zero()
    assert z.den == P(1)


def test_evaluate():
    r = QRat(P(1, 1), P(1, -1))
    assert r.evaluate(Fraction(1, 2)) == 3
    with pytest.raises(EvaluationError):
        r.evaluate(1)
    with pytest.raises(ZeroDivisionError):
        QRat(1, 0)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_q_powers(a, b):
    assert QRat.q(a) * QRat.q(b) == QRat.q(a + b)
