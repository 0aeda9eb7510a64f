from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from rqkernel.exactnum import QPoly, QRat
from rqkernel.freealg import (
    A,
    B,
    C,
    G,
    I,
    NcPoly,
    ad_power,
    format_word,
    lie_bracket,
    multiply,
    word_key,
    word_runs,
    word_weight,
)

from conftest import ncpolys, weight_ncpolys


def W(word, c=1):
    return NcPoly.word(word, c)


def test_multiply_examples():
    assert multiply(A, B) == W("AB")
    assert multiply(A + B, A - B) == W("AA") - W("AB") + W("BA") - W("BB")
    assert multiply(I, W("gBA")) == W("gBA")
    assert multiply(W("gBA"), I) == W("gBA")
    assert multiply(NcPoly.zero(), A) == NcPoly.zero()


def test_bracket_examples():
    assert lie_bracket(A, B) == W("AB") - W("BA")
    x = W("gBA") + A.scale(3)
    assert lie_bracket(x, x).is_zero()
    assert lie_bracket(A, W("AB") - W("BA")) == W("AAB") - W("ABA", 2) + W("BAA")


def test_ad_power_examples():
    c = W("AB") - W("BA")
    assert ad_power(A, -1, 0, C) == C
    assert ad_power(A, -1, 1, c) == -W("AAB") + W("ABA", 2) - W("BAA")
    bb = ad_power(B, 1, 2, c)
    assert bb == lie_bracket(B, lie_bracket(B, c))
    assert bb == -W("BBBA") + W("BBAB", 3) - W("BABB", 3) + W("ABBB")
    with pytest.raises(ValueError):
        ad_power(A, 2, 1, B)


def binomial_ad(x, n, y):
    # (ad x)^n (y) = sum_k (-1)^(n-k) C(n, k) x^k y x^(n-k)
    total = NcPoly.zero()
    for k in range(n + 1):
        term = multiply(multiply(x**k, y), x ** (n - k))
        total = total + term.scale((-1) ** (n - k) * comb(n, k))
    return total


@settings(max_examples=40, deadline=None)
@given(ncpolys(max_words=2, max_len=2), ncpolys(max_words=3, max_len=3))
def test_ad_power_binomial_oracle(x, y):
    for n in range(4):
        assert ad_power(x, 1, n, y) == binomial_ad(x, n, y)
        assert ad_power(x, -1, n, y) == binomial_ad(x, n, y).scale((-1) ** n)


@settings(max_examples=60, deadline=None)
@given(weight_ncpolys(3), weight_ncpolys(3), weight_ncpolys(3))
def test_associativity(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@settings(max_examples=60, deadline=None)
@given(ncpolys(), ncpolys())
def test_skew_symmetry(x, y):
    assert lie_bracket(x, y) == -lie_bracket(y, x)


@settings(max_examples=60, deadline=None)
@given(ncpolys(max_len=3), ncpolys(max_len=3), ncpolys(max_len=3))
def test_jacobi(x, y, z):
    total = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y))
    assert total.is_zero()


@settings(max_examples=60, deadline=None)
@given(ncpolys(), ncpolys())
def test_weight_grading(x, y):
    for wx, px in x.weight_components().items():
        for wy, py in y.weight_components().items():
            assert all(word_weight(w) == wx + wy for w in multiply(px, py).words())


def test_word_order():
    # weight first, then length, then A > B > C > g
    words = ["AAA", "AC", "CA", "gA", "AA", "AB", "BA", "C", "g", "A"]
    assert sorted(words, key=word_key) == words[::-1]
    assert word_weight("gCBA") == 6


def test_terms_are_ascending():
    x = W("AB") + W("g") + W("BA") + NcPoly.scalar(2) + W("C")
    assert x.words() == ["", "g", "C", "BA", "AB"]


def test_zero_coefficients_are_dropped():
    x = NcPoly({"AB": Fraction(1), "BA": 0})
    assert x.words() == ["AB"]
    assert (x - x).terms == {}
    assert x == W("AB")
    assert x != W("BA")


def test_format():
    x = W("gA", QRat(QPoly((1, 1)))) + W("BAA", QRat.q(2))
    assert x.format() == "(1+q)*g*A + q^2*B*A*A"
    assert x.format(unicode=True) == "(1+q)*γ*A + q^2*B*A*A"
    assert (-A + NcPoly.scalar(Fraction(1, 2))).format() == "1/2 - A"
    assert NcPoly.zero().format() == "0"
    assert format_word("") == "I"
    assert word_runs("gBBA") == [("g", 1), ("B", 2), ("A", 1)]


def test_invalid_letter():
    with pytest.raises(ValueError):
        NcPoly.word("AX")


def test_substitute():
    x = W("gC") + A
    y = x.substitute("C", W("AB") - W("BA"))
    assert y == W("gAB") - W("gBA") + A


def test_constants():
    assert G == W("g")
    assert multiply(A, I) == A
    assert (A + B) ** 2 == W("AA") + W("AB") + W("BA") + W("BB")
    assert (A + B) ** 0 == I
