import random

import pytest

from rqkernel.errors import BoundError
from rqkernel.exactnum import QPoly, QRat, q_number
from rqkernel.freealg import NcPoly, lie_bracket
from rqkernel.liepoly import (
    LieBasisVector,
    is_lie_polynomial,
    lie_basis,
    lie_basis_normal_form,
    lie_span_bruteforce,
    lie_span_ranks,
    verify_identity,
)
from rqkernel.parser import parse_poly
from rqkernel.rewrite import normalize
from rqkernel.rqalg import presentation

R = presentation("R")

# ranks of the bracket closure of {A, B}, computed by lie_span_bruteforce
CENSUS = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 8, 7: 12, 8: 15}


def W(word, c=1):
    return NcPoly.word(word, c)


def random_qrat(rng):
    num = QPoly(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
    den = QPoly((rng.randint(1, 3), rng.choice((-1, 0, 1))))
    return QRat(num, den)


def test_basis_normal_form_examples():
    assert lie_basis_normal_form(LieBasisVector.ca(0, 1, 1)).value == W("CA")
    assert lie_basis_normal_form(LieBasisVector.bc(0, 1, 1)).value == W("CB", QRat.q(-1))
    beta = lie_basis_normal_form(LieBasisVector.beta(0, 1)).value
    assert beta == W("CC", QRat(QPoly((1, 1)))) - W("gC")


def test_basis_normal_forms_match_engine():
    for w in range(1, 11):
        for v in lie_basis(w):
            assert v.weight == w
            assert lie_basis_normal_form(v).value == normalize(v.element(), R).value


def test_basis_vector_validation():
    with pytest.raises(ValueError):
        LieBasisVector.ca(0, 0, 1)
    with pytest.raises(ValueError):
        LieBasisVector.beta(0, 0)
    with pytest.raises(ValueError):
        LieBasisVector("A", 1)
    assert LieBasisVector.bc(1, 2, 3).label == "g*B*B*C*C*C"
    assert LieBasisVector.beta(1, 2).label == "beta(1,2)"


def test_census_matches_bruteforce():
    ranks = lie_span_ranks(8)
    assert ranks == CENSUS
    assert {w: len(lie_basis(w)) for w in range(1, 9)} == CENSUS
    assert lie_span_ranks(2) == {1: 2, 2: 1}


def test_span_examples():
    assert [e.value for e in lie_span_bruteforce(2)] == [W("A"), W("B"), W("C")]
    weight3 = lie_span_bruteforce(3)[3:]
    assert len(weight3) == 2
    for e in weight3:
        verdict = is_lie_polynomial(e)
        assert set(verdict.decomposition) <= {LieBasisVector.ca(0, 1, 1), LieBasisVector.bc(0, 1, 1)}
    with pytest.raises(BoundError):
        lie_span_bruteforce(11)


def test_oracle_elements_are_members():
    for e in lie_span_bruteforce(8):
        verdict = is_lie_polynomial(e)
        assert verdict.member
        assert verdict.recombine() == e.value


def test_membership_examples():
    c = is_lie_polynomial(parse_poly("A*B - B*A"))
    assert c.member
    assert c.decomposition == {LieBasisVector("C"): QRat(1)}
    for text in ("g", "A*B - q*B*A", "A*B", "B*A", "A*A"):
        verdict = is_lie_polynomial(parse_poly(text))
        assert not verdict.member, text
        assert not verdict.residual.is_zero()
    assert is_lie_polynomial(W("A")).member
    assert is_lie_polynomial(NcPoly.zero()).member


def test_nested_bracket_decomposition():
    x = parse_poly("[[A,B],[A,[A,B]]]")
    verdict = is_lie_polynomial(x)
    assert verdict.member
    assert verdict.decomposition == {LieBasisVector.ca(0, 2, 1): QRat(QPoly((-1, 2, -1)))}


def test_random_non_members():
    rng = random.Random(1729)
    for _ in range(100):
        x = NcPoly.zero()
        for _ in range(rng.randint(0, 4)):
            v = rng.choice(lie_basis(rng.randint(1, 8)))
            x = x + v.element().scale(random_qrat(rng))
        h = rng.randint(1, 4)
        c = random_qrat(rng)
        while c.is_zero():
            c = random_qrat(rng)
        x = x + W("g" * h, c)
        verdict = is_lie_polynomial(x)
        assert not verdict.member
        assert ("g" * h) in verdict.residual.value.terms


def test_random_members_recombine():
    rng = random.Random(31)
    for _ in range(50):
        x = NcPoly.zero()
        expected = {}
        for _ in range(rng.randint(1, 5)):
            v = rng.choice(lie_basis(rng.randint(1, 9)))
            c = random_qrat(rng)
            expected[v] = expected.get(v, QRat(0)) + c
            x = x + v.element().scale(c)
        verdict = is_lie_polynomial(x)
        assert verdict.member
        assert verdict.decomposition == {v: c for v, c in expected.items() if c}
        assert verdict.recombine() == verdict.normal_form.value


def test_closure_spot_checks():
    vectors = [v for w in range(1, 10) for v in lie_basis(w)]
    checked = 0
    for i, u in enumerate(vectors):
        for v in vectors[i + 1:]:
            if u.weight + v.weight <= 10:
                assert is_lie_polynomial(lie_bracket(u.element(), v.element())).member, (u, v)
                checked += 1
    assert checked == 300


def test_beta_bridge():
    for h in range(0, 6):
        for n in range(1, 6):
            bracket = lie_bracket(W("g" * h + "C" * n + "A"), W("B")).scale(QRat.q(n))
            beta = lie_basis_normal_form(LieBasisVector.beta(h, n)).value
            assert normalize(bracket, R).value == beta
            expected = W("g" * h + "C" * (n + 1), QRat(q_number(n + 1))) - W("g" * (h + 1) + "C" * n, QRat(q_number(n)))
            assert beta == expected


def test_verify_identity_delegates():
    assert verify_identity("neg_ad_A_on_C", n=3).status == "holds"
    assert verify_identity("bracket_gBC_B", h=1, l=2, n=1).status == "holds"
