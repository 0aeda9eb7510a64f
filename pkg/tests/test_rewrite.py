import re

import pytest
from hypothesis import given, settings

from rqkernel.errors import BoundError, ParseError, RuleError
from rqkernel.exactnum import QPoly, QRat
from rqkernel.freealg import NcPoly, multiply, word_weight
from rqkernel.rewrite import (
    ReductionRule,
    ReductionSystem,
    check_confluence,
    check_resolvable,
    count_steps,
    enumerate_irreducible,
    find_ambiguities,
    is_irreducible,
    normalize,
    reduce_with_trace,
)
from rqkernel.rqalg import presentation

from conftest import weight_ncpolys

S = presentation("S")
R = presentation("R")
inv1mq = QRat(1, QPoly((1, -1)))


def W(word, c=1):
    return NcPoly.word(word, c)


def all_words(letters, max_weight):
    out = [""]
    frontier = [""]
    while frontier:
        nxt = []
        for u in frontier:
            for ch in letters:
                w = u + ch
                if word_weight(w) <= max_weight:
                    nxt.append(w)
        out += nxt
        frontier = nxt
    return out


def test_normalize_examples():
    assert normalize(W("AB"), S).value == W("g") + W("BA", QRat.q())
    assert normalize(W("AAB"), S).value == W("gA", QRat(QPoly((1, 1)))) + W("BAA", QRat.q(2))
    assert normalize(W("AB"), R).value == W("g", inv1mq) - W("C", QRat.q() * inv1mq)
    assert normalize(NcPoly.zero(), R).value.is_zero()


def test_normalize_matches_traced_engine():
    # the memoized fold and the fixed-strategy rewriting loop must agree
    for w in all_words("ABCg", 7):
        x = W(w)
        assert normalize(x, R).value == reduce_with_trace(x, R)[0].value
    for w in all_words("ABg", 7):
        assert normalize(W(w), S).value == reduce_with_trace(W(w), S)[0].value


def test_ambiguities_of_S():
    ambs = find_ambiguities(S)
    assert [(a.kind, a.witness) for a in ambs] == [("overlap", "ABg")]
    assert (ambs[0].rule_left, ambs[0].rule_right) == ("lambda", "tau")
    assert ambs[0].decomposition == ("A", "B", "g")
    assert all(check_confluence(S))


def test_ambiguities_of_R():
    ambs = find_ambiguities(R)
    assert {a.kind for a in ambs} == {"overlap"}
    assert sorted(a.witness for a in ambs) == sorted(["ABA", "ABC", "ABg", "BAB", "BAC", "BAg", "ACg", "BCg"])
    assert all(check_confluence(R))


def test_empty_system():
    empty = ReductionSystem("empty", [])
    assert find_ambiguities(empty) == []
    assert normalize(W("BA"), empty).value == W("BA")
    assert enumerate_irreducible(empty, 0) == [""]


def test_resolution_certificate():
    amb = next(a for a in find_ambiguities(R) if a.witness == "ABA")
    res = check_resolvable(amb, R)
    assert res.resolvable
    expected = W("gA", inv1mq) - W("CA", QRat.q() * inv1mq)
    assert res.left_result.value == expected
    assert res.right_result.value == expected
    # sigma1 first already gives irreducible words; sigma2 first needs sigma3 and sigma5
    assert res.left_trace == ()
    assert sorted(s.rule for s in res.right_trace) == ["sigma3", "sigma5"]


def test_is_irreducible_examples():
    assert is_irreducible("gBBAA", S)
    assert not is_irreducible("AABg", S)
    assert is_irreducible("", S)
    assert is_irreducible("", R)


def test_enumerate_examples():
    assert enumerate_irreducible(S, 2) == ["g", "BB", "BA", "AA"]
    assert enumerate_irreducible(R, 2) == ["g", "C", "BB", "AA"]
    assert enumerate_irreducible(R, 0) == [""]
    with pytest.raises(BoundError):
        enumerate_irreducible(R, 25)


def test_irreducible_word_characterization():
    s_form = re.compile(r"g*B*A*")
    r_form = re.compile(r"g*C*(B*|A+)")
    for w in all_words("ABg", 10):
        assert is_irreducible(w, S) == bool(s_form.fullmatch(w)), w
    for w in all_words("ABCg", 10):
        assert is_irreducible(w, R) == bool(r_form.fullmatch(w)), w


def test_enumeration_matches_filter():
    for weight in range(0, 9):
        for sys, letters in ((S, "ABg"), (R, "ABCg")):
            brute = [w for w in all_words(letters, weight) if word_weight(w) == weight and is_irreducible(w, sys)]
            assert sorted(brute) == sorted(enumerate_irreducible(sys, weight))


def test_basis_counts_agree():
    counts = [(len(enumerate_irreducible(S, w)), len(enumerate_irreducible(R, w))) for w in range(13)]
    assert all(a == b for a, b in counts)
    assert counts[2] == (4, 4)


@settings(max_examples=60, deadline=None)
@given(weight_ncpolys(6))
def test_idempotence(x):
    for sys in (S, R):
        if sys is S:
            x = NcPoly({w: c for w, c in x.items() if "C" not in w})
        nf = normalize(x, sys).value
        assert normalize(nf, sys).value == nf
        assert all(is_irreducible(w, sys) for w in nf.words())


@settings(max_examples=60, deadline=None)
@given(weight_ncpolys(6), weight_ncpolys(6))
def test_morphism_compatibility(x, y):
    lhs = normalize(multiply(x, y), R).value
    rhs = normalize(multiply(normalize(x, R).value, normalize(y, R).value), R).value
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(weight_ncpolys(12, max_words=3))
def test_termination_within_step_bound(x):
    assert count_steps(x, R, max_steps=200_000) <= 200_000


def test_step_bound_is_enforced():
    with pytest.raises(BoundError):
        count_steps(W("A" * 6 + "B" * 6), S, max_steps=10)


def test_rule_invariants():
    with pytest.raises(RuleError):
        ReductionRule("bad", "BA", W("AB"))
    with pytest.raises(RuleError):
        ReductionRule("bad", "AB", W("A"))
    with pytest.raises(RuleError):
        ReductionRule("bad", "A", NcPoly.zero())
    rule = ReductionRule("ok", "AB", W("BA"))
    with pytest.raises(RuleError):
        ReductionSystem("dup", [rule, ReductionRule("other", "AB", W("g"))])


def test_self_overlap_user_system():
    sys = ReductionSystem.from_text("square: A*A -> B*B\n")
    ambs = find_ambiguities(sys)
    assert [(a.kind, a.rule_left, a.rule_right, a.witness) for a in ambs] == [
        ("overlap", "square", "square", "AAA")
    ]
    res = check_resolvable(ambs[0], sys)
    assert not res.resolvable
    assert {res.left_result.value, res.right_result.value} == {W("BBA"), W("ABB")}
    assert not sys.is_confluent()
    # the fixed strategy still terminates
    assert normalize(W("AAAA"), sys).value == W("BBBB")


def test_inclusion_ambiguity():
    sys = ReductionSystem.from_text("long: A*B*A -> g*A\nshort: B*A -> g\n")
    ambs = find_ambiguities(sys)
    inclusions = [a for a in ambs if a.kind == "inclusion"]
    assert [(a.rule_left, a.rule_right, a.decomposition) for a in inclusions] == [("long", "short", ("A", "BA", ""))]


def test_text_round_trip():
    for sys in (S, R):
        again = ReductionSystem.from_text(sys.to_text(), name=sys.name)
        assert [(r.name, r.lhs, r.rhs) for r in again.rules] == [(r.name, r.lhs, r.rhs) for r in sys.rules]
    commented = "# the S system\n\n" + S.to_text()
    assert len(ReductionSystem.from_text(commented)) == 3


def test_rule_file_errors():
    with pytest.raises(ParseError) as info:
        ReductionSystem.from_text("ok: A*g -> g*A\nbroken A*B -> B*A\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        ReductionSystem.from_text("r: A*B => B*A\n")
