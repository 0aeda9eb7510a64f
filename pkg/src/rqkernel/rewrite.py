"""Reduction systems on the free algebra and the computational Diamond Lemma.

A :class:`ReductionSystem` is an ordered list of rules ``lhs -> rhs`` where
``lhs`` is a word and every word of ``rhs`` is strictly smaller than ``lhs`` in
the admissible order (weight, then length, then A > B > C > gamma).  Because
that order is compatible with concatenation, every rewrite step makes the
leading word smaller and :func:`normalize` terminates.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import BoundError, RuleError
from .exactnum import QRat
from .freealg import NcPoly, format_word, multiply, word_key, word_weight

__all__ = [
    "ReductionRule",
    "ReductionSystem",
    "Ambiguity",
    "CanonicalElement",
    "TraceStep",
    "Resolution",
    "normalize",
    "reduce_with_trace",
    "find_ambiguities",
    "check_resolvable",
    "check_confluence",
    "is_irreducible",
    "enumerate_irreducible",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_WEIGHT_BOUND",
]

DEFAULT_MAX_STEPS = 5_000_000
DEFAULT_WEIGHT_BOUND = 24

_COMPLEMENT = str.maketrans("0123", "3210")
_ONE = QRat.coerce(1)


@lru_cache(maxsize=1 << 16)
def _heap_key(word: str) -> tuple[int, int, str]:
    # heapq is a min-heap; this key reverses the admissible order
    w, n, r = word_key(word)
    return (-w, -n, r.translate(_COMPLEMENT))


@dataclass(frozen=True)
class ReductionRule:
    name: str
    lhs: str
    rhs: NcPoly

    def __post_init__(self):
        if len(self.lhs) < 2:
            raise RuleError(f"rule {self.name}: left-hand side must have length >= 2")
        if any(ch not in "ABCg" for ch in self.lhs):
            raise RuleError(f"rule {self.name}: invalid letter in {self.lhs!r}")
        key = word_key(self.lhs)
        weight = word_weight(self.lhs)
        for w in self.rhs.terms:
            if word_key(w) >= key:
                raise RuleError(
                    f"rule {self.name}: {format_word(w)} is not smaller than {format_word(self.lhs)}"
                )
            if word_weight(w) != weight:
                raise RuleError(f"rule {self.name}: {format_word(w)} changes the weight")

    def to_text(self) -> str:
        return f"{self.name}: {format_word(self.lhs)} -> {self.rhs.format()}"


class ReductionSystem:
    """Ordered rules plus the alphabet they act on."""

    def __init__(self, name: str, rules: Iterable[ReductionRule], alphabet: str | None = None):
        self.name = name
        self.rules: tuple[ReductionRule, ...] = tuple(rules)
        seen: dict[str, str] = {}
        for r in self.rules:
            if r.lhs in seen:
                raise RuleError(f"rules {seen[r.lhs]} and {r.name} share the left-hand side {r.lhs}")
            seen[r.lhs] = r.name
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise RuleError("rule names must be distinct")
        if alphabet is None:
            letters = set()
            for r in self.rules:
                letters.update(r.lhs)
                for w in r.rhs.terms:
                    letters.update(w)
            alphabet = "".join(ch for ch in "ABCg" if ch in letters)
        self.alphabet = alphabet
        self._by_name = {r.name: r for r in self.rules}
        self._pattern = (
            re.compile("|".join(re.escape(r.lhs) for r in self.rules)) if self.rules else None
        )
        self._confluent: bool | None = None
        self._mul_cache: dict[tuple[str, str], dict[str, QRat]] = {}
        self._word_cache: dict[str, dict[str, QRat]] = {}

    def __repr__(self) -> str:
        return f"ReductionSystem({self.name!r}, {len(self.rules)} rules)"

    def __len__(self) -> int:
        return len(self.rules)

    def rule(self, name: str) -> ReductionRule:
        return self._by_name[name]

    def find_redex(self, word: str) -> tuple[ReductionRule, int] | None:
        """Earliest-listed applicable rule and its leftmost occurrence."""
        if self._pattern is None or self._pattern.search(word) is None:
            return None
        for r in self.rules:
            pos = word.find(r.lhs)
            if pos >= 0:
                return r, pos
        return None  # pragma: no cover

    def is_confluent(self) -> bool:
        """Whether every ambiguity resolves (computed once, then cached)."""
        if self._confluent is None:
            self._confluent = all(check_resolvable(a, self) for a in find_ambiguities(self))
        return self._confluent

    def to_text(self) -> str:
        return "\n".join(r.to_text() for r in self.rules) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "user") -> "ReductionSystem":
        """Parse ``name: LHS -> rhs`` lines; blank lines and ``#`` comments are skipped."""
        from .parser import parse_rule_line

        rules = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.split("#", 1)[0].strip()
            if stripped:
                rules.append(parse_rule_line(stripped, lineno))
        return cls(name, rules)


@dataclass(frozen=True)
class CanonicalElement:
    """An NcPoly all of whose words are irreducible for ``system``."""

    system: str
    value: NcPoly

    def __str__(self) -> str:
        return self.value.format()

    def is_zero(self) -> bool:
        return self.value.is_zero()


@dataclass(frozen=True)
class TraceStep:
    word: str
    rule: str
    position: int
    coefficient: QRat


def _rewrite_loop(x: NcPoly, sys: ReductionSystem, max_steps: int, trace: list | None):
    pending: dict[str, QRat] = dict(x.terms)
    heap = [(_heap_key(w), w) for w in pending]
    heapq.heapify(heap)
    result: dict[str, QRat] = {}
    steps = 0
    find = sys.find_redex
    while heap:
        _, w = heapq.heappop(heap)
        c = pending.pop(w)
        if not c.num.coeffs:
            continue
        hit = find(w)
        if hit is None:
            prev = result.get(w)
            if prev is None:
                result[w] = c
            else:
                s = prev + c
                if s.num.coeffs:
                    result[w] = s
                else:
                    del result[w]
            continue
        steps += 1
        if steps > max_steps:
            raise BoundError(f"normalization exceeded {max_steps} rewrite steps")
        rule, pos = hit
        if trace is not None:
            trace.append(TraceStep(w, rule.name, pos, c))
        prefix, suffix = w[:pos], w[pos + len(rule.lhs):]
        for u, d in rule.rhs.terms.items():
            nw = prefix + u + suffix
            nc = c * d
            if nw in pending:
                pending[nw] = pending[nw] + nc
            else:
                pending[nw] = nc
                heapq.heappush(heap, (_heap_key(nw), nw))
    return NcPoly._wrap(result), steps


def _accumulate(out: dict[str, QRat], w: str, c: QRat) -> None:
    prev = out.get(w)
    if prev is None:
        out[w] = c
    else:
        s = prev + c
        if s.num.coeffs:
            out[w] = s
        else:
            del out[w]


def _nf_times_letter(sys: ReductionSystem, u: str, x: str) -> dict[str, QRat]:
    # u is irreducible, so any redex of u + x ends at the last letter
    key = (u, x)
    cached = sys._mul_cache.get(key)
    if cached is not None:
        return cached
    w = u + x
    hit = sys.find_redex(w)
    if hit is None:
        res = {w: _ONE}
    else:
        rule, pos = hit
        prefix = w[:pos]
        res = {}
        for v, d in rule.rhs.terms.items():
            state = {prefix: d}
            for ch in v:
                state = _state_times_letter(sys, state, ch)
            for nw, c in state.items():
                _accumulate(res, nw, c)
    sys._mul_cache[key] = res
    return res


def _state_times_letter(sys: ReductionSystem, state: dict[str, QRat], x: str) -> dict[str, QRat]:
    out: dict[str, QRat] = {}
    for u, c in state.items():
        for w, d in _nf_times_letter(sys, u, x).items():
            _accumulate(out, w, c if d is _ONE else c * d)
    return out


def _word_normal_form(sys: ReductionSystem, word: str) -> dict[str, QRat]:
    cached = sys._word_cache.get(word)
    if cached is not None:
        return cached
    state = {"": _ONE}
    for ch in word:
        state = _state_times_letter(sys, state, ch)
    sys._word_cache[word] = state
    return state


def normalize(x: NcPoly, sys: ReductionSystem, *, max_steps: int = DEFAULT_MAX_STEPS) -> CanonicalElement:
    """Rewrite ``x`` until every word is irreducible.

    For a non-confluent system the strategy is fixed: always the largest
    remaining word, the earliest-listed rule that applies to it, at its
    leftmost occurrence.  For a confluent system the normal form does not
    depend on the strategy, and a memoized left-to-right fold (normal form
    times one letter at a time) is used instead; :func:`reduce_with_trace`
    always follows the fixed strategy.
    """
    if sys.is_confluent():
        try:
            out: dict[str, QRat] = {}
            for w, c in x.terms.items():
                for nw, d in _word_normal_form(sys, w).items():
                    _accumulate(out, nw, c if d is _ONE else c * d)
            return CanonicalElement(sys.name, NcPoly._wrap(out))
        except RecursionError:
            pass
    value, _ = _rewrite_loop(x, sys, max_steps, None)
    return CanonicalElement(sys.name, value)


def reduce_with_trace(
    x: NcPoly, sys: ReductionSystem, *, max_steps: int = DEFAULT_MAX_STEPS
) -> tuple[CanonicalElement, list[TraceStep]]:
    trace: list[TraceStep] = []
    value, _ = _rewrite_loop(x, sys, max_steps, trace)
    return CanonicalElement(sys.name, value), trace


def count_steps(x: NcPoly, sys: ReductionSystem, *, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    return _rewrite_loop(x, sys, max_steps, None)[1]


def is_irreducible(word: str, sys: ReductionSystem) -> bool:
    return sys.find_redex(word) is None


@dataclass(frozen=True)
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    rule_left: str
    rule_right: str
    witness: str
    decomposition: tuple[str, str, str]

    def __str__(self) -> str:
        l, m, r = self.decomposition
        return f"{self.kind}({self.rule_left}, {self.rule_right}; {l}|{m}|{r})"


def find_ambiguities(sys: ReductionSystem) -> list[Ambiguity]:
    """All overlap and inclusion ambiguities, overlaps first, in rule order."""
    out: list[Ambiguity] = []
    rules = sys.rules
    for r1 in rules:
        for r2 in rules:
            a, b = r1.lhs, r2.lhs
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    out.append(Ambiguity("overlap", r1.name, r2.name, a + b[k:], (a[:-k], a[-k:], b[k:])))
    for r1 in rules:
        for r2 in rules:
            if r1 is r2 or len(r2.lhs) >= len(r1.lhs):
                continue
            a, b = r1.lhs, r2.lhs
            start = a.find(b)
            while start >= 0:
                out.append(Ambiguity("inclusion", r1.name, r2.name, a, (a[:start], b, a[start + len(b):])))
                start = a.find(b, start + 1)
    return out


@dataclass(frozen=True)
class Resolution:
    """Outcome of resolving one ambiguity, with both reduction traces as certificate."""

    ambiguity: Ambiguity
    resolvable: bool
    left_result: CanonicalElement
    right_result: CanonicalElement
    left_trace: tuple[TraceStep, ...] = field(repr=False, default=())
    right_trace: tuple[TraceStep, ...] = field(repr=False, default=())

    def __bool__(self) -> bool:
        return self.resolvable


def check_resolvable(amb: Ambiguity, sys: ReductionSystem) -> Resolution:
    r1, r2 = sys.rule(amb.rule_left), sys.rule(amb.rule_right)
    left, middle, right = amb.decomposition
    if amb.kind == "overlap":
        first = multiply(r1.rhs, NcPoly.word(right))
        second = multiply(NcPoly.word(left), r2.rhs)
    else:
        first = r1.rhs
        second = multiply(multiply(NcPoly.word(left), r2.rhs), NcPoly.word(right))
    nf1, t1 = reduce_with_trace(first, sys)
    nf2, t2 = reduce_with_trace(second, sys)
    return Resolution(amb, nf1.value == nf2.value, nf1, nf2, tuple(t1), tuple(t2))


def check_confluence(sys: ReductionSystem) -> list[Resolution]:
    return [check_resolvable(a, sys) for a in find_ambiguities(sys)]


def enumerate_irreducible(
    sys: ReductionSystem, weight: int, *, bound: int = DEFAULT_WEIGHT_BOUND
) -> list[str]:
    """Irreducible words of exactly ``weight`` over the system's alphabet, ascending."""
    if weight < 0:
        raise ValueError("weight must be a natural number")
    if weight > bound:
        raise BoundError(f"weight {weight} exceeds the enumeration bound {bound}")
    lhss = [r.lhs for r in sys.rules]
    letters = [(ch, word_weight(ch)) for ch in sys.alphabet]
    found: list[str] = []

    def extend(word: str, w: int) -> None:
        if w == weight:
            found.append(word)
            return
        for ch, lw in letters:
            if w + lw > weight:
                continue
            nw = word + ch
            # the prefix is irreducible, so only suffixes can match
            if any(nw.endswith(l) for l in lhss):
                continue
            extend(nw, w + lw)

    extend("", 0)
    found.sort(key=word_key)
    return found
