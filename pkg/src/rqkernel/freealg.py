"""Free unital associative algebra on the letters A, B, C, gamma over Q(q).

Words are plain ``str`` objects over the alphabet ``"ABCg"`` (``g`` stands
for gamma); the empty string is the identity word ``I``.  Strings give
C-speed subword search, which is what the rewriting engine spends its time on.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .exactnum import QRat

__all__ = [
    "LETTERS",
    "GAMMA",
    "letter_weight",
    "word_weight",
    "word_key",
    "word_runs",
    "format_word",
    "NcPoly",
    "multiply",
    "lie_bracket",
    "ad_power",
    "A",
    "B",
    "C",
    "G",
    "I",
]

GAMMA = "g"
# listed from smallest to largest in the admissible order: A > B > C > gamma
LETTERS = "gCBA"
_WEIGHT = {"A": 1, "B": 1, "C": 2, "g": 2}
_RANK = str.maketrans({"g": "0", "C": "1", "B": "2", "A": "3"})


def letter_weight(letter: str) -> int:
    return _WEIGHT[letter]


def word_weight(word: str) -> int:
    return len(word) + word.count("C") + word.count("g")


@lru_cache(maxsize=1 << 16)
def word_key(word: str) -> tuple[int, int, str]:
    """Sort key of the admissible order: weight, then length, then A > B > C > g."""
    return (len(word) + word.count("C") + word.count("g"), len(word), word.translate(_RANK))


def word_runs(word: str) -> list[tuple[str, int]]:
    """Run-length exponents: ``"gBBA" -> [("g", 1), ("B", 2), ("A", 1)]``."""
    runs: list[tuple[str, int]] = []
    for ch in word:
        if runs and runs[-1][0] == ch:
            runs[-1] = (ch, runs[-1][1] + 1)
        else:
            runs.append((ch, 1))
    return runs


def format_word(word: str, unicode: bool = False) -> str:
    if not word:
        return "I"
    g = "γ" if unicode else "g"
    return "*".join(g if ch == "g" else ch for ch in word)


def _check_word(word: str) -> str:
    for ch in word:
        if ch not in _WEIGHT:
            raise ValueError(f"invalid letter {ch!r} in word {word!r}")
    return word


class NcPoly:
    """Finite Q(q)-linear combination of words; immutable.

    Equality is equality of the term mappings.  Arithmetic accepts ints,
    Fractions, QPoly and QRat wherever a scalar makes sense.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, object] | Iterable[tuple[str, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, QRat] = {}
        for w, c in items:
            _check_word(w)
            c = QRat.coerce(c)
            if w in acc:
                c = acc[w] + c
            acc[w] = c
        self._terms = {w: c for w, c in acc.items() if c.num.coeffs}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[str, QRat]) -> "NcPoly":
        # trusted: no zero coefficients, valid words
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def word(cls, word: str, coeff=1) -> "NcPoly":
        c = QRat.coerce(coeff)
        return cls._wrap({_check_word(word): c} if c else {})

    @classmethod
    def scalar(cls, coeff) -> "NcPoly":
        return cls.word("", coeff)

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._wrap({})

    # -- mapping-like access -------------------------------------------
    @property
    def terms(self) -> Mapping[str, QRat]:
        return self._terms

    def items(self) -> list[tuple[str, QRat]]:
        """Terms in ascending admissible order (deterministic)."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def words(self) -> list[str]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, word: str) -> QRat:
        return self._terms.get(word, QRat.coerce(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, QRat)):
            return self == NcPoly.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def max_weight(self) -> int:
        return max((word_weight(w) for w in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({word_weight(w) for w in self._terms}) <= 1

    def weight_components(self) -> dict[int, "NcPoly"]:
        parts: dict[int, dict[str, QRat]] = {}
        for w, c in self._terms.items():
            parts.setdefault(word_weight(w), {})[w] = c
        return {k: NcPoly._wrap(parts[k]) for k in sorted(parts)}

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "NcPoly | None":
        if isinstance(other, NcPoly):
            return other
        if isinstance(other, str):
            return None
        try:
            return NcPoly.scalar(other)
        except TypeError:
            return None

    def __add__(self, other) -> "NcPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in o._terms.items():
            if w in out:
                s = out[w] + c
                if s.num.coeffs:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = c
        return NcPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly._wrap({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NcPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "NcPoly":
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = QRat.coerce(c)
        if not c:
            return NcPoly.zero()
        if c.is_one():
            return self
        return NcPoly._wrap({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other) -> "NcPoly":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other) -> "NcPoly":
        return self.scale(QRat.coerce(1) / QRat.coerce(other))

    def __pow__(self, n: int) -> "NcPoly":
        if n < 0:
            raise ValueError("negative power in the free algebra")
        result = NcPoly.scalar(1)
        for _ in range(n):
            result = multiply(result, self)
        return result

    def substitute(self, letter: str, value: "NcPoly") -> "NcPoly":
        """Replace every occurrence of ``letter`` by ``value`` (an algebra morphism)."""
        out = NcPoly.zero()
        for w, c in self._terms.items():
            if letter not in w:
                out = out + NcPoly._wrap({w: c})
                continue
            piece = NcPoly.scalar(c)
            for ch in w:
                piece = multiply(piece, value if ch == letter else NcPoly.word(ch))
            out = out + piece
        return out

    # -- text --------------------------------------------------------------
    def format(self, unicode: bool = False) -> str:
        """Pretty form such as ``(1+q)*g*A + q^2*B*A*A``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for w, c in self.items():
            neg = c.is_negative_display()
            a = -c if neg else c
            if not w:
                body = a.format(compact=True)
                if not a.is_simple_display():
                    body = f"({body})"
            else:
                ws = format_word(w, unicode)
                if a.is_one():
                    body = ws
                elif a.is_simple_display():
                    body = f"{a.format(compact=True)}*{ws}"
                else:
                    body = f"({a.format(compact=True)})*{ws}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"NcPoly({self.format()!r})"


A = NcPoly.word("A")
B = NcPoly.word("B")
C = NcPoly.word("C")
G = NcPoly.word("g")
I = NcPoly.scalar(1)


def multiply(x: NcPoly, y: NcPoly) -> NcPoly:
    """Bilinear extension of word concatenation."""
    out: dict[str, QRat] = {}
    yt = y._terms
    for u, a in x._terms.items():
        for v, b in yt.items():
            w = u + v
            c = a * b
            if w in out:
                c = out[w] + c
                if c.num.coeffs:
                    out[w] = c
                else:
                    del out[w]
            else:
                out[w] = c
    return NcPoly._wrap(out)


def lie_bracket(x: NcPoly, y: NcPoly) -> NcPoly:
    """[x, y] = xy - yx."""
    return multiply(x, y) - multiply(y, x)


def ad_power(x: NcPoly, sign: int, n: int, y: NcPoly) -> NcPoly:
    """Apply ``sign * ad x`` to ``y`` n times (sign is +1 or -1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if n < 0:
        raise ValueError("ad power must be a natural number")
    for _ in range(n):
        y = lie_bracket(x, y)
        if sign < 0:
            y = -y
    return y
