"""Surface syntax for elements of the free algebra.

Grammar (explicit ``*`` is required between factors)::

    expr    := signed (('+' | '-') signed)*
    signed  := ('-' | '+') signed | product
    product := power (('*' | '/') power)*
    power   := atom ('^' INTEGER)?
    atom    := INTEGER | 'q' | 'A' | 'B' | 'C' | 'g' | 'I'
             | '(' expr ')' | '[' expr ',' expr ']'

So ``^`` binds tighter than ``*``, which binds tighter than unary minus,
which binds tighter than binary ``+``/``-``.  ``/`` only accepts scalar
divisors.  ``γ`` is accepted as a synonym for ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .exactnum import QRat
from .freealg import NcPoly, lie_bracket, multiply

__all__ = [
    "Num",
    "Sym",
    "Unary",
    "Binary",
    "Power",
    "Bracket",
    "Group",
    "Expr",
    "tokenize",
    "parse",
    "elaborate",
    "parse_poly",
    "parse_scalar",
    "parse_rule_line",
]

_SYMBOLS = {"q", "A", "B", "C", "g", "I"}
_PUNCT = set("+-*/^()[],")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Num:
    value: int
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class Group:
    inner: "Expr"
    line: int = 1
    column: int = 1


Expr = Union[Num, Sym, Unary, Binary, Power, Bracket, Group]


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            col, i = col + 1, i + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise ParseError("decimal literals are not supported; write a fraction", line, col)
            tokens.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_" or ch == "γ":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_γ"):
                j += 1
            word = text[i:j]
            if word == "γ":
                word = "g"
            if word not in _SYMBOLS:
                hint = " (products need an explicit '*')" if all(c in "ABCgI" for c in word) else ""
                raise ParseError(f"unknown symbol {text[i:j]!r}{hint}", line, col)
            tokens.append(Token("name", word, line, col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token("op", ch, line, col))
            col, i = col + 1, i + 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {text!r} but found {shown!r}", tok.line, tok.column)
        return self.advance()

    def is_op(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in texts

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return e

    def expr(self) -> Expr:
        left = self.signed()
        while self.is_op("+", "-"):
            tok = self.advance()
            right = self.signed()
            left = Binary(tok.text, left, right, tok.line, tok.column)
        return left

    def signed(self) -> Expr:
        if self.is_op("-", "+"):
            tok = self.advance()
            return Unary(tok.text, self.signed(), tok.line, tok.column)
        return self.product()

    def product(self) -> Expr:
        left = self.power()
        while self.is_op("*", "/"):
            tok = self.advance()
            right = self.power()
            left = Binary(tok.text, left, right, tok.line, tok.column)
        return left

    def power(self) -> Expr:
        base = self.atom()
        if self.is_op("^"):
            caret = self.advance()
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                raise ParseError("negative exponents are not allowed", tok.line, tok.column)
            if tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", tok.line, tok.column)
            self.advance()
            if self.is_op("^"):
                t2 = self.peek()
                raise ParseError("chained powers need parentheses", t2.line, t2.column)
            return Power(base, int(tok.text), caret.line, caret.column)
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return Num(int(tok.text), tok.line, tok.column)
        if tok.kind == "name":
            self.advance()
            return Sym(tok.text, tok.line, tok.column)
        if self.is_op("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner, tok.line, tok.column)
        if self.is_op("["):
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right, tok.line, tok.column)
        shown = tok.text or "end of input"
        raise ParseError(f"unexpected {shown!r}", tok.line, tok.column)


def parse(text: str) -> Expr:
    """Parse text into an :data:`Expr` tree."""
    return _Parser(text).parse()


def _scalar_part(p: NcPoly) -> QRat | None:
    terms = p.terms
    if not terms:
        return QRat.coerce(0)
    if len(terms) == 1 and "" in terms:
        return terms[""]
    return None


def elaborate(e: Expr) -> NcPoly:
    """Evaluate an expression tree in the free algebra over Q(q)."""
    if isinstance(e, Num):
        return NcPoly.scalar(e.value)
    if isinstance(e, Sym):
        if e.name == "q":
            return NcPoly.scalar(QRat.q())
        if e.name == "I":
            return NcPoly.scalar(1)
        return NcPoly.word(e.name)
    if isinstance(e, Group):
        return elaborate(e.inner)
    if isinstance(e, Unary):
        v = elaborate(e.operand)
        return -v if e.op == "-" else v
    if isinstance(e, Power):
        return elaborate(e.base) ** e.exponent
    if isinstance(e, Bracket):
        return lie_bracket(elaborate(e.left), elaborate(e.right))
    if isinstance(e, Binary):
        left = elaborate(e.left)
        right = elaborate(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return multiply(left, right)
        if e.op == "/":
            d = _scalar_part(right)
            if d is None:
                raise ParseError("can only divide by a scalar", e.line, e.column)
            if d.is_zero():
                raise ParseError("division by zero", e.line, e.column)
            return left.scale(d.inverse())
    raise TypeError(f"not an expression node: {e!r}")


def parse_poly(text: str) -> NcPoly:
    return elaborate(parse(text))


def parse_scalar(text: str) -> QRat:
    """Parse an element of Q(q) such as ``(1 + q - 2*q^3)/(1 - q)``."""
    p = parse_poly(text)
    s = _scalar_part(p)
    if s is None:
        raise ParseError("expected a scalar (no letters)", 1, 1)
    return s


def parse_rule_line(line: str, lineno: int = 1):
    """Parse ``name: LHS -> rhs`` into a ReductionRule."""
    from .rewrite import ReductionRule

    if ":" not in line:
        raise ParseError("expected 'name: LHS -> rhs'", lineno, 1)
    name, rest = line.split(":", 1)
    name = name.strip()
    if not name.isidentifier():
        raise ParseError(f"invalid rule name {name!r}", lineno, 1)
    if "->" not in rest:
        raise ParseError("missing '->' in rule", lineno, len(name) + 2)
    lhs_text, rhs_text = rest.split("->", 1)
    try:
        lhs = parse_poly(lhs_text)
        rhs = parse_poly(rhs_text)
    except ParseError as exc:
        raise ParseError(exc.message, lineno, exc.column) from None
    if len(lhs) != 1 or not next(iter(lhs.terms.values())).is_one():
        raise ParseError("left-hand side must be a single word", lineno, len(name) + 2)
    (word,) = lhs.terms
    return ReductionRule(name, word, rhs)
