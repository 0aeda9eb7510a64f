"""The algebra R(q): its two presentations, bases, and reordering identities.

``S`` presents R(q) on A, B, gamma; ``R`` adds the commutator C = AB - BA.
The closed-form functions here are fast paths that the test-suite checks
against plain normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundError
from .exactnum import QRat, binom2, q_binomial, q_number
from .freealg import NcPoly, multiply
from .rewrite import CanonicalElement, ReductionRule, ReductionSystem, normalize

__all__ = [
    "presentation",
    "SBasisVector",
    "RBasisVector",
    "expand_AnB",
    "product_closed_form",
    "binomial_sum",
    "commute_bracket_power",
    "convert_basis",
    "EXPAND_BOUND",
    "PRODUCT_BOUND",
]

EXPAND_BOUND = 64
PRODUCT_BOUND = 16

q = QRat.q()
_one_minus_q = 1 - q


def _w(word: str, c=1) -> NcPoly:
    return NcPoly.word(word, c)


@lru_cache(maxsize=None)
def presentation(which: str) -> ReductionSystem:
    """The reduction system ``S`` (A, B, gamma) or ``R`` (A, B, C, gamma)."""
    if which == "S":
        return ReductionSystem(
            "S",
            [
                ReductionRule("lambda", "AB", _w("g") + _w("BA", q)),
                ReductionRule("sigma", "Ag", _w("gA")),
                ReductionRule("tau", "Bg", _w("gB")),
            ],
        )
    if which == "R":
        inv = 1 / _one_minus_q
        return ReductionSystem(
            "R",
            [
                ReductionRule("sigma1", "AB", _w("g", inv) + _w("C", -q * inv)),
                ReductionRule("sigma2", "BA", _w("g", inv) + _w("C", -inv)),
                ReductionRule("sigma3", "AC", _w("CA", q)),
                ReductionRule("sigma4", "BC", _w("CB", 1 / q)),
                ReductionRule("sigma5", "Ag", _w("gA")),
                ReductionRule("sigma6", "Bg", _w("gB")),
                ReductionRule("sigma7", "Cg", _w("gC")),
            ],
        )
    raise ValueError(f"unknown presentation {which!r} (expected 'S' or 'R')")


@dataclass(frozen=True, order=True)
class SBasisVector:
    """gamma^h B^m A^n."""

    h: int
    m: int
    n: int

    @property
    def weight(self) -> int:
        return 2 * self.h + self.m + self.n

    @property
    def word(self) -> str:
        return "g" * self.h + "B" * self.m + "A" * self.n

    @classmethod
    def all_of_weight(cls, weight: int) -> list["SBasisVector"]:
        return [
            cls(h, m, weight - 2 * h - m)
            for h in range(weight // 2 + 1)
            for m in range(weight - 2 * h + 1)
        ]


@dataclass(frozen=True, order=True)
class RBasisVector:
    """gamma^h C^k B^tail (kind "B") or gamma^h C^k A^tail with tail >= 1 (kind "A")."""

    kind: str
    h: int
    k: int
    tail: int

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError("kind must be 'A' or 'B'")
        if self.kind == "A" and self.tail < 1:
            raise ValueError("A-type basis vectors need tail >= 1")

    @property
    def weight(self) -> int:
        return 2 * self.h + 2 * self.k + self.tail

    @property
    def word(self) -> str:
        return "g" * self.h + "C" * self.k + self.kind * self.tail

    @classmethod
    def all_of_weight(cls, weight: int) -> list["RBasisVector"]:
        out = []
        for h in range(weight // 2 + 1):
            for k in range((weight - 2 * h) // 2 + 1):
                t = weight - 2 * h - 2 * k
                out.append(cls("B", h, k, t))
                if t >= 1:
                    out.append(cls("A", h, k, t))
        return out


def _check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("exponent must be a natural number")
    if n > bound:
        raise BoundError(f"exponent {n} exceeds the bound {bound}")


def expand_AnB(n: int, side: str = "left", *, bound: int = EXPAND_BOUND) -> CanonicalElement:
    """S-normal form of A^n B (side "left") or A B^n (side "right") in closed form."""
    _check_bound(n, bound)
    qn = QRat.q(n)
    if n == 0:
        return CanonicalElement("S", _w("B" if side == "left" else "A"))
    if side == "left":
        value = _w("g" + "A" * (n - 1), q_number(n)) + _w("B" + "A" * n, qn)
    elif side == "right":
        value = _w("g" + "B" * (n - 1), q_number(n)) + _w("B" * n + "A", qn)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return CanonicalElement("S", value)


def binomial_sum(n: int, order: str = "AB") -> NcPoly:
    """Right-hand side of the scaled q-binomial expansion over gamma^(n-i) C^i.

    order "AB": sum (-1)^i q^binom(i+1,2) [n,i] g^(n-i) C^i = (1-q)^n A^n B^n;
    order "BA": sum (-1)^i q^binom(n-i,2) [n,i] g^(n-i) C^i = q^binom(n,2) (1-q)^n B^n A^n.
    """
    terms = {}
    for i in range(n + 1):
        e = binom2(i + 1) if order == "AB" else binom2(n - i)
        c = QRat(q_binomial(n, i)) * QRat.q(e)
        terms["g" * (n - i) + "C" * i] = -c if i % 2 else c
    return NcPoly(terms)


def _product_S(n: int, order: str) -> NcPoly:
    sysS = presentation("S")
    acc = NcPoly.scalar(1)
    if order == "AB":
        factors = [_w("BA", QRat.q(i)) + _w("g", q_number(i)) for i in range(1, n + 1)]
    else:
        factors = [_w("BA") - _w("g", q_number(j)) for j in range(n)]
    for f in factors:
        acc = normalize(multiply(acc, f), sysS).value
    return acc


def product_closed_form(
    n: int,
    order: str = "AB",
    basis: str = "S-style",
    *,
    scaled: bool = False,
    bound: int = PRODUCT_BOUND,
) -> CanonicalElement:
    """Closed form of A^n B^n (order "AB") or q^binom(n,2) B^n A^n (order "BA").

    ``basis="S-style"`` multiplies out the product of linear factors in BA and
    gamma and returns an S-canonical element.  ``basis="C-style"`` uses the
    q-binomial sum over gamma and C, which is already R-irreducible; with
    ``scaled=True`` it is returned exactly as the (1-q)^n-scaled identity.
    """
    _check_bound(n, bound)
    if order not in ("AB", "BA"):
        raise ValueError("order must be 'AB' or 'BA'")
    if basis == "S-style":
        if scaled:
            return CanonicalElement("S", _product_S(n, order).scale(_one_minus_q ** n))
        return CanonicalElement("S", _product_S(n, order))
    if basis == "C-style":
        s = binomial_sum(n, order)
        if not scaled:
            s = s.scale(_one_minus_q ** (-n))
        return CanonicalElement("R", s)
    raise ValueError("basis must be 'S-style' or 'C-style'")


def commute_bracket_power(letter: str, k: int, n: int, *, bound: int = PRODUCT_BOUND) -> CanonicalElement:
    """R-normal form of letter^k C^n.

    For A this is q^(kn) C^n A^k.  For B the irreducible side is C^n B^k, and
    C^n B^k = q^(kn) B^k C^n turns into B^k C^n = q^(-kn) C^n B^k.
    """
    _check_bound(k, bound)
    _check_bound(n, bound)
    if letter == "A":
        return CanonicalElement("R", _w("C" * n + "A" * k, QRat.q(k * n)))
    if letter == "B":
        return CanonicalElement("R", _w("C" * n + "B" * k, QRat.q(-k * n)))
    raise ValueError("letter must be 'A' or 'B'")


def convert_basis(x: CanonicalElement | NcPoly, target: str) -> CanonicalElement:
    """Rewrite an element between the S and R bases of R(q)."""
    value = x.value if isinstance(x, CanonicalElement) else x
    if target == "S":
        if "C" in "".join(value.terms):
            value = value.substitute("C", _w("AB") - _w("BA"))
        return normalize(value, presentation("S"))
    if target == "R":
        return normalize(value, presentation("R"))
    raise ValueError("target must be 'S' or 'R'")
