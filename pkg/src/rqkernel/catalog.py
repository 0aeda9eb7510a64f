"""Catalog of reordering and bracket identities in R(q).

Each entry is data: a parameter schema with default (inclusive) ranges, an
optional side condition, and a builder for each side.  Both sides are built
from raw letters and normalized under the entry's presentation; the identity
holds iff the normal forms coincide.

Three entries carry a ``corrected_rhs``: their printed right-hand sides are
tested first and the corrected form only when the printed one fails, and
the result records which of the two held.  The psi-form of the bracket sum
is evaluated under three readings of psi_0 and reports all of them.

Inside the R presentation the letter C is interchangeable with [A, B] (the
``bracket_is_C`` entry checks exactly this), so entries with powers of
[A, B] use the letter C to keep the raw expressions small.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .errors import BoundError, UnknownIdentityError
from .exactnum import QRat, binom2, q_binomial, q_number
from .freealg import NcPoly, ad_power, lie_bracket, multiply
from .rewrite import CanonicalElement, normalize
from .rqalg import binomial_sum, presentation

__all__ = [
    "Identity",
    "IdentityResult",
    "CATALOG",
    "identity_names",
    "get_identity",
    "parameter_grid",
    "verify",
    "run_suite",
    "LIMIT_FACTOR",
]

# explicit parameters may go up to LIMIT_FACTOR times the default upper bound
LIMIT_FACTOR = 4

q = QRat.q()
one_minus_q = 1 - q
A = NcPoly.word("A")
B = NcPoly.word("B")
C = NcPoly.word("C")
G = NcPoly.word("g")
ONE = NcPoly.scalar(1)


def W(word: str, c=1) -> NcPoly:
    return NcPoly.word(word, c)


def qn(n: int, power: int = 1) -> QRat:
    return QRat(q_number(n, power))


def qb(n: int, p: int) -> QRat:
    return QRat(q_binomial(n, p))


def qp(k: int) -> QRat:
    return QRat.q(k)


def sign(i: int) -> int:
    return -1 if i % 2 else 1


def mono(*parts: tuple[str, int]) -> str:
    return "".join(letter * k for letter, k in parts)


def prod(factors: Iterable[NcPoly]) -> NcPoly:
    out = ONE
    for f in factors:
        out = multiply(out, f)
    return out


def beta(h: int, n: int) -> NcPoly:
    return W(mono(("g", h), ("C", n + 1)), qn(n + 1)) - W(mono(("g", h + 1), ("C", n)), qn(n))


@dataclass(frozen=True)
class Identity:
    name: str
    summary: str
    system: str
    bounds: Mapping[str, tuple[int, int]]
    lhs: Callable[..., NcPoly]
    rhs: Callable[..., NcPoly]
    where: Callable[..., bool] | None = None
    corrected_rhs: Callable[..., NcPoly] | None = None
    readings: Mapping[str, Callable[..., NcPoly]] = field(default_factory=dict)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(self.bounds)

    def admissible(self, params: Mapping[str, int]) -> bool:
        return self.where is None or bool(self.where(**params))

    def build(self, **params) -> tuple[NcPoly, NcPoly]:
        return self.lhs(**params), self.rhs(**params)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    params: dict
    status: str  # "holds", "corrected" or "fails"
    lhs_nf: CanonicalElement
    rhs_nf: CanonicalElement
    notes: tuple[str, ...] = ()
    readings: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status != "fails"

    def __bool__(self) -> bool:
        return self.holds


# -- builders ------------------------------------------------------------

def _bracket_sum_lhs(m, n, h, j, k):
    x = W(mono(("g", k), ("B", m), ("C", n)))
    y = W(mono(("g", j), ("C", h), ("A", m)))
    return lie_bracket(x, y).scale(one_minus_q ** (m - 1) * qp(binom2(m) + m * (n + h)))


def _bracket_sum_rhs(m, n, h, j, k):
    terms = NcPoly.zero()
    for i in range(m + 1):
        c = sign(i) * qp(binom2(m - i)) * qn(m * n + m * h + i * m) * qb(m, i)
        terms = terms + W(mono(("g", m - i + j + k), ("C", i + h + n)), c)
    return terms


def _psi(t, m, n, h, j, k):
    # the vectors defined before the statement, t >= 1
    e = m - t + j + k
    return W(mono(("g", e), ("C", t + h + n)), qn(t + h + n)) - W(
        mono(("g", e + 1), ("C", t + h + n - 1)), qn(t + h + n - 1)
    )


def _psi_inline(t, m, n, h, j, k):
    # the vectors as written inside the statement
    return W(mono(("g", j + k), ("C", t + h + n)), qn(t + h + n)) - W(
        mono(("g", 1 + j + k), ("C", t - 1 + h + n)), qn(t - 1 + h + n)
    )


def _psi_sum_rhs(psi0, psi_t):
    def build(m, n, h, j, k):
        total = NcPoly.zero()
        partial = psi0(m, n, h, j, k)
        for i in range(m + 1):
            if i >= 1:
                partial = partial + psi_t(i, m, n, h, j, k)
            c = sign(i) * qp(binom2(m - i)) * qn(m, n + h + i) * qb(m, i)
            total = total + partial.scale(c)
        return total

    return build


_psi0_inline = lambda m, n, h, j, k: _psi_inline(0, m, n, h, j, k)  # noqa: E731
_psi0_zero = lambda m, n, h, j, k: NcPoly.zero()  # noqa: E731


def _vanishing_sum(m, r, n, h):
    s = QRat.coerce(0)
    for i in range(m + 1):
        s = s + sign(i) * qp(binom2(m - i) + (n + h + i) * r) * qb(m, i)
    return NcPoly.scalar(s)


def _La(m, n):
    inner = ad_power(C, 1, n, A)
    return ad_power(A, -1, m, lie_bracket(B, inner)).scale(qp(n))


def _Lb(m, n):
    inner = ad_power(C, 1, n, A)
    return ad_power(B, -1, m, lie_bracket(B, inner)).scale(qp(n))


def _Lb_printed(m, n):
    return (
        W("B" * m + "C" * (n + 1), qn(n + 1) ** (m + 1)) - W("g" + "B" * m + "C" * n, qn(n) ** (m + 1))
    ).scale(one_minus_q ** (n + m))


def _prop_bc_ad(n):
    return lie_bracket(B, ad_power(C, 1, n, A)).scale(qp(n))


_E = {}  # no parameters

CATALOG: tuple[Identity, ...] = (
    # -- presentation S ----------------------------------------------------
    Identity(
        "central_A",
        "A commutes with AB - qBA",
        "S",
        _E,
        lambda: multiply(A, W("AB") - W("BA", q)),
        lambda: multiply(W("AB") - W("BA", q), A),
    ),
    Identity(
        "central_B",
        "B commutes with AB - qBA",
        "S",
        _E,
        lambda: multiply(B, W("AB") - W("BA", q)),
        lambda: multiply(W("AB") - W("BA", q), B),
    ),
    Identity(
        "power_A_times_B",
        "A^n B = {n} g A^(n-1) + q^n B A^n",
        "S",
        {"n": (1, 30)},
        lambda n: W("A" * n + "B"),
        lambda n: W("g" + "A" * (n - 1), qn(n)) + W("B" + "A" * n, qp(n)),
    ),
    Identity(
        "A_times_power_B",
        "A B^n = {n} g B^(n-1) + q^n B^n A",
        "S",
        {"n": (1, 30)},
        lambda n: W("A" + "B" * n),
        lambda n: W("g" + "B" * (n - 1), qn(n)) + W("B" * n + "A", qp(n)),
    ),
    Identity(
        "AnBn_step_up",
        "A^n B^n (q^(n+1) BA + {n+1} g) = A^(n+1) B^(n+1)",
        "S",
        {"n": (0, 10)},
        lambda n: multiply(W("A" * n + "B" * n), W("BA", qp(n + 1)) + W("g", qn(n + 1))),
        lambda n: W("A" * (n + 1) + "B" * (n + 1)),
    ),
    Identity(
        "BnAn_step_up",
        "B^n A^n (BA - {n} g) = q^n B^(n+1) A^(n+1)",
        "S",
        {"n": (0, 10)},
        lambda n: multiply(W("B" * n + "A" * n), W("BA") - W("g", qn(n))),
        lambda n: W("B" * (n + 1) + "A" * (n + 1), qp(n)),
    ),
    Identity(
        "AnBn_product",
        "A^n B^n = prod_{i=1..n} (q^i BA + {i} g)",
        "S",
        {"n": (0, 10)},
        lambda n: W("A" * n + "B" * n),
        lambda n: prod(W("BA", qp(i)) + W("g", qn(i)) for i in range(1, n + 1)),
    ),
    Identity(
        "BnAn_product",
        "q^binom(n,2) B^n A^n = prod_{j=0..n-1} (BA - {j} g)",
        "S",
        {"n": (0, 10)},
        lambda n: W("B" * n + "A" * n, qp(binom2(n))),
        lambda n: prod(W("BA") - W("g", qn(j)) for j in range(n)),
    ),
    # -- presentation R: reordering ------------------------------------------
    Identity(
        "A_C_reorder",
        "A [A,B] = q [A,B] A",
        "R",
        _E,
        lambda: multiply(A, lie_bracket(A, B)),
        lambda: multiply(lie_bracket(A, B), A).scale(q),
    ),
    Identity(
        "C_B_reorder",
        "[A,B] B = q B [A,B]",
        "R",
        _E,
        lambda: multiply(lie_bracket(A, B), B),
        lambda: multiply(B, lie_bracket(A, B)).scale(q),
    ),
    Identity(
        "A_power_C",
        "A^k [A,B] = q^k [A,B] A^k",
        "R",
        {"k": (0, 10)},
        lambda k: multiply(W("A" * k), lie_bracket(A, B)),
        lambda k: multiply(lie_bracket(A, B), W("A" * k)).scale(qp(k)),
    ),
    Identity(
        "C_B_power",
        "[A,B] B^k = q^k B^k [A,B]",
        "R",
        {"k": (0, 10)},
        lambda k: multiply(lie_bracket(A, B), W("B" * k)),
        lambda k: multiply(W("B" * k), lie_bracket(A, B)).scale(qp(k)),
    ),
    Identity(
        "A_power_C_power",
        "A^k C^n = q^(kn) C^n A^k",
        "R",
        {"k": (0, 10), "n": (0, 10)},
        lambda k, n: W("A" * k + "C" * n),
        lambda k, n: W("C" * n + "A" * k, qp(k * n)),
    ),
    Identity(
        "C_power_B_power",
        "C^n B^k = q^(kn) B^k C^n",
        "R",
        {"k": (0, 10), "n": (0, 10)},
        lambda k, n: W("C" * n + "B" * k),
        lambda k, n: W("B" * k + "C" * n, qp(k * n)),
    ),
    Identity(
        "bracket_is_C",
        "AB = [A,B] + BA, with C the bracket",
        "R",
        _E,
        lambda: W("AB"),
        lambda: C + W("BA"),
    ),
    Identity(
        "AB_solved",
        "(1-q) AB = g - q C",
        "R",
        _E,
        lambda: W("AB", one_minus_q),
        lambda: G - W("C", q),
    ),
    Identity(
        "BA_solved",
        "(1-q) BA = g - C",
        "R",
        _E,
        lambda: W("BA", one_minus_q),
        lambda: G - C,
    ),
    Identity(
        "gamma_is_AB_minus_qBA",
        "g = AB - q BA",
        "R",
        _E,
        lambda: G,
        lambda: W("AB") - W("BA", q),
    ),
    Identity(
        "AnBn_scaled_product",
        "(1-q)^n A^n B^n = prod_{i=1..n} (g - q^i C)",
        "R",
        {"n": (0, 10)},
        lambda n: W("A" * n + "B" * n, one_minus_q ** n),
        lambda n: prod(G - W("C", qp(i)) for i in range(1, n + 1)),
    ),
    Identity(
        "BnAn_scaled_product",
        "q^binom(n,2) (1-q)^n B^n A^n = prod_{j=0..n-1} (q^j g - C)",
        "R",
        {"n": (0, 10)},
        lambda n: W("B" * n + "A" * n, qp(binom2(n)) * one_minus_q ** n),
        lambda n: prod(W("g", qp(j)) - C for j in range(n)),
    ),
    Identity(
        "AnBn_binomial_sum",
        "(1-q)^n A^n B^n = sum (-1)^i q^binom(i+1,2) [n,i] g^(n-i) C^i",
        "R",
        {"n": (0, 10)},
        lambda n: W("A" * n + "B" * n, one_minus_q ** n),
        lambda n: binomial_sum(n, "AB"),
    ),
    Identity(
        "BnAn_binomial_sum",
        "q^binom(n,2) (1-q)^n B^n A^n = sum (-1)^i q^binom(n-i,2) [n,i] g^(n-i) C^i",
        "R",
        {"n": (0, 10)},
        lambda n: W("B" * n + "A" * n, qp(binom2(n)) * one_minus_q ** n),
        lambda n: binomial_sum(n, "BA"),
    ),
    # -- presentation R: iterated adjoint actions --------------------------------
    Identity(
        "neg_ad_A_on_C",
        "(-ad A)^n (C) = (1-q)^n C A^n",
        "R",
        {"n": (0, 8)},
        lambda n: ad_power(A, -1, n, C),
        lambda n: W("C" + "A" * n, one_minus_q ** n),
    ),
    Identity(
        "ad_B_on_C",
        "(ad B)^n (C) = (1-q)^n B^n C",
        "R",
        {"n": (0, 8)},
        lambda n: ad_power(B, 1, n, C),
        lambda n: W("B" * n + "C", one_minus_q ** n),
    ),
    Identity(
        "neg_ad_C_on_B",
        "(-ad C)^n (B) = (1-q)^n B C^n",
        "R",
        {"n": (0, 8)},
        lambda n: ad_power(C, -1, n, B),
        lambda n: W("B" + "C" * n, one_minus_q ** n),
    ),
    Identity(
        "ad_C_on_A",
        "(ad C)^n (A) = (1-q)^n C^n A",
        "R",
        {"n": (0, 8)},
        lambda n: ad_power(C, 1, n, A),
        lambda n: W("C" * n + "A", one_minus_q ** n),
    ),
    Identity(
        "ad_C_on_CAn",
        "(ad C)^m (C A^n) = (1-q^n)^m C^(m+1) A^n",
        "R",
        {"m": (0, 6), "n": (0, 6)},
        lambda m, n: ad_power(C, 1, m, W("C" + "A" * n)),
        lambda m, n: W("C" * (m + 1) + "A" * n, (1 - qp(n)) ** m),
    ),
    Identity(
        "neg_ad_C_on_BnC",
        "(-ad C)^m (B^n C) = (1-q^n)^m B^n C^(m+1)",
        "R",
        {"m": (0, 6), "n": (0, 6)},
        lambda m, n: ad_power(C, -1, m, W("B" * n + "C")),
        lambda m, n: W("B" * n + "C" * (m + 1), (1 - qp(n)) ** m),
    ),
    Identity(
        "ad_B_ad_C_power_on_A",
        "q^n (ad B)(ad C)^n (A) = (1-q)^n ({n} g C^n - {n+1} C^(n+1))",
        "R",
        {"n": (0, 8)},
        _prop_bc_ad,
        lambda n: (W("g" + "C" * n, qn(n)) - W("C" * (n + 1), qn(n + 1))).scale(one_minus_q ** n),
    ),
    Identity(
        "gamma_CnA_from_brackets",
        "[q^n (ad B)(ad C)^n (A), A] = (1-q)^(n+1) ({n}^2 g C^n A - {n+1}^2 C^(n+1) A)",
        "R",
        {"n": (0, 8)},
        lambda n: lie_bracket(_prop_bc_ad(n), A),
        lambda n: (
            W("g" + "C" * n + "A", qn(n) ** 2) - W("C" * (n + 1) + "A", qn(n + 1) ** 2)
        ).scale(one_minus_q ** (n + 1)),
    ),
    Identity(
        "La_expansion",
        "q^n (-ad A)^m (ad B)(ad C)^n (A) = (1-q)^(n+m) ({n}^(m+1) g C^n A^m - {n+1}^(m+1) C^(n+1) A^m)",
        "R",
        {"m": (0, 5), "n": (0, 5)},
        _La,
        lambda m, n: (
            W("g" + "C" * n + "A" * m, qn(n) ** (m + 1)) - W("C" * (n + 1) + "A" * m, qn(n + 1) ** (m + 1))
        ).scale(one_minus_q ** (n + m)),
    ),
    Identity(
        "Lb_expansion",
        "q^n (-ad B)^m (ad B)(ad C)^n (A) = (1-q)^(n+m) ({n+1}^(m+1) B^m C^(n+1) - {n}^(m+1) g B^m C^n)",
        "R",
        {"m": (0, 5), "n": (0, 5)},
        _Lb,
        lambda m, n: _Lb_printed(m, n),
        corrected_rhs=lambda m, n: _Lb_printed(m, n).scale(sign(m + 1)),
    ),
    Identity(
        "CnAmBl_expansion_m_lt_l",
        "(1-q)^m g^h C^n A^m B^l over g^(h+m-i) B^(l-m) C^(n+i), for m < l",
        "R",
        {"h": (0, 2), "n": (1, 4), "m": (1, 4), "l": (1, 4)},
        lambda h, n, m, l: W(mono(("g", h), ("C", n), ("A", m), ("B", l)), one_minus_q ** m),
        lambda h, n, m, l: sum(
            (
                W(
                    mono(("g", h + m - i), ("B", l - m), ("C", n + i)),
                    sign(i) * qp(binom2(i + 1) + (l - m) * (n + i)) * qb(m, i),
                )
                for i in range(m + 1)
            ),
            NcPoly.zero(),
        ),
        where=lambda h, n, m, l: m < l,
    ),
    Identity(
        "CnAmBl_expansion_m_gt_l",
        "(1-q)^l g^h C^n A^m B^l over g^(h+l-i) C^(n+i) A^(m-l), for m > l",
        "R",
        {"h": (0, 2), "n": (1, 4), "m": (1, 4), "l": (1, 4)},
        lambda h, n, m, l: W(mono(("g", h), ("C", n), ("A", m), ("B", l)), one_minus_q ** l),
        lambda h, n, m, l: sum(
            (
                W(
                    mono(("g", h + l - i), ("C", n + i), ("A", m - l)),
                    sign(i) * qp(binom2(i + 1) + i * m - i * l) * qb(l, i),
                )
                for i in range(l + 1)
            ),
            NcPoly.zero(),
        ),
        where=lambda h, n, m, l: m > l,
    ),
    Identity(
        "bracket_BmCn_CnAm_sum",
        "(1-q)^(m-1) q^(binom(m,2)+m(n+h)) [g^k B^m C^n, g^j C^h A^m] as a sum over g^(m-i+j+k) C^(i+h+n)",
        "R",
        {"m": (1, 4), "n": (1, 4), "h": (1, 4), "j": (0, 2), "k": (0, 2)},
        _bracket_sum_lhs,
        _bracket_sum_rhs,
    ),
    Identity(
        "q_binomial_vanishing",
        "sum_{i=0..m} (-1)^i q^binom(m-i,2) (q^(n+h+i))^r [m,i] = 0 for m > r",
        "R",
        {"m": (1, 10), "r": (0, 9), "n": (1, 5), "h": (1, 5)},
        _vanishing_sum,
        lambda m, r, n, h: NcPoly.zero(),
        where=lambda m, r, n, h: r < m and n + h <= 6,
    ),
    Identity(
        "psi_telescoping",
        "{i+h+n} g^(m-i+j+k) C^(i+h+n) = psi_1 + ... + psi_i + {h+n} g^(m+j+k) C^(h+n)",
        "R",
        {"m": (1, 4), "n": (1, 3), "h": (1, 3), "j": (0, 1), "k": (0, 1), "i": (1, 4)},
        lambda m, n, h, j, k, i: W(mono(("g", m - i + j + k), ("C", i + h + n)), qn(i + h + n)),
        lambda m, n, h, j, k, i: sum(
            (_psi(t, m, n, h, j, k) for t in range(1, i + 1)), NcPoly.zero()
        )
        + W(mono(("g", m + j + k), ("C", h + n)), qn(h + n)),
        where=lambda m, n, h, j, k, i: i <= m,
    ),
    Identity(
        "bracket_sum_psi_form",
        "the bracket sum rewritten over partial sums psi_0 + ... + psi_i",
        "R",
        {"m": (1, 3), "n": (1, 3), "h": (1, 3), "j": (0, 1), "k": (0, 1)},
        _bracket_sum_lhs,
        _psi_sum_rhs(_psi0_inline, _psi),
        readings={
            "psi0_inline": _psi_sum_rhs(_psi0_inline, _psi),
            "psi0_absorbed": _psi_sum_rhs(_psi0_zero, _psi),
            "inline": _psi_sum_rhs(_psi0_inline, _psi_inline),
        },
    ),
    # -- presentation R: bracket table ------------------------------------------
    Identity(
        "bracket_B_A",
        "[B, A] = -C",
        "R",
        _E,
        lambda: lie_bracket(B, A),
        lambda: -C,
    ),
    Identity(
        "bracket_C_A",
        "[C, A] = (1-q) C A",
        "R",
        _E,
        lambda: lie_bracket(C, A),
        lambda: W("CA", one_minus_q),
    ),
    Identity(
        "bracket_C_B",
        "[C, B] = (q-1) B C",
        "R",
        _E,
        lambda: lie_bracket(C, B),
        lambda: W("BC", q - 1),
    ),
    Identity(
        "bracket_gBC_A",
        "q^n [g^h B^l C^n, A] = {n} g^(h+1) B^(l-1) C^n - {n+l} g^h B^(l-1) C^(n+1)",
        "R",
        {"h": (0, 3), "l": (1, 3), "n": (1, 3)},
        lambda h, l, n: lie_bracket(W(mono(("g", h), ("B", l), ("C", n))), A).scale(qp(n)),
        lambda h, l, n: W(mono(("g", h + 1), ("B", l - 1), ("C", n)), qn(n))
        - W(mono(("g", h), ("B", l - 1), ("C", n + 1)), qn(n + l)),
    ),
    Identity(
        "bracket_gBC_B",
        "[g^h B^l C^n, B] = (q^n - 1) g^h B^(l+1) C^n",
        "R",
        {"h": (0, 3), "l": (1, 3), "n": (1, 3)},
        lambda h, l, n: lie_bracket(W(mono(("g", h), ("B", l), ("C", n))), B),
        lambda h, l, n: W(mono(("g", h), ("B", l + 1), ("C", n)), qp(n) - 1),
    ),
    Identity(
        "bracket_gBC_C",
        "[g^h B^l C^n, C] = (1 - q^l) g^h B^l C^(n+1)",
        "R",
        {"h": (0, 3), "l": (1, 3), "n": (1, 3)},
        lambda h, l, n: lie_bracket(W(mono(("g", h), ("B", l), ("C", n))), C),
        lambda h, l, n: W(mono(("g", h), ("B", l), ("C", n + 1)), 1 - qp(l)),
    ),
    Identity(
        "bracket_gCA_gCA",
        "[g^h C^n A^m, g^j C^h A^l] = (q^(mh) - q^(ln)) g^(h+j) C^(n+h) A^(m+l)",
        "R",
        {"h": (0, 3), "n": (1, 3), "m": (1, 3), "j": (0, 3), "l": (1, 3)},
        lambda h, n, m, j, l: lie_bracket(
            W(mono(("g", h), ("C", n), ("A", m))), W(mono(("g", j), ("C", h), ("A", l)))
        ),
        lambda h, n, m, j, l: W(mono(("g", h + j), ("C", n + h), ("A", m + l)), qp(m * h) - qp(l * n)),
    ),
    Identity(
        "bracket_gBC_gBC",
        "[g^h B^l C^n, g^j B^m C^h] = (q^(2mn) - q^(2lh)) g^(h+j) B^(l+m) C^(h+n)",
        "R",
        {"h": (0, 3), "l": (1, 3), "n": (1, 3), "j": (0, 3), "m": (1, 3)},
        lambda h, l, n, j, m: lie_bracket(
            W(mono(("g", h), ("B", l), ("C", n))), W(mono(("g", j), ("B", m), ("C", h)))
        ),
        lambda h, l, n, j, m: W(mono(("g", h + j), ("B", l + m), ("C", h + n)), qp(2 * m * n) - qp(2 * l * h)),
        corrected_rhs=lambda h, l, n, j, m: W(
            mono(("g", h + j), ("B", l + m), ("C", h + n)), qp(m * n) - qp(l * h)
        ),
    ),
    Identity(
        "bracket_gCA_gBC",
        "q^(l(k+n)) [g^h C^n A^m, g^j B^l C^k] = q^(ln+km) g^(h+j) C^(n+k) A^m B^l - g^(h+j) C^(k+n) B^l A^m",
        "R",
        {"h": (0, 3), "n": (1, 3), "m": (1, 3), "j": (0, 3), "l": (1, 3), "k": (1, 3)},
        lambda h, n, m, j, l, k: lie_bracket(
            W(mono(("g", h), ("C", n), ("A", m))), W(mono(("g", j), ("B", l), ("C", k)))
        ).scale(qp(l * (k + n))),
        lambda h, n, m, j, l, k: W(mono(("g", h + j), ("C", n + k), ("A", m), ("B", l)), qp(l * n + k * m))
        - W(mono(("g", h + j), ("C", k + n), ("B", l), ("A", m))),
    ),
    Identity(
        "bracket_beta_A",
        "[beta(h,n), A] = (1-q^(n+1)) {n+1} g^h C^(n+1) A - (1-q^n) {n} g^(h+1) C^n A",
        "R",
        {"h": (0, 3), "n": (1, 3)},
        lambda h, n: lie_bracket(beta(h, n), A),
        lambda h, n: W(mono(("g", h), ("C", n + 1), ("A", 1)), (1 - qp(n + 1)) * qn(n + 1))
        - W(mono(("g", h + 1), ("C", n), ("A", 1)), (1 - qp(n)) * qn(n)),
    ),
    Identity(
        "bracket_beta_B",
        "[beta(h,n), B] = (q^(n+1)-1) {n+1} g^h B C^(n+1) - (q^n-1) {n} g^(h+1) B C^n",
        "R",
        {"h": (0, 3), "n": (1, 3)},
        lambda h, n: lie_bracket(beta(h, n), B),
        lambda h, n: W(mono(("g", h), ("B", 1), ("C", n + 1)), (qp(n + 1) - 1) * qn(n + 1))
        - W(mono(("g", h + 1), ("B", 1), ("C", n)), (qp(n) - 1) * qn(n)),
    ),
    Identity(
        "bracket_gCA_beta",
        "[g^h C^n A^m, beta(k,n)] = (1-q^(mn)) {n} g^(h+k+1) C^(2n) A^m - (1-q^(m(n+1))) {n+1} g^(h+k) C^(2n+1) A^m",
        "R",
        {"h": (0, 3), "n": (1, 3), "m": (1, 3), "k": (0, 3)},
        lambda h, n, m, k: lie_bracket(W(mono(("g", h), ("C", n), ("A", m))), beta(k, n)),
        lambda h, n, m, k: W(mono(("g", h + k + 1), ("C", 2 * n), ("A", m)), (1 - qp(m * n)) * qn(n))
        - W(mono(("g", h + k), ("C", 2 * n + 1), ("A", m)), (1 - qp(m * (n + 1))) * qn(n + 1)),
    ),
    Identity(
        "bracket_gBC_beta",
        "[g^h B^l C^n, beta(j,m)] = (1-q^(l(m+1))) {m+1} g^(j+h) B^l C^(n+m+1) - (1-q^(lm)) {m} g^(j+1+h) B^l C^(m+1)",
        "R",
        {"h": (0, 3), "l": (1, 3), "n": (1, 3), "j": (0, 3), "m": (1, 3)},
        lambda h, l, n, j, m: lie_bracket(W(mono(("g", h), ("B", l), ("C", n))), beta(j, m)),
        lambda h, l, n, j, m: W(mono(("g", j + h), ("B", l), ("C", n + m + 1)), (1 - qp(l * (m + 1))) * qn(m + 1))
        - W(mono(("g", j + 1 + h), ("B", l), ("C", m + 1)), (1 - qp(l * m)) * qn(m)),
        corrected_rhs=lambda h, l, n, j, m: W(
            mono(("g", j + h), ("B", l), ("C", n + m + 1)), (1 - qp(l * (m + 1))) * qn(m + 1)
        )
        - W(mono(("g", j + 1 + h), ("B", l), ("C", n + m)), (1 - qp(l * m)) * qn(m)),
    ),
    Identity(
        "bracket_gCA_A",
        "[g^k C^n A^m, A] = (1 - q^n) g^k C^n A^(m+1)",
        "R",
        {"k": (0, 3), "n": (1, 3), "m": (1, 3)},
        lambda k, n, m: lie_bracket(W(mono(("g", k), ("C", n), ("A", m))), A),
        lambda k, n, m: W(mono(("g", k), ("C", n), ("A", m + 1)), 1 - qp(n)),
    ),
    Identity(
        "bracket_gCA_B",
        "(1-q) q^n [g^k C^n A^(m+1), B] = (1-q) {n+m+1} g^k C^(n+1) A^m - (1-q) {n} g^(k+1) C^n A^m",
        "R",
        {"k": (0, 3), "n": (1, 3), "m": (0, 3)},
        lambda k, n, m: lie_bracket(W(mono(("g", k), ("C", n), ("A", m + 1))), B).scale(one_minus_q * qp(n)),
        lambda k, n, m: W(mono(("g", k), ("C", n + 1), ("A", m)), one_minus_q * qn(n + m + 1))
        - W(mono(("g", k + 1), ("C", n), ("A", m)), one_minus_q * qn(n)),
    ),
    Identity(
        "bracket_gCA_C",
        "[g^k C^n A^m, C] = (q^m - 1) g^k C^(n+1) A^m",
        "R",
        {"k": (0, 3), "n": (1, 3), "m": (1, 3)},
        lambda k, n, m: lie_bracket(W(mono(("g", k), ("C", n), ("A", m))), C),
        lambda k, n, m: W(mono(("g", k), ("C", n + 1), ("A", m)), qp(m) - 1),
    ),
    Identity(
        "beta_bridge",
        "q^n [g^h C^n A, B] = {n+1} g^h C^(n+1) - {n} g^(h+1) C^n",
        "R",
        {"h": (0, 5), "n": (1, 5)},
        lambda h, n: lie_bracket(W(mono(("g", h), ("C", n), ("A", 1))), B).scale(qp(n)),
        beta,
    ),
)

_BY_NAME = {ident.name: ident for ident in CATALOG}


def identity_names() -> list[str]:
    return [ident.name for ident in CATALOG]


def get_identity(name: str) -> Identity:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {name!r}") from None


def _scaled_hi(lo: int, hi: int, scale: float) -> int:
    return max(lo, math.floor(hi * scale + 1e-9))


def parameter_grid(ident: Identity, params_scale: float = 1.0) -> list[dict]:
    """All admissible parameter tuples within the (scaled) default ranges."""
    names = ident.params
    ranges = [range(lo, _scaled_hi(lo, hi, params_scale) + 1) for lo, hi in ident.bounds.values()]
    grid = []
    for values in itertools.product(*ranges):
        p = dict(zip(names, values))
        if ident.admissible(p):
            grid.append(p)
    return grid


def _check_params(ident: Identity, params: Mapping[str, int], limit_scale: float) -> None:
    expected = set(ident.params)
    if set(params) != expected:
        missing = sorted(expected - set(params))
        extra = sorted(set(params) - expected)
        raise ValueError(f"{ident.name}: missing parameters {missing}, unexpected {extra}")
    for name, (lo, hi) in ident.bounds.items():
        v = params[name]
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"{ident.name}: parameter {name} must be an integer")
        if v < lo:
            raise ValueError(f"{ident.name}: parameter {name}={v} is below {lo}")
        limit = _scaled_hi(lo, max(hi, 1), limit_scale)
        if v > limit:
            raise BoundError(f"{ident.name}: parameter {name}={v} exceeds the bound {limit}")
    if not ident.admissible(params):
        raise ValueError(f"{ident.name}: parameters {dict(params)} violate the side condition")


def _verify(ident: Identity, params: dict, limit_scale: float = LIMIT_FACTOR) -> IdentityResult:
    _check_params(ident, params, limit_scale)
    sys = presentation(ident.system)
    lhs_nf = normalize(ident.lhs(**params), sys)
    rhs_nf = normalize(ident.rhs(**params), sys)
    notes: list[str] = []
    readings: dict[str, bool] = {}
    if lhs_nf.value == rhs_nf.value:
        status = "holds"
    elif ident.corrected_rhs is not None:
        fixed = normalize(ident.corrected_rhs(**params), sys)
        if fixed.value == lhs_nf.value:
            status = "corrected"
            notes.append("printed right-hand side fails; corrected right-hand side holds")
            rhs_nf = fixed
        else:
            status = "fails"
            notes.append("printed and corrected right-hand sides both fail")
    else:
        status = "fails"
    for label, builder in ident.readings.items():
        readings[label] = normalize(builder(**params), sys).value == lhs_nf.value
    if readings:
        notes.append("readings: " + ", ".join(f"{k}={'holds' if v else 'fails'}" for k, v in readings.items()))
    return IdentityResult(ident.name, dict(params), status, lhs_nf, rhs_nf, tuple(notes), readings)


def verify(name: str, **params) -> IdentityResult:
    """Check one identity at one parameter tuple."""
    return _verify(get_identity(name), params)


def _run_one(task: tuple[str, dict, float]) -> IdentityResult:
    name, params, limit_scale = task
    return _verify(_BY_NAME[name], params, limit_scale)


def run_suite(
    only: Sequence[str] | None = None,
    *,
    params_scale: float = 1.0,
    jobs: int = 1,
) -> list[IdentityResult]:
    """Verify every catalog entry over its default grid.

    Results come back in catalog order, then grid order, whatever ``jobs`` is.
    """
    if params_scale <= 0:
        raise ValueError("params_scale must be positive")
    selected = list(CATALOG) if not only else [get_identity(n) for n in only]
    limit_scale = max(LIMIT_FACTOR, params_scale)
    tasks = [(ident.name, p, limit_scale) for ident in selected for p in parameter_grid(ident, params_scale)]
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks, chunksize=16))
