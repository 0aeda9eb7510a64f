"""The Lie subalgebra L of R(q) generated by A and B.

Membership is decided slice by slice: every defining relation is homogeneous
for the weight grading, and so is every vector of the Lie basis, so an
element lies in L iff each of its weight components lies in the (finite)
span of the basis vectors of that weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .echelon import Echelon
from .errors import BoundError, ConsistencyError
from .exactnum import QRat, q_number
from .freealg import NcPoly, format_word, lie_bracket, word_key
from .rewrite import CanonicalElement, normalize
from .rqalg import presentation

__all__ = [
    "LieBasisVector",
    "MembershipVerdict",
    "lie_basis",
    "lie_basis_normal_form",
    "is_lie_polynomial",
    "lie_span_bruteforce",
    "lie_span_ranks",
    "verify_identity",
    "SPAN_BOUND",
]

SPAN_BOUND = 10


@dataclass(frozen=True, order=True)
class LieBasisVector:
    """One vector of the Lie basis.

    kind "A", "B", "C": the letters.
    kind "CA": gamma^h C^n A^m (n, m >= 1).
    kind "BC": gamma^h B^m C^n (m, n >= 1).
    kind "Beta": {n+1} gamma^h C^(n+1) - {n} gamma^(h+1) C^n (n >= 1).
    """

    kind: str
    h: int = 0
    n: int = 0
    m: int = 0

    def __post_init__(self):
        if self.kind in ("A", "B", "C"):
            if (self.h, self.n, self.m) != (0, 0, 0):
                raise ValueError(f"letter vector {self.kind} takes no exponents")
        elif self.kind in ("CA", "BC"):
            if self.h < 0 or self.n < 1 or self.m < 1:
                raise ValueError(f"{self.kind} vectors need h >= 0 and m, n >= 1")
        elif self.kind == "Beta":
            if self.h < 0 or self.n < 1 or self.m != 0:
                raise ValueError("Beta vectors need h >= 0 and n >= 1")
        else:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    @classmethod
    def ca(cls, h: int, n: int, m: int) -> "LieBasisVector":
        return cls("CA", h, n, m)

    @classmethod
    def bc(cls, h: int, m: int, n: int) -> "LieBasisVector":
        return cls("BC", h, n, m)

    @classmethod
    def beta(cls, h: int, n: int) -> "LieBasisVector":
        return cls("Beta", h, n)

    @property
    def weight(self) -> int:
        if self.kind in ("A", "B"):
            return 1
        if self.kind == "C":
            return 2
        if self.kind == "Beta":
            return 2 * self.h + 2 * self.n + 2
        return 2 * self.h + 2 * self.n + self.m

    def element(self) -> NcPoly:
        """The vector as written, before normalization."""
        if self.kind in ("A", "B", "C"):
            return NcPoly.word(self.kind)
        g = "g" * self.h
        if self.kind == "CA":
            return NcPoly.word(g + "C" * self.n + "A" * self.m)
        if self.kind == "BC":
            return NcPoly.word(g + "B" * self.m + "C" * self.n)
        return NcPoly.word(g + "C" * (self.n + 1), q_number(self.n + 1)) - NcPoly.word(
            g + "g" + "C" * self.n, q_number(self.n)
        )

    @property
    def label(self) -> str:
        if self.kind in ("A", "B", "C"):
            return self.kind
        if self.kind == "Beta":
            return f"beta({self.h},{self.n})"
        return format_word(self.element().words()[0])

    def __str__(self) -> str:
        return self.label


def lie_basis_normal_form(v: LieBasisVector) -> CanonicalElement:
    """R-normal form of a Lie basis vector, in closed form."""
    if v.kind == "BC":
        word = "g" * v.h + "C" * v.n + "B" * v.m
        return CanonicalElement("R", NcPoly.word(word, QRat.q(-v.m * v.n)))
    # letters, CA and Beta vectors are already R-irreducible as written
    return CanonicalElement("R", v.element())


def lie_basis(weight: int) -> list[LieBasisVector]:
    """All Lie basis vectors of exactly the given weight, in a fixed order."""
    if weight < 0:
        raise ValueError("weight must be a natural number")
    out: list[LieBasisVector] = []
    if weight == 1:
        out += [LieBasisVector("A"), LieBasisVector("B")]
    if weight == 2:
        out.append(LieBasisVector("C"))
    for h in range(weight // 2 + 1):
        for n in range(1, (weight - 2 * h) // 2 + 1):
            m = weight - 2 * h - 2 * n
            if m >= 1:
                out.append(LieBasisVector.ca(h, n, m))
                out.append(LieBasisVector.bc(h, m, n))
        n = (weight - 2 * h - 2) // 2
        if weight % 2 == 0 and n >= 1:
            out.append(LieBasisVector.beta(h, n))
    return sorted(out)


@lru_cache(maxsize=None)
def _slice_solver(weight: int) -> Echelon:
    ech = Echelon(order=word_key)
    for v in lie_basis(weight):
        if not ech.add(lie_basis_normal_form(v).value.terms, v):
            raise ConsistencyError(f"Lie basis vectors of weight {weight} are linearly dependent")
    return ech


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    decomposition: dict = field(default_factory=dict)  # LieBasisVector -> QRat
    residual: CanonicalElement = field(default_factory=lambda: CanonicalElement("R", NcPoly.zero()))
    normal_form: CanonicalElement = field(default_factory=lambda: CanonicalElement("R", NcPoly.zero()))

    def __bool__(self) -> bool:
        return self.member

    def recombine(self) -> NcPoly:
        """Re-expand the decomposition over the basis normal forms."""
        total = NcPoly.zero()
        for v, c in self.decomposition.items():
            total = total + lie_basis_normal_form(v).value.scale(c)
        return total


def is_lie_polynomial(x: NcPoly | CanonicalElement) -> MembershipVerdict:
    """Decide whether x lies in the Lie subalgebra generated by A and B."""
    if isinstance(x, CanonicalElement) and x.system == "R":
        nf = x
    else:
        value = x.value if isinstance(x, CanonicalElement) else x
        nf = normalize(value, presentation("R"))
    decomposition: dict = {}
    residual: dict = {}
    for w, part in nf.value.weight_components().items():
        res, comb = _slice_solver(w).reduce(part.terms)
        residual.update(res)
        for v, c in comb.items():
            decomposition[v] = c
    member = not residual
    residual_elt = CanonicalElement("R", NcPoly._wrap(residual))
    if not member:
        return MembershipVerdict(False, {}, residual_elt, nf)
    return MembershipVerdict(True, dict(sorted(decomposition.items())), residual_elt, nf)


def _bracket_closure(max_weight: int, bound: int) -> dict[int, list[CanonicalElement]]:
    if max_weight < 0:
        raise ValueError("max_weight must be a natural number")
    if max_weight > bound:
        raise BoundError(f"max_weight {max_weight} exceeds the bound {bound}")
    sysR = presentation("R")
    layers: dict[int, list[CanonicalElement]] = {}
    if max_weight >= 1:
        layers[1] = [CanonicalElement("R", NcPoly.word("A")), CanonicalElement("R", NcPoly.word("B"))]
    for w in range(2, max_weight + 1):
        ech = Echelon(order=word_key)
        found: list[CanonicalElement] = []
        for a in range(1, w // 2 + 1):
            for x in layers.get(a, []):
                for y in layers.get(w - a, []):
                    z = normalize(lie_bracket(x.value, y.value), sysR)
                    if ech.add(z.value.terms, len(found)):
                        found.append(z)
        layers[w] = found
    return layers


def lie_span_bruteforce(max_weight: int, *, bound: int = SPAN_BOUND) -> list[CanonicalElement]:
    """Independent oracle: a basis of the bracket closure of {A, B} up to max_weight.

    Works in ascending weight; the weight-w slice of L is spanned by the
    brackets [x, y] with x, y running over spanning sets of lower slices
    whose weights add up to w.
    """
    layers = _bracket_closure(max_weight, bound)
    return [e for w in sorted(layers) for e in layers[w]]


def lie_span_ranks(max_weight: int, *, bound: int = SPAN_BOUND) -> dict[int, int]:
    layers = _bracket_closure(max_weight, bound)
    return {w: len(layers.get(w, [])) for w in range(1, max_weight + 1)}


def verify_identity(name: str, **params):
    """Check one catalog identity; see :mod:`rqkernel.catalog`."""
    from .catalog import verify

    return verify(name, **params)

