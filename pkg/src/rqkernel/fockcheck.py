"""Truncated q-oscillator representation used as a numeric cross-check.

On the basis e_0, ..., e_{N-1}::

    B e_k = e_{k+1}   (e_{N-1} goes to 0)
    A e_k = b {k}_q e_{k-1}
    gamma = b * identity,  C = AB - BA

so AB - q BA acts as b on every column except the last.  Every letter
maps a basis vector to a multiple of a basis vector, which makes
column-by-column evaluation cheap and exact.  A word of weight D moves the
ladder index by at most D, so results on columns 0 .. N-1-D are not
affected by the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import BoundError, EvaluationError
from .freealg import NcPoly, format_word

__all__ = ["FockRep", "evaluate", "evaluate_columns", "agree_on_block", "DEFAULT_Q", "DEFAULT_B"]

DEFAULT_Q = Fraction(2, 3)
DEFAULT_B = Fraction(5, 7)

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class FockRep:
    dim: int
    q_val: Fraction = DEFAULT_Q
    b_val: Fraction = DEFAULT_B
    _qnum: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("dimension must be at least 2")
        q = Fraction(self.q_val)
        b = Fraction(self.b_val)
        if q == 0 or q == 1:
            raise ValueError("q must be different from 0 and 1")
        object.__setattr__(self, "q_val", q)
        object.__setattr__(self, "b_val", b)
        nums = [Fraction(0)]
        for k in range(1, self.dim + 1):
            nums.append(nums[-1] * q + 1)
        object.__setattr__(self, "_qnum", tuple(nums))

    def _matrix(self, letter: str) -> Matrix:
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for k in range(n):
            hit = self.apply(letter, k)
            if hit is not None:
                out[hit[0]][k] = hit[1]
        return out

    @property
    def matA(self) -> Matrix:
        return self._matrix("A")

    @property
    def matB(self) -> Matrix:
        return self._matrix("B")

    def apply(self, letter: str, k: int) -> tuple[int, Fraction] | None:
        """Image of e_k under one letter as (index, factor), or None for zero."""
        b = self.b_val
        if letter == "B":
            return (k + 1, Fraction(1)) if k + 1 < self.dim else None
        if letter == "A":
            return (k - 1, b * self._qnum[k]) if k > 0 else None
        if letter == "g":
            return (k, b)
        if letter == "C":
            up = self._qnum[k + 1] if k + 1 < self.dim else 0
            d = b * (up - self._qnum[k])
            return (k, d) if d else None
        raise ValueError(f"invalid letter {letter!r}")


def _apply_word(rep: FockRep, word: str, k: int) -> tuple[int, Fraction] | None:
    factor = Fraction(1)
    for letter in reversed(word):
        hit = rep.apply(letter, k)
        if hit is None:
            return None
        k, f = hit
        factor *= f
    return k, factor


def _specialize(x: NcPoly, rep: FockRep) -> list[tuple[str, Fraction]]:
    out = []
    for w, c in x.items():
        try:
            out.append((w, c.evaluate(rep.q_val)))
        except ZeroDivisionError:
            raise EvaluationError(
                f"coefficient {c} of word {format_word(w)} has a pole at q = {rep.q_val}"
            ) from None
    return out


def evaluate_columns(x: NcPoly, rep: FockRep, columns: Iterable[int]) -> dict[int, dict[int, Fraction]]:
    """Selected columns of the matrix of x, each as a sparse {row: value} map."""
    terms = _specialize(x, rep)
    out: dict[int, dict[int, Fraction]] = {}
    for k in columns:
        col: dict[int, Fraction] = {}
        for w, c in terms:
            hit = _apply_word(rep, w, k)
            if hit is None:
                continue
            row, f = hit
            v = col.get(row, 0) + c * f
            if v:
                col[row] = v
            else:
                col.pop(row, None)
        out[k] = col
    return out


def evaluate(x: NcPoly, rep: FockRep) -> Matrix:
    """The exact N x N matrix of x (a dense list of rows)."""
    n = rep.dim
    mat = [[Fraction(0)] * n for _ in range(n)]
    for k, col in evaluate_columns(x, rep, range(n)).items():
        for row, v in col.items():
            mat[row][k] = v
    return mat


def agree_on_block(x: NcPoly, y: NcPoly, rep: FockRep) -> bool:
    """Compare x and y on the columns the truncation cannot reach."""
    d = max(x.max_weight(), y.max_weight())
    if rep.dim <= d:
        raise BoundError(f"representation of dimension {rep.dim} is too small for weight {d}")
    return evaluate_columns(x - y, rep, range(rep.dim - d)) == {k: {} for k in range(rep.dim - d)}
