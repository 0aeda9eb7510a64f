"""Incremental sparse row echelon form over Q(q).

Vectors are dicts from hashable coordinates to nonzero QRat entries.  Each
stored row remembers how it was built from the inserted vectors, so a
successful reduction also yields the coefficients of a linear combination.
"""

from __future__ import annotations

from typing import Hashable, Mapping

from .exactnum import QRat

__all__ = ["Echelon"]

Vector = dict[Hashable, QRat]


def _axpy(target: Vector, scale: QRat, row: Mapping[Hashable, QRat]) -> None:
    """target -= scale * row, dropping zeros."""
    for k, v in row.items():
        if k in target:
            s = target[k] - scale * v
            if s:
                target[k] = s
            else:
                del target[k]
        else:
            target[k] = -(scale * v)


class Echelon:
    """Semi-reduced echelon basis: row i is zero at the pivots of rows before it.

    Pivots are chosen among the surviving entries with the lowest total
    q-degree, which keeps the coefficients of later eliminations small.
    ``order`` breaks ties deterministically.
    """

    def __init__(self, order=None):
        self._rows: list[tuple[Hashable, Vector, Vector]] = []  # (pivot, row, combination)
        self._order = order or repr

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[Hashable]:
        return [p for p, _, _ in self._rows]

    def reduce(self, vector: Mapping[Hashable, QRat]) -> tuple[Vector, Vector]:
        """Return ``(residual, combination)`` with vector = sum(comb * inserted) + residual."""
        v: Vector = dict(vector)
        comb: Vector = {}
        for pivot, row, rcomb in self._rows:
            c = v.get(pivot)
            if c is None:
                continue
            # rows are scaled to have 1 at the pivot
            _axpy(v, c, row)
            _axpy(comb, -c, rcomb)
        return v, comb

    def add(self, vector: Mapping[Hashable, QRat], label: Hashable) -> bool:
        """Insert a vector; returns False (and stores nothing) if it is dependent."""
        residual, comb = self.reduce(vector)
        if not residual:
            return False
        # residual = vector - sum(comb * inserted), so its own combination is label - comb
        rcomb: Vector = {k: -c for k, c in comb.items()}
        rcomb[label] = rcomb.get(label, QRat.coerce(0)) + 1
        rcomb = {k: c for k, c in rcomb.items() if c}
        pivot = min(residual, key=lambda k: (residual[k].total_degree(), self._order(k)))
        inv = residual[pivot].inverse()
        row = {k: c * inv for k, c in residual.items()}
        rcomb = {k: c * inv for k, c in rcomb.items()}
        self._rows.append((pivot, row, rcomb))
        return True
