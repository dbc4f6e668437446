"""Sparse exact linear algebra over the rationals.

Rows are ``dict`` objects mapping an integer column index to a nonzero
``Fraction``.  Everything downstream that needs ranks, kernels or span
membership of degreewise matrices goes through :class:`Echelon`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Row = dict[int, Fraction]


class Echelon:
    """Incrementally maintained row echelon form.

    Each stored pivot row has its pivot at its smallest column and a pivot
    coefficient of one, so reducing a row by increasing pivot column
    terminates.
    """

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        r = {k: v for k, v in row.items() if v}
        piv = self.pivots
        while True:
            hits = [k for k in r if k in piv]
            if not hits:
                return r
            col = min(hits)
            f = r[col]
            for k, v in piv[col].items():
                s = r.get(k, 0) - f * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)

    def add(self, row: Row) -> bool:
        """Insert ``row``; return True when it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        col = min(r)
        inv = 1 / r[col]
        self.pivots[col] = {k: v * inv for k, v in r.items()}
        return True

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Row]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def transpose(rows: list[Row]) -> list[Row]:
    cols: dict[int, Row] = {}
    for i, row in enumerate(rows):
        for j, v in row.items():
            cols.setdefault(j, {})[i] = v
    return [cols[j] for j in sorted(cols)]


def kernel(rows: list[Row], ncols: int) -> list[Row]:
    """Basis of {v : rows . v = 0} for a matrix with ``ncols`` columns."""
    # Gauss-Jordan on the row space, then read off free variables.
    ech = Echelon()
    for row in rows:
        ech.add(row)
    # full back-substitution so every pivot column appears in exactly one row
    pivots = dict(sorted(ech.pivots.items()))
    cols = sorted(pivots, reverse=True)
    for c in cols:
        prow = pivots[c]
        for c2 in cols:
            if c2 < c and c in pivots[c2]:
                f = pivots[c2][c]
                r = pivots[c2]
                for k, v in prow.items():
                    s = r.get(k, 0) - f * v
                    if s:
                        r[k] = s
                    else:
                        r.pop(k, None)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        vec = {j: Fraction(1)}
        for c, prow in pivots.items():
            v = prow.get(j)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis
