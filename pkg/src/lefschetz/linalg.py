"""Exact linear algebra over a ``Field``.

Two representations are used.  Sparse rows are ``dict[col, value]`` with no
stored zeros; they back the degreewise ideal bases, where rows are often
monomials.  Dense matrices are lists of lists and back the small
multiplication and Koszul maps, where only ranks and kernels are needed.
"""

from __future__ import annotations

from typing import Iterable

from .field import Field


def _axpy(target: dict, a, row: dict, p: int) -> None:
    """target -= a * row, in place."""
    if p:
        for c, x in row.items():
            v = (target.get(c, 0) - a * x) % p
            if v:
                target[c] = v
            else:
                target.pop(c, None)
    else:
        for c, x in row.items():
            v = target.get(c, 0) - a * x
            if v:
                target[c] = v
            else:
                target.pop(c, None)


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Pivots are the smallest column index in each row (columns are ordered by
    descending deglex, so a pivot is the leading monomial).  Every stored row
    has a 1 at its pivot and zeros at all other pivots.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        p = self.field.characteristic
        out = dict(row)
        for c in [c for c in row if c in self.rows]:
            a = out.get(c)
            if a:
                _axpy(out, a, self.rows[c], p)
        return out

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        F = self.field
        p = F.characteristic
        piv = min(r)
        inv = F.inv(r[piv])
        if p:
            r = {c: v * inv % p for c, v in r.items()}
        else:
            r = {c: v * inv for c, v in r.items()}
        for other in self.rows.values():
            a = other.get(piv)
            if a:
                _axpy(other, a, r, p)
        self.rows[piv] = r
        return True

    def extend(self, rows: Iterable[dict]) -> int:
        return sum(1 for row in rows if self.add(row))

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def sorted_rows(self) -> list[dict]:
        return [self.rows[c] for c in sorted(self.rows)]


def rank(matrix: list[list], field: Field) -> int:
    """Rank of a dense matrix."""
    if not matrix or not matrix[0]:
        return 0
    p = field.characteristic
    m = [list(r) for r in matrix]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = field.inv(prow[c])
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if not a:
                continue
            f = a * inv
            if p:
                f %= p
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
            else:
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = row[k] - f * prow[k]
        r += 1
        if r == nrows:
            break
    return r


def rref(matrix: list[list], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    ech = Echelon(field)
    for row in matrix:
        ech.add({c: v for c, v in enumerate(row) if v})
    ncols = len(matrix[0]) if matrix else 0
    pivots = sorted(ech.rows)
    rows = []
    for c in pivots:
        dense = [field.zero] * ncols
        for k, v in ech.rows[c].items():
            dense[k] = v
        rows.append(dense)
    return rows, pivots


def nullspace(matrix: list[list], ncols: int, field: Field) -> list[list]:
    """Basis of {x : matrix @ x = 0}, one dense vector per free column."""
    rows, pivots = rref(matrix, field) if matrix else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [field.zero] * ncols
        x[free] = field.one
        for row, pc in zip(rows, pivots):
            if row[free]:
                x[pc] = field.neg(row[free])
        basis.append(x)
    return basis


def left_kernel(matrix: list[list], nrows: int, field: Field) -> list[list]:
    """Basis of {v : v @ matrix = 0} for a matrix with ``nrows`` rows."""
    if nrows == 0:
        return []
    ncols = len(matrix[0]) if matrix else 0
    if ncols == 0:
        return nullspace([], nrows, field)
    transpose = [[matrix[r][c] for r in range(nrows)] for c in range(ncols)]
    return nullspace(transpose, nrows, field)


def matmul(a: list[list], b: list[list], field: Field, cols: int) -> list[list]:
    """Dense product a @ b, where b has ``cols`` columns (b may have no rows)."""
    p = field.characteristic
    n = len(b)
    m = cols
    out = []
    for row in a:
        acc = [field.zero] * m
        for k in range(n):
            x = row[k]
            if not x:
                continue
            brow = b[k]
            for c in range(m):
                y = brow[c]
                if y:
                    acc[c] += x * y
        if p:
            acc = [v % p for v in acc]
        out.append(acc)
    return out
