"""Graded Betti numbers.

``koszul_betti_table`` computes rank [Tor_i(A, K)]_{i+j} as the homology of
the Koszul complex of A in each internal degree, by exact ranks.  The
Eliahou-Kervaire formula gives the same numbers for stable monomial ideals
and serves as an independent check.  Entry (i, j) always means internal
degree i + j.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import GradedAlgebra
from .hilbert import first_difference, wlp_admissible
from .ideals import MonomialIdeal, is_stable, lex_segment_ideal
from .linalg import rank
from .ring import Ring, max_var_index


class NotStable(ValueError):
    pass


class InadmissibleHilbertFunction(ValueError):
    pass


class BettiTable:
    """Map (i, j) -> rank [Tor_i(A, K)]_{i+j}; missing entries are zero."""

    def __init__(self, num_vars: int, entries: dict | None = None, characteristic: int = 0):
        self.num_vars = num_vars
        self.characteristic = characteristic
        self.entries: dict[tuple[int, int], int] = {k: v for k, v in (entries or {}).items() if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.num_vars == other.num_vars and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable(N={self.num_vars}, {dict(sorted(self.entries.items()))})"

    def add(self, i: int, j: int, value: int):
        v = self.entries.get((i, j), 0) + value
        if v:
            self.entries[(i, j)] = v
        else:
            self.entries.pop((i, j), None)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def by_degree(self, i: int) -> dict[int, int]:
        """{internal degree: rank} for homological index i."""
        return {a + j: v for (a, j), v in self.entries.items() if a == i}

    def dominated_by(self, other: "BettiTable") -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(self[k] <= other[k] for k in keys)

    def differences(self, other: "BettiTable") -> dict[tuple[int, int], tuple[int, int]]:
        keys = set(self.entries) | set(other.entries)
        return {k: (self[k], other[k]) for k in sorted(keys) if self[k] != other[k]}

    def euler_polynomial(self) -> list[int]:
        """Coefficients of sum (-1)^i beta_{i,j} t^{i+j}."""
        top = max((i + j for i, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[i + j] += (-1) ** i * v
        return _trim(out)

    def to_json(self) -> dict:
        return {
            "N": self.num_vars,
            "char": self.characteristic,
            "entries": [
                {"i": i, "j": j, "degree": i + j, "beta": v} for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        entries = {(e["i"], e["j"]): e["beta"] for e in data["entries"]}
        return cls(data["N"], entries, data.get("char", 0))

    def diagram(self) -> str:
        """Macaulay2-style Betti diagram: rows j, columns i."""
        if not self.entries:
            return "(zero table)"
        imax = max(self.num_vars, max(i for i, _ in self.entries))
        jmax = max(j for _, j in self.entries)
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 1)
        lines = ["      " + " ".join(str(i).rjust(width) for i in range(imax + 1))]
        lines.append("total:" + " ".join(str(self.total(i)).rjust(width) for i in range(imax + 1)))
        for j in range(jmax + 1):
            cells = []
            for i in range(imax + 1):
                v = self[(i, j)]
                cells.append((str(v) if v else ".").rjust(width))
            lines.append(f"{j:>5}:" + " ".join(cells))
        return "\n".join(lines)


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(n), k), key=lambda S: S[::-1])


def koszul_differential(A: GradedAlgebra, i: int, j: int) -> list[list]:
    """Matrix of the Koszul map  wedge^i P (x) A_j -> wedge^{i-1} P (x) A_{j+1}.

    Rows are indexed by (S, b), S an i-subset in colex order and b a standard
    monomial of degree j; columns likewise by (T, c).
    """
    N = A.ring.num_vars
    F = A.field
    hj, hj1 = A.h(j), A.h(j + 1)
    sources = colex_subsets(N, i)
    targets = colex_subsets(N, i - 1)
    tpos = {T: k for k, T in enumerate(targets)}
    width = len(targets) * hj1
    rows = []
    for S in sources:
        block_rows = [[F.zero] * width for _ in range(hj)]
        for t, k in enumerate(S):
            T = S[:t] + S[t + 1:]
            offset = tpos[T] * hj1
            X = A.var_matrix(k, j)
            for r in range(hj):
                xrow = X[r]
                brow = block_rows[r]
                for c in range(hj1):
                    v = xrow[c]
                    if v:
                        brow[offset + c] = v if t % 2 == 0 else F.neg(v)
        rows.extend(block_rows)
    return rows


def koszul_betti_table(A: GradedAlgebra) -> BettiTable:
    """Betti table of A over R from Koszul homology."""
    N = A.ring.num_vars
    F = A.field
    ranks: dict[tuple[int, int], int] = {}

    def d_rank(i, j):
        if i < 1 or i > N or j < 0 or A.h(j) == 0 or A.h(j + 1) == 0:
            return 0
        key = (i, j)
        if key not in ranks:
            ranks[key] = rank(koszul_differential(A, i, j), F)
        return ranks[key]

    table = BettiTable(N, characteristic=F.characteristic)
    for i in range(N + 1):
        for j in range(A.s + 2):
            chains = comb(N, i) * A.h(j)
            beta = chains - d_rank(i, j) - d_rank(i + 1, j - 1)
            if beta:
                table.entries[(i, j)] = beta
    return table


def hilbert_euler_polynomial(hf: Sequence[int], num_vars: int) -> list[int]:
    """Coefficients of H(t) * (1 - t)^N."""
    out = list(hf)
    for _ in range(num_vars):
        nxt = [0] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k] += v
            nxt[k + 1] -= v
        out = nxt
    return _trim(out)


def euler_identity_holds(table: BettiTable, hf: Sequence[int]) -> bool:
    return table.euler_polynomial() == hilbert_euler_polynomial(hf, table.num_vars)


def eliahou_kervaire_table(J: MonomialIdeal) -> BettiTable:
    """Betti table of R/J for a stable monomial ideal J.

    A minimal generator u of degree q with largest variable index m(u)
    (1-based) contributes C(m(u) - 1, i) to [Tor_{i+1}]_{i+q}.
    """
    if not is_stable(J):
        raise NotStable(f"{J} is not stable")
    N = J.ring.num_vars
    table = BettiTable(N, {(0, 0): 1}, J.ring.characteristic)
    for u in J.gens:
        m = max_var_index(u) + 1
        q = sum(u)
        for i in range(m):
            table.add(i + 1, q - 1, comb(m - 1, i))
    return table


def lex_betti_numbers(h: Sequence[int], ring: Ring) -> BettiTable:
    """beta_{i,j}(h, R): Betti numbers of the lex-segment ideal for h."""
    return eliahou_kervaire_table(lex_segment_ideal(h, ring))


def betti_bounds(h: Sequence[int], ring: Ring) -> BettiTable:
    """Upper bounds for the Betti numbers of any algebra with WLP and Hilbert function h.

    With n = N - 1, hbar the positive first difference and
    c_j = max(0, -Delta h(j+1)):
      j <= a-1    : beta_{i,j}(hbar, n vars)
      a <= j <= d : beta_{i,j}(hbar, n vars) + c_j * C(n, i-1)
      j >= d+1    : c_j * C(n, i-1)
    """
    h = tuple(h)
    N = ring.num_vars
    verdict = wlp_admissible(h, N)
    if not verdict:
        raise InadmissibleHilbertFunction(f"{h}: {verdict.reason}")
    prof = verdict.profile
    n = N - 1
    if n >= 1:
        base = lex_betti_numbers(prof.hbar, Ring(n, ring.characteristic))
    else:
        base = BettiTable(0, {(0, 0): 1})
    table = BettiTable(N, characteristic=ring.characteristic)
    for i in range(N + 1):
        for j in range(prof.s + 2):
            colon = max(0, -first_difference(h, j + 1)) * (comb(n, i - 1) if i >= 1 else 0)
            if j <= prof.a - 1:
                v = base[(i, j)]
            elif j <= prof.d:
                v = base[(i, j)] + colon
            else:
                v = colon
            if v:
                table.entries[(i, j)] = v
    return table
