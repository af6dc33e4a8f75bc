"""Graded Artinian quotients A = R/I with explicit standard-monomial bases."""

from __future__ import annotations

import threading
from typing import Sequence

from .ideals import DEFAULT_S_MAX, IdealSpan, quotient_hilbert_function
from .linalg import left_kernel, matmul
from .polynomial import Polynomial
from .ring import Monomial, Ring, mono_mul


class GradedAlgebra:
    """A = R/I, Artinian, with std_basis[d] the standard monomials of degree d.

    Elements of A_d are dense coordinate vectors over ``std_basis[d]``.
    Linear maps act on row vectors: the image of v is v @ M.
    """

    def __init__(self, ideal: IdealSpan, s_max: int = DEFAULT_S_MAX):
        self.ideal = ideal
        self.ring: Ring = ideal.ring
        self.field = self.ring.field
        self.hf: tuple[int, ...] = quotient_hilbert_function(ideal, s_max)
        self.s = len(self.hf) - 1
        self.std_cols: list[list[int]] = []
        self.std_basis: list[list[Monomial]] = []
        self._std_index: list[dict[int, int]] = []
        for d in range(self.s + 2):
            ech = ideal.echelon(d)
            cols = [c for c in range(self.ring.dim(d)) if c not in ech.rows]
            monos = self.ring.monomials(d)
            self.std_cols.append(cols)
            self.std_basis.append([monos[c] for c in cols])
            self._std_index.append({c: i for i, c in enumerate(cols)})
        self._nf_cache: dict[tuple[int, int], dict[int, object]] = {}
        self._var_cache: dict[tuple[int, int], list[list]] = {}
        self._lock = threading.RLock()

    @classmethod
    def from_generators(cls, ring: Ring, gens: Sequence[Polynomial], s_max: int = DEFAULT_S_MAX) -> "GradedAlgebra":
        return cls(IdealSpan(ring, gens), s_max)

    def __repr__(self):
        return f"GradedAlgebra(hf={self.hf}, {self.ring})"

    def h(self, d: int) -> int:
        return self.hf[d] if 0 <= d <= self.s else 0

    # normal forms ------------------------------------------------------------

    def _nf_column(self, d: int, c: int) -> dict[int, object]:
        """Normal form of the c-th monomial of R_d as {std index: coeff}."""
        key = (d, c)
        hit = self._nf_cache.get(key)
        if hit is not None:
            return hit
        if d > self.s:
            out = {}
        else:
            idx = self._std_index[d]
            if c in idx:
                out = {idx[c]: self.field.one}
            else:
                row = self.ideal.echelon(d).rows[c]
                neg = self.field.neg
                out = {idx[k]: neg(v) for k, v in row.items() if k != c}
        self._nf_cache[key] = out
        return out

    def normal_form_vector(self, d: int, vec: dict[int, object]) -> list:
        """Coordinates in A_d of the element of R_d given by sparse ``vec``."""
        F = self.field
        out = [F.zero] * self.h(d)
        if not out:
            return out
        p = F.characteristic
        for c, a in vec.items():
            for k, v in self._nf_column(d, c).items():
                out[k] = out[k] + a * v
        if p:
            out = [v % p for v in out]
        return out

    def normal_form(self, poly: Polynomial, d: int | None = None) -> list:
        if poly.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if d is None:
            d = poly.homogeneous_degree
            if d is None:
                raise ValueError("normal_form needs a homogeneous polynomial")
        return self.normal_form_vector(d, poly.vector(d))

    def element(self, d: int, coords: Sequence) -> Polynomial:
        """The polynomial representative sum coords[k] * std_basis[d][k]."""
        return Polynomial(self.ring, {m: c for m, c in zip(self.std_basis[d], coords) if c}, _clean=True)

    # multiplication maps -----------------------------------------------------

    def var_matrix(self, k: int, i: int) -> list[list]:
        """Matrix of multiplication by x_k from A_i to A_{i+1}."""
        key = (k, i)
        with self._lock:
            hit = self._var_cache.get(key)
            if hit is not None:
                return hit
            F = self.field
            width = self.h(i + 1)
            table = self.ring.mul_table(i, k) if self.h(i) else ()
            rows = []
            for c in self.std_cols[i] if i <= self.s else ():
                row = [F.zero] * width
                for j, v in self._nf_column(i + 1, table[c]).items():
                    row[j] = v
                rows.append(row)
            self._var_cache[key] = rows
            return rows

    def linear_matrix(self, coeffs: Sequence, i: int) -> list[list]:
        """Multiplication by sum coeffs[k] x_k from A_i to A_{i+1}."""
        F = self.field
        p = F.characteristic
        width = self.h(i + 1)
        out = [[F.zero] * width for _ in range(self.h(i))]
        for k, a in enumerate(coeffs):
            if not a:
                continue
            X = self.var_matrix(k, i)
            for r, xrow in enumerate(X):
                orow = out[r]
                for c, v in enumerate(xrow):
                    if v:
                        orow[c] = orow[c] + a * v
        if p:
            out = [[v % p for v in row] for row in out]
        return out

    def multiplication_matrix(self, ell: Polynomial, i: int, power: int = 1) -> list[list]:
        """Matrix of x ell^power : A_i -> A_{i+power} (h_i rows, h_{i+power} columns).

        Built as the product of the single-step maps, which equals the normal
        form of ell^power times each basis monomial.
        """
        coeffs = linear_coefficients(ell)
        M = self.linear_matrix(coeffs, i)
        for t in range(1, power):
            M = matmul(M, self.linear_matrix(coeffs, i + t), self.field, self.h(i + t + 1))
        return M

    def monomial_action_matrix(self, i: int, d: int) -> list[list]:
        """Stacked maps A_i -> A_{i+d}, one block of columns per monomial of degree d."""
        F = self.field
        width = self.h(i + d)
        monos = self.ring.monomials(d)
        target = self.ring.index(i + d)
        rows = []
        for b in self.std_basis[i] if i <= self.s else ():
            row = []
            for m in monos:
                block = [F.zero] * width
                if width:
                    for j, v in self._nf_column(i + d, target[mono_mul(b, m)]).items():
                        block[j] = v
                row.extend(block)
            rows.append(row)
        return rows

    # annihilators ------------------------------------------------------------

    def annihilator_of_power(self, i: int, d: int) -> list[list]:
        """Basis of {v in A_i : v * m_{d} = 0}, i.e. v annihilated by all of R_d."""
        hi = self.h(i)
        if hi == 0:
            return []
        if self.h(i + d) == 0:
            return left_kernel([[] for _ in range(hi)], hi, self.field)
        return left_kernel(self.monomial_action_matrix(i, d), hi, self.field)

    def socle_basis(self, i: int) -> list[list]:
        return self.annihilator_of_power(i, 1)

    def socle(self) -> dict[int, list[list]]:
        return {i: self.socle_basis(i) for i in range(self.s + 1)}

    def socle_type(self) -> tuple[int, ...]:
        return tuple(len(self.socle_basis(i)) for i in range(self.s + 1))

    def colon_linear(self, ell: Polynomial, i: int) -> list[list]:
        """Basis of (0 :_A ell)_i."""
        hi = self.h(i)
        if hi == 0:
            return []
        M = self.multiplication_matrix(ell, i)
        if self.h(i + 1) == 0:
            return left_kernel([[] for _ in range(hi)], hi, self.field)
        return left_kernel(M, hi, self.field)

    def quotient_by(self, forms: Sequence[Polynomial]) -> "GradedAlgebra":
        return GradedAlgebra(self.ideal.with_generators(forms))


def linear_coefficients(ell: Polynomial) -> list:
    if ell.homogeneous_degree != 1:
        raise ValueError(f"{ell} is not a nonzero linear form")
    return [ell.coefficient(ell.ring.var(k)) for k in range(ell.ring.num_vars)]
