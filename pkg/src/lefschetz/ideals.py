"""Homogeneous ideals as degreewise spans, monomial ideals and lex segments.

Nothing here uses Groebner bases.  The degree-d piece of an ideal is the
row-reduced span of R_1 * I_{d-1} together with the generators of degree d;
that is all the later modules need for Artinian questions.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .hilbert import is_o_sequence
from .linalg import Echelon
from .polynomial import Polynomial
from .ring import Monomial, Ring, divides, max_var_index

DEFAULT_S_MAX = 60


class NotArtinianWithinCap(RuntimeError):
    pass


class NotOSequence(ValueError):
    pass


class IdealSpan:
    """Ideal generated by homogeneous polynomials, with cached graded pieces."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial]):
        self.ring = ring
        kept = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if not g:
                continue
            if g.homogeneous_degree is None:
                raise ValueError(f"generator {g} is not homogeneous")
            kept.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(kept)
        self._gens_by_degree: dict[int, list[Polynomial]] = {}
        for g in kept:
            self._gens_by_degree.setdefault(g.homogeneous_degree, []).append(g)
        self._echelons: dict[int, Echelon] = {}
        self._product_ranks: dict[int, int] = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return f"IdealSpan({len(self.gens)} gens in {self.ring})"

    @property
    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.gens)

    @property
    def max_generator_degree(self) -> int:
        return max(self._gens_by_degree, default=0)

    def generators_of_degree(self, d: int) -> list[Polynomial]:
        return list(self._gens_by_degree.get(d, ()))

    # graded pieces -----------------------------------------------------------

    def echelon(self, d: int) -> Echelon:
        """Reduced echelon basis of I_d in the canonical basis of R_d."""
        if d < 0:
            return Echelon(self.ring.field)
        with self._lock:
            if d not in self._echelons:
                start = max((k for k in self._echelons if k < d), default=-1) + 1
                for t in range(start, d + 1):
                    self._build(t)
            return self._echelons[d]

    def _build(self, d: int):
        ring = self.ring
        F = ring.field
        ech = Echelon(F)
        prev = self._echelons.get(d - 1)
        if prev is not None and prev.rank and prev.rank == ring.dim(d - 1):
            one = F.one
            ech.rows = {c: {c: one} for c in range(ring.dim(d))}
            self._product_ranks[d] = ring.dim(d)
            self._echelons[d] = ech
            return
        if prev is not None and prev.rank:
            tables = [ring.mul_table(d - 1, k) for k in range(ring.num_vars)]
            for row in prev.rows.values():
                for table in tables:
                    ech.add({table[c]: v for c, v in row.items()})
        self._product_ranks[d] = ech.rank
        for g in self._gens_by_degree.get(d, ()):
            ech.add(g.vector(d))
        self._echelons[d] = ech

    def dim(self, d: int) -> int:
        return self.echelon(d).rank

    def codim(self, d: int) -> int:
        return self.ring.dim(d) - self.dim(d)

    def basis(self, d: int) -> list[Polynomial]:
        return [Polynomial.from_vector(self.ring, d, row) for row in self.echelon(d).sorted_rows()]

    def contains(self, poly: Polynomial) -> bool:
        for d in poly.degrees():
            part = Polynomial(self.ring, {m: c for m, c in poly.terms.items() if sum(m) == d}, _clean=True)
            if not self.echelon(d).contains(part.vector(d)):
                return False
        return True

    def products_rank(self, d: int) -> int:
        """dim (R_1 * I_{d-1})."""
        self.echelon(d)
        return self._product_ranks[d]

    def hilbert_function(self, s_max: int = DEFAULT_S_MAX) -> tuple[int, ...]:
        return quotient_hilbert_function(self, s_max)

    def minimal_generator_counts(self, d_max: int) -> dict[int, int]:
        return minimal_generator_counts(self, d_max)

    def __add__(self, other: "IdealSpan") -> "IdealSpan":
        if other.ring != self.ring:
            raise ValueError("ideals live in different rings")
        return IdealSpan(self.ring, self.gens + other.gens)

    def with_generators(self, extra: Iterable[Polynomial]) -> "IdealSpan":
        return IdealSpan(self.ring, self.gens + tuple(extra))

    def is_subideal_of(self, other: "IdealSpan", d_max: int) -> bool:
        """Degreewise containment I_d <= other_d for d <= d_max."""
        for d in range(d_max + 1):
            big = other.echelon(d)
            if any(not big.contains(row) for row in self.echelon(d).rows.values()):
                return False
        return True


def ideal_degree_basis(I: IdealSpan, d: int) -> list[Polynomial]:
    return I.basis(d)


def quotient_hilbert_function(I: IdealSpan, s_max: int = DEFAULT_S_MAX) -> tuple[int, ...]:
    """h_t = dim R_t - dim I_t for t = 0, 1, ... up to the last nonzero value."""
    h = []
    for t in range(s_max + 1):
        v = I.codim(t)
        if v == 0:
            return tuple(h)
        h.append(v)
    raise NotArtinianWithinCap(f"quotient not Artinian within degree {s_max}")


def minimal_generator_counts(I: IdealSpan, d_max: int) -> dict[int, int]:
    """mu_d = dim I_d - dim R_1 I_{d-1} for 1 <= d <= d_max (zeros omitted)."""
    out = {}
    for d in range(0, d_max + 1):
        mu = I.dim(d) - I.products_rank(d)
        if mu:
            out[d] = mu
    return out


def truncate_ideal(J: IdealSpan, u: int) -> IdealSpan:
    """The ideal [J]_{>= u}: a basis of J_u plus the generators above degree u."""
    if u <= 0:
        return J
    gens = J.basis(u)
    gens += [g for g in J.gens if g.homogeneous_degree > u]
    return IdealSpan(J.ring, gens)


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators."""

    def __init__(self, ring: Ring, gens: Iterable[Monomial]):
        self.ring = ring
        minimal: list[Monomial] = []
        for g in sorted({tuple(g) for g in gens}, key=sum):
            if len(g) != ring.num_vars:
                raise ValueError("monomial length does not match the ring")
            if not any(divides(m, g) for m in minimal):
                minimal.append(g)
        self.gens: tuple[Monomial, ...] = tuple(sorted(minimal, key=lambda m: (sum(m), tuple(-e for e in m))))

    def __repr__(self):
        return "(" + ", ".join(self.ring.render_monomial(m) for m in self.gens) + ")"

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and other.ring == self.ring and set(other.gens) == set(self.gens)

    def __hash__(self):
        return hash((self.ring, frozenset(self.gens)))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def degree_part(self, d: int) -> list[Monomial]:
        return [m for m in self.ring.monomials(d) if self.contains(m)]

    def to_ideal_span(self) -> IdealSpan:
        return IdealSpan(self.ring, [Polynomial.monomial(self.ring, g) for g in self.gens])

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(self.ring, g) for g in self.gens]

    def is_stable(self) -> bool:
        return is_stable(self)

    def is_borel_fixed(self) -> bool:
        return is_borel_fixed(self)


def _swap(m: Monomial, i: int, j: int) -> Monomial:
    e = list(m)
    e[i] -= 1
    e[j] += 1
    return tuple(e)


def is_stable(J: MonomialIdeal) -> bool:
    """(x_j / x_{m(u)}) * u in J for every generator u and every j < m(u)."""
    for u in J.gens:
        k = max_var_index(u)
        for j in range(k):
            if not J.contains(_swap(u, k, j)):
                return False
    return True


def is_borel_fixed(J: MonomialIdeal) -> bool:
    """(x_j / x_i) * u in J for every generator u, every x_i | u and j < i."""
    for u in J.gens:
        for i, e in enumerate(u):
            if not e:
                continue
            for j in range(i):
                if not J.contains(_swap(u, i, j)):
                    return False
    return True


def power_of_max_ideal(ring: Ring, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("k must be positive")
    return MonomialIdeal(ring, ring.monomials(k))


def lex_segment_ideal(h: Sequence[int], ring: Ring) -> MonomialIdeal:
    """The lex-segment ideal L with R/L having Hilbert function h (finite)."""
    h = tuple(h)
    if not h or h[0] != 1:
        raise NotOSequence("h_0 must be 1")
    if len(h) > 1 and h[1] > ring.num_vars:
        raise NotOSequence(f"h_1 = {h[1]} exceeds {ring.num_vars} variables")
    if not is_o_sequence(h):
        raise NotOSequence(f"{h} is not an O-sequence")
    gens: list[Monomial] = []
    prev: set[Monomial] = set()
    for d in range(1, len(h) + 1):
        target = h[d] if d < len(h) else 0
        monos = ring.monomials(d)
        if target > len(monos):
            raise NotOSequence(f"h_{d} = {target} exceeds dim R_{d} = {len(monos)}")
        segment = set(monos[: len(monos) - target])
        shifted = {_times_var(m, k) for m in prev for k in range(ring.num_vars)}
        if not shifted <= segment:
            raise NotOSequence(f"lex segment is not closed under multiplication in degree {d}")
        gens.extend(m for m in monos if m in segment and m not in shifted)
        prev = segment
    return MonomialIdeal(ring, gens)


def _times_var(m: Monomial, k: int) -> Monomial:
    e = list(m)
    e[k] += 1
    return tuple(e)
