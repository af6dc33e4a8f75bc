"""Sparse polynomials over Q or F_p."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .ring import Monomial, Ring, mono_mul


class Polynomial:
    """A polynomial as a map from exponent tuples to nonzero coefficients.

    Values are immutable: every operation returns a new polynomial.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object] | None = None, *, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = dict(terms)
        else:
            F = ring.field
            out = {}
            for m, c in (terms or {}).items():
                m = tuple(int(e) for e in m)
                if len(m) != ring.num_vars or min(m, default=0) < 0:
                    raise ValueError(f"bad exponent vector {m} for {ring}")
                c = F.coerce(c)
                if c:
                    out[m] = F.add(out[m], c) if m in out else c
                    if not out[m]:
                        del out[m]
            self.terms = out
        self._hash = None

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring, {}, _clean=True)

    @classmethod
    def constant(cls, ring: Ring, c=1) -> "Polynomial":
        return cls(ring, {(0,) * ring.num_vars: c})

    @classmethod
    def monomial(cls, ring: Ring, m: Monomial, c=1) -> "Polynomial":
        return cls(ring, {tuple(m): c})

    @classmethod
    def variable(cls, ring: Ring, k: int) -> "Polynomial":
        return cls(ring, {ring.var(k): 1})

    @classmethod
    def linear_form(cls, ring: Ring, coeffs: Sequence) -> "Polynomial":
        if len(coeffs) != ring.num_vars:
            raise ValueError("need one coefficient per variable")
        return cls(ring, {ring.var(k): c for k, c in enumerate(coeffs)})

    @classmethod
    def from_vector(cls, ring: Ring, d: int, vec) -> "Polynomial":
        """Degree-d form from a sparse (dict) or dense coordinate vector."""
        monos = ring.monomials(d)
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return cls(ring, {monos[c]: v for c, v in items if v}, _clean=True)

    # basic queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    @property
    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None (zero or inhomogeneous)."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def vector(self, d: int | None = None) -> dict[int, object]:
        """Sparse coordinates in the canonical basis of R_d."""
        if d is None:
            d = self.homogeneous_degree
            if d is None:
                if not self.terms:
                    raise ValueError("zero polynomial has no degree; pass d")
                raise ValueError("polynomial is not homogeneous")
        idx = self.ring.index(d)
        try:
            return {idx[m]: c for m, c in self.terms.items()}
        except KeyError:
            raise ValueError(f"polynomial is not homogeneous of degree {d}") from None

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._lift(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(out[m], c) if m in out else c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.coerce(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        p = F.characteristic
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items()}
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution ----------------------------------------------

    def diff(self, k: int, times: int = 1) -> "Polynomial":
        """Partial derivative with respect to x_k, ``times`` times."""
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e < times:
                continue
            f = 1
            for t in range(times):
                f *= e - t
            n = list(m)
            n[k] -= times
            out[tuple(n)] = c * f
        return Polynomial(self.ring, out)

    def apply_operator(self, m: Monomial) -> "Polynomial":
        """Act by the differential operator d^m / dx^m."""
        out = self
        for k, e in enumerate(m):
            if e:
                out = out.diff(k, e)
                if not out:
                    break
        return out

    def evaluate(self, point: Sequence):
        F = self.ring.field
        pt = [F.coerce(v) for v in point]
        total = F.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = F.mul(v, x ** e if not F.characteristic else pow(int(x), e, F.characteristic))
            total = F.add(total, v)
        return total

    def substitute(self, target: Ring, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending x_k to images[k] (polynomials in ``target``)."""
        if len(images) != self.ring.num_vars:
            raise ValueError("need one image per variable")
        result = Polynomial.zero(target)
        powers: dict = {}
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for k, e in enumerate(m):
                if e:
                    key = (k, e)
                    if key not in powers:
                        powers[key] = images[k] ** e
                    term = term * powers[key]
            result = result + term
        return result

    # rendering --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        out = []
        for m, c in self.sorted_terms():
            s = F.render(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = self.ring.render_monomial(m)
            if mono == "1":
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def linear_combination(polys: Iterable[Polynomial], coeffs: Iterable, ring: Ring) -> Polynomial:
    out = Polynomial.zero(ring)
    for p, c in zip(polys, coeffs):
        out = out + p.scale(c)
    return out
