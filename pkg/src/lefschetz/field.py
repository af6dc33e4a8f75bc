"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq


def _is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p))


class Field:
    """Coefficient field of characteristic 0 (Q) or a prime p < 2**31.

    Elements of Q are ``gmpy2.mpq`` values; elements of F_p are python ints
    in ``range(p)``.  Every routine in the package goes through ``coerce``
    so the two element types never mix.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        if characteristic >= 2**31:
            raise ValueError("prime characteristic must be below 2**31")
        self.characteristic = characteristic

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    @property
    def zero(self):
        return mpq(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.characteristic == 0 else 1

    def coerce(self, value):
        """Map an int, Fraction, mpq or ``"a/b"`` string into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, int):
            return value % p
        q = mpq(value) if not isinstance(value, Fraction) else mpq(value.numerator, value.denominator)
        num, den = int(q.numerator), int(q.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in characteristic {p}")
        return num * pow(den, -1, p) % p

    def inv(self, a):
        if self.characteristic == 0:
            return 1 / a
        return pow(int(a), -1, self.characteristic)

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def to_json(self, a):
        """JSON-safe rendering: ints where possible, ``"p/q"`` otherwise."""
        if self.characteristic:
            return int(a)
        if a.denominator == 1:
            return int(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def render(self, a) -> str:
        if self.characteristic:
            return str(int(a))
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


@lru_cache(maxsize=None)
def field(characteristic: int = 0) -> Field:
    return Field(characteristic)


QQ = field(0)
