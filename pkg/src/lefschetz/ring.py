"""Polynomial rings, monomials and the degree-lexicographic order.

A monomial is a tuple of exponents.  Within one degree the canonical basis
order is descending deglex, which for equal degrees is plain descending
tuple order: ``x1^2 > x1*x2 > x1*x3 > x2^2 > ...``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import comb

from .field import Field, field

Monomial = tuple[int, ...]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Ring:
    """K[x_0, ..., x_{N-1}] with K = Q or F_p."""

    __slots__ = ("num_vars", "characteristic", "var_names", "field", "_hash")

    def __init__(self, num_vars: int, characteristic: int = 0, var_names=None):
        if num_vars < 1:
            raise ValueError("a ring needs at least one variable")
        if var_names is None:
            var_names = tuple(f"x{i}" for i in range(num_vars))
        var_names = tuple(var_names)
        if len(var_names) != num_vars:
            raise ValueError(f"expected {num_vars} variable names, got {len(var_names)}")
        if len(set(var_names)) != num_vars:
            raise ValueError("variable names must be distinct")
        for name in var_names:
            if not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        self.num_vars = num_vars
        self.characteristic = int(characteristic)
        self.field: Field = field(self.characteristic)
        self.var_names = var_names
        self._hash = hash((num_vars, self.characteristic, var_names))

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.num_vars == self.num_vars
            and other.characteristic == self.characteristic
            and other.var_names == self.var_names
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({self.num_vars}, char={self.characteristic}, vars={','.join(self.var_names)})"

    def dim(self, d: int) -> int:
        """dim_K R_d."""
        if d < 0:
            return 0
        return comb(self.num_vars - 1 + d, d)

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        return monomials_of_degree(self.num_vars, d)

    def index(self, d: int) -> dict[Monomial, int]:
        return _monomial_index(self.num_vars, d)

    def var(self, k: int) -> Monomial:
        return tuple(1 if i == k else 0 for i in range(self.num_vars))

    def mul_table(self, d: int, k: int) -> tuple[int, ...]:
        """Column map R_d -> R_{d+1} induced by multiplication with x_k."""
        return _mul_table(self.num_vars, d, k)

    def with_characteristic(self, p: int) -> "Ring":
        return Ring(self.num_vars, p, self.var_names)

    def render_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.var_names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def degree(m: Monomial) -> int:
    return sum(m)


def deglex_compare(a: Monomial, b: Monomial) -> int:
    """1 if a > b, -1 if a < b, 0 if equal, in degree-lexicographic order."""
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def max_var_index(m: Monomial) -> int:
    """0-based index of the last variable dividing m (-1 for 1)."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return -1


def _compositions(n: int, d: int):
    # descending lexicographic order
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, d: int) -> tuple[Monomial, ...]:
    """All monomials of degree d in descending deglex order."""
    if d < 0:
        return ()
    return tuple(_compositions(num_vars, d))


@lru_cache(maxsize=None)
def _monomial_index(num_vars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(num_vars, d))}


@lru_cache(maxsize=None)
def _mul_table(num_vars: int, d: int, k: int) -> tuple[int, ...]:
    target = _monomial_index(num_vars, d + 1)
    out = []
    for m in monomials_of_degree(num_vars, d):
        e = list(m)
        e[k] += 1
        out.append(target[tuple(e)])
    return tuple(out)


def default_ring(num_vars: int, characteristic: int = 0, first_index: int = 0) -> Ring:
    names = [f"x{i}" for i in range(first_index, first_index + num_vars)]
    return Ring(num_vars, characteristic, names)
