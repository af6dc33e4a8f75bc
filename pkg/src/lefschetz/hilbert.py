"""Hilbert functions: Macaulay bounds, O-sequences and WLP admissibility."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence


def macaulay_representation(value: int, d: int) -> list[tuple[int, int]]:
    """The d-th Macaulay representation of ``value`` as pairs (k_i, i).

    value = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_e, e) with
    k_d > k_{d-1} > ... > k_e >= e >= 1.
    """
    if value < 1 or d < 1:
        raise ValueError("need value >= 1 and d >= 1")
    rep = []
    rest = value
    i = d
    while rest > 0:
        k = i
        while comb(k + 1, i) <= rest:
            k += 1
        rep.append((k, i))
        rest -= comb(k, i)
        i -= 1
    return rep


def macaulay_bound(value: int, d: int) -> int:
    """Largest possible h_{d+1} given h_d = value (the Macaulay growth bound)."""
    if value == 0:
        return 0
    return sum(comb(k + 1, i + 1) for k, i in macaulay_representation(value, d))


def is_o_sequence(seq: Sequence[int]) -> bool:
    """True iff ``seq`` is the Hilbert function of a standard graded algebra."""
    seq = list(seq)
    if not seq:
        return True
    if seq[0] != 1 or any(v < 0 for v in seq):
        return False
    for d in range(1, len(seq) - 1):
        if seq[d + 1] > macaulay_bound(seq[d], d):
            return False
    return True


def positive_first_difference(h: Sequence[int]) -> tuple[int, ...]:
    """(1, h_1 - h_0, ...) kept while the difference stays positive."""
    out = []
    prev = 0
    for v in h:
        diff = v - prev
        if diff <= 0:
            break
        out.append(diff)
        prev = v
    return tuple(out)


def first_difference(h: Sequence[int], j: int) -> int:
    """Delta h(j) = h_j - h_{j-1}, with h zero outside its support."""
    def at(t):
        return h[t] if 0 <= t < len(h) else 0
    return at(j) - at(j - 1)


@dataclass(frozen=True)
class WLPProfile:
    """Combinatorial data of a Hilbert function admitting WLP.

    ``u`` holds the degrees u_1 < ... < u_l where the plateaus start, ``d``
    is the peak degree u_1, ``a`` is u_2 - 1 (or s when l = 1), ``hbar``
    the positive first difference and ``phi[i]`` the coefficient of
    lambda^i in the maximal socle polynomial.
    """

    h: tuple[int, ...]
    u: tuple[int, ...]
    d: int
    a: int
    s: int
    hbar: tuple[int, ...]
    phi: tuple[int, ...]

    @property
    def sperner(self) -> int:
        return self.h[self.d]

    def phi_string(self) -> str:
        return format_lambda_poly(self.phi)

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "u": list(self.u),
            "d": self.d,
            "a": self.a,
            "s": self.s,
            "hbar": list(self.hbar),
            "phi": list(self.phi),
            "sperner": self.sperner,
        }


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    reason: str
    profile: WLPProfile | None = field(default=None)

    def __bool__(self):
        return self.admissible


def _pattern_reason(h: Sequence[int]) -> str | None:
    s = len(h) - 1
    k = 0
    while k < s and h[k] < h[k + 1]:
        k += 1
    for t in range(k, s):
        if h[t + 1] > h[t]:
            if any(h[j] == h[j + 1] for j in range(t)):
                return "plateau before increase"
            return "increase after a decrease"
    return None


def wlp_profile(h: Sequence[int]) -> WLPProfile:
    """Profile of a sequence already known to have the WLP shape."""
    h = tuple(h)
    s = len(h) - 1
    d = 0
    while d < s and h[d] < h[d + 1]:
        d += 1
    u = [d] + [t for t in range(d + 1, s + 1) if h[t] < h[t - 1]]
    a = u[1] - 1 if len(u) > 1 else s
    phi = [0] * (s + 1)
    for i in range(d, s + 1):
        nxt = h[i + 1] if i < s else 0
        phi[i] = h[i] - nxt
    return WLPProfile(h=h, u=tuple(u), d=d, a=a, s=s, hbar=positive_first_difference(h), phi=tuple(phi))


def wlp_admissible(h: Sequence[int], num_vars: int | None = None) -> Admissibility:
    """Decide whether ``h`` is the Hilbert function of some algebra with WLP."""
    h = tuple(int(v) for v in h)
    if not h or h[0] != 1:
        return Admissibility(False, "h_0 must be 1")
    if any(v <= 0 for v in h):
        return Admissibility(False, "entries must be positive")
    if num_vars is not None and len(h) > 1 and h[1] > num_vars:
        return Admissibility(False, f"h_1 = {h[1]} exceeds the number of variables {num_vars}")
    reason = _pattern_reason(h)
    if reason:
        return Admissibility(False, reason)
    if not is_o_sequence(h):
        return Admissibility(False, "not an O-sequence")
    if not is_o_sequence(positive_first_difference(h)):
        return Admissibility(False, "positive part of the first difference is not an O-sequence")
    return Admissibility(True, "admissible", wlp_profile(h))


def max_socle_polynomial(profile: WLPProfile) -> tuple[int, ...]:
    return profile.phi


def format_lambda_poly(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "1" if i == 0 else ("λ" if i == 1 else f"λ^{i}")
        if mono == "1":
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) if parts else "0"


def hilbert_series_product(degrees: Sequence[int], num_vars: int, length: int | None = None) -> tuple[int, ...]:
    """Coefficients of prod(1 - t^d) / (1 - t)^num_vars, trailing zeros dropped.

    For a regular sequence of forms of the given degrees this is the
    Hilbert function of the quotient.
    """
    if length is None:
        length = sum(d - 1 for d in degrees) + 2 if len(degrees) >= num_vars else 64
    num = [1]
    for d in degrees:
        nxt = [0] * (len(num) + d)
        for i, c in enumerate(num):
            nxt[i] += c
            nxt[i + d] -= c
        num = nxt
    out = []
    for t in range(length):
        out.append(sum(num[i] * comb(num_vars - 1 + t - i, num_vars - 1) for i in range(min(t, len(num) - 1) + 1)))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
