"""The extremal algebra with prescribed Hilbert function.

For an admissible h with peak degree d = u_1 and drops at u_2 < ... < u_l,
choose nested ideals Jbar_1 <= ... <= Jbar_l in Rbar = K[x_1..x_n] and set

    I = J_1 + sum_{i>=2} [J_i]_{>= u_i} + m^{s+1},   A = R/I,  R = Rbar[x_0].

In the default ``slp_lex`` mode every Jbar_i is the lex-segment ideal with
Hilbert function Delta min(h, h_{u_i}); the result then has the Strong
Lefschetz property with witness x_0, socle type Phi_h and the largest Betti
numbers allowed for algebras with WLP.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import GradedAlgebra
from .betti import BettiTable, InadmissibleHilbertFunction, betti_bounds, koszul_betti_table
from .hilbert import WLPProfile, macaulay_bound, positive_first_difference, wlp_admissible
from .ideals import IdealSpan, lex_segment_ideal, power_of_max_ideal, truncate_ideal
from .lefschetz import check_with_witness
from .polynomial import Polynomial
from .ring import Ring

MODES = ("slp_lex", "basic")


class ContainmentError(RuntimeError):
    pass


class ConstructionCheckFailed(AssertionError):
    pass


@dataclass
class ConstructionPlan:
    h: tuple[int, ...]
    profile: WLPProfile
    num_vars: int
    characteristic: int
    targets: tuple[tuple[int, ...], ...]
    truncations: tuple[int, ...]
    mode: str = "slp_lex"
    bar_ideals: tuple[IdealSpan, ...] | None = None

    @property
    def levels(self) -> int:
        return len(self.targets)

    def ring(self) -> Ring:
        return Ring(self.num_vars, self.characteristic, [f"x{k}" for k in range(self.num_vars)])

    def bar_ring(self) -> Ring | None:
        n = self.num_vars - 1
        if n < 1:
            return None
        return Ring(n, self.characteristic, [f"x{k}" for k in range(1, n + 1)])

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "profile": self.profile.to_json(),
            "num_vars": self.num_vars,
            "char": self.characteristic,
            "mode": self.mode,
            "levels": [
                {"level": k + 1, "target": list(t), "truncation_degree": u}
                for k, (t, u) in enumerate(zip(self.targets, self.truncations))
            ],
        }


def slp_level_target(h: Sequence[int], u_i: int) -> tuple[int, ...]:
    """Positive first difference of t -> min(h_t, h_{u_i})."""
    c = h[u_i]
    return positive_first_difference([min(v, c) for v in h[: u_i + 1]])


def plan_construction(
    h: Sequence[int],
    num_vars: int | None = None,
    mode: str = "slp_lex",
    characteristic: int = 0,
    bar_ideals: Sequence[IdealSpan] | None = None,
) -> ConstructionPlan:
    h = tuple(int(v) for v in h)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if num_vars is None:
        num_vars = h[1] if len(h) > 1 else 1
    verdict = wlp_admissible(h, num_vars)
    if not verdict:
        raise InadmissibleHilbertFunction(f"{h}: {verdict.reason}")
    if len(h) > 1 and h[1] != num_vars:
        raise InadmissibleHilbertFunction(
            f"the construction needs exactly h_1 = {h[1]} variables, got {num_vars}"
        )
    prof = verdict.profile
    truncations = tuple(prof.u)

    if mode == "slp_lex":
        targets = tuple(slp_level_target(h, u) if k else prof.hbar for k, u in enumerate(prof.u))
        return ConstructionPlan(h, prof, num_vars, characteristic, targets, truncations, mode)

    if bar_ideals is None:
        raise ValueError("basic mode needs the caller-supplied ideals Jbar_1..Jbar_l")
    bar_ideals = tuple(bar_ideals)
    if len(bar_ideals) != len(prof.u):
        raise ValueError(f"need {len(prof.u)} ideals Jbar_i, got {len(bar_ideals)}")
    targets = tuple(J.hilbert_function() for J in bar_ideals)
    if targets[0] != prof.hbar:
        raise ValueError(f"Jbar_1 has Hilbert function {targets[0]}, expected {prof.hbar}")
    for k in range(1, len(targets)):
        if sum(targets[k]) != h[prof.u[k]]:
            raise ValueError(f"Jbar_{k + 1} has degree {sum(targets[k])}, expected h(u_{k + 1}) = {h[prof.u[k]]}")
    return ConstructionPlan(h, prof, num_vars, characteristic, targets, truncations, mode, bar_ideals)


def _extend(poly: Polynomial, ring: Ring) -> Polynomial:
    """View a form of K[x_1..x_n] inside K[x_0, x_1..x_n]."""
    return Polynomial(ring, {(0,) + m: c for m, c in poly.terms.items()}, _clean=True)


def level_ideals(plan: ConstructionPlan) -> list[IdealSpan]:
    """The ideals Jbar_1, ..., Jbar_l of Rbar (empty list entries when n = 0)."""
    Rbar = plan.bar_ring()
    if plan.bar_ideals is not None:
        return list(plan.bar_ideals)
    if Rbar is None:
        return []
    return [lex_segment_ideal(t, Rbar).to_ideal_span() for t in plan.targets]


def construction_ideal(plan: ConstructionPlan) -> IdealSpan:
    R = plan.ring()
    s = plan.profile.s
    bars = level_ideals(plan)
    for k in range(len(bars) - 1):
        if not bars[k].is_subideal_of(bars[k + 1], s + 1):
            raise ContainmentError(f"Jbar_{k + 1} is not contained in Jbar_{k + 2}")
    gens: list[Polynomial] = []
    for k, J in enumerate(bars):
        extended = IdealSpan(R, [_extend(g, R) for g in J.gens])
        if k == 0:
            gens.extend(extended.gens)
        else:
            gens.extend(truncate_ideal(extended, plan.truncations[k]).gens)
    gens.extend(power_of_max_ideal(R, s + 1).polynomials())
    return IdealSpan(R, gens)


def build_construction(plan: ConstructionPlan) -> GradedAlgebra:
    return GradedAlgebra(construction_ideal(plan))


def construct(h: Sequence[int], num_vars: int | None = None, mode: str = "slp_lex", characteristic: int = 0) -> GradedAlgebra:
    return build_construction(plan_construction(h, num_vars, mode, characteristic))


@dataclass
class ConstructionReport:
    h: tuple[int, ...]
    mode: str
    checks: dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks.values() if c["required"])

    def to_json(self) -> dict:
        return {"h": list(self.h), "mode": self.mode, "passed": self.passed, "checks": self.checks}


def verify_construction(
    A: GradedAlgebra,
    h: Sequence[int],
    mode: str = "slp_lex",
    strict: bool = True,
) -> ConstructionReport:
    """Check Hilbert function, Lefschetz witness x_0, socle type and Betti numbers.

    In ``basic`` mode only WLP is claimed for x_0, and the Betti equality is
    recorded without being required.
    """
    h = tuple(h)
    report = ConstructionReport(h, mode)
    verdict = wlp_admissible(h, A.ring.num_vars)
    if not verdict:
        raise InadmissibleHilbertFunction(f"{h}: {verdict.reason}")
    prof = verdict.profile

    report.checks["hilbert_function"] = {
        "passed": A.hf == h,
        "required": True,
        "expected": list(h),
        "found": list(A.hf),
    }

    x0 = Polynomial.variable(A.ring, 0)
    strong = mode == "slp_lex"
    failing = check_with_witness(A, x0, strong=strong)
    report.checks["lefschetz_x0"] = {
        "passed": not failing,
        "required": True,
        "property": "SLP" if strong else "WLP",
        "failing": [{"i": i, "d": d} for i, d in failing],
    }

    socle = A.socle_type()
    phi = tuple(prof.phi)
    report.checks["socle_type"] = {
        "passed": _pad(socle, len(phi)) == _pad(phi, len(socle)),
        "required": True,
        "expected": list(phi),
        "found": list(socle),
    }

    found = koszul_betti_table(A)
    bound = betti_bounds(h, A.ring)
    report.checks["betti_equals_bound"] = {
        "passed": found == bound,
        "required": strong,
        "differences": [
            {"i": i, "j": j, "found": a, "bound": b} for (i, j), (a, b) in found.differences(bound).items()
        ],
    }
    if strict and not report.passed:
        bad = [k for k, c in report.checks.items() if c["required"] and not c["passed"]]
        raise ConstructionCheckFailed(f"construction for {h} failed: {', '.join(bad)}")
    return report


def _pad(t: Sequence[int], n: int) -> tuple[int, ...]:
    t = tuple(t)
    return t + (0,) * max(0, n - len(t))


def random_admissible_hf(rng: random.Random, max_vars: int = 4, max_socle: int = 6, max_step: int = 6) -> tuple[int, ...]:
    """A random Hilbert function admitting WLP with h_1 <= max_vars and s <= max_socle."""
    while True:
        N = rng.randint(2, max_vars)
        n = N - 1
        peak = rng.randint(1, max_socle)
        hbar = [1, n]
        for t in range(2, peak + 1):
            top = min(macaulay_bound(hbar[-1], t - 1), max_step)
            hbar.append(rng.randint(1, top))
        h = []
        total = 0
        for v in hbar:
            total += v
            h.append(total)
        s = rng.randint(peak, max_socle)
        for _ in range(peak, s):
            h.append(rng.choice([h[-1], rng.randint(1, h[-1])]))
        h = tuple(h)
        if wlp_admissible(h, N):
            return h
