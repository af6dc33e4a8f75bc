"""Experiments on height-three complete intersections and apolar algebras.

Every randomized routine takes an explicit ``random.Random`` or a seed, and
every report records the seeds needed to replay a trial exactly.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .algebra import GradedAlgebra
from .betti import BettiTable, euler_identity_holds, koszul_betti_table, lex_betti_numbers
from .hilbert import hilbert_series_product
from .ideals import IdealSpan
from .lefschetz import DEFAULT_COEFF_BOUND, check_slp, check_wlp, polynomial_determinant
from .linalg import left_kernel, nullspace, rank
from .parser import format_ideal_text
from .polynomial import Polynomial
from .ring import Ring

DEFAULT_FORM_BOUND = 50
DEFAULT_RETRIES = 20


class RetryBudgetExhausted(RuntimeError):
    pass


class SplittingInconsistent(ValueError):
    pass


@dataclass(frozen=True)
class CIDegrees:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if not 2 <= self.d1 <= self.d2 <= self.d3:
            raise ValueError(f"need 2 <= d1 <= d2 <= d3, got {self.as_tuple()}")

    @classmethod
    def of(cls, degs: Sequence[int]) -> "CIDegrees":
        if len(degs) != 3:
            raise ValueError("need exactly three degrees")
        return cls(*sorted(int(d) for d in degs))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def total(self) -> int:
        return self.d1 + self.d2 + self.d3

    @property
    def mu_bar_is_three(self) -> bool:
        """Whether three generators survive restriction to a general line."""
        return self.d3 <= self.d1 + self.d2 - 2


@dataclass(frozen=True, order=True)
class SplittingType:
    e1: int
    e2: int

    def __post_init__(self):
        if self.e1 < self.e2:
            raise ValueError("splitting type is written with e1 >= e2")

    def as_tuple(self) -> tuple[int, int]:
        return (self.e1, self.e2)


def ci_ring(characteristic: int = 0) -> Ring:
    return Ring(3, characteristic, ["x", "y", "z"])


def ci_hilbert_function(degs: CIDegrees) -> tuple[int, ...]:
    return hilbert_series_product(degs.as_tuple(), 3)


def random_form(ring: Ring, d: int, rng: random.Random, bound: int = DEFAULT_FORM_BOUND) -> Polynomial:
    """Form of degree d with every coefficient drawn from [-bound, bound]."""
    return Polynomial(ring, {m: rng.randint(-bound, bound) for m in ring.monomials(d)})


def random_linear_form(ring: Ring, rng: random.Random, bound: int = DEFAULT_COEFF_BOUND) -> Polynomial:
    coeffs = []
    for _ in range(ring.num_vars):
        c = 0
        while c == 0 or (ring.characteristic and c % ring.characteristic == 0):
            c = rng.randint(-bound, bound)
        coeffs.append(c)
    return Polynomial.linear_form(ring, coeffs)


def is_complete_intersection(I: IdealSpan, degs: CIDegrees) -> bool:
    """Three forms are a regular sequence iff the quotient has the Koszul Hilbert function."""
    expected = ci_hilbert_function(degs)
    for t, v in enumerate(expected):
        if I.codim(t) != v:
            return False
    return I.codim(len(expected)) == 0


def random_complete_intersection(
    degs: CIDegrees | Sequence[int],
    rng: random.Random,
    characteristic: int = 0,
    coeff_bound: int = DEFAULT_FORM_BOUND,
    max_retries: int = DEFAULT_RETRIES,
) -> IdealSpan:
    degs = degs if isinstance(degs, CIDegrees) else CIDegrees.of(degs)
    R = ci_ring(characteristic)
    for _ in range(max_retries):
        I = IdealSpan(R, [random_form(R, d, rng, coeff_bound) for d in degs.as_tuple()])
        if is_complete_intersection(I, degs):
            return I
    raise RetryBudgetExhausted(f"no complete intersection of type {degs.as_tuple()} in {max_retries} draws")


def predicted_splitting_type(degs: CIDegrees | Sequence[int]) -> SplittingType:
    """Splitting type of the syzygy bundle on a general line (d3 < d1 + d2 + 1)."""
    degs = degs if isinstance(degs, CIDegrees) else CIDegrees.of(degs)
    if not degs.d3 < degs.d1 + degs.d2 + 1:
        raise ValueError(f"prediction needs d3 < d1 + d2 + 1, got {degs.as_tuple()}")
    total = degs.total
    d = total // 2
    if total % 2 == 0:
        return SplittingType(-d, -d)
    return SplittingType(-d, -d - 1)


def restriction_map(ring: Ring, L: Polynomial) -> tuple[Ring, list[Polynomial]]:
    """Target ring K[other vars] and the images of the variables modulo L.

    The pivot is the last variable with a nonzero coefficient in L.
    """
    coeffs = [L.coefficient(ring.var(k)) for k in range(ring.num_vars)]
    if L.homogeneous_degree != 1:
        raise ValueError("L must be a nonzero linear form")
    pivot = max(k for k, c in enumerate(coeffs) if c)
    names = [n for k, n in enumerate(ring.var_names) if k != pivot]
    target = Ring(ring.num_vars - 1, ring.characteristic, names)
    F = ring.field
    inv = F.inv(coeffs[pivot])
    images = []
    pos = 0
    for k in range(ring.num_vars):
        if k == pivot:
            terms = {}
            j = 0
            for kk in range(ring.num_vars):
                if kk == pivot:
                    continue
                if coeffs[kk]:
                    terms[target.var(j)] = F.neg(F.mul(coeffs[kk], inv))
                j += 1
            images.append(Polynomial(target, terms))
        else:
            images.append(Polynomial.variable(target, pos))
            pos += 1
    return target, images


def restrict_forms(forms: Sequence[Polynomial], L: Polynomial) -> list[Polynomial]:
    target, images = restriction_map(L.ring, L)
    return [f.substitute(target, images) for f in forms]


def restrict_mod_linear(I: IdealSpan, L: Polynomial) -> IdealSpan:
    """(I + L) / L as an ideal of the polynomial ring in the remaining variables."""
    target, images = restriction_map(I.ring, L)
    return IdealSpan(target, [g.substitute(target, images) for g in I.gens])


def syzygy_dimensions(forms: Sequence[Polynomial], top: int) -> list[int]:
    """k(t) = dim of the degree-t syzygies of ``forms`` for t = 0..top."""
    ring = forms[0].ring
    F = ring.field
    degs = [f.homogeneous_degree for f in forms]
    out = []
    for t in range(top + 1):
        rows = []
        for f, d in zip(forms, degs):
            if t < d:
                continue
            for m in ring.monomials(t - d):
                prod = Polynomial.monomial(ring, m) * f
                vec = [F.zero] * ring.dim(t)
                for c, v in prod.vector(t).items():
                    vec[c] = v
                rows.append(vec)
        out.append(len(rows) - rank(rows, F) if rows else 0)
    return out


def syzygy_splitting_type(forms: Sequence[Polynomial]) -> SplittingType:
    """Twists (e1, e2) of the rank-two syzygy module of three binary forms."""
    if len(forms) != 3 or forms[0].ring.num_vars != 2:
        raise ValueError("need three forms in two variables")
    if any(not f for f in forms):
        raise SplittingInconsistent("a restricted form vanishes")
    top = sum(f.homogeneous_degree for f in forms) + 1
    k = syzygy_dimensions(forms, top)
    starts = [t for t, v in enumerate(k) if v > 0]
    if not starts:
        raise SplittingInconsistent("no syzygies found")
    t0 = starts[0]
    if k[t0] >= 2:
        e1 = e2 = -t0
    else:
        e1 = -t0
        t1 = next((t for t in range(t0 + 1, top + 1) if k[t] > t - t0 + 1), None)
        if t1 is None:
            raise SplittingInconsistent(f"kernel profile {k} is not that of a rank-two free module")
        e2 = -t1
    expected = [max(0, t + e1 + 1) + max(0, t + e2 + 1) for t in range(top + 1)]
    if expected != k:
        raise SplittingInconsistent(f"kernel profile {k} does not match twists ({e1}, {e2})")
    return SplittingType(e1, e2)


def mu(I: IdealSpan) -> int:
    """Minimal number of generators."""
    top = I.max_generator_degree
    return sum(I.minimal_generator_counts(top).values())


def predicted_IplusL_table(degs: CIDegrees | Sequence[int]) -> BettiTable:
    """Betti table of R/(I + (L)) for a CI I and a general linear form L."""
    degs = degs if isinstance(degs, CIDegrees) else CIDegrees.of(degs)
    d1, d2, d3 = degs.as_tuple()
    if degs.mu_bar_is_three:
        d = degs.total // 2
        syz = [d, d] if degs.total % 2 == 0 else [d, d + 1]
        shifts = {1: [1, d1, d2, d3], 2: [d1 + 1, d2 + 1, d3 + 1] + syz, 3: [e + 1 for e in syz]}
    else:
        shifts = {1: [1, d1, d2], 2: [d1 + 1, d2 + 1, d1 + d2], 3: [d1 + d2 + 1]}
    table = BettiTable(3, {(0, 0): 1})
    for i, degrees in shifts.items():
        for q in degrees:
            table.add(i, q - i, 1)
    return table


def ci_trial(degs: Sequence[int], seed: str, characteristic: int = 0, form_bound: int = DEFAULT_FORM_BOUND,
             coeff_bound: int = DEFAULT_COEFF_BOUND, lefschetz_trials: int = 3, slp: bool = False) -> dict:
    """One randomized check of every complete-intersection prediction."""
    degs = CIDegrees.of(degs)
    rng = random.Random(f"{seed}:ci")
    I = random_complete_intersection(degs, rng, characteristic, form_bound)
    A = GradedAlgebra(I)
    wlp = check_wlp(A, trials=lefschetz_trials, coeff_bound=coeff_bound, seed=f"{seed}:wlp")
    L = random_linear_form(I.ring, rng, coeff_bound)
    restricted = restrict_forms(I.gens, L)
    Ibar = IdealSpan(restricted[0].ring, restricted)
    mu_bar = mu(Ibar)
    try:
        split = syzygy_splitting_type(restricted)
    except SplittingInconsistent as exc:
        split = None
        split_error = str(exc)
    out = {
        "seed": seed,
        "degrees": list(degs.as_tuple()),
        "char": characteristic,
        "hf": list(A.hf),
        "wlp": wlp.to_json(),
        "linear_form": str(L),
        "mu_bar": mu_bar,
        "mu_bar_expected": 3 if degs.mu_bar_is_three else 2,
        "splitting_type": list(split.as_tuple()) if split else None,
        "findings": [],
    }
    findings = out["findings"]
    if not wlp.holds:
        findings.append(f"WLP not found: {wlp.summary()}")
    if mu_bar != out["mu_bar_expected"]:
        findings.append(f"mu(Ibar) = {mu_bar}, expected {out['mu_bar_expected']}")
    if split is None:
        findings.append(f"splitting type unavailable: {split_error}")
    elif split.e1 + split.e2 != -degs.total:
        findings.append(f"splitting type {split.as_tuple()} violates e1 + e2 = -{degs.total}")
    if degs.d3 < degs.d1 + degs.d2 + 1:
        pred = predicted_splitting_type(degs)
        out["splitting_type_predicted"] = list(pred.as_tuple())
        if split is not None and pred != split:
            findings.append(f"splitting type {split.as_tuple()}, predicted {pred.as_tuple()}")
    B = GradedAlgebra(I.with_generators([L]))
    table = koszul_betti_table(B)
    predicted = predicted_IplusL_table(degs)
    out["IplusL_betti"] = table.to_json()
    if table != predicted:
        findings.append(f"Betti table of R/(I+L) differs from prediction: {table.differences(predicted)}")
    if not euler_identity_holds(table, B.hf):
        findings.append("Euler characteristic identity fails for R/(I+L)")
    if not table.dominated_by(lex_betti_numbers(B.hf, B.ring)):
        findings.append("Betti table of R/(I+L) exceeds the lex bound")
    if slp:
        verdict = check_slp(A, trials=lefschetz_trials, coeff_bound=coeff_bound, seed=f"{seed}:slp")
        out["slp"] = verdict.to_json()
    if characteristic != 0:
        # the predictions are characteristic-zero statements; record only
        out["informational"] = findings[:]
        out["findings"] = []
    if out["findings"] or out.get("informational"):
        out["ideal_file"] = format_ideal_text(I.ring, I.gens, comment=f"trial {seed}, L = {L}")
    return out


def _run_trial(args):
    return ci_trial(*args)


def ci_fuzz(
    trials: int,
    seed: int | str = 0,
    degs: Sequence[int] | None = None,
    max_degree: int = 5,
    characteristic: int = 0,
    form_bound: int = DEFAULT_FORM_BOUND,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    lefschetz_trials: int = 3,
    slp: bool = False,
    jobs: int = 1,
) -> dict:
    """Run ``trials`` seeded complete-intersection trials and merge the findings."""
    master = random.Random(f"{seed}:campaign")
    plan = []
    for t in range(trials):
        if degs is None:
            triple = sorted(master.randint(2, max_degree) for _ in range(3))
        else:
            triple = list(CIDegrees.of(degs).as_tuple())
        plan.append((triple, f"{seed}:{t}", characteristic, form_bound, coeff_bound, lefschetz_trials, slp))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial, plan))
    else:
        results = [_run_trial(args) for args in plan]
    findings = [{"seed": r["seed"], "degrees": r["degrees"], "finding": f, "ideal_file": r.get("ideal_file")}
                for r in results for f in r["findings"]]
    return {
        "trials": results,
        "findings": findings,
        "wlp_holds": sum(r["wlp"]["holds"] for r in results),
        "count": len(results),
        "passed": not findings,
    }


def check_mu_bar(degs: Sequence[int], trials: int, seed: int | str = 0, coeff_bound: int = DEFAULT_COEFF_BOUND) -> dict:
    degs = CIDegrees.of(degs)
    expected = 3 if degs.mu_bar_is_three else 2
    rows = []
    for t in range(trials):
        rng = random.Random(f"{seed}:mu:{t}")
        I = random_complete_intersection(degs, rng)
        L = random_linear_form(I.ring, rng, coeff_bound)
        rows.append({"seed": f"{seed}:mu:{t}", "mu_bar": mu(restrict_mod_linear(I, L))})
    return {"degrees": list(degs.as_tuple()), "expected": expected, "trials": rows,
            "passed": all(r["mu_bar"] == expected for r in rows)}


def check_IplusL(degs: Sequence[int], trials: int, seed: int | str = 0, coeff_bound: int = DEFAULT_COEFF_BOUND) -> dict:
    degs = CIDegrees.of(degs)
    predicted = predicted_IplusL_table(degs)
    rows = []
    for t in range(trials):
        rng = random.Random(f"{seed}:iplusl:{t}")
        I = random_complete_intersection(degs, rng)
        L = random_linear_form(I.ring, rng, coeff_bound)
        table = koszul_betti_table(GradedAlgebra(I.with_generators([L])))
        rows.append({"seed": f"{seed}:iplusl:{t}", "matches": table == predicted,
                     "differences": {f"{k}": v for k, v in table.differences(predicted).items()}})
    return {"degrees": list(degs.as_tuple()), "predicted": predicted.to_json(), "trials": rows,
            "passed": all(r["matches"] for r in rows)}


# jumping lines -------------------------------------------------------------------


@dataclass
class JumpingLineCI:
    ideal: IdealSpan
    lines: list[Polynomial]
    retries: int


def _points_on_line(L: Polynomial, rng: random.Random, count: int, avoid: Sequence[Polynomial], grid: int = 9):
    F = L.ring.field
    coeffs = [L.coefficient(L.ring.var(k)) for k in range(3)]
    basis = nullspace([coeffs], 3, F)
    a, b = basis
    seen = set()
    pts = []
    while len(pts) < count:
        s, t = rng.randint(-grid, grid), rng.randint(-grid, grid)
        if (s, t) == (0, 0):
            continue
        key = (s // _gcd(s, t), t // _gcd(s, t))
        key = key if key > (0, 0) else (-key[0], -key[1])
        if key in seen:
            continue
        P = [s * x + t * y for x, y in zip(a, b)]
        if any(other.evaluate(P) == 0 for other in avoid):
            continue
        seen.add(key)
        pts.append(P)
    return pts


def _gcd(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b) or 1


def quartics_through(ring: Ring, points) -> list[list]:
    """Basis (coefficient vectors over the degree-4 monomials) of quartics through ``points``."""
    monos = ring.monomials(4)
    evals = [[Polynomial.monomial(ring, m).evaluate(P) for m in monos] for P in points]
    return nullspace(evals, len(monos), ring.field)


def _general_member(ring: Ring, system: list[list], rng: random.Random) -> Polynomial:
    monos = ring.monomials(4)
    combo = [0] * len(monos)
    for vec in system:
        c = rng.randint(1, 20) * rng.choice([-1, 1])
        combo = [x + c * y for x, y in zip(combo, vec)]
    return Polynomial(ring, {m: c for m, c in zip(monos, combo)})


def labeled_points(lines: Sequence[Polynomial], rng: random.Random) -> list[dict[str, list]]:
    """Per line, nine distinct points labeled P1..P3, Q1, Q2, R1..R4."""
    labels = ["P1", "P2", "P3", "Q1", "Q2", "R1", "R2", "R3", "R4"]
    out = []
    for L in lines:
        pts = _points_on_line(L, rng, 9, [M for M in lines if M is not L])
        out.append(dict(zip(labels, pts)))
    return out


def jumping_line_ci(rng: random.Random, max_retries: int = DEFAULT_RETRIES) -> JumpingLineCI:
    """Quartics F1, F2, F3 forming a CI whose restrictions to three lines have linear syzygies.

    F1 and F2 are general quartics through the nine points P1, P2, P3 on the
    three lines, so on each line their restrictions share a cubic factor.
    F3 is a general quartic.  Asking F1 to pass through Q1 as well on every
    line (and F3 through R1..R4) is not possible: twelve points, four on each
    of three lines, only lie on the quartics divisible by the product of the
    lines.  ``quartics_through`` shows this directly.
    """
    R = ci_ring(0)
    degs = CIDegrees(4, 4, 4)
    for attempt in range(max_retries):
        lines = []
        while len(lines) < 3:
            L = random_linear_form(R, rng, 5)
            if all(rank([[L.coefficient(R.var(k)) for k in range(3)],
                         [M.coefficient(R.var(k)) for k in range(3)]], R.field) == 2 for M in lines):
                lines.append(L)
        pts = labeled_points(lines, rng)
        shared = [line[k] for line in pts for k in ("P1", "P2", "P3")]
        system = quartics_through(R, shared)
        if len(system) != 15 - len(shared):
            continue
        F1 = _general_member(R, system, rng)
        F2 = _general_member(R, system, rng)
        F3 = random_form(R, 4, rng, 20)
        I = IdealSpan(R, [F1, F2, F3])
        if is_complete_intersection(I, degs):
            return JumpingLineCI(I, lines, attempt)
    raise RetryBudgetExhausted("could not build the jumping-line complete intersection")


# apolarity ------------------------------------------------------------------------


def apolar_ideal(F: Polynomial) -> IdealSpan:
    """Ann(F) under the differentiation action, as a homogeneous ideal."""
    ring = F.ring
    if ring.characteristic != 0:
        raise ValueError("apolarity by differentiation needs characteristic 0")
    e = F.homogeneous_degree
    if e is None:
        raise ValueError("F must be a nonzero form")
    K = ring.field
    gens = []
    for j in range(1, e + 1):
        monos = ring.monomials(j)
        width = ring.dim(e - j)
        cat = []
        for m in monos:
            row = [K.zero] * width
            for c, v in F.apply_operator(m).vector(e - j).items():
                row[c] = v
            cat.append(row)
        for vec in left_kernel(cat, len(monos), K):
            gens.append(Polynomial.from_vector(ring, j, vec))
    gens.extend(Polynomial.monomial(ring, m) for m in ring.monomials(e + 1))
    return IdealSpan(ring, gens)


def apolar_algebra(F: Polynomial) -> GradedAlgebra:
    return GradedAlgebra(apolar_ideal(F))


def hessian(F: Polynomial) -> Polynomial:
    ring = F.ring
    n = ring.num_vars
    first = [F.diff(k) for k in range(n)]
    M = [[first[a].diff(b) for b in range(n)] for a in range(n)]
    return polynomial_determinant(M, ring)
