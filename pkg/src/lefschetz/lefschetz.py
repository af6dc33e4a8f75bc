"""Weak and Strong Lefschetz verdicts.

A "general" linear form is realized by seeded random integer coefficients.
A success is a proof: the witness is exhibited and its ranks are exact.
A failure is first attacked with exact certificates:

* ``annihilator``: a nonzero v in A_i with v * R_d in I, so v lies in the
  kernel of x ell^d for every linear form (socle elements when d = 1);
* ``symbolic_minors``: every maximal minor of the generic matrix of
  x (c_0 x_0 + ... + c_n x_n)^d vanishes as a polynomial in the c_k, so
  the rank drops for every linear form over every extension field.

Only when both fail is the failure reported as probabilistic, with the
Schwartz-Zippel bound on the chance that a good form was missed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import GradedAlgebra, linear_coefficients
from .linalg import matmul, rank
from .polynomial import Polynomial
from .ring import Ring

DEFAULT_TRIALS = 3
DEFAULT_COEFF_BOUND = 10**4
MAX_SYMBOLIC_SIZE = 10
MAX_SYMBOLIC_MINORS = 64


@dataclass
class LefschetzVerdict:
    property: str
    holds: bool
    witness: Polynomial | None = None
    failing: list[tuple[int, int]] = field(default_factory=list)
    certificate: dict | None = None
    confidence: float | None = None
    trials: list[dict] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.holds or (self.certificate is not None and self.certificate["kind"] != "probabilistic")

    @property
    def failing_step(self) -> tuple[int, int] | None:
        return self.failing[0] if self.failing else None

    def summary(self) -> str:
        if self.holds:
            return f"{self.property} holds; witness {self.witness}"
        i, d = self.failing_step
        cert = self.certificate or {}
        kind = cert.get("kind", "none")
        if kind == "annihilator":
            elems = ", ".join(cert["elements"])
            step = f"degree {i}" if d == 1 else f"degree {i} under L^{d}"
            return f"{self.property} fails: {elems} in kernel at {step} (exact)"
        if kind == "symbolic_minors":
            return f"{self.property} fails at (i={i}, d={d}): generic maximal minors vanish (exact)"
        return f"{self.property} fails at (i={i}, d={d}) in all trials (probabilistic, eps <= {self.confidence:.3g})"

    def to_json(self) -> dict:
        F = self.witness.ring.field if self.witness is not None else None
        return {
            "property": self.property,
            "holds": self.holds,
            "exact": self.exact,
            "witness": str(self.witness) if self.witness is not None else None,
            "witness_coefficients": (
                [F.to_json(c) for c in linear_coefficients(self.witness)] if self.witness is not None else None
            ),
            "failing": [{"i": i, "d": d} for i, d in self.failing],
            "certificate": self.certificate,
            "epsilon": self.confidence,
            "trials": self.trials,
        }


def _steps(A: GradedAlgebra, strong: bool) -> list[tuple[int, int]]:
    s = A.s
    if not strong:
        return [(i, 1) for i in range(s)]
    return [(i, d) for d in range(1, s + 1) for i in range(0, s - d + 1)]


def maximal_rank_failures(A: GradedAlgebra, coeffs: Sequence, strong: bool) -> tuple[list[tuple[int, int]], dict]:
    """Steps (i, d) at which x ell^d fails to have maximal rank, plus all ranks."""
    F = A.field
    s = A.s
    single = [A.linear_matrix(coeffs, i) for i in range(s)]
    ranks = {}
    failing = []
    max_d = s if strong else 1
    for i in range(s):
        M = single[i]
        for d in range(1, max_d + 1):
            if i + d > s:
                break
            if d > 1:
                M = matmul(M, single[i + d - 1], F, A.h(i + d))
            r = rank(M, F)
            ranks[(i, d)] = r
            if r != min(A.h(i), A.h(i + d)):
                failing.append((i, d))
    failing.sort(key=lambda t: (t[1], t[0]))
    return failing, ranks


def _sample_coeffs(rng: random.Random, n: int, bound: int, p: int) -> list[int]:
    if p and p - 1 <= 2 * bound:
        return [rng.randint(1, p - 1) for _ in range(n)]
    out = []
    for _ in range(n):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        out.append(c)
    return out


def _sample_size(bound: int, p: int) -> int:
    if p and p - 1 <= 2 * bound:
        return p - 1
    return 2 * bound


def check_lefschetz(
    A: GradedAlgebra,
    strong: bool = False,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    seed: int | str = 0,
    candidates: Sequence[Polynomial] = (),
) -> LefschetzVerdict:
    name = "SLP" if strong else "WLP"
    ring = A.ring
    F = A.field
    p = F.characteristic
    log = []
    attempts: list[tuple[list, dict]] = [(linear_coefficients(c), {"source": "candidate"}) for c in candidates]
    for t in range(trials):
        rng = random.Random(f"{seed}:{name}:{t}")
        coeffs = _sample_coeffs(rng, ring.num_vars, coeff_bound, p)
        attempts.append(([F.coerce(c) for c in coeffs], {"source": "random", "seed": f"{seed}:{name}:{t}"}))

    best = None
    for coeffs, meta in attempts:
        failing, _ = maximal_rank_failures(A, coeffs, strong)
        entry = dict(meta, coefficients=[F.to_json(c) for c in coeffs], ok=not failing)
        log.append(entry)
        if not failing:
            witness = Polynomial.linear_form(ring, coeffs)
            return LefschetzVerdict(name, True, witness=witness, trials=log)
        if best is None or len(failing) < len(best):
            best = failing

    failing = best
    i, d = failing[0]
    cert = failure_certificate(A, i, d)
    verdict = LefschetzVerdict(name, False, failing=failing, certificate=cert, trials=log)
    if cert["kind"] == "probabilistic":
        verdict.confidence = cert["epsilon"]
    else:
        verdict.confidence = 0.0
    return verdict


def check_wlp(A: GradedAlgebra, trials=DEFAULT_TRIALS, coeff_bound=DEFAULT_COEFF_BOUND, seed=0, candidates=()):
    return check_lefschetz(A, False, trials, coeff_bound, seed, candidates)


def check_slp(A: GradedAlgebra, trials=DEFAULT_TRIALS, coeff_bound=DEFAULT_COEFF_BOUND, seed=0, candidates=()):
    return check_lefschetz(A, True, trials, coeff_bound, seed, candidates)


def check_with_witness(A: GradedAlgebra, ell: Polynomial, strong: bool = True) -> list[tuple[int, int]]:
    """Failing steps for one fixed linear form (empty list: ell is a witness)."""
    failing, _ = maximal_rank_failures(A, linear_coefficients(ell), strong)
    return failing


# certificates -----------------------------------------------------------------


def common_kernel_certificate(A: GradedAlgebra, i: int, d: int = 1) -> list[list]:
    """Elements of A_i killed by every form of degree d (the socle when d = 1).

    Only meaningful where x ell^d must be injective, i.e. h_i <= h_{i+d}.
    """
    if A.h(i) > A.h(i + d):
        raise ValueError(f"h_{i} > h_{i + d}: maximal rank means surjectivity here, not injectivity")
    return A.annihilator_of_power(i, d)


def failure_certificate(A: GradedAlgebra, i: int, d: int, trials: int = 3, coeff_bound: int = DEFAULT_COEFF_BOUND) -> dict:
    if A.h(i) <= A.h(i + d):
        kernel = common_kernel_certificate(A, i, d)
        if kernel:
            return {
                "kind": "annihilator",
                "i": i,
                "d": d,
                "elements": [str(A.element(i, v)) for v in kernel],
                "dimension": len(kernel),
                "statement": f"each element times every monomial of degree {d} lies in I",
            }
    symbolic = symbolic_minor_certificate(A, i, d)
    if symbolic is not None and symbolic["vanish"]:
        return {
            "kind": "symbolic_minors",
            "i": i,
            "d": d,
            "size": symbolic["size"],
            "minors_checked": symbolic["count"],
            "statement": "all maximal minors of the generic multiplication matrix are identically zero",
        }
    r = min(A.h(i), A.h(i + d))
    p = A.field.characteristic
    size = _sample_size(coeff_bound, p)
    per_trial = min(1.0, d * r / size)
    out = {
        "kind": "probabilistic",
        "i": i,
        "d": d,
        "epsilon": per_trial**trials,
        "minor_degree": d * r,
        "sample_set_size": size,
    }
    if p and d * r >= p:
        out["warning"] = f"characteristic {p} does not exceed the minor degree {d * r}; bound is vacuous"
        out["epsilon"] = 1.0
    if symbolic is not None and not symbolic["vanish"]:
        out["warning"] = "a generic maximal minor is nonzero; the sampled forms were special"
    return out


def generic_linear_ring(ring: Ring) -> Ring:
    return Ring(ring.num_vars, ring.characteristic, [f"c{k}" for k in range(ring.num_vars)])


def generic_multiplication_matrix(A: GradedAlgebra, i: int, d: int) -> tuple[Ring, list[list[Polynomial]]]:
    """Matrix of x (sum c_k x_k)^d : A_i -> A_{i+d} with polynomial entries in the c_k."""
    C = generic_linear_ring(A.ring)
    zero = Polynomial.zero(C)
    cvars = [Polynomial.variable(C, k) for k in range(C.num_vars)]

    def single(t):
        rows, cols = A.h(t), A.h(t + 1)
        out = [[zero] * cols for _ in range(rows)]
        for k in range(C.num_vars):
            X = A.var_matrix(k, t)
            for r in range(rows):
                for c in range(cols):
                    if X[r][c]:
                        out[r][c] = out[r][c] + cvars[k].scale(X[r][c])
        return out

    M = single(i)
    for t in range(i + 1, i + d):
        N = single(t)
        cols = A.h(t + 1)
        prod = []
        for row in M:
            acc = [zero] * cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for c in range(cols):
                    if N[k][c]:
                        acc[c] = acc[c] + a * N[k][c]
            prod.append(acc)
        M = prod
    return C, M


def polynomial_determinant(M: list[list[Polynomial]], ring: Ring) -> Polynomial:
    """Determinant by expansion over column subsets (2^n subproblems)."""
    n = len(M)
    if n == 0:
        return Polynomial.constant(ring, 1)
    dets = {0: Polynomial.constant(ring, 1)}
    for k in range(n):
        nxt = {}
        for mask, sub in dets.items():
            if not sub:
                continue
            for j in range(n):
                if mask >> j & 1 or not M[k][j]:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = M[k][j] * sub
                if above % 2:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        dets = nxt
    return dets.get((1 << n) - 1, Polynomial.zero(ring))


def symbolic_minor_certificate(A: GradedAlgebra, i: int, d: int) -> dict | None:
    """Decide exactly whether all maximal minors of the generic map vanish.

    Returns None when the matrix is too large to expand.
    """
    rows, cols = A.h(i), A.h(i + d)
    r = min(rows, cols)
    if r == 0:
        return {"vanish": False, "size": [rows, cols], "count": 0}
    if r > MAX_SYMBOLIC_SIZE:
        return None
    big = max(rows, cols)
    count = 0
    for _ in combinations(range(big), r):
        count += 1
        if count > MAX_SYMBOLIC_MINORS:
            return None
    C, M = generic_multiplication_matrix(A, i, d)
    if rows > cols:
        M = [list(col) for col in zip(*M)]
    checked = 0
    for chosen in combinations(range(big), r):
        sub = [[row[c] for c in chosen] for row in M]
        checked += 1
        if polynomial_determinant(sub, C):
            return {"vanish": False, "size": [rows, cols], "count": checked}
    return {"vanish": True, "size": [rows, cols], "count": checked}


def hilbert_function_mod_linear(A: GradedAlgebra, ell: Polynomial) -> tuple[int, ...]:
    """Hilbert function of A / ell A, computed from the enlarged ideal."""
    return A.ideal.with_generators([ell]).hilbert_function()
