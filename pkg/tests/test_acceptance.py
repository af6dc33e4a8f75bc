"""The ten acceptance criteria, each with its time limit.

Every criterion prints one ``PASS``/``FAIL`` line (visible even without -s).
Run ``python tests/test_acceptance.py`` for the same lines without pytest.
"""

import random
import sys
import time

import pytest

from lefschetz.algebra import GradedAlgebra
from lefschetz.betti import (
    BettiTable,
    eliahou_kervaire_table,
    euler_identity_holds,
    koszul_betti_table,
    lex_betti_numbers,
)
from lefschetz.cilab import apolar_algebra, ci_fuzz
from lefschetz.construction import construct, random_admissible_hf, verify_construction
from lefschetz.examples_suite import (
    LEX_1331_TABLE,
    example_1331,
    lex_algebra,
    monomial_ci,
    random_codim2_ideal,
    random_stable_ideal,
)
from lefschetz.ideals import lex_segment_ideal
from lefschetz.lefschetz import check_slp, check_wlp
from lefschetz.parser import parse_polynomial
from lefschetz.ring import Ring


def report(number, title, passed, seconds, limit, note=""):
    ok = passed and (limit is None or seconds < limit)
    bound = f" < {limit:g}s" if limit is not None else ""
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} ({seconds:.2f}s{bound}){note}"
    print(line, flush=True)
    return ok


def timed(fn):
    start = time.perf_counter()
    detail = fn()
    return detail, time.perf_counter() - start


def criterion_1():
    def run():
        A = example_1331()
        v = check_wlp(A)
        return (A.hf == (1, 3, 3, 1) and not v.holds and v.exact and v.failing_step == (1, 1)
                and v.certificate["kind"] == "annihilator" and v.certificate["elements"] == ["x1"])
    ok, t = timed(run)
    return report(1, "Example 1331: WLP fails, exact certificate x1 at 1->2", ok, t, 1)


def criterion_2():
    def run():
        R = Ring(3, 0, ["x1", "x2", "x3"])
        expected = BettiTable(3, LEX_1331_TABLE)
        ek = eliahou_kervaire_table(lex_segment_ideal((1, 3, 3, 1), R))
        A = lex_algebra((1, 3, 3, 1))
        kz = koszul_betti_table(A)
        degrees = {i + j for (i, j) in expected.entries if i > 0}
        return ek == expected and kz == expected and A.socle_type() == (0, 1, 2, 1) and degrees == set(range(2, 7))
    ok, t = timed(run)
    return report(2, "lex (1,3,3,1) resolution by EK and Koszul, socle type", ok, t, 5)


def criterion_3():
    def run():
        A = lex_algebra((1, 3, 4, 3, 1))
        s = check_slp(A)
        return check_wlp(A).holds and not s.holds and s.exact and s.failing_step == (1, 2)
    ok, t = timed(run)
    return report(3, "lex (1,3,4,3,1): WLP holds, SLP fails at (1,2)", ok, t, 5)


def criterion_4():
    def run():
        rng = random.Random("acceptance:construction")
        hs = [(1, 3, 3, 1), (1, 3, 4, 3, 1), (1, 3, 4, 5, 4)]
        hs += [random_admissible_hf(rng, max_vars=4, max_socle=6) for _ in range(10)]
        results = []
        for h in hs:
            rep = verify_construction(construct(h), h, strict=False)
            results.append(rep.passed and all(c["passed"] for c in rep.checks.values()))
        return all(results) and len(results) == 13
    ok, t = timed(run)
    return report(4, "construction suite, 3 fixed + 10 random h, all four checks", ok, t, 120)


def criterion_5():
    result = {}

    def run():
        rep = ci_fuzz(25, seed="acceptance", max_degree=5, slp=True)
        result.update(rep)
        degrees_ok = all(2 <= r["degrees"][0] <= r["degrees"][1] <= r["degrees"][2] <= 5 for r in rep["trials"])
        return rep["passed"] and rep["wlp_holds"] == 25 and rep["count"] == 25 and degrees_ok
    ok, t = timed(run)
    slp = sum(r["slp"]["holds"] for r in result.get("trials", []))
    return report(5, "25 random CIs over Q: WLP, splitting type, mu, I+L table", ok, t, 600,
                  f"; SLP found in {slp}/25 (recorded only)")


def criterion_6():
    def run():
        v = check_wlp(monomial_ci((2, 2, 2), characteristic=2))
        return not v.holds and v.exact
    ok, t = timed(run)
    return report(6, "(x1^2,x2^2,x3^2) over F_2 fails WLP exactly", ok, t, 1)


def criterion_7():
    def run():
        verdicts = []
        kinds = set()
        for k in range(25):
            rng = random.Random(f"acceptance:codim2:{k}")
            I = random_codim2_ideal(rng, max_socle=10)
            kinds.add(I.is_monomial)
            A = GradedAlgebra(I)
            verdicts.append(A.s <= 10 and check_slp(A, seed=k).holds)
        return all(verdicts) and kinds == {True, False}
    ok, t = timed(run)
    return report(7, "25 random Artinian ideals in 2 variables have SLP", ok, t, 60)


def criterion_8():
    def run():
        R = Ring(5, 0, ["u", "v", "x", "y", "z"])
        A = apolar_algebra(parse_polynomial("x*u^2 + y*u*v + z*v^2", R))
        B = apolar_algebra(parse_polynomial("x*u^3 + y*u^2*v + z*u*v^2", R))
        return (A.hf == (1, 5, 5, 1) and not check_wlp(A).holds
                and B.hf == (1, 5, 6, 5, 1) and check_wlp(B).holds and not check_slp(B).holds)
    ok, t = timed(run)
    return report(8, "apolar algebras (1,5,5,1) and (1,5,6,5,1)", ok, t, 30)


def criterion_9():
    def run():
        return all(check_slp(monomial_ci((a, b, c))).holds for a in (2, 3) for b in (2, 3) for c in (2, 3))
    ok, t = timed(run)
    return report(9, "monomial CIs x^a y^b z^c, 2 <= a,b,c <= 3, have SLP", ok, t, 60)


def criterion_10():
    def run():
        algebras = [example_1331(), lex_algebra((1, 3, 3, 1)), lex_algebra((1, 3, 4, 3, 1))]
        algebras += [construct(h) for h in ((1, 3, 3, 1), (1, 3, 4, 3, 1), (1, 3, 4, 5, 4))]
        R = Ring(5, 0, ["u", "v", "x", "y", "z"])
        algebras.append(apolar_algebra(parse_polynomial("x*u^2 + y*u*v + z*v^2", R)))
        rng = random.Random("acceptance:stable")
        ok = True
        for _ in range(30):
            J = random_stable_ideal(rng, num_vars=rng.randint(2, 4), max_degree=rng.randint(2, 4))
            A = GradedAlgebra(J.to_ideal_span())
            ok &= eliahou_kervaire_table(J) == koszul_betti_table(A)
            algebras.append(A)
        for A in algebras:
            table = koszul_betti_table(A)
            ok &= euler_identity_holds(table, A.hf)
            ok &= table.dominated_by(lex_betti_numbers(A.hf, A.ring))
        return ok
    ok, t = timed(run)
    return report(10, "Euler identity, lex dominance, EK = Koszul on stable ideals", ok, t, None)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 11)])
def test_acceptance(criterion, capsys):
    with capsys.disabled():
        ok = criterion()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
