import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.algebra import GradedAlgebra
from lefschetz.examples_suite import example_1331, lex_algebra, monomial_ci, random_codim2_ideal
from lefschetz.ideals import IdealSpan
from lefschetz.lefschetz import (
    check_slp,
    check_with_witness,
    check_wlp,
    common_kernel_certificate,
    failure_certificate,
    hilbert_function_mod_linear,
    maximal_rank_failures,
)
from lefschetz.parser import parse_polynomial
from lefschetz.polynomial import Polynomial
from lefschetz.ring import Ring

from conftest import seeded


def test_example_1331_certificate():
    A = example_1331()
    v = check_wlp(A, seed=11)
    assert not v.holds and v.exact
    assert v.failing_step == (1, 1)
    assert v.certificate["kind"] == "annihilator"
    assert v.certificate["elements"] == ["x1"]
    assert "x1 in kernel at degree 1" in v.summary()


def test_common_kernel_1331():
    A = example_1331()
    kernel = common_kernel_certificate(A, 1)
    assert len(kernel) == 1 and str(A.element(1, kernel[0])) == "x1"


def test_lex_13431():
    A = lex_algebra((1, 3, 4, 3, 1))
    assert check_wlp(A).holds
    v = check_slp(A)
    assert not v.holds and v.exact and v.failing_step == (1, 2)


def test_char_two_ci_has_exact_failure():
    A = monomial_ci((2, 2, 2), characteristic=2)
    v = check_wlp(A)
    assert not v.holds and v.exact
    assert v.certificate["kind"] == "symbolic_minors"


def test_char_zero_ci_has_slp():
    assert check_slp(monomial_ci((2, 2, 2))).holds


@pytest.mark.parametrize("exps", [(2, 2, 3), (2, 3, 3), (3, 3, 3)])
def test_monomial_cis_have_slp(exps):
    assert check_slp(monomial_ci(exps)).holds


def test_verdicts_are_seed_deterministic():
    A = monomial_ci((2, 3, 3))
    a = check_slp(A, seed="s").to_json()
    b = check_slp(A, seed="s").to_json()
    assert a == b
    assert check_slp(A, seed="t").witness != check_slp(A, seed="s").witness


def test_witness_reverifies():
    A = monomial_ci((2, 2, 3))
    v = check_slp(A, seed=3)
    assert check_with_witness(A, v.witness, strong=True) == []


def test_variable_is_bad_witness_for_monomial_ci():
    A = monomial_ci((2, 2, 2))
    x1 = Polynomial.variable(A.ring, 0)
    assert check_with_witness(A, x1, strong=False)


def test_probabilistic_epsilon():
    A = monomial_ci((2, 2, 2), characteristic=101)
    cert = failure_certificate(A, 0, 3)
    # multiplication by a general cube A_0 -> A_3 is nonzero, so no exact certificate exists
    assert cert["kind"] == "probabilistic"
    assert cert["sample_set_size"] == 100
    assert cert["epsilon"] == pytest.approx((cert["minor_degree"] / cert["sample_set_size"]) ** 3)


def test_candidates_tried_first():
    A = monomial_ci((2, 2, 2))
    ell = parse_polynomial("x1 + x2 + x3", A.ring)
    v = check_slp(A, candidates=[ell])
    assert v.holds and v.witness == ell


def test_quotient_by_general_form():
    A = monomial_ci((2, 2, 2))
    ell = parse_polynomial("x1 + 2*x2 + 3*x3", A.ring)
    # surjective onto A_2, so the quotient stops in degree 1
    assert hilbert_function_mod_linear(A, ell) == (1, 2)


def test_maximal_rank_failures_sorted():
    A = lex_algebra((1, 3, 4, 3, 1))
    failing, _ = maximal_rank_failures(A, [1, 0, 0], strong=True)
    assert failing == sorted(failing, key=lambda step: (step[1], step[0]))
    assert failing[0] == (1, 1)


@given(st.integers(0, 10_000))
def test_codim_two_algebras_have_slp(seed):
    A = GradedAlgebra(random_codim2_ideal(seeded(f"codim2:{seed}")))
    assert check_slp(A, seed=seed).holds


@given(st.integers(0, 10_000))
def test_slp_implies_wlp(seed):
    rng = seeded(f"slpwlp:{seed}")
    R = Ring(3)
    gens = [Polynomial(R, {m: rng.randint(-2, 2) for m in R.monomials(d)}) for d in (2, 2, 2)]
    I = IdealSpan(R, gens + [Polynomial.monomial(R, m) for m in R.monomials(4)])
    A = GradedAlgebra(I)
    s, w = check_slp(A, seed=seed), check_wlp(A, seed=seed)
    if s.holds:
        assert w.holds
    if not w.holds:
        assert not s.holds
