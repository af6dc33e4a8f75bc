import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.algebra import GradedAlgebra
from lefschetz.examples_suite import example_1331, random_stable_ideal
from lefschetz.ideals import (
    IdealSpan,
    MonomialIdeal,
    NotArtinianWithinCap,
    NotOSequence,
    lex_segment_ideal,
    power_of_max_ideal,
    truncate_ideal,
)
from lefschetz.parser import parse_polynomial
from lefschetz.polynomial import Polynomial
from lefschetz.ring import Ring

from conftest import seeded

R3 = Ring(3, 0, ["x1", "x2", "x3"])


def P(text, ring=R3):
    return parse_polynomial(text, ring)


def test_lex_1331_generators():
    J = lex_segment_ideal((1, 3, 3, 1), R3)
    assert sorted(str(g) for g in J.polynomials()) == sorted(
        ["x1^2", "x1*x2", "x1*x3", "x2^3", "x2^2*x3", "x2*x3^2", "x3^4"]
    )


def test_lex_13431_generators():
    J = lex_segment_ideal((1, 3, 4, 3, 1), R3)
    assert sorted(str(g) for g in J.polynomials()) == sorted(
        ["x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3^2", "x2*x3^3", "x3^5"]
    )


def test_lex_rejects_non_o_sequence():
    with pytest.raises(NotOSequence):
        lex_segment_ideal((1, 2, 4), Ring(2))


def test_minimal_generators_1331():
    A = example_1331()
    assert A.hf == (1, 3, 3, 1)
    assert A.ideal.minimal_generator_counts(6) == {2: 3, 3: 3, 4: 1}


def test_redundant_generators_are_not_minimal():
    I = IdealSpan(R3, [P("x1^2"), P("x1^2*x2"), P("x1^2 + x2^2"), P("x2^2"), P("x3^3")])
    assert I.minimal_generator_counts(4) == {2: 2, 3: 1}


def test_membership():
    I = IdealSpan(R3, [P("x1^2 - x2*x3"), P("x2^2"), P("x3^2")])
    assert I.contains(P("x1^2*x3 - x2*x3^2"))
    assert not I.contains(P("x1*x2"))
    assert I.contains(Polynomial.zero(R3))


def test_not_artinian():
    with pytest.raises(NotArtinianWithinCap):
        IdealSpan(R3, [P("x1^2"), P("x2^2")]).hilbert_function(s_max=10)


def test_non_homogeneous_generator_rejected():
    with pytest.raises(ValueError):
        IdealSpan(R3, [P("x1^2 + x2")])


def test_truncation_and_powers():
    J = IdealSpan(R3, [P("x1"), P("x2^2")])
    T = truncate_ideal(J, 3)
    assert T.dim(2) == 0 and T.dim(3) == J.dim(3) and T.dim(5) == J.dim(5)
    m3 = power_of_max_ideal(R3, 3)
    assert len(m3.gens) == 10


def test_monomial_ideal_minimalizes():
    J = MonomialIdeal(R3, [(2, 0, 0), (3, 0, 0), (2, 1, 0), (0, 1, 0)])
    assert sorted(J.gens) == [(0, 1, 0), (2, 0, 0)]


def test_stability_checks():
    assert lex_segment_ideal((1, 3, 4, 3, 1), R3).is_stable()
    assert not MonomialIdeal(R3, [(0, 0, 1)]).is_stable()
    assert MonomialIdeal(R3, [(1, 0, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2)]).is_borel_fixed()


@given(st.integers(0, 10_000))
def test_random_stable_ideals_are_stable(seed):
    J = random_stable_ideal(seeded(f"stable:{seed}"))
    assert J.is_stable()


@given(st.integers(0, 10_000))
def test_hilbert_function_of_sum_bounded(seed):
    rng = seeded(f"sum:{seed}")
    gens = [Polynomial(R3, {m: rng.randint(-3, 3) for m in R3.monomials(d)}) for d in (2, 2, 3)]
    I = IdealSpan(R3, gens + power_of_max_ideal(R3, 5).polynomials())
    J = I.with_generators([Polynomial(R3, {m: rng.randint(-3, 3) for m in R3.monomials(2)})])
    hI, hJ = I.hilbert_function(), J.hilbert_function()
    assert all(b <= a for a, b in zip(hI, hJ)) and len(hJ) <= len(hI)
    assert I.is_subideal_of(J, 6)


def test_normal_form_is_linear():
    A = GradedAlgebra(IdealSpan(R3, [P("x1^2 - x2*x3"), P("x2^2"), P("x3^2")]))
    f, g = P("x1^2 + 3*x1*x2"), P("x2*x3 - x1*x3")
    F = A.field
    lhs = A.normal_form(f + g)
    rhs = [F.add(a, b) for a, b in zip(A.normal_form(f), A.normal_form(g))]
    assert lhs == rhs
    assert A.normal_form(P("x1^2 - x2*x3")) == [0] * A.h(2)
