import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.algebra import GradedAlgebra
from lefschetz.betti import (
    BettiTable,
    InadmissibleHilbertFunction,
    NotStable,
    betti_bounds,
    colex_subsets,
    eliahou_kervaire_table,
    euler_identity_holds,
    koszul_betti_table,
    lex_betti_numbers,
)
from lefschetz.examples_suite import LEX_1331_TABLE, example_1331, lex_algebra, random_stable_ideal
from lefschetz.ideals import IdealSpan, MonomialIdeal, lex_segment_ideal
from lefschetz.polynomial import Polynomial
from lefschetz.ring import Ring

from conftest import seeded

R3 = Ring(3, 0, ["x1", "x2", "x3"])


def test_lex_1331_table_both_ways():
    expected = BettiTable(3, LEX_1331_TABLE)
    assert eliahou_kervaire_table(lex_segment_ideal((1, 3, 3, 1), R3)) == expected
    assert koszul_betti_table(lex_algebra((1, 3, 3, 1))) == expected


def test_internal_degrees_1331():
    table = koszul_betti_table(example_1331())
    assert table.by_degree(1) == {2: 3, 3: 3, 4: 1}
    assert table.by_degree(2) == {3: 3, 4: 5, 5: 2}
    assert table.by_degree(3) == {4: 1, 5: 2, 6: 1}


def test_bounds_1331():
    b = betti_bounds((1, 3, 3, 1), R3)
    expected = {(0, 0): 1, (1, 1): 3, (2, 1): 2, (1, 2): 2, (2, 2): 4, (3, 2): 2, (1, 3): 1, (2, 3): 2, (3, 3): 1}
    assert b.entries == expected


def test_bounds_reject_inadmissible():
    with pytest.raises(InadmissibleHilbertFunction):
        betti_bounds((1, 3, 3, 4), R3)


def test_ek_needs_stable():
    with pytest.raises(NotStable):
        eliahou_kervaire_table(MonomialIdeal(R3, [(0, 0, 1)]))


def test_colex_order():
    assert colex_subsets(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert colex_subsets(4, 1) == [(0,), (1,), (2,), (3,)]


def test_json_round_trip():
    t = koszul_betti_table(example_1331())
    assert BettiTable.from_json(t.to_json()) == t


@given(st.integers(0, 10_000))
def test_ek_matches_koszul_on_stable_ideals(seed):
    rng = seeded(f"ek:{seed}")
    J = random_stable_ideal(rng, num_vars=rng.randint(2, 4), max_degree=rng.randint(2, 4))
    A = GradedAlgebra(J.to_ideal_span())
    assert eliahou_kervaire_table(J) == koszul_betti_table(A)


def _random_algebra(seed):
    rng = seeded(f"alg:{seed}")
    N = rng.randint(2, 3)
    R = Ring(N)
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 3)
        if rng.random() < 0.5:
            gens.append(Polynomial.monomial(R, rng.choice(R.monomials(d))))
        else:
            gens.append(Polynomial(R, {m: rng.randint(-2, 2) for m in R.monomials(d)}))
    cap = rng.randint(2, 5)
    gens += [Polynomial.monomial(R, m) for m in R.monomials(cap)]
    return GradedAlgebra(IdealSpan(R, [g for g in gens if g]))


@given(st.integers(0, 10_000))
def test_euler_identity(seed):
    A = _random_algebra(seed)
    assert euler_identity_holds(koszul_betti_table(A), A.hf)


@given(st.integers(0, 10_000))
def test_lex_dominance(seed):
    A = _random_algebra(seed)
    assert koszul_betti_table(A).dominated_by(lex_betti_numbers(A.hf, A.ring))


def test_characteristic_dependence_recorded():
    # Betti numbers over F_2 may differ; the table records its characteristic
    R = Ring(3, 2)
    A = GradedAlgebra(IdealSpan(R, [Polynomial.monomial(R, m) for m in R.monomials(2)]))
    assert koszul_betti_table(A).characteristic == 2


def test_diagram_layout():
    text = koszul_betti_table(example_1331()).diagram()
    assert text.splitlines()[1].split(":")[1].split() == ["1", "7", "10", "4"]
