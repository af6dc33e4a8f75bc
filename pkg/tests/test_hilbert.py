from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.hilbert import (
    first_difference,
    hilbert_series_product,
    is_o_sequence,
    macaulay_bound,
    macaulay_representation,
    positive_first_difference,
    wlp_admissible,
)
from lefschetz.ideals import NotOSequence, lex_segment_ideal
from lefschetz.ring import Ring


def lex_growth_oracle(value: int, d: int, num_vars: int = 4) -> int:
    """Codimension in degree d+1 of the ideal generated by the lex-first monomials of degree d.

    The lex-first block has size dim R_d - value, so R/J has value monomials
    in degree d; Macaulay's theorem says the next value is value^<d>.
    """
    R = Ring(num_vars)
    monos = R.monomials(d)
    keep = set(monos[: len(monos) - value])
    image = set()
    for m in keep:
        for k in range(num_vars):
            image.add(tuple(e + (j == k) for j, e in enumerate(m)))
    return R.dim(d + 1) - len(image)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_macaulay_bound_matches_lex_growth(d):
    for value in range(0, comb(d + 3, 3) + 1):
        assert macaulay_bound(value, d) == lex_growth_oracle(value, d), (value, d)


@given(st.integers(1, 500), st.integers(1, 8))
def test_macaulay_representation_sums(value, d):
    rep = macaulay_representation(value, d)
    assert sum(comb(a, b) for a, b in rep) == value
    tops = [a for a, _ in rep]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)


def test_macaulay_examples():
    assert macaulay_bound(3, 1) == 6
    assert macaulay_bound(3, 2) == 4
    assert macaulay_bound(4, 2) == 5
    assert macaulay_bound(0, 3) == 0


sequences = st.lists(st.integers(1, 7), min_size=1, max_size=6).map(lambda t: (1,) + tuple(t))


@given(sequences)
def test_o_sequence_iff_lex_ideal_exists(h):
    N = max(h[1] if len(h) > 1 else 1, 1)
    ring = Ring(N)
    try:
        J = lex_segment_ideal(h, ring)
        exists = True
    except NotOSequence:
        exists = False
    if h[1:2] and h[1] > N:
        return
    assert is_o_sequence(h) == exists
    if exists:
        assert J.to_ideal_span().hilbert_function() == h


def test_differences():
    h = (1, 3, 4, 3, 1)
    assert positive_first_difference(h) == (1, 2, 1)
    assert first_difference(h, 3) == -1
    assert first_difference(h, 5) == -1
    assert first_difference(h, 0) == 1


@pytest.mark.parametrize(
    "h,reason",
    [((1, 3, 3, 4), "plateau before increase"), ((1, 3, 2, 3), None), ((1, 2, 4), "not an O-sequence")],
)
def test_not_admissible(h, reason):
    verdict = wlp_admissible(h, 3)
    assert not verdict
    if reason:
        assert verdict.reason == reason


def test_profile_1331():
    prof = wlp_admissible((1, 3, 3, 1), 3).profile
    assert prof.d == 1 and prof.s == 3
    assert list(prof.u) == [1, 3] and prof.a == 2
    assert prof.hbar == (1, 2)
    assert tuple(prof.phi[:4]) == (0, 0, 2, 1)
    assert prof.sperner == 3


def test_profile_13454():
    prof = wlp_admissible((1, 3, 4, 5, 4), 3).profile
    assert prof.d == 3 and prof.u[0] == 3
    assert prof.hbar == (1, 2, 1, 1)
    assert tuple(prof.phi) == (0, 0, 0, 1, 4)


def test_profile_plateau_drop():
    prof = wlp_admissible((1, 2, 3, 3, 2, 1), 2).profile
    assert list(prof.u) == [2, 4, 5] and prof.d == 2
    assert prof.a == 3


def test_ci_hilbert_series():
    assert hilbert_series_product((2, 2, 2), 3) == (1, 3, 3, 1)
    assert hilbert_series_product((4, 4, 4), 3) == (1, 3, 6, 10, 12, 12, 10, 6, 3, 1)
    assert hilbert_series_product((2, 3), 2) == (1, 2, 2, 1)
