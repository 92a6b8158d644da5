"""Torus characters, graded series, decomposition into irreducibles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilchar.charring import (
    GradedCharacter,
    TorusCharacter,
    decompose_into_irreducibles,
    expand_irrep_series,
    graded_mul,
    irreducible_character,
    restrict_character,
    restrict_graded,
)
from nilchar.rootdata import build_root_datum, reductive_root_datum, torus_datum

A1 = build_root_datum([[2]])
A2 = build_root_datum([[2, -1], [-1, 2]])


def chi(*coords, mult=1):
    return TorusCharacter(len(coords), {tuple(coords): mult})


def test_character_arithmetic():
    a = chi(2) + chi(-2) + chi(0)
    assert a.mass() == 3
    assert (a - a).mass() == 0 and not (a - a)
    prod = chi(2) * chi(-2)
    assert prod == chi(0)
    assert (2 * chi(1)).terms == {(1,): 2}


def test_character_rank_mismatch():
    with pytest.raises(ValueError):
        chi(1) + chi(1, 0)
    with pytest.raises(ValueError):
        chi(1) * chi(1, 0)


def test_irreducible_character_trivial():
    assert irreducible_character(A1, (0,)) == TorusCharacter.trivial(1)


def test_irreducible_character_a1_adjoint():
    assert irreducible_character(A1, (2,)) == chi(-2) + chi(0) + chi(2)


def test_irreducible_character_a2_fundamental():
    ch = irreducible_character(A2, (1, 0))
    assert ch.mass() == 3
    assert all(m == 1 for m in ch.terms.values())


def test_irreducible_character_mass_is_weyl_dimension():
    for lam in [(0, 0), (1, 0), (1, 1), (2, 1)]:
        assert irreducible_character(A2, lam).mass() == A2.weyl_dimension(lam)


def test_irreducible_character_rejects_non_dominant():
    with pytest.raises(ValueError):
        irreducible_character(A2, (-1, 0))


def test_decompose_trivial():
    assert decompose_into_irreducibles(A1, TorusCharacter.trivial(1)) == {(0,): 1}


def test_decompose_adjoint_square():
    adj = irreducible_character(A1, (2,))
    assert decompose_into_irreducibles(A1, adj * adj) == {(4,): 1, (2,): 1, (0,): 1}


def test_decompose_virtual():
    adj = irreducible_character(A1, (2,))
    virt = adj - 2 * TorusCharacter.trivial(1)
    assert decompose_into_irreducibles(A1, virt) == {(2,): 1, (0,): -2}


def test_decompose_rejects_non_invariant():
    with pytest.raises(ValueError, match="orbit"):
        decompose_into_irreducibles(A1, chi(2))


def test_decompose_round_trip():
    ch = irreducible_character(A2, (1, 1)) * irreducible_character(A2, (1, 0))
    parts = decompose_into_irreducibles(A2, ch)
    rebuilt = TorusCharacter(2)
    for lam, c in parts.items():
        rebuilt = rebuilt + c * irreducible_character(A2, lam)
    assert rebuilt == ch


def test_decompose_gl2_with_central_charge():
    gl2 = reductive_root_datum(2, [(1, -1)], [(1, -1)])
    std = chi(1, 0) + chi(0, 1)
    sym2 = chi(2, 0) + chi(1, 1) + chi(0, 2)
    assert decompose_into_irreducibles(gl2, std) == {(1, 0): 1}
    assert decompose_into_irreducibles(gl2, sym2) == {(2, 0): 1}
    det = chi(1, 1)
    assert decompose_into_irreducibles(gl2, det) == {(1, 1): 1}


def test_decompose_torus_is_identity():
    t = torus_datum(1)
    ch = chi(3) + chi(-1, mult=2)
    assert decompose_into_irreducibles(t, ch) == {(3,): 1, (-1,): 2}


def test_graded_identity_element():
    a = GradedCharacter(1, 3, [{(0,): 1}, {(2,): 1, (-2,): 1}])
    one = GradedCharacter.trivial(1, 3)
    assert graded_mul(a, one) == a
    assert graded_mul(one, a) == a


def test_graded_binomial_square():
    b = GradedCharacter(1, 2, [{(0,): 1}, {(0,): -1}])
    sq = graded_mul(b, b)
    assert sq.layers == [{(0,): 1}, {(0,): -2}, {(0,): 1}]


def test_graded_sl2_restriction_convolution():
    # (sum_m (chi_{-2m}+...+chi_{2m}) q^m) * (chi_0 - chi_0 q)
    N = 5
    layers = []
    for m in range(N + 1):
        layers.append({(w,): 1 for w in range(-2 * m, 2 * m + 1, 2)})
    series = GradedCharacter(1, N, layers)
    wedge = GradedCharacter(1, N, [{(0,): 1}, {(0,): -1}])
    result = graded_mul(series, wedge)
    assert result.layers[0] == {(0,): 1}
    for m in range(1, N + 1):
        assert result.layers[m] == {(2 * m,): 1, (-2 * m,): 1}


def test_graded_mul_truncates_to_smaller():
    a = GradedCharacter.trivial(1, 5)
    b = GradedCharacter.trivial(1, 3)
    assert graded_mul(a, b).truncation == 3


def test_graded_rank_mismatch():
    with pytest.raises(ValueError):
        graded_mul(GradedCharacter.trivial(1, 2), GradedCharacter.trivial(2, 2))


small_chars = st.dictionaries(
    st.tuples(st.integers(-3, 3)), st.integers(-3, 3), max_size=4
)


@settings(max_examples=40, deadline=None)
@given(small_chars, small_chars, small_chars)
def test_graded_mul_associative_commutative(t1, t2, t3):
    N = 3
    a = GradedCharacter(1, N, [t1, t2])
    b = GradedCharacter(1, N, [t3, t1])
    c = GradedCharacter(1, N, [t2, t3])
    assert graded_mul(a, b) == graded_mul(b, a)
    assert graded_mul(graded_mul(a, b), c) == graded_mul(a, graded_mul(b, c))


def test_restrict_character_identity_and_zero():
    ch = irreducible_character(A1, (2,))
    assert restrict_character(ch, [[1]]) == ch
    assert restrict_character(ch, [[0]]) == chi(0, mult=3)


def test_restrict_character_collapse():
    ch = irreducible_character(A2, (1, 0))
    # project to the first fundamental coordinate
    r = restrict_character(ch, [[1, 0]])
    assert r.mass() == 3


def test_restrict_shape_mismatch():
    with pytest.raises(ValueError):
        restrict_character(chi(1), [[1, 0]])


@settings(max_examples=30, deadline=None)
@given(small_chars, small_chars)
def test_restrict_is_ring_homomorphism(t1, t2):
    a = TorusCharacter(1, t1)
    b = TorusCharacter(1, t2)
    r = [[2]]
    lhs = restrict_character(a * b, r)
    rhs = restrict_character(a, r) * restrict_character(b, r)
    assert lhs == rhs


def test_restrict_graded():
    gc = GradedCharacter(2, 1, [{(0, 0): 1}, {(1, 1): 1, (-1, -1): 1}])
    r = restrict_graded(gc, [[1, 1]])
    assert r.layers == [{(0,): 1}, {(2,): 1, (-2,): 1}]


def test_expand_irrep_series():
    from nilchar.charring import IrrepSeries

    series = IrrepSeries(1, 1, [{(0,): 1}, {(2,): 1}])
    gc = expand_irrep_series(A1, series)
    assert gc.layers == [{(0,): 1}, {(-2,): 1, (0,): 1, (2,): 1}]


def test_records_are_sorted_and_stable():
    gc = GradedCharacter(1, 1, [{(0,): 1}, {(2,): 1, (-2,): 1}])
    assert gc.to_records() == [
        {"degree": 0, "weight": [0], "multiplicity": 1},
        {"degree": 1, "weight": [-2], "multiplicity": 1},
        {"degree": 1, "weight": [2], "multiplicity": 1},
    ]
