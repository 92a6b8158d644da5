"""Root datum construction, Weyl groups, involutions, weight enumeration."""

import pytest

from nilchar.rootdata import (
    InvolutionData,
    build_root_datum,
    classify_roots,
    dominant_weights_up_to_height,
    reductive_root_datum,
    torus_datum,
    wneg,
)

A1 = [[2]]
A2 = [[2, -1], [-1, 2]]
B2 = [[2, -2], [-1, 2]]
A1A1 = [[2, 0], [0, 2]]
G2 = [[2, -1], [-3, 2]]


def test_positive_root_counts():
    assert len(build_root_datum(A1).positive_roots) == 1
    assert len(build_root_datum(A2).positive_roots) == 3
    assert len(build_root_datum(B2).positive_roots) == 4
    assert len(build_root_datum(G2).positive_roots) == 6


def test_two_rho_is_sum_of_positive_roots():
    for cartan in (A1, A2, B2, A1A1, G2):
        datum = build_root_datum(cartan)
        total = (0,) * datum.rank
        for r in datum.positive_roots:
            total = tuple(a + b for a, b in zip(total, r))
        assert datum.two_rho == total
        # <2 rho, alpha_i^vee> = 2 in the fundamental-weight realization
        assert datum.two_rho == (2,) * datum.rank


def test_weyl_group_orders():
    assert len(build_root_datum(A1).weyl_group()) == 2
    assert len(build_root_datum(A2).weyl_group()) == 6
    assert len(build_root_datum(B2).weyl_group()) == 8
    assert len(build_root_datum(A1A1).weyl_group()) == 4
    assert len(build_root_datum(G2).weyl_group()) == 12


def test_weyl_lengths_match_inversions():
    for cartan in (A2, B2):
        datum = build_root_datum(cartan)
        for w in datum.weyl_group():
            assert w.length == datum.inversions(w)


def test_longest_element():
    datum = build_root_datum(A2)
    w0 = datum.longest_element()
    assert w0.length == 3
    assert sorted(w.length for w in datum.weyl_group()) == [0, 1, 1, 2, 2, 3]


def test_reduced_word_matches_matrix():
    datum = build_root_datum(B2)
    for w in datum.weyl_group():
        acc = tuple(tuple(1 if i == j else 0 for j in range(2)) for i in range(2))
        for i in w.word:
            m = datum.simple_reflection_matrix(i)
            acc = tuple(tuple(sum(acc[r][k] * m[k][c] for k in range(2)) for c in range(2)) for r in range(2))
        assert acc == w.matrix


def test_bad_cartan_matrices_rejected():
    with pytest.raises(ValueError):
        build_root_datum([[1]])
    with pytest.raises(ValueError):
        build_root_datum([[2, 1], [1, 2]])
    with pytest.raises(ValueError):
        build_root_datum([[2, -1], [0, 2]])
    # affine A1: not finite type
    with pytest.raises(ValueError):
        build_root_datum([[2, -2], [-2, 2]])
    with pytest.raises(ValueError):
        build_root_datum([[2, -4], [-1, 2]])


def test_classify_split_involution():
    datum = build_root_datum(A1)
    cls = classify_roots(datum, InvolutionData([[-1]]))
    assert set(cls.real) == {(2,), (-2,)}
    assert not cls.imaginary and not cls.complex_


def test_classify_compact_involution_all_marked():
    datum = build_root_datum(A2)
    roots = list(datum.positive_roots) + [wneg(r) for r in datum.positive_roots]
    cls = classify_roots(datum, InvolutionData([[1, 0], [0, 1]], compact=roots))
    assert set(cls.imaginary_compact) == set(roots)
    assert not cls.imaginary_noncompact and not cls.real and not cls.complex_


def test_classify_swap_involution_complex():
    datum = build_root_datum(A1A1)
    cls = classify_roots(datum, InvolutionData([[0, 1], [1, 0]]))
    assert set(cls.complex_) == {(2, 0), (0, 2), (-2, 0), (0, -2)}


def test_classification_stable_under_negation_and_theta():
    datum = build_root_datum(A1A1)
    inv = InvolutionData([[0, 1], [1, 0]])
    cls = classify_roots(datum, inv)
    for bucket in (cls.imaginary_compact, cls.imaginary_noncompact, cls.real, cls.complex_):
        assert {wneg(r) for r in bucket} == set(bucket)
        assert {inv.act(r) for r in bucket} == set(bucket)


def test_involution_must_permute_roots():
    datum = build_root_datum(A2)
    with pytest.raises(ValueError, match="permute"):
        classify_roots(datum, InvolutionData([[1, 0], [0, -1]]))


def test_involution_must_square_to_identity():
    with pytest.raises(ValueError):
        InvolutionData([[1, 1], [0, 1]])


def test_compact_marks_must_be_imaginary():
    datum = build_root_datum(A1)
    with pytest.raises(ValueError, match="marks"):
        classify_roots(datum, InvolutionData([[-1]], compact=[(2,)]))


def test_dominant_weights_up_to_height():
    a1 = build_root_datum(A1)
    # all dominant root-lattice weights of height <= bound, bound inclusive
    assert dominant_weights_up_to_height(a1, 0) == [(0,)]
    assert dominant_weights_up_to_height(a1, 2) == [(0,), (2,), (4,)]
    a2 = build_root_datum(A2)
    assert dominant_weights_up_to_height(a2, 2) == [(0, 0), (1, 1)]
    for w in dominant_weights_up_to_height(a2, 5):
        assert a2.is_dominant(w)
        assert a2.height(w) <= 5


def test_dominant_rep_and_orbit():
    datum = build_root_datum(A2)
    orbit = datum.weyl_orbit((1, 0))
    assert len(orbit) == 3
    for w in orbit:
        assert datum.dominant_rep(w) == (1, 0)


def test_reductive_datum_gl2():
    gl2 = reductive_root_datum(2, [(1, -1)], [(1, -1)])
    assert gl2.positive_roots == ((1, -1),)
    assert len(gl2.weyl_group()) == 2
    assert gl2.is_dominant((3, 1)) and not gl2.is_dominant((1, 3))
    # invariant form: the root has squared length 2, the center is Euclidean
    assert gl2.inner((1, -1), (1, -1)) == 2
    assert gl2.inner((1, 1), (1, 1)) == 2
    assert gl2.inner((1, 1), (1, -1)) == 0


def test_torus_datum():
    t = torus_datum(2)
    assert t.positive_roots == ()
    assert t.is_dominant((-5, 3))
    assert len(t.weyl_group()) == 1
    assert t.inner((1, 2), (3, 4)) == 11


def test_weyl_dimension():
    a2 = build_root_datum(A2)
    assert a2.weyl_dimension((0, 0)) == 1
    assert a2.weyl_dimension((1, 0)) == 3
    assert a2.weyl_dimension((1, 1)) == 8
    b2 = build_root_datum(B2)
    assert b2.weyl_dimension((1, 0)) == 4
    assert b2.weyl_dimension((0, 1)) == 5
    assert b2.weyl_dimension((2, 0)) == 10


def test_root_coords_int():
    a2 = build_root_datum(A2)
    assert a2.root_coords_int((1, 1)) == (1, 1)
    assert a2.root_coords_int((2, -1)) == (1, 0)
    assert a2.root_coords_int((1, 0)) is None  # fundamental weight, not in root lattice
    assert a2.root_coords_int((0, 0)) == (0, 0)
