"""Wedge class, Koszul identity, the product formula, dimension checks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilchar.catalog import load_catalog_config
from nilchar.ktheta import (
    Dims,
    RealFormConfig,
    SplitHypothesisError,
    dimension_check,
    koszul_check,
    symmetric_series,
    theta_cone_character,
    theta_cone_ktypes,
    wedge_class,
)
from nilchar.rootdata import InvolutionData, build_root_datum, torus_datum


def test_wedge_single_zero_weight():
    w = wedge_class([(0,)], 4)
    assert w.layers == [{(0,): 1}, {(0,): -1}, {}, {}, {}]


def test_wedge_empty_is_trivial():
    w = wedge_class([], 3, rank=1)
    assert w.layers == [{(0,): 1}, {}, {}, {}]


def test_wedge_three_weights():
    w = wedge_class([(-2,), (0,), (2,)], 4)
    assert w.layers[0] == {(0,): 1}
    assert w.layers[1] == {(-2,): -1, (0,): -1, (2,): -1}
    assert w.layers[2] == {(-2,): 1, (0,): 1, (2,): 1}
    assert w.layers[3] == {(0,): -1}
    assert w.layers[4] == {}


def test_wedge_vanishes_above_dimension():
    w = wedge_class([(1,), (-1,)], 5)
    assert all(not w.layers[n] for n in range(3, 6))


def test_symmetric_series_geometric():
    s = symmetric_series([(2,)], 3)
    assert s.layers == [{(0,): 1}, {(2,): 1}, {(4,): 1}, {(6,): 1}]


def test_koszul_examples():
    assert koszul_check([(0,)], 10).passed
    assert koszul_check([], 5, rank=1).passed
    assert koszul_check([(-2,), (0,), (2,)], 8).passed


def test_koszul_catalog_k_weights():
    for name in ("sl2-split", "sl3-split", "sp4-split", "sl2xsl2-swap"):
        cfg = load_catalog_config(name).real_form
        assert koszul_check(cfg.k_weights, 8, rank=cfg.k_torus_rank).passed, name


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-2, 2)), min_size=0, max_size=4),
    st.integers(0, 5),
)
def test_koszul_identity_any_multiset(weights, truncation):
    assert koszul_check(weights, truncation, rank=1).passed


def test_koszul_failure_reported():
    # A wrong symmetric factor shows up as a clean first-failure report.
    from nilchar.charring import GradedCharacter, graded_mul

    sym = symmetric_series([(2,)], 4)
    wedge = wedge_class([(1,)], 4)
    product = graded_mul(sym, wedge)
    trivial = GradedCharacter.trivial(1, 4)
    assert product != trivial  # mismatched multisets break the identity


SL2 = load_catalog_config("sl2-split").real_form


def test_theta_character_sl2():
    gc = theta_cone_character(SL2, 5)
    assert gc.layers[0] == {(0,): 1}
    for m in range(1, 6):
        assert gc.layers[m] == {(2 * m,): 1, (-2 * m,): 1}
    assert gc.masses() == [1, 2, 2, 2, 2, 2]


def test_theta_character_refuses_non_split():
    swap = load_catalog_config("sl2xsl2-swap").real_form
    with pytest.raises(SplitHypothesisError):
        theta_cone_character(swap, 3)
    gc = theta_cone_character(swap, 2, force=True)
    assert gc.layers[0] == {(0,): 1}


def test_theta_ktypes_sl2():
    series = theta_cone_ktypes(SL2, 3)
    assert series.layers[0] == {(0,): 1}
    assert series.layers[1] == {(2,): 1, (-2,): 1}


def test_theta_ktypes_sl3_dimensions():
    cfg = load_catalog_config("sl3-split").real_form
    series = theta_cone_ktypes(cfg, 4)
    gc = theta_cone_character(cfg, 4)
    for n in range(5):
        total = sum(c * cfg.k_datum.weyl_dimension(lam) for lam, c in series.layers[n].items())
        assert total == gc.mass(n)
        assert all(c > 0 for c in series.layers[n].values())


def test_kostant_rallis_multiplicity_one_sl2():
    N = 10
    gc = theta_cone_character(SL2, N)
    totals: dict = {}
    for layer in gc.layers:
        for w, c in layer.items():
            totals[w] = totals.get(w, 0) + c
    assert totals == {(2 * k,): 1 for k in range(-N, N + 1)}


def test_dimension_check_catalog():
    for name in ("sl2-split", "sl3-split", "sp4-split"):
        assert dimension_check(load_catalog_config(name).real_form).passed, name


def test_dimension_check_degenerate_torus():
    cfg = RealFormConfig(
        label="torus",
        g_datum=torus_datum(1),
        involution=InvolutionData([[-1]]),
        k_torus_rank=1,
        restriction=[[1]],
        k_weights=(),
        dims=Dims(dim_g=1, dim_k=0, dim_p=1, rank_split=1),
        split_mod_center=True,
    )
    assert dimension_check(cfg).passed
    gc = theta_cone_character(cfg, 3)
    assert gc.masses() == [1, 0, 0, 0]


def test_dimension_check_rejects_bad_table():
    a1 = build_root_datum([[2]])
    bad = RealFormConfig(
        label="bad",
        g_datum=a1,
        involution=InvolutionData([[-1]]),
        k_torus_rank=1,
        restriction=[[1]],
        k_weights=[(0,), (2,), (-2,)],
        dims=Dims(dim_g=5, dim_k=3, dim_p=2, rank_split=1),
        split_mod_center=True,
    )
    result = dimension_check(bad)
    assert not result.passed
    assert "FAIL" in result.details


def test_config_validation_errors():
    a1 = build_root_datum([[2]])
    with pytest.raises(ValueError, match="dim k"):
        RealFormConfig(
            label="x", g_datum=a1, involution=InvolutionData([[-1]]),
            k_torus_rank=1, restriction=[[1]], k_weights=[(0,), (0,)],
            dims=Dims(3, 1, 2, 1), split_mod_center=True,
        )
    with pytest.raises(ValueError, match="negation"):
        RealFormConfig(
            label="x", g_datum=a1, involution=InvolutionData([[-1]]),
            k_torus_rank=1, restriction=[[1]], k_weights=[(2,)],
            dims=Dims(3, 1, 2, 1), split_mod_center=True,
        )
    with pytest.raises(ValueError, match="matrix"):
        RealFormConfig(
            label="x", g_datum=a1, involution=InvolutionData([[-1]]),
            k_torus_rank=2, restriction=[[1]], k_weights=[(0, 0), (1, 1), (-1, -1)],
            dims=Dims(3, 3, 0, 1), split_mod_center=True,
        )
