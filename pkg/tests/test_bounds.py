import pytest

from lomlab.bounds import (
    BoundValue,
    cyclic_facets,
    h0_bound,
    hd1_bound,
    r_bound,
    stacked_facets,
)

from oracles import gale_evenness_facets


# ---------------------------------------------------------------------------
# Vertex-count table.


def test_h0_examples():
    assert h0_bound(9, 2) == BoundValue("exact", 5, 5, "d=2,n>=5")
    assert h0_bound(7, 3).kind == "upper"
    assert h0_bound(7, 3).upper == 7
    assert h0_bound(9, 4) == BoundValue("exact", 9, 9, "n<=2d+1")
    assert h0_bound(3, 1) == BoundValue("exact", 2, 2, "d=1")


def test_h0_l_clause_arithmetic():
    value = h0_bound(22, 4)
    assert value.kind == "upper"
    assert value.upper == 15
    assert value.clause == "l=5"


def test_h0_cascade_windows():
    assert h0_bound(11, 4).upper == 10  # first cascade clause
    assert h0_bound(12, 4).upper == 10  # second refines to n - 2
    assert h0_bound(13, 4).upper == 10  # l = 1
    assert h0_bound(13, 4).clause == "l=1"


def test_h0_open_gap():
    assert h0_bound(10, 4).kind == "open"
    assert h0_bound(1, 1).kind == "open"


def test_h0_rejects_bad_input():
    with pytest.raises(ValueError):
        h0_bound(0, 2)
    with pytest.raises(ValueError):
        h0_bound(5, 0)


# ---------------------------------------------------------------------------
# Facet-count table.


def test_hd1_examples():
    assert hd1_bound(5, 2) == BoundValue("exact", 5, 5, "d=2,n>=5")
    v = hd1_bound(7, 3)
    assert v.lower == 10 and v.upper == 10 and v.kind == "exact"
    assert hd1_bound(8, 3).kind == "upper"
    assert hd1_bound(8, 3).upper == 10
    assert hd1_bound(2, 1) == BoundValue("exact", 2, 2, "d=1")


def test_hd1_lower_bound_only_granted_up_to_2d_plus_1():
    v = hd1_bound(9, 4)  # n = 2d + 1
    assert v.kind == "range"
    assert v.lower == stacked_facets(9, 4)
    assert v.upper == cyclic_facets(9, 4)
    assert hd1_bound(12, 4).lower is None


def test_hd1_cascade_uses_shifted_cyclic_counts():
    assert hd1_bound(11, 4).upper == cyclic_facets(10, 4)
    assert hd1_bound(12, 4).upper == cyclic_facets(10, 4)
    assert hd1_bound(22, 4).upper == cyclic_facets(15, 4)


def test_sandwich_never_inverts():
    for d in range(2, 7):
        for n in range(d + 2, 21):
            v = hd1_bound(n, d)
            if v.lower is not None and v.upper is not None:
                assert v.lower <= v.upper, (n, d, v)


def test_clause_totality_on_grid():
    kinds = {"exact", "upper", "lower", "range", "open"}
    for d in range(1, 7):
        for n in range(1, 21):
            assert h0_bound(n, d).kind in kinds
            assert hd1_bound(n, d).kind in kinds


# ---------------------------------------------------------------------------
# Facet counters.


def test_cyclic_facets_spot_values():
    assert cyclic_facets(6, 3) == 8
    assert cyclic_facets(7, 4) == 14
    assert cyclic_facets(5, 4) == 5  # simplex
    assert cyclic_facets(6, 2) == 6  # polygon


def test_cyclic_facets_matches_gale_evenness():
    for d in range(2, 7):
        for n in range(d + 1, 13):
            assert cyclic_facets(n, d) == gale_evenness_facets(n, d), (n, d)


def test_cyclic_facets_monotone_in_n():
    for d in range(1, 7):
        values = [cyclic_facets(n, d) for n in range(d + 1, 16)]
        assert values == sorted(values)


def test_cyclic_facets_rejects_degenerate():
    with pytest.raises(ValueError):
        cyclic_facets(3, 3)


def test_stacked_facets_values():
    assert stacked_facets(5, 4) == 5  # simplex: n = d + 1
    assert stacked_facets(5, 3) == 6
    assert stacked_facets(6, 2) == 6  # polygon
    with pytest.raises(ValueError):
        stacked_facets(3, 1)


# ---------------------------------------------------------------------------
# Radon-count table.


def test_r_bound_small_values():
    assert r_bound(3, 5) == BoundValue("exact", 1, 1, "n=d+2")
    assert r_bound(2, 5).upper == 2
    assert r_bound(2, 6) == BoundValue("exact", 5, 5, "n=d+4")


def test_r_bound_d_plus_5_keeps_printed_value_and_flags_duality():
    v = r_bound(1, 6)
    assert v.kind == "upper" and v.upper == 10
    assert v.note is not None and "8" in v.note


def test_r_bound_general_rows_use_dual_cyclic_counts():
    v = r_bound(2, 8)  # n >= 2d + 3, dual dimension 4
    assert v.kind == "upper"
    assert v.upper == cyclic_facets(8, 4)


def test_r_bound_rejects_small_n():
    with pytest.raises(ValueError):
        r_bound(3, 4)


def test_bound_value_validation():
    with pytest.raises(ValueError):
        BoundValue("exact", 1, 2, "x")
    with pytest.raises(ValueError):
        BoundValue("range", 3, 2, "x")
    with pytest.raises(ValueError):
        BoundValue("sideways", 1, 1, "x")
    with pytest.raises(ValueError):
        _ = BoundValue("range", 1, 2, "x").value
