"""Ground-truth routes: matching degrees, exhaustive sweeps, the catalog."""

import pytest
from hypothesis import given, settings

from bergesat.checker import is_saturated
from bergesat.hypercore import berge_degree, incidence_index, make
from bergesat.oracle import (
    berge_degree_matching,
    enumerate_link_catalog,
    exhaustive_spectrum,
    merge_spectrum_results,
    sat_ex_observed,
)

from conftest import small_3graphs


@settings(max_examples=150, deadline=None)
@given(small_3graphs())
def test_matching_route_equals_formula_route(g):
    idx = incidence_index(g)
    for v in range(g.vertex_count):
        assert berge_degree_matching(g, v) == berge_degree(g, v, idx)


def test_single_triple_baseline():
    res = exhaustive_spectrum(3, 2)
    assert res.realizable == (1,)
    assert res.sat_observed == res.ex_observed == 1


def test_unique_extremal_witness_at_five():
    res = exhaustive_spectrum(5, 5)
    assert res.realizable == (10,)
    assert res.counts[10] == 1
    g = res.witnesses[10]
    assert len(g.edges) == 10 and g.vertex_count == 5
    assert is_saturated(g, 5).is_saturated


def test_observed_range_at_four():
    assert sat_ex_observed(5, 4) == (4, 5)


def test_all_witnesses_reverify():
    for n in (4, 5):
        for ell in (2, 3, 4, 5):
            res = exhaustive_spectrum(n, ell)
            for m, g in res.witnesses.items():
                rep = is_saturated(g, ell)
                assert rep.is_free and rep.is_saturated
                assert len(g.edges) == m


def test_sharded_sweep_merges_to_the_plain_answer():
    plain = exhaustive_spectrum(6, 4)
    parts = [exhaustive_spectrum(6, 4, shards=4, shard=i) for i in range(4)]
    merged = merge_spectrum_results(parts)
    assert merged.realizable == plain.realizable
    assert merged.counts == plain.counts
    for m in plain.realizable:
        assert is_saturated(merged.witnesses[m], 4).is_saturated


def test_large_n_guard():
    with pytest.raises(ValueError):
        exhaustive_spectrum(7, 3)


def test_merge_rejects_mixed_parameters():
    a = exhaustive_spectrum(5, 3)
    b = exhaustive_spectrum(5, 4)
    with pytest.raises(ValueError):
        merge_spectrum_results([a, b])


def test_catalog_strata_and_bounds():
    rep = enumerate_link_catalog()
    sizes = {s: len(v) for s, v in rep.strata.items()}
    assert sizes == {8: 1, 7: 1, 6: 4, 5: 5}
    assert rep.published_bounds == (18, 15, 15, 14, 12, 12, 9, 12, 9, 12, 9)
    # the recomputed bound disagrees on exactly one row
    assert rep.discrepancies == ("K2+K1,3",)
    i = rep.row_names.index("K2+K1,3")
    assert rep.computed_bounds[i] == 12
    for j, name in enumerate(rep.row_names):
        if name != "K2+K1,3":
            assert rep.computed_bounds[j] == rep.published_bounds[j]


def test_catalog_row_bound_follows_from_the_degree_profile():
    # the disputed row: degree profile (1,1,1,1,1,3) has five leaves,
    # no degree-2 and no degree-4 vertex, so the structural count
    # 6 - |E| + 2 L1 + L2 + 2 L4 lands on 12
    rep = enumerate_link_catalog()
    i = rep.row_names.index("K2+K1,3")
    c = [c for c in rep.classes if c.name == "K2+K1,3"][0]
    assert c.degrees == (1, 1, 1, 1, 1, 3)
    l1 = sum(1 for d in c.degrees if d == 1)
    l2 = sum(1 for d in c.degrees if d == 2)
    l4 = sum(1 for d in c.degrees if d == 4)
    assert (l1, l2, l4) == (5, 0, 0)
    assert rep.computed_bounds[i] == 6 - c.edge_count + 2 * l1 + l2 + 2 * l4 == 12


def test_matching_route_on_a_multibranch_link():
    # two triangles through v force a matching argument, not a greedy one
    g = make(
        7,
        [(0, 1, 2), (0, 2, 3), (0, 1, 3), (0, 4, 5), (0, 5, 6), (0, 4, 6)],
    )
    assert berge_degree_matching(g, 0) == berge_degree(g, 0)
    assert berge_degree(g, 0) == 6
