"""The nine acceptance gates, each printing one live pass/fail line.

Every criterion is timed cold from this module (it collects first) and
asserts its own runtime envelope, so a pathological slowdown fails the
gate rather than hiding in the harness.
"""

import time
from itertools import combinations

import numpy as np

from bergesat.assembler import (
    BY_THEOREM,
    OK,
    build_H1,
    build_H2,
    build_spectrum_witness,
    ex_formula,
    sat_formula,
    small_star_spectrum,
)
from bergesat.checker import (
    aggressive_sufficient,
    classify_link_5,
    degree6_component_claim,
    is_saturated,
)
from bergesat.gadgets import (
    broken_lantern,
    clique3,
    gadget_D,
    gadget_Q,
    gadget_R,
    l4_sparse,
    lantern,
    sun,
)
from bergesat.hypercore import Hypergraph3, disjoint_union, incidence_index, link
from bergesat.oracle import (
    berge_degree_matching,
    enumerate_link_catalog,
    exhaustive_spectrum,
)
from bergesat.checker import _links_and_degrees


def _report(capsys, name, started, ok, note=""):
    elapsed = time.perf_counter() - started
    tail = f" {note}" if note else ""
    with capsys.disabled():
        print(f"\n{name}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s){tail}")


def _certify(g, ell):
    rep = is_saturated(g, ell)
    assert rep.is_free, f"not free at ell={ell}"
    assert rep.is_saturated, f"unsaturated at ell={ell}: {rep.counterexample}"
    return rep


_produced_ell5 = {}


def _remember(tag, g):
    _produced_ell5[tag] = g


def test_criterion_1_gadget_certification(capsys):
    started = time.perf_counter()
    ok = False
    try:
        table = (
            ("lantern", lantern(5), 15, 23),
            ("sun", sun(5), 6, 8),
            ("clique5", clique3(5), 5, 10),
            ("broken", broken_lantern(), 10, 15),
            ("D", gadget_D(), 10, 14),
            ("Q", gadget_Q(), 20, 29),
            ("R", gadget_R(), 15, 21),
            ("sun+K4", disjoint_union(sun(5), clique3(4)), 10, 12),
        )
        for name, g, nv, ne in table:
            assert (g.vertex_count, len(g.edges)) == (nv, ne), name
            _certify(g, 5)
            _remember(f"gadget:{name}", g)
        two = disjoint_union(broken_lantern(), broken_lantern())
        _certify(two, 5)
        _remember("gadget:2B", two)
        for g in (lantern(5), sun(5), clique3(5)):
            assert aggressive_sufficient(g, 5)
        h1 = build_H1(60, 5, seed=0)
        h2 = build_H2(60, 5, seed=0)
        assert aggressive_sufficient(h1, 5)
        assert aggressive_sufficient(h2, 5)
        _remember("component:H1", h1)
        _remember("component:H2", h2)
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"budget 1s exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(capsys, "criterion 1 (gadget certification)", started, ok)


def test_criterion_2_degree_oracle_equivalence(capsys):
    started = time.perf_counter()
    ok = False
    try:
        rng = np.random.default_rng(2026)
        vertices_checked = 0
        for _ in range(10_000):
            n = int(rng.integers(4, 11))
            pool = list(combinations(range(n), 3))
            m = int(rng.integers(0, min(25, len(pool)) + 1))
            take = rng.choice(len(pool), size=m, replace=False)
            g = Hypergraph3(n, tuple(sorted(pool[j] for j in take)))
            _, _, formula = _links_and_degrees(g)
            for v in range(n):
                assert berge_degree_matching(g, v) == formula[v], (g.edges, v)
            vertices_checked += n
        elapsed = time.perf_counter() - started
        assert elapsed < 30.0, f"budget 30s exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(
            capsys, "criterion 2 (degree oracle equivalence)", started, ok,
            note="10000 graphs",
        )


def test_criterion_3_lower_range_coverage(capsys):
    started = time.perf_counter()
    ok = False
    try:
        assert sat_formula(45, 5)[0] == 57
        assert 5 * 4 * 45 // 12 == 75
        for m in range(57, 76):
            verdict, g = build_spectrum_witness(45, 5, m, seed=0)
            assert verdict.status == OK, (m, verdict.detail)
            assert g.vertex_count == 45 and len(g.edges) == m
            _certify(g, 5)
            _remember(f"lower45:{m}", g)
        elapsed = time.perf_counter() - started
        assert elapsed < 120.0, f"budget 2min exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(
            capsys, "criterion 3 (lower range n=45)", started, ok,
            note="m in [57, 75]",
        )


def test_criterion_4_exact_upper_coverage(capsys):
    started = time.perf_counter()
    ok = False
    try:
        for n in (45, 60):
            top = 2 * n
            for m in list(range(n * 5 // 3, top - 4)) + [top]:
                verdict, g = build_spectrum_witness(n, 5, m, seed=0)
                assert verdict.status == OK, (n, m, verdict.detail)
                assert g.vertex_count == n and len(g.edges) == m
                _certify(g, 5)
                _remember(f"exact{n}:{m}", g)
            for m in range(top - 4, top):
                verdict, g = build_spectrum_witness(n, 5, m, seed=0)
                assert verdict.status == BY_THEOREM, (n, m, verdict.status)
                assert g is None
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"budget 1min exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(
            capsys, "criterion 4 (exact upper range n=45, 60)", started, ok,
        )


def test_criterion_5_ell6_spot_checks(capsys):
    started = time.perf_counter()
    ok = False
    note = ""
    try:
        lower_ms = (196, 218, 248, 270, 300)
        for m in lower_ms:
            verdict, g = build_spectrum_witness(120, 6, m, seed=0)
            assert verdict.status == OK, (m, verdict.detail)
            assert g.vertex_count == 120 and len(g.edges) == m
            _certify(g, 6)
        n0 = 72
        assert n0 % 18 == 0
        upper_ms = (25590, 25589, 25520)
        for m in upper_ms:
            verdict, g = build_spectrum_witness(10008, 6, m, seed=0, n0=n0)
            assert verdict.status == OK, (m, verdict.detail)
            assert g.vertex_count == 10008 and len(g.edges) == m
            _certify(g, 6)
        note = f"5 lower at n=120, 3 upper at n=10008 (n0={n0})"
        elapsed = time.perf_counter() - started
        assert elapsed < 600.0, f"budget 10min exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(capsys, "criterion 5 (ell=6 spot checks)", started, ok, note)


def test_criterion_6_link_catalog_table(capsys):
    started = time.perf_counter()
    ok = False
    note = ""
    try:
        rep = enumerate_link_catalog()
        sizes = {s: len(v) for s, v in rep.strata.items()}
        assert sizes == {8: 1, 7: 1, 6: 4, 5: 5}
        assert rep.published_bounds == (18, 15, 15, 14, 12, 12, 9, 12, 9, 12, 9)
        assert rep.computed_bounds == (18, 15, 15, 12, 12, 12, 9, 12, 9, 12, 9)
        assert len(rep.row_names) == 11
        # zero extra classes is enforced inside the enumeration; the one
        # recomputation mismatch is a documented erratum, surfaced here
        assert rep.discrepancies == ("K2+K1,3",)
        note = "strata 1/1/4/5; recomputed bound differs on K2+K1,3 (12 vs 14)"
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0, f"budget 1min exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(capsys, "criterion 6 (link catalog and bounds)", started, ok, note)


def test_criterion_7_exhaustive_tiny_ground_truth(capsys):
    started = time.perf_counter()
    ok = False
    deviations = []
    try:
        res = exhaustive_spectrum(5, 5)
        assert res.realizable == (10,)
        assert res.counts[10] == 1
        assert sorted(res.witnesses[10].edges) == sorted(
            combinations(range(5), 3)
        )
        for n in (3, 4, 5, 6):
            for ell in (2, 3, 4, 5):
                sweep = exhaustive_spectrum(n, ell)
                for m, g in sweep.witnesses.items():
                    rep = is_saturated(g, ell)
                    assert rep.is_free and rep.is_saturated, (n, ell, m)
                    assert len(g.edges) == m
                if sweep.realizable and ell >= 2:
                    pred = sat_formula(n, ell)[0]
                    if pred != sweep.sat_observed:
                        deviations.append(
                            f"sat({n},{ell}) formula {pred} observed {sweep.sat_observed}"
                        )
                    pred_ex = ex_formula(n, ell)[0]
                    if pred_ex != sweep.ex_observed:
                        deviations.append(
                            f"ex({n},{ell}) formula {pred_ex} observed {sweep.ex_observed}"
                        )
        elapsed = time.perf_counter() - started
        assert elapsed < 300.0, f"budget 5min exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        note = (
            f"{len(deviations)} small-n formula deviations logged, not asserted"
            if deviations
            else "no formula deviations"
        )
        _report(capsys, "criterion 7 (exhaustive tiny-n truth)", started, ok, note)


def test_criterion_8_small_star_spectra(capsys):
    started = time.perf_counter()
    ok = False
    try:
        for n in (30, 31, 32):
            assert sorted(small_star_spectrum(n, 2)) == [n // 3]
            four = small_star_spectrum(n, 4)
            assert sorted(four) == [n - 2, n - 1, n]
            for m, g in four.items():
                _certify(g, 4)
            # the middle witness is the sparse split construction
            direct = l4_sparse(n, seed=0)
            assert direct == four[n - 1]
            _certify(direct, 4)
            three = small_star_spectrum(n, 3)
            top = 2 * n // 3
            if n % 3 == 0:
                assert sorted(three) == [top - 1, top]
            elif n % 3 == 1:
                assert sorted(three) == [top]
            else:
                assert sorted(three) == [top - 1, top]
            for m, g in three.items():
                _certify(g, 3)
        elapsed = time.perf_counter() - started
        assert elapsed < 30.0, f"budget 30s exceeded: {elapsed:.2f}s"
        ok = True
    finally:
        _report(capsys, "criterion 8 (small-star spectra)", started, ok)


def test_criterion_9_structural_claims(capsys):
    started = time.perf_counter()
    ok = False
    note = ""
    try:
        # the component claim is defined on Berge-K_{1,5}-saturated input,
        # so it covers every saturated product of criteria 1-4; the ell=6
        # witnesses of criterion 5 sit outside its precondition
        assert _produced_ell5, "criteria 1-4 must run before this gate"
        graphs = dict(_produced_ell5)
        checked_claim = 0
        checked_links = 0
        for tag, g in graphs.items():
            rep = is_saturated(g, 5)
            assert rep.is_saturated, tag
            assert degree6_component_claim(g, rep), tag
            checked_claim += 1
            index = incidence_index(g)
            for v in range(g.vertex_count):
                if len(link(g, v, index).neighbors) >= 5:
                    assert classify_link_5(g, v) != "OTHER", (tag, v)
                    checked_links += 1
        note = f"{checked_claim} graphs, {checked_links} wide links"
        ok = True
    finally:
        _report(capsys, "criterion 9 (structural claims)", started, ok, note)
