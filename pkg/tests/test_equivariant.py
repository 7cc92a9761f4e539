"""Equivariant fixtures, GKM graphs, and Atiyah-Bredon reports."""

import math

import pytest

from syzal import (
    GkmGraph,
    InputError,
    RingSpec,
    ab_report,
    direct_sum,
    ext,
    fingerprint,
    gkm_module,
    hilbert_series,
    homogeneous_space,
    hypercube_graph,
    is_zero_module,
    maximal_ideal,
    mutant_hht,
    mutant_ht,
    parse_gkm,
    parse_polynomial,
    residue_field,
    ring_module,
    shift,
    syzygy_order,
    toric_ext_expected,
    toric_hht,
    toric_ht,
    toric_ht_expected,
    toric_u,
    toric_v,
    toric_v_expanded,
)


# ---------- toric fixture ----------

def test_toric_v_closed_form_matches_expansion():
    for r in (1, 2, 3):
        ring = RingSpec(r, 2)
        assert toric_v(ring).terms == toric_v_expanded(ring).terms


def test_toric_u_is_top_basis_element():
    for r in (1, 2, 3):
        ring = RingSpec(r, 2)
        U = toric_u(ring)
        assert U.terms == {(2 ** r - 1, (0,) * r): 1}
        assert U.degree() == 2 * r
        assert toric_v(ring).degree() == 2 * r


def test_toric_ht_fingerprint_matches_split_form():
    for r in (2, 3):
        assert fingerprint(toric_ht(r)) == fingerprint(toric_ht_expected(r))


def test_toric_ht_rank_one_case():
    # for r = 1 both sides collapse to the residue field
    assert fingerprint(toric_ht(1)) == fingerprint(residue_field(RingSpec(1, 2)))
    assert fingerprint(toric_ht_expected(1)) == fingerprint(toric_ht(1))


def test_toric_ht_input_errors():
    with pytest.raises(InputError):
        toric_ht(0)
    with pytest.raises(InputError):
        toric_hht(0)


def test_toric_ext_displays():
    for r in (1, 2, 3):
        M = toric_ht(r)
        for j in range(r + 1):
            assert fingerprint(ext(M, j)) == fingerprint(toric_ext_expected(r, j)), (r, j)


def test_toric_syzygy_orders():
    assert syzygy_order(toric_ht(1)) == 0
    assert syzygy_order(toric_ht(2)) == 1
    assert syzygy_order(toric_ht(3)) == 2


def test_toric_ab_reports():
    rep1 = ab_report(toric_hht(1), toric_ht(1))
    assert not rep1.augmented
    assert rep1.nonzero_positions() == [-1, 1]
    assert rep1.exact_through == -2

    rep2 = ab_report(toric_hht(2), toric_ht(2))
    assert rep2.augmented
    assert rep2.aug_minus1.is_zero()
    assert rep2.aug_zero == hilbert_series(residue_field(RingSpec(2, 2)))
    assert rep2.nonzero_positions() == [0, 2]
    assert rep2.exact_through == -1

    rep3 = ab_report(toric_hht(3), toric_ht(3))
    assert rep3.augmented
    assert rep3.aug_zero.is_zero()
    assert rep3.nonzero_positions() == [1, 3]
    assert rep3.exact_through == 0
    # failure modules at the first and last break, per the toric pattern
    k3 = residue_field(RingSpec(3, 2))
    assert rep3.positions[1] == fingerprint(k3)
    assert rep3.positions[3] == fingerprint(shift(k3, -1))


def test_toric_ab_position_values_r2():
    rep = ab_report(toric_hht(2), toric_ht(2))
    R2 = RingSpec(2, 2)
    assert rep.positions[0] == fingerprint(
        direct_sum([ring_module(R2), ring_module(R2)]))
    assert rep.positions[1].is_zero()
    assert rep.positions[2] == fingerprint(shift(residue_field(R2), -1))


# ---------- mutant fixture ----------

def test_mutant_poincare_self_duality():
    # shifting H_T down by the formal dimension 7 reproduces H^T
    assert fingerprint(shift(mutant_ht(), -7)) == fingerprint(mutant_hht())


def test_mutant_syzygy_order():
    assert syzygy_order(mutant_ht()) == 1


def test_mutant_ext_of_homology():
    R3 = RingSpec(3, 2)
    hht = mutant_hht()
    assert fingerprint(ext(hht, 0)) == fingerprint(direct_sum([
        ring_module(R3),
        shift(ring_module(R3), 1),
        shift(ring_module(R3), 6),
        shift(ring_module(R3), 7),
    ]))
    assert is_zero_module(ext(hht, 1))
    assert fingerprint(ext(hht, 2)) == fingerprint(residue_field(R3))
    assert is_zero_module(ext(hht, 3))


def test_mutant_ab_report():
    rep = ab_report(mutant_hht(), mutant_ht())
    assert rep.syzygy_order_ht == 1
    assert rep.augmented
    assert rep.aug_zero == hilbert_series(shift(residue_field(RingSpec(3, 2)), 1))
    assert rep.nonzero_positions() == [0, 2]
    assert rep.exact_through == -1


# ---------- homogeneous spaces ----------

def test_homogeneous_space_quotient_ring_shape():
    for r in (2, 3):
        for i in range(r + 1):
            ht, hht = homogeneous_space(r, i)
            assert ht.F0.degrees == (0,)
            assert ht.relations.source.rank == i
            assert hilbert_series(hht) == hilbert_series(ht).shift(-i)


def test_homogeneous_space_free_case():
    ht, hht = homogeneous_space(3, 0)
    assert fingerprint(ht) == fingerprint(ring_module(RingSpec(3, 2)))
    assert syzygy_order(ht) == 3
    assert ab_report(hht, ht).nonzero_positions() == []


def test_homogeneous_space_ext_concentration():
    r = 3
    for i in (1, 2):
        ht, hht = homogeneous_space(r, i)
        for j in range(r + 1):
            E = ext(ht, j)
            if j == i:
                assert fingerprint(E) == fingerprint(shift(ht, -2 * i)), (i, j)
            else:
                assert is_zero_module(E), (i, j)


def test_homogeneous_space_depth_dim():
    from syzal import depth_dim, is_cohen_macaulay
    for i in (0, 1, 2):
        ht, _ = homogeneous_space(3, i)
        assert depth_dim(ht) == (3 - i, 3 - i)
        assert is_cohen_macaulay(ht)


def test_homogeneous_space_ab_reports():
    for i in (1, 2):
        ht, hht = homogeneous_space(3, i)
        rep = ab_report(hht, ht)
        assert rep.syzygy_order_ht == 0
        assert rep.nonzero_positions() == [-1, i]


def test_homogeneous_space_range_errors():
    with pytest.raises(InputError):
        homogeneous_space(2, 3)
    with pytest.raises(InputError):
        homogeneous_space(2, -1)
    with pytest.raises(InputError):
        homogeneous_space(-1, 0)


# ---------- GKM graphs ----------

def test_gkm_point_gives_ring():
    ring = RingSpec(1, 2)
    g = GkmGraph(ring, ["p"], [])
    assert fingerprint(gkm_module(g)) == fingerprint(ring_module(ring))


def test_gkm_two_sphere():
    ring = RingSpec(1, 2)
    g = GkmGraph(ring, ["n", "s"], [("n", "s", parse_polynomial("t1", ring))])
    M = gkm_module(g)
    assert fingerprint(M) == fingerprint(direct_sum(
        [ring_module(ring), shift(ring_module(ring), 2)]))


def test_gkm_hypercube_is_free_of_binomial_ranks():
    for r in (1, 2):
        M = gkm_module(hypercube_graph(r))
        parts = []
        for k in range(r + 1):
            parts.extend([shift(ring_module(RingSpec(r, 2)), 2 * k)]
                         * math.comb(r, k))
        assert fingerprint(M) == fingerprint(direct_sum(parts))


def test_gkm_hypercube_r3_hilbert_numerator():
    M = gkm_module(hypercube_graph(3))
    assert hilbert_series(M).to_json() == {
        "numerator": [[0, 1], [2, 3], [4, 3], [6, 1]],
        "denom_pow": 3,
        "var_degree": 2,
    }


def test_gkm_hypercube_input_error():
    with pytest.raises(InputError):
        hypercube_graph(0)


def test_parse_gkm_roundtrip_with_comments():
    ring = RingSpec(2, 2)
    text = """
# a square with mixed weights
vertex a
vertex b
vertex c

edge a b t1
edge b c -t2
"""
    g = parse_gkm(text, ring)
    assert g.vertices == ("a", "b", "c")
    # sign normalization flips -t2 to t2
    assert [str(w) for (_u, _v, w) in g.edges] == ["t1", "t2"]
    assert g.vertex_index("c") == 2


def test_parse_gkm_errors():
    ring = RingSpec(2, 2)
    with pytest.raises(InputError):
        parse_gkm("vertx a", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a\nvertex b\nedge a c t1", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a\nvertex a", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a\nvertex b\nedge a a t1", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a\nvertex b\nedge a b t1^2", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a\nvertex b\nedge a b 0", ring)
    with pytest.raises(InputError):
        parse_gkm("vertex a b", ring)


def test_gkm_module_ring_mismatch():
    g = hypercube_graph(2)
    with pytest.raises(InputError):
        gkm_module(g, RingSpec(3, 2))


# ---------- Atiyah-Bredon report semantics ----------

def test_ab_report_without_ht_is_raw():
    rep = ab_report(mutant_hht())
    assert rep.syzygy_order_ht is None
    assert not rep.augmented
    assert rep.exact_through is None
    assert rep.nonzero_positions() == [0, 2]


def test_ab_report_ring_mismatch():
    with pytest.raises(InputError):
        ab_report(toric_hht(2), toric_ht(3))


def test_ab_report_negativity_guard():
    # a free ht cannot embed in Hom(k, R) = 0: the report must refuse
    ring = RingSpec(2, 2)
    with pytest.raises(InputError):
        ab_report(residue_field(ring), ring_module(ring))


def test_ab_report_json_and_render():
    rep = ab_report(toric_hht(2), toric_ht(2))
    data = rep.to_json()
    assert data["r"] == 2
    assert data["syzygy_order"] == 1
    assert data["augmented"] is True
    assert data["nonzero_positions"] == [0, 2]
    assert [p["position"] for p in data["positions"]] == [0, 1, 2]
    text = rep.render()
    assert "augmented position -1" in text
    assert "augmented position  0" in text
    assert "syzygy order of H_T: 1" in text

    raw = ab_report(toric_hht(2))
    assert "augmented" not in raw.render()


def test_ab_first_failure_matches_syzygy_order_on_fixtures():
    cases = [
        (toric_hht(1), toric_ht(1)),
        (toric_hht(2), toric_ht(2)),
        (toric_hht(3), toric_ht(3)),
        (mutant_hht(), mutant_ht()),
        homogeneous_space(3, 1)[::-1],
        homogeneous_space(3, 2)[::-1],
    ]
    for hht, ht in cases:
        rep = ab_report(hht, ht)
        nz = rep.nonzero_positions()
        assert nz is not None
        if nz:
            assert nz[0] == rep.syzygy_order_ht - 1
        # no two adjacent failure positions
        assert all(b - a >= 2 for a, b in zip(nz, nz[1:]))


def test_ab_report_of_shifted_input_keeps_positions():
    # shifting hht moves Hilbert data but not which positions vanish
    rep = ab_report(shift(mutant_hht(), 4))
    assert rep.nonzero_positions() == [0, 2]
