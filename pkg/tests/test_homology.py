"""Tests for rank-one homology, certification, and the contracting homotopy."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superverma.borels import all_borels, star
from superverma.homology import (
    CERTIFIED,
    INCONCLUSIVE,
    REFUTED,
    ContractionComplex,
    certify_verma_iso,
    certify_zero,
    contraction_check,
    ds_borel_label,
    ds_homology,
    ds_tensor_factor,
    gl11_ds_table,
    ses_supercharacter_check,
    induced_action,
    induced_bracket_check,
    lift_unit,
    projected_ds_census,
    surviving_indices,
)
from superverma.modules import (
    Realization,
    bg_module,
    bg_realization,
    gl11_simple_datum,
    parabolic_IJ_realization,
    verma_realization,
)
from superverma.superalgebra import root_weight
from superverma.weights import add_weights, par, pr_alpha, to_tuple

E13 = (1, 3)


def ds13(m: Realization):
    return ds_homology(m, E13)


def census_table(result) -> dict:
    return {w: d for w, d in result.dim_table.items() if d != (0, 0)}


# ---------------------------------------------------------------------------
# The rank-one gl(1|1) table, at truncation depth 8.


def test_gl11_simple_module_one_class():
    for a in (-1, 0, 2, 3):
        r = ds_homology(Realization(gl11_simple_datum(a), 8), (1, 2))
        expected = {(a, -a): (1, 0) if a % 2 == 0 else (0, 1)}
        assert census_table(r) == expected


def test_gl11_standard_verma_two_classes():
    # matched pair: one class at the top weight, one a step below, parities split
    r = ds_homology(verma_realization(1, (), (2, 2), 8), (1, 2))
    assert census_table(r) == {(2, -2): (1, 0), (1, -1): (0, 1)}
    r = ds_homology(verma_realization(1, (), (-1, -1), 8), (1, 2))
    assert census_table(r) == {(-1, 1): (0, 1), (-2, 2): (1, 0)}


def test_gl11_twisted_verma_vanishes():
    # highest weight (a, -a) for the opposite Borel: tuple (a+1, a+1)
    for a in (0, 2):
        r = ds_homology(verma_realization(1, (1,), (a + 1, a + 1), 8), (1, 2))
        assert census_table(r) == {}


def test_gl11_typical_verma_vanishes():
    for label, t in [((), (2, 0)), ((), (0, 3)), ((1,), (1, 3))]:
        r = ds_homology(verma_realization(1, label, t, 8), (1, 2))
        assert census_table(r) == {}


def test_gl11_realizations_match_closed_table():
    for a in (-2, 0, 1, 2):
        r = ds_homology(verma_realization(1, (), (a, a), 8), (1, 2))
        assert census_table(r) == gl11_ds_table("verma_eps", a, a)
        s = ds_homology(Realization(gl11_simple_datum(a), 8), (1, 2))
        assert census_table(s) == gl11_ds_table("simple", a, a)


def test_gl11_closed_table_edge_cases():
    assert gl11_ds_table("verma_eps", 1, 0) == {}
    assert gl11_ds_table("verma_delta", 2, 2) == {}
    assert gl11_ds_table("verma_delta", 1, 0) == {}
    with pytest.raises(ValueError):
        gl11_ds_table("simple", 1, 0)
    with pytest.raises(ValueError):
        gl11_ds_table("projective", 1, 1)


# ---------------------------------------------------------------------------
# Basic structure of the homology result.


def test_root_vector_squares_to_zero_on_module():
    m = verma_realization(2, (1,), (0, 1, 0, 1), 4)
    rw = root_weight(2, E13)
    for mu in m.weight_spaces:
        first = add_weights(mu, rw)
        second = add_weights(first, rw)
        if first not in m.weight_spaces or second not in m.weight_spaces:
            continue
        composed = m.unit_matrix(E13, first) @ m.unit_matrix(E13, mu)
        assert composed.entries == {}


def test_valid_depth_is_depth_minus_margin():
    # the margin is the height of the root for the module's Borel
    m = verma_realization(2, (1,), (0, 1, 0, 1), 6)
    assert ds13(m).valid_depth == 5
    m = verma_realization(2, (), (0, 1, 0, 1), 6)
    assert ds13(m).valid_depth == 4


def test_requires_odd_root():
    m = verma_realization(2, (1,), (0, 1, 0, 1), 2)
    with pytest.raises(ValueError):
        ds_homology(m, (1, 2))


def test_each_weight_space_is_pure_parity():
    r = ds13(verma_realization(2, (1,), (0, 1, 0, 1), 6))
    assert len(r.support()) == 4
    for mu in r.support():
        e, o = r.dims(mu)
        assert min(e, o) == 0


def test_class_representatives_cross_check():
    r = ds13(verma_realization(2, (1,), (0, 1, 0, 1), 6))
    for mu in r.support():
        wc = r.classes_at(mu)
        assert wc.dims == r.dims(mu)
        reps = wc.all_reps()
        assert len(reps) == r.total(mu)
        rep = r.rep_dict(mu, max(range(2), key=lambda p: wc.dims[p]), 0)
        assert rep and all(isinstance(c, Fraction) for c in rep.values())
    assert r.classes_at((99, 0, 0, 0)) is None


def test_result_json_is_deterministic():
    def fresh():
        return ds13(verma_realization(2, (1,), (0, 1, 0, 1), 5)).to_json()

    first, second = fresh(), fresh()
    assert first == second
    payload = json.loads(first)
    assert set(payload) == {"alpha", "valid_region", "classes"}


# ---------------------------------------------------------------------------
# Centralizer bookkeeping.


def test_surviving_indices_and_lifts():
    assert surviving_indices(2, (1, 3)) == (2, 4)
    assert surviving_indices(2, (3, 1)) == (2, 4)
    assert surviving_indices(2, (2, 3)) == (1, 4)
    assert surviving_indices(3, (2, 4)) == (1, 3, 5, 6)
    assert lift_unit(2, (1, 3), (1, 2)) == (2, 4)
    assert lift_unit(3, (2, 4), (2, 3)) == (3, 5)


def test_inherited_borel_labels():
    assert ds_borel_label(2, (1,), (1, 3)) == ()
    assert ds_borel_label(2, (), (2, 3)) == ()
    assert ds_borel_label(2, (1,), (3, 2)) == ()
    assert ds_borel_label(3, (2, 1), (1, 4)) == (1,)
    # every inherited label is a valid label one size down
    small = set(all_borels(1))
    for label in all_borels(2):
        for alpha in [(1, 3), (1, 4), (2, 3), (2, 4)]:
            assert ds_borel_label(2, label, alpha) in small


# ---------------------------------------------------------------------------
# Certification of the double-Verma answer.


def test_certify_standard_borel_anchor():
    m = verma_realization(2, (1,), (0, 1, 0, 1), 6)
    r = ds13(m)
    label = ds_borel_label(2, (1,), E13)
    target = to_tuple(1, pr_alpha(2, m.datum.hw, E13), label)
    cert = certify_verma_iso(r, label, target)
    assert cert.verdict == CERTIFIED
    assert cert.checked_weights == 25
    assert cert.detail == {"singular_weights": [[0, 1, 0, -1], [-1, 1, 1, -1]]}


def test_certify_second_odd_simple():
    m = verma_realization(2, (), (2, 0, 0, -1), 6)
    r = ds_homology(m, (2, 3))
    label = ds_borel_label(2, (), (2, 3))
    target = to_tuple(1, pr_alpha(2, m.datum.hw, (2, 3)), label)
    cert = certify_verma_iso(r, label, target)
    assert cert.verdict == CERTIFIED
    assert cert.checked_weights == 46
    assert cert.detail == {"singular_weights": [[2, 1, -1, 1], [2, 0, 0, 1]]}


def test_certify_reversed_odd_root():
    # a negative odd root of the standard Borel is simple for the twisted one
    m = verma_realization(2, (1,), (2, 1, 1, -1), 6)
    r = ds_homology(m, (3, 2))
    label = ds_borel_label(2, (1,), (3, 2))
    assert label == ()
    target = to_tuple(1, pr_alpha(2, m.datum.hw, (3, 2)), label)
    assert target == (2, -1)
    cert = certify_verma_iso(r, label, target)
    assert cert.verdict == CERTIFIED
    assert cert.checked_weights == 25
    assert cert.detail == {"singular_weights": [[2, 1, -1, 1], [2, 2, -2, 1]]}


def test_certify_star_family_one_size_up():
    b = star(1, (), 2, (1,))
    assert b == (2, 1)
    m = verma_realization(3, b, (1, 0, 1, 1, 0, 1), 4)
    r = ds_homology(m, (1, 4))
    label = ds_borel_label(3, b, (1, 4))
    assert label == (1,)
    target = to_tuple(2, pr_alpha(3, m.datum.hw, (1, 4)), label)
    assert target == (0, 1, 0, 1)
    cert = certify_verma_iso(r, label, target)
    assert cert.verdict == CERTIFIED
    assert cert.checked_weights == 34


def test_certify_zero_on_typical_weight():
    m = verma_realization(2, (), (2, 0, 1, 0), 6)
    r = ds13(m)
    cert = certify_zero(r)
    assert cert.verdict == CERTIFIED
    assert cert.ok
    assert cert.checked_weights == 30


def test_refuted_census_carries_counterexample():
    m = verma_realization(2, (), (2, 0, 1, 0), 6)
    r = ds13(m)
    target = to_tuple(1, pr_alpha(2, m.datum.hw, E13), ())
    cert = certify_verma_iso(r, (), target)
    assert cert.verdict == REFUTED
    assert not cert.ok
    assert cert.detail == {"weight": [1, 0, -1, 1], "dims": [0, 0], "expected": [1, 0]}


def test_certify_rejects_wrong_target_weight():
    m = verma_realization(2, (), (2, 0, 1, 0), 6)
    with pytest.raises(ValueError):
        certify_verma_iso(ds13(m), (), (5, 5))


def test_shallow_region_is_inconclusive():
    m = verma_realization(2, (), (1, 0, 1, 0), 1)
    r = ds13(m)
    assert r.valid_depth == -1
    assert certify_zero(r).verdict == INCONCLUSIVE
    target = to_tuple(1, pr_alpha(2, m.datum.hw, E13), ())
    assert certify_verma_iso(r, (), target).verdict == INCONCLUSIVE


# ---------------------------------------------------------------------------
# Induced centralizer action.


def test_induced_action_shapes_and_guards():
    r = ds13(verma_realization(2, (1,), (0, 1, 0, 1), 6))
    rw = root_weight(2, (4, 2))
    matrices = induced_action(r, (4, 2))
    assert matrices
    for mu, mat in matrices.items():
        assert mat.ncols == r.total(mu)
        assert mat.nrows == r.total(add_weights(mu, rw))
    with pytest.raises(ValueError):
        induced_action(r, (1, 2))


def test_induced_matrices_close_under_bracket():
    r = ds13(verma_realization(2, (1,), (0, 1, 0, 1), 6))
    pairs = [
        ((2, 4), (4, 2)),
        ((4, 2), (2, 4)),
        ((2, 4), (2, 2)),
        ((2, 2), (4, 2)),
        ((2, 4), (2, 4)),
        ((4, 2), (4, 2)),
    ]
    report = induced_bracket_check(r, pairs)
    assert report["ok"]
    assert report["checked"] == 74


def test_induced_bracket_one_size_up():
    m = verma_realization(3, (2, 1), (1, 1, 0, 1, 1, 0), 4)
    r = ds_homology(m, (1, 4))
    report = induced_bracket_check(r, [((2, 5), (5, 2)), ((3, 6), (6, 3))])
    assert report["ok"]
    assert report["checked"] == 3


# ---------------------------------------------------------------------------
# Degree-zero induced modules: factorwise homology.


def tensor_census_matches(n, label1, label2, t, depth):
    m = parabolic_IJ_realization(n, label1, label2, t, depth)
    r = ds_homology(m, (1, n + 1))
    kind = "verma_eps" if label1 == () else "verma_delta"
    first = gl11_ds_table(kind, t[0], t[n])
    expected: dict = {}
    for (c, d), (e1, o1) in first.items():
        for w_amb, _parity in m.levi.factors[1].states:
            mu = list(w_amb)
            mu[0], mu[n] = c, d
            mu = tuple(mu)
            if m.datum.depth_of(mu) > r.valid_depth:
                continue
            cur = expected.get(mu, [0, 0])
            cur[par(n, mu)] += e1 + o1
            expected[mu] = cur
    return census_table(r) == {w: tuple(v) for w, v in expected.items()}


def test_first_factor_carries_the_homology():
    assert tensor_census_matches(2, (), (1,), (1, 0, 1, 0), 4)
    assert tensor_census_matches(2, (1,), (), (1, 0, 1, 0), 4)
    assert tensor_census_matches(2, (), (), (2, 0, 1, 0), 4)
    assert tensor_census_matches(3, (), (1,), (1, 1, 0, 1, 1, 0), 4)
    assert tensor_census_matches(3, (), (2, 1), (0, 1, 0, 0, 1, 0), 3)


def test_tensor_factor_expectation_matches_computation():
    specs = [("verma_eps", 1, 1), ("simple", 2, 2)]
    expected = ds_tensor_factor(2, specs, 5)
    actual = ds13(bg_module(2, specs, 5))
    assert census_table(actual) == dict(expected.table)

    specs = [("simple", 1, 1), ("verma_eps", 0, 0), ("simple", 2, 2)]
    expected = ds_tensor_factor(3, specs, 3)
    actual = ds_homology(bg_module(3, specs, 3), (1, 4))
    assert census_table(actual) == dict(expected.table)


def test_enlarged_borel_module_has_singleton_homology():
    # the homology census of the anchored module is one class at the anchor
    m = bg_realization(2, (1, 2, 1, 2), 6)
    r = ds13(m)
    assert census_table(r) == {(1, 2, -1, -2): (0, 1)}
    assert par(2, (1, 2, -1, -2)) == 1


def test_delta_first_factor_kills_homology():
    r = ds13(bg_module(2, [("verma_delta", 2, 2), ("simple", 2, 2)], 6))
    assert census_table(r) == {}


def test_projected_census_sums_complete_fibers():
    r = ds13(verma_realization(2, (1,), (0, 1, 0, 1), 6))
    projected, incomplete = projected_ds_census(r)
    for nu, dims in projected.items():
        assert nu not in incomplete
        lifts = [mu for mu in r.support() if pr_alpha(2, mu, E13) == nu]
        total = [0, 0]
        for mu in lifts:
            e, o = r.dims(mu)
            total[0] += e
            total[1] += o
        assert tuple(total) == dims


# ---------------------------------------------------------------------------
# Six-term constraints for short exact sequences of anchored modules.


def test_six_term_exact_cases_have_no_slack():
    report = ses_supercharacter_check(
        ds13(bg_realization(2, (0, 2, 0, 2), 6)),
        ds13(bg_module(2, [("verma_eps", 1, 1), ("simple", 2, 2)], 6)),
        ds13(bg_realization(2, (1, 2, 1, 2), 6)),
    )
    assert report == {"ok": True, "weights_checked": 1, "failures": [], "slack": []}

    report = ses_supercharacter_check(
        ds13(bg_module(2, [("verma_eps", 1, 1), ("simple", 1, 1)], 6)),
        ds13(verma_realization(2, (1,), (1, 2, 1, 2), 6)),
        ds13(bg_module(2, [("verma_eps", 1, 1), ("simple", 2, 2)], 6)),
    )
    assert report == {"ok": True, "weights_checked": 2, "failures": [], "slack": []}


def test_six_term_error_module_cases():
    # sub anchored one step up in the first coordinate: one-dimensional error
    report = ses_supercharacter_check(
        ds13(bg_realization(2, (2, 2, 2, 2), 6)),
        ds13(bg_module(2, [("verma_delta", 2, 2), ("simple", 2, 2)], 6)),
        ds13(bg_realization(2, (1, 2, 1, 2), 6)),
    )
    assert report["ok"]
    assert report["slack"] == [[[2, -2], 1]]

    # twisted Verma in the middle: two-dimensional error spread over two weights
    report = ses_supercharacter_check(
        ds13(bg_module(2, [("simple", 2, 2), ("verma_eps", 2, 2)], 6)),
        ds13(verma_realization(2, (1, 1), (2, 2, 2, 2), 6)),
        ds13(bg_module(2, [("simple", 1, 1), ("verma_eps", 2, 2)], 6)),
    )
    assert report["ok"]
    assert report["slack"] == [[[1, -1], 1], [[2, -2], 1]]


def test_six_term_requires_exact_sources():
    r = ds13(bg_realization(2, (1, 2, 1, 2), 4))
    with pytest.raises(ValueError):
        ses_supercharacter_check(r, r, r)


def test_twisted_verma_middle_census():
    # homology of the twisted Verma: a doubled twisted Verma one size down
    r = ds13(verma_realization(2, (2,), (1, 3, 1, 3), 6))
    projected, _ = projected_ds_census(r)
    assert projected == {(2, -2): (1, 1), (3, -3): (1, 1)}


# ---------------------------------------------------------------------------
# The contracting homotopy on the abelian radical.


def test_contraction_generators_and_parities():
    cc = ContractionComplex(2)
    assert cc.units == ((2, 1), (4, 1), (2, 3), (4, 3))
    assert cc.parities == (0, 1, 1, 0)


def test_contraction_differential_on_generators():
    cc = ContractionComplex(2)
    one = Fraction(1)
    # delta swaps the first column into the middle column, h goes back
    assert cc.delta((1, 0, 0, 0)) == {(0, 0, 1, 0): -one}
    assert cc.delta((0, 1, 0, 0)) == {(0, 0, 0, 1): one}
    assert cc.delta((0, 0, 1, 0)) == {}
    assert cc.h((0, 0, 1, 0)) == {(1, 0, 0, 0): -one}
    assert cc.h((0, 0, 0, 1)) == {(0, 1, 0, 0): one}
    assert cc.h((1, 0, 0, 0)) == {}


def test_contraction_monomial_basis():
    cc = ContractionComplex(2)
    monos = list(cc.monomials(4))
    assert len(monos) == 41
    assert all(cc.degree(m) <= 4 for m in monos)
    # odd generators never repeat
    for mono in monos:
        for exp, parity in zip(mono, cc.parities, strict=True):
            if parity:
                assert exp <= 1


def test_contraction_identities_hold():
    report = contraction_check(2, 6)
    assert report["ok"] and not report["failures"]
    report = contraction_check(3, 6)
    assert report["ok"]
    assert report["monomials"] == 1289


# ---------------------------------------------------------------------------
# Property: homology dimensions are sane for arbitrary small modules.

ODD_ROOTS_2 = [(i, j) for i in (1, 2) for j in (3, 4)] + [
    (j, i) for i in (1, 2) for j in (3, 4)
]


@settings(max_examples=20, deadline=None)
@given(
    t=st.tuples(*(st.integers(-2, 2) for _ in range(4))),
    label=st.sampled_from(sorted(all_borels(2))),
    alpha=st.sampled_from(ODD_ROOTS_2),
)
def test_homology_dimensions_property(t, label, alpha):
    m = verma_realization(2, label, t, 3)
    r = ds_homology(m, alpha)
    for mu in r.support():
        e, o = r.dims(mu)
        assert min(e, o) == 0
        assert e + o <= len(m.weight_spaces[mu])
        assert r.classes_at(mu).dims == (e, o)
