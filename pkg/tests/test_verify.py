"""Tests for the named verification scenarios and their reports."""

from __future__ import annotations

import json

import pytest

from superverma.verify import (
    CaseResult,
    FAIL,
    PASS,
    ScenarioReport,
    _first_mismatch,
    default_conjecture_grid,
    default_mabg_grid,
    verify_conjecture,
    verify_gl22_examples,
    verify_maBG,
    verify_structure,
)
from superverma.homology import CERTIFIED, REFUTED


# ---------------------------------------------------------------------------
# Report plumbing.


def test_report_counts_ok_and_sorting():
    cases = (
        CaseResult("b", PASS),
        CaseResult("a", CERTIFIED),
        CaseResult("c", FAIL, {"why": "x"}),
    )
    rep = ScenarioReport("demo", {"n": 2}, tuple(sorted(cases, key=lambda c: c.key)), 7)
    assert [c.key for c in rep.cases] == ["a", "b", "c"]
    assert rep.counts() == {CERTIFIED: 1, FAIL: 1, PASS: 1}
    assert not rep.ok
    assert [c.key for c in rep.failures()] == ["c"]
    assert "demo: 3 cases" in rep.summary()
    assert "FAILED" in rep.summary()


def test_report_json_is_deterministic_and_excludes_timing():
    r1 = verify_structure(1)
    r2 = verify_structure(1)
    assert r1.to_json() == r2.to_json()
    doc = json.loads(r1.to_json())
    assert set(doc) == {"scenario", "params", "cases", "wall_time_ms"}
    assert doc["wall_time_ms"] is None
    timed = json.loads(r1.to_json(timing=True))
    assert isinstance(timed["wall_time_ms"], int)


def test_first_mismatch_payload_carries_weight_and_dims():
    payload = _first_mismatch({(1, 0): (1, 0)}, {(1, 0): (0, 1)})
    assert payload == {"weight": [1, 0], "dims": [1, 0], "expected": [0, 1]}
    assert _first_mismatch({}, {}) == {}


# ---------------------------------------------------------------------------
# Conjecture sweeps.


def test_conjecture_rank_one_reproduces_closed_table():
    rep = verify_conjecture(1)
    assert rep.ok
    assert rep.counts() == {CERTIFIED: 50}
    # matched anchors certify the two-class census, unmatched the empty one
    by_key = {c.key: c for c in rep.cases}
    assert by_key["b=() alpha=1,2 t=(1,1)"].detail == {"expected": "pair"}
    assert by_key["b=() alpha=1,2 t=(1,0)"].detail == {"expected": "zero"}
    assert by_key["b=(1) alpha=2,1 t=(1,1)"].detail == {"expected": "pair"}


def test_conjecture_slice_certifies_both_branches():
    grid = [(1, 0, 1, 0), (2, 0, 1, 0), (1, 1, 1, 0), (0, 0, 0, 0)]
    rep = verify_conjecture(2, label=(1,), alpha=(1, 3), grid=grid, depth=5)
    assert rep.ok
    assert len(rep.cases) == 4
    details = {c.key: c.detail["expected"] for c in rep.cases}
    assert details["b=(1) alpha=1,3 t=(1,0,1,0)"] == "double-verma"
    assert details["b=(1) alpha=1,3 t=(2,0,1,0)"] == "zero"
    assert details["b=(1) alpha=1,3 t=(0,0,0,0)"] == "double-verma"


def test_conjecture_sweeps_all_simple_odd_roots_of_a_borel():
    rep = verify_conjecture(2, label=(1,), grid=[(1, 0, 1, 0)], depth=5)
    roots = {c.key.split(" ")[1] for c in rep.cases}
    assert roots == {"alpha=1,3", "alpha=3,2", "alpha=2,4"}
    assert rep.ok


def test_conjecture_rejects_foreign_alpha_and_bad_grid():
    with pytest.raises(ValueError):
        verify_conjecture(2, label=(1,), alpha=(2, 3))
    with pytest.raises(ValueError):
        verify_conjecture(2, grid=[(1, 0, 1)])


def test_conjecture_shift_classes_share_one_judgement():
    # a uniform shift of the anchor tuple does not change the verdict
    grid = [(0, 1, 0, 1), (1, 2, 1, 2), (2, 3, 2, 3)]
    rep = verify_conjecture(2, label=(1,), alpha=(1, 3), grid=grid, depth=5)
    assert rep.counts() == {CERTIFIED: 3}
    assert len({c.detail["expected"] for c in rep.cases}) == 1


def test_conjecture_parallel_workers_match_sequential(monkeypatch):
    grid = default_conjecture_grid(2)[:40]
    seq = verify_conjecture(2, label=(2,), grid=grid, depth=4)
    monkeypatch.setenv("SUPERVERMA_JOBS", "2")
    par = verify_conjecture(2, label=(2,), grid=grid, depth=4)
    assert seq.to_json() == par.to_json()


# ---------------------------------------------------------------------------
# Anchored-module scenario.


def test_mabg_grid_passes_and_reports_parity_twist():
    rep = verify_maBG(2)
    assert rep.ok
    assert len(rep.cases) == len(default_mabg_grid(2)) == 25
    by_key = {c.key: c for c in rep.cases}
    assert by_key["t=(1,2,1,2)"].detail == {"parity_twist": 1}
    assert by_key["t=(2,1,2,1)"].detail == {"parity_twist": 0}


def test_mabg_rank_three_sample_passes():
    rep = verify_maBG(3)
    assert rep.ok
    assert rep.params["depth"] == 3


def test_mabg_rejects_unmatched_tuple():
    with pytest.raises(ValueError):
        verify_maBG(2, grid=[(1, 2, 1, 3)])


# ---------------------------------------------------------------------------
# Worked rank-2 examples.


def test_gl22_examples_all_pass():
    rep = verify_gl22_examples()
    assert rep.ok
    keys = [c.key for c in rep.cases]
    assert [k for k in keys if k.startswith("seq-")] == [f"seq-{i}" for i in range(1, 9)]
    assert {"pbw-anchored-e13", "pbw-union-e23", "pbw-union-e32"} <= set(keys)
    assert {"direct-e23", "direct-e32", "union-ind-e23"} <= set(keys)
    by_key = {c.key: c for c in rep.cases}
    # the two sequences with a twisted middle factor leak an error module
    assert by_key["seq-5"].detail == {"slack": [[[2, -2], 1]]}
    assert by_key["seq-8"].detail == {"slack": [[[1, -1], 1], [[2, -2], 1]]}
    for i in (1, 2, 3, 4, 6, 7):
        assert by_key[f"seq-{i}"].detail == {"slack": []}


# ---------------------------------------------------------------------------
# Structural invariants.


def test_structure_passes_for_module_ranks():
    for n in (2, 3):
        rep = verify_structure(n)
        assert rep.ok, rep.failures()
        keys = {c.key for c in rep.cases}
        assert {
            "axioms",
            "borel-count",
            "borel-graph",
            "rho",
            "contraction",
            "character-independence",
            "bg-product-character",
            "bg-of-verma",
            "functor-identity",
            "induced-brackets",
        } == keys


def test_structure_combinatorial_only_at_outer_ranks():
    for n in (1, 4):
        rep = verify_structure(n)
        assert rep.ok
        keys = {c.key for c in rep.cases}
        assert "character-independence" not in keys
        assert {"axioms", "borel-count", "borel-graph", "rho"} <= keys


def test_structure_rejects_large_rank():
    with pytest.raises(ValueError):
        verify_structure(5)
