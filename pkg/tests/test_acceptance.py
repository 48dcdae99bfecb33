"""Acceptance gate: one budgeted pass/fail line per headline guarantee."""

import resource
import time

from ncverify import checks, enveloping, heun, potential, reps, weyl


def _elapsed(fn, *args, **kwargs):
    start = time.monotonic()
    out = fn(*args, **kwargs)
    return out, time.monotonic() - start


def _line(index: int, label: str, ok: bool, elapsed: float, budget: float) -> None:
    status = "PASS" if ok and elapsed <= budget else "FAIL"
    print(f"[{index:02d}] {label}: {status} ({elapsed:.2f}s, budget {budget:.0f}s)")


def test_01_bases_resolve_and_dimensions_match():
    report, dt = _elapsed(checks.run_check, "pbw", checks.CheckContext())
    ok = report["status"] == "pass"
    _line(1, "normal-form bases and graded dimensions", ok, dt, 10)
    assert ok and dt <= 10
    assert len(report["witness"]["overlaps"]) == 16


def test_02_degree_twelve_element_is_central():
    report, dt = _elapsed(potential.verify_centrality, potential.generic_algebra())
    _line(2, "central element of the generic family", report["ok"], dt, 60)
    assert report["ok"] and dt <= 60


def test_03_relations_come_from_one_potential():
    params = potential.generic_algebra().params
    start = time.monotonic()
    relations = potential.verify_potential_matches_relations(params)
    associativity = potential.verify_free_associativity_criterion(params)
    dt = time.monotonic() - start
    ok = relations["ok"] and associativity["ok"]
    _line(3, "potential calculus", ok, dt, 10)
    assert ok and dt <= 10


def test_04_trace_words_are_central():
    report, dt = _elapsed(enveloping.verify_traces_central)
    _line(4, "centrality of trace words", report["ok"], dt, 300)
    assert report["ok"] and dt <= 300
    assert report["patterns"] == 29
    assert not report["failures"]


def test_05_trace_words_reduce_to_generators():
    report, dt = _elapsed(enveloping.verify_trace_reduction)
    _line(5, "trace words reduce to the nine generators", report["ok"], dt, 300)
    assert report["ok"] and dt <= 300


def test_06_distinguished_combinations_satisfy_family_relations():
    report, dt = _elapsed(enveloping.verify_phi_relations)
    rss_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss // 1024
    ok = report["ok"] and rss_mb < 8192
    _line(6, "family relations inside the centraliser", ok, dt, 1800)
    assert report["ok"] and dt <= 1800
    assert rss_mb < 8192


def test_07_casimir_image_oracle_and_symbolic_optin():
    report, dt = _elapsed(reps.verify_omega_image_oracle)
    optin = checks.run_check(
        "omega-image", checks.CheckContext(mode="symbolic")
    )
    ok = report["ok"] and optin["status"] != "pass" and "not run" in optin["witness"]
    _line(7, "Casimir image against the matrix oracle", ok, dt, 300)
    assert report["ok"] and dt <= 300
    assert optin["status"] == "skipped"
    assert "not run" in optin["witness"]


def test_08_reflection_group_structure():
    start = time.monotonic()
    roots = weyl.verify_root_identification()
    group = weyl.verify_group_structure()
    invariants = weyl.verify_invariants()
    dt = time.monotonic() - start
    ok = roots["ok"] and group["ok"] and invariants["ok"]
    _line(8, "reflection group, roots and invariants", ok, dt, 600)
    assert ok and dt <= 600
    assert group["order"] == 51840
    assert group["extended_order"] == 103680
    assert group["rank_two_subgroup_order"] == 6


def test_09_closed_form_invariants_match_averages():
    start = time.monotonic()
    sampled = weyl.verify_theorem53(seed=0, points=50)
    direct = weyl.verify_invariance_direct()
    dt = time.monotonic() - start
    ok = sampled["ok"] and direct["ok"]
    _line(9, "closed forms equal group averages", ok, dt, 1800)
    assert ok and dt <= 1800


def test_10_quadratic_pairs_close_with_findings():
    start = time.monotonic()
    racah = heun.verify_racah_realisation()
    hahn = heun.verify_hahn_realisation()
    dt = time.monotonic() - start
    ok = racah["ok"] and hahn["ok"]
    _line(10, "tridiagonal pairs close in the family", ok, dt, 600)
    assert ok and dt <= 600
    assert racah["constant_slot_matches"]
    assert racah["characterised_deviations"] == {"a4": True, "a3": True}
    for branch in ("1", "-1"):
        rep = hahn["branches"][branch]
        assert (rep["leading"], rep["cube"], rep["mixed"]) == ("-6", "-2", "0")
    assert hahn["branches_related_by_transform"]


def test_11_action_is_representation_independent():
    report, dt = _elapsed(reps.verify_representation_independence, seed=0, samples=50)
    _line(11, "centraliser action is representation independent", report["ok"], dt, 300)
    assert report["ok"] and dt <= 300
