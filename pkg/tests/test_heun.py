"""Tridiagonal-pair realisations: closure of the quadratic pairs in both algebras."""

import pytest

from ncverify import heun


def test_racah_overlaps_resolve():
    out = heun.racah_system().check_overlaps()
    assert out["resolved"]
    assert out["ambiguities"] == 4


def test_hahn_overlaps_resolve():
    out = heun.hahn_system().check_overlaps()
    assert out["resolved"]
    assert out["ambiguities"] == 4


def test_racah_graded_dimensions():
    sys = heun.racah_system()
    assert [sys.graded_dim(n) for n in range(9)] == [1, 2, 4, 6, 8, 10, 12, 14, 16]


def test_hahn_graded_dimensions():
    sys = heun.hahn_system()
    assert [sys.graded_dim(n) for n in range(9)] == [1, 1, 2, 3, 4, 5, 6, 7, 8]


def test_racah_pair_closes_in_family():
    sol = heun.extract_family_params(*heun.heun_racah_pair(), heun.racah_ring())
    assert sol is not None
    assert sorted(sol) == ["a0", "a0p", "a1", "a2", "a3", "a4", "a5", "a6", "a8", "a9"]


def test_extraction_rejects_perturbed_pair():
    a, b = heun.heun_racah_pair()
    bad = b + heun.racah_system().gen("R3")
    assert heun.extract_family_params(a, bad, heun.racah_ring()) is None


def test_racah_realisation_report():
    out = heun.verify_racah_realisation()
    assert out["ok"]
    assert out["extracted"]
    assert all(out["matches"].values())
    assert sorted(out["matches"]) == ["a0", "a0p", "a1", "a2", "a5", "a6", "a9"]
    assert out["constant_slot_matches"]
    assert out["characterised_deviations"] == {"a4": True, "a3": True}


def test_hahn_realisation_both_branches():
    out = heun.verify_hahn_realisation()
    assert out["ok"]
    for branch in ("1", "-1"):
        rep = out["branches"][branch]
        assert rep["ok"]
        assert rep["extracted"]
        assert rep["leading"] == "-6"
        assert rep["cube"] == "-2"
        assert rep["mixed"] == "0"
    assert out["branches_related_by_transform"]


def test_hahn_branch_argument_validated():
    with pytest.raises(ValueError):
        heun.heun_hahn_pair(0)
