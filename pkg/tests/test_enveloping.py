"""Enveloping-algebra layer: bracket tables, trace words, distinguished elements."""

from fractions import Fraction

from ncverify import enveloping as env
from ncverify.rewrite import commutator


def test_sl2_bracket_normal_form():
    a = env.build_env(2, 1, "sl")
    e = a.gen(("e", 1, 2), 1)
    f = a.gen(("e", 2, 1), 1)
    h = a.gen(("h", 1), 1)
    assert f * e == e * f - h
    assert commutator(h, e) == 2 * e


def test_cross_copy_generators_commute():
    a = env.build_env(2, 2, "sl")
    for left in a.basis:
        for right in a.basis:
            assert commutator(a.gen(left, 1), a.gen(right, 2)) == 0


def test_diagonal_units_are_traceless():
    a = env.standard_algebra()
    total: dict[int, Fraction] = {}
    for p in (1, 2, 3):
        for r, c in a.diag_combo(p, 1).items():
            total[r] = total.get(r, Fraction(0)) + c
    assert all(c == 0 for c in total.values())


def test_standard_env_systems_resolve_overlaps():
    systems = env.standard_env_systems()
    assert len(systems) == 12
    for _, algebra in systems:
        assert algebra.system.check_overlaps()["resolved"]


def test_distinguished_element_term_counts():
    sizes = {k: len(v.terms) for k, v in env.centraliser_generators().items()}
    assert sizes == {
        "k1": 8, "k2": 8, "k3": 26,
        "l1": 18, "l2": 18, "l3": 102,
        "X": 100, "Y": 140, "Z": 460,
    }


def test_distinguished_element_degrees():
    assert env.verify_generator_degrees()["ok"]


def test_trace_identities_for_central_parameters():
    assert env.verify_trace_identities()["ok"]


def test_casimir_conventions():
    # Second diagonal trace insensitive to orientation; third shifts by a multiple.
    assert env.verify_casimir_conventions()["ok"]


def test_casimir_eigenvalue_table():
    assert env.casimir_eigenvalues(2, 1) == (Fraction(8, 3), Fraction(-16, 9))
    assert env.casimir_eigenvalues(1, 2) == (Fraction(8, 3), Fraction(-56, 9))
    assert env.casimir_eigenvalues(2, 2) == (Fraction(6), Fraction(-9))


def test_casimir_duality_flips_shifted_cubic():
    for m1, m2 in ((2, 1), (3, 1), (4, 2), (5, 3)):
        c2, c3 = env.casimir_eigenvalues(m1, m2)
        d2, d3 = env.casimir_eigenvalues(m2, m1)
        assert d2 == c2
        assert d3 + Fraction(3, 2) * d2 == -(c3 + Fraction(3, 2) * c2)


def test_traces_are_central():
    out = env.verify_traces_central()
    assert out["ok"]
    assert out["patterns"] == 29


def test_trace_reduction_identity():
    assert env.verify_trace_reduction()["ok"]


def test_bivariate_series_matches_graded_dimensions():
    assert env.verify_series_consistency(order=24)["ok"]
