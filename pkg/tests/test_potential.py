"""Family-level tests: ordering rules, potential calculus, Casimir, grading."""

import random
from fractions import Fraction

from ncverify import potential as pot
from ncverify.rewrite import commutator


def test_generic_overlaps_resolve():
    report = pot.generic_algebra().system.check_overlaps()
    assert report["resolved"]
    assert report["ambiguities"] == 1  # the single length-3 word C.B.A


def test_specialised_overlaps_resolve():
    assert pot.specialised_algebra().system.check_overlaps()["resolved"]


def test_graded_dimensions_match_series():
    out = pot.verify_graded_dimensions(36)
    assert out["ok"]
    dims = out["dims"]
    assert dims[0] == 1
    assert dims[7] == 1    # the only weight-7 monomial is A.B
    assert dims[12] == 4   # A^4, A^2 C, B^3, C^2


def test_degree_bookkeeping_generic_and_specialised():
    assert pot.degree_bookkeeping(pot.generic_parameters())["ok"]
    assert pot.degree_bookkeeping(pot.specialised_parameters())["ok"]


def test_potential_reproduces_relations():
    assert pot.verify_potential_matches_relations(pot.generic_parameters())["ok"]
    assert pot.verify_potential_matches_relations(pot.specialised_parameters())["ok"]


def test_free_associativity_criterion():
    out = pot.verify_free_associativity_criterion(pot.generic_parameters())
    assert out["top_words_only"] and out["identity"]


def test_cyclic_derivative_shifts_rotations():
    # d/dx of a cyclic word sums the rotations that start right after x.
    word = (0, 1, 0, 2)
    potential = {pot.cyclic_canonical(word): 1}
    d0 = pot.cyclic_derivative(potential, 0)
    assert d0 == {(1, 0, 2): 1, (2, 0, 1): 1}


def test_casimir_is_central_generic():
    assert pot.verify_centrality(pot.generic_algebra())["ok"]


def test_casimir_is_central_specialised():
    assert pot.verify_centrality(pot.specialised_algebra())["ok"]


def test_specialised_casimir_coefficients_agree():
    assert pot.verify_specialised_casimir_form()["ok"]


def test_closure_constant_structure():
    a12 = pot.closure_constant()
    assert a12.is_homogeneous() is False  # mixed weights below 12 are present
    assert a12.weighted_degree() == 12
    # Fully symmetric, and even in the antisymmetric family.
    from itertools import permutations

    for perm in permutations((0, 1, 2)):
        for tau in (False, True):
            assert pot.apply_index_symmetry(a12, perm, tau) == a12


def test_specialised_parameter_weights():
    p = pot.specialised_parameters()
    for name, bound in (("a2", 2), ("a5", 5), ("a6", 6), ("a8", 8), ("a9", 9)):
        v = getattr(p, name)
        assert v.weighted_degree() <= bound
        assert v  # all five are nonzero
    assert p.a2.is_homogeneous(2)
    assert p.a5.is_homogeneous(5)
    # The remaining coefficients mix weights; only the bound is promised.
    assert not p.a9.is_homogeneous()


def test_parameter_symmetries():
    assert pot.parameter_symmetry_report()["ok"]


def test_quotient_series():
    assert pot.verify_quotient_series(24)["ok"]


def test_series_counts_small():
    # 1/((1-t^2)^3 (1-t^3)^4 (1-t^4)(1-t^6)) starts 1, 0, 3, 4, 6, ...
    s = pot.series_counts((2, 2, 2, 3, 3, 3, 3, 4, 6), 4)
    assert s == [1, 0, 3, 4, 7]


def test_numeric_specialisation_keeps_relations():
    rng = random.Random(2024)
    ringp = pot.generic_parameters()
    for _ in range(3):
        point = {
            n: Fraction(rng.randrange(-6, 7), rng.randrange(1, 4))
            for n in pot.PARAM_NAMES
        }
        numeric = pot.specialise(ringp, point)
        alg = pot.FamilyAlgebra(pot.build_system(numeric), numeric)
        assert alg.system.check_overlaps()["resolved"]
        assert pot.verify_centrality(alg)["ok"]
