"""Reflection-group layer: root identification, invariants, parameter symmetry."""

from fractions import Fraction

import numpy as np

from ncverify import weyl


def test_root_identification():
    out = weyl.verify_root_identification()
    assert out["ok"]
    assert out["root_count"] == 72


def test_highest_root_combination():
    simple = weyl.simple_root_vectors()
    coeffs = (1, 2, 3, 2, 1, 2)
    combo = sum(c * v for c, v in zip(coeffs, simple))
    assert (combo == weyl.highest_root_vector()).all()


def test_group_orders_and_determinants():
    out = weyl.verify_group_structure()
    assert out["ok"]
    assert out["order"] == 51840
    assert out["extended_order"] == 103680
    assert out["rank_two_subgroup_order"] == 6


def test_cache_roundtrip(tmp_path):
    gens = weyl.simple_reflection_matrices()[:2]
    first = weyl.generate_group(gens, cache_dir=str(tmp_path), cache_name="planar")
    assert first.order == 6
    again = weyl.generate_group(gens, cache_dir=str(tmp_path), cache_name="planar")
    assert again.order == 6
    keys = {el.tobytes() for el in first.elements}
    assert {el.tobytes() for el in again.elements} == keys


def test_invariant_term_counts_and_scaling():
    invs = weyl.fundamental_invariants()
    counts = {name: len(p.terms) for name, p in invs.items()}
    assert counts == {"p2": 9, "p5": 72, "p6": 186, "p8": 651, "p9": 852, "p12": 4136}
    at_ones = invs["p2"].evaluate({n: 1 for n in weyl.PARAM_NAMES})
    assert at_ones == 3


def test_average_is_a_projector():
    assert weyl.verify_average_projector(seed=1, samples=2)["ok"]


def test_averaging_kills_odd_monomial():
    # A single variable has no invariant component.
    lone = weyl.average_monomial((1, 0, 0, 0, 0, 0))
    assert lone == weyl.param_ring().zero()


def test_central_parameter_specialisation_point():
    point = {name: Fraction(k + 2) for k, name in enumerate(weyl.PARAM_NAMES)}
    values = weyl.specialise_kl_at(point)
    symbolic = weyl.specialise_kl()
    for name, poly in symbolic.items():
        assert poly.evaluate(point) == values[name]


def test_theorem_identities_small_screen():
    assert weyl.verify_theorem53(seed=5, points=4)["ok"]


def test_coefficient_invariance_direct():
    assert weyl.verify_invariance_direct()["ok"]


def test_finite_symmetries_inside_group():
    out = weyl.verify_aut0_membership()
    assert out["ok"]
    assert out["member_count"] == 6
    assert out["central_not_in_group"]
    assert out["central_in_extended"]
    assert out["central_times_twist_in_group"]
