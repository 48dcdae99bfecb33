"""Matrix oracle: concrete representations, Casimir scalars, tensor decompositions."""

import random
from fractions import Fraction

from ncverify import reps
from ncverify.enveloping import build_env


def test_standard_reps_dimensions_and_weights():
    table = reps.standard_reps()
    assert {name: r.dimension for name, r in table.items()} == {
        "fundamental": 3, "dual": 3, "adjoint": 8,
    }
    assert table["fundamental"].weights == (2, 1)
    assert table["dual"].weights == (1, 2)
    assert table["adjoint"].weights == (2, 2)


def test_rank_helpers():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)], [Fraction(0), Fraction(1)]]
    assert reps.rank([list(r) for r in rows], 2) == 2
    assert reps.kernel_dimension([list(r) for r in rows], 2) == 0
    assert reps.kernel_dimension([[Fraction(1), Fraction(2)]], 2) == 1


def test_evaluate_respects_products():
    a = build_env(3, 1, "sl")
    rep = reps.standard_reps()["adjoint"]
    rng = random.Random(7)
    for _ in range(5):
        x = reps._random_element(a.system, rng)
        y = reps._random_element(a.system, rng)
        lhs = reps.evaluate(x * y, rep)
        rhs = reps.mat_mul(reps.evaluate(x, rep), reps.evaluate(y, rep))
        assert lhs == rhs


def test_casimir_scalars_on_irreducibles():
    assert reps.verify_casimir_scalars()["ok"]


def test_casimir_blocks_on_tensor_square():
    out = reps.verify_casimir_blocks()
    assert out["ok"]
    assert sorted(out["block_dims"]) == [3, 6]


def test_tensor_multiplicities():
    table = reps.standard_reps()
    fund = table["fundamental"]
    dual = table["dual"]
    assert reps.lr_multiplicity(fund, fund, (3, 1)) == 1
    assert reps.lr_multiplicity(fund, fund, (1, 2)) == 1
    assert reps.lr_multiplicity(fund, fund, (2, 1)) == 0
    assert reps.lr_multiplicity(fund, dual, (1, 1)) == 1
    assert reps.lr_multiplicity(fund, dual, (2, 2)) == 1


def test_central_elements_commute_with_diagonal_action():
    assert reps.verify_centraliser_commutation()["ok"]


def test_representation_independence_smoke():
    assert reps.verify_representation_independence(seed=3, samples=5)["ok"]
