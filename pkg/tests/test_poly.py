"""Ring axioms, substitution and text round-trips for the polynomial layer."""

import random
from fractions import Fraction

import pytest

from ncverify.poly import PolynomialRing


def _random_poly(ring, rng, max_terms=6, max_exp=3):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exp = tuple(rng.randrange(max_exp + 1) for _ in ring.names)
        terms[exp] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
    p = ring.zero()
    for exp, c in terms.items():
        m = ring.const(c)
        for name, e in zip(ring.names, exp):
            m = m * ring.var(name) ** e
        p = p + m
    return p


def test_ring_axioms_random():
    ring = PolynomialRing(["x", "y", "z"])
    rng = random.Random(101)
    for _ in range(60):
        p = _random_poly(ring, rng)
        q = _random_poly(ring, rng)
        r = _random_poly(ring, rng)
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == ring.zero()
        assert p * ring.one() == p
        assert p * ring.zero() == ring.zero()


def test_pow_matches_repeated_mul():
    ring = PolynomialRing(["x", "y"])
    rng = random.Random(7)
    for _ in range(20):
        p = _random_poly(ring, rng, max_terms=4, max_exp=2)
        q = ring.one()
        for n in range(6):
            assert p ** n == q
            q = q * p


def test_closed_variable_set():
    r1 = PolynomialRing(["x", "y"])
    r2 = PolynomialRing(["x", "z"])
    with pytest.raises(ValueError):
        r1.var("w")
    with pytest.raises(ValueError):
        _ = r1.var("x") + r2.var("x")
    with pytest.raises(ValueError):
        _ = r1.var("x") * r2.var("z")


def test_weighted_degree_and_homogeneity():
    ring = PolynomialRing(["k", "l"], degrees={"k": 2, "l": 3})
    k, l = ring.gens()
    p = k ** 3 + l ** 2
    assert p.weighted_degree() == 6
    assert p.is_homogeneous(6)
    assert not (p + k).is_homogeneous()
    assert ring.zero().weighted_degree() == -1
    assert ring.zero().is_homogeneous()


def test_substitution_is_ring_homomorphism():
    src = PolynomialRing(["x", "y"])
    dst = PolynomialRing(["u", "v"])
    u, v = dst.gens()
    images = {"x": u + v, "y": u * v - 1}
    rng = random.Random(23)
    for _ in range(30):
        p = _random_poly(src, rng, max_terms=4, max_exp=3)
        q = _random_poly(src, rng, max_terms=4, max_exp=3)
        assert (p + q).substitute(images) == p.substitute(images) + q.substitute(images)
        assert (p * q).substitute(images) == p.substitute(images) * q.substitute(images)


def test_substitution_requires_used_variables_only():
    ring = PolynomialRing(["x", "y"])
    x, y = ring.gens()
    p = x ** 2 + 1
    assert p.substitute({"x": y}) == y ** 2 + 1
    with pytest.raises(ValueError):
        (x + y).substitute({"x": y})


def test_simultaneous_substitution():
    ring = PolynomialRing(["x", "y"])
    x, y = ring.gens()
    p = x * y + x ** 2
    swapped = p.substitute({"x": y, "y": x})
    assert swapped == x * y + y ** 2


def test_evaluate_agrees_with_substitute():
    ring = PolynomialRing(["x", "y", "z"])
    rng = random.Random(5)
    for _ in range(30):
        p = _random_poly(ring, rng)
        point = {n: Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for n in ring.names}
        direct = p.evaluate(point)
        via_subst = p.substitute({n: ring.const(point[n]) for n in p.variables_used()})
        assert via_subst.constant_value() == direct


def test_text_round_trip():
    ring = PolynomialRing(["m1", "m2", "mp1"])
    rng = random.Random(99)
    for _ in range(40):
        p = _random_poly(ring, rng)
        assert ring.parse(p.to_text()) == p
    assert ring.zero().to_text() == "0"
    assert ring.parse("0") == ring.zero()


def test_text_is_graded_lex():
    ring = PolynomialRing(["x", "y"])
    x, y = ring.gens()
    p = 1 + x * y ** 2 + x ** 2 * y + y
    assert p.to_text() == "1 * x^2 * y + 1 * x * y^2 + 1 * y + 1"


def test_frozen_point_values():
    # Known values of the cubic/quadratic weight content used downstream:
    # (2/3)(m1^2 + m2^2 + m1 m2) - 2 at (2, 1) is 8/3 and at (1, 1) is 0.
    ring = PolynomialRing(["m1", "m2"])
    m1, m2 = ring.gens()
    c2 = Fraction(2, 3) * (m1 ** 2 + m2 ** 2 + m1 * m2) - 2
    assert c2.evaluate({"m1": 2, "m2": 1}) == Fraction(8, 3)
    assert c2.evaluate({"m1": 1, "m2": 1}) == 0
    c3 = (
        Fraction(1, 9)
        * (m1 + 2 * m2 - 3)
        * (2 * m1 + m2 + 3)
        * (m1 - m2 - 3)
    )
    assert c3.evaluate({"m1": 2, "m2": 1}) == Fraction(-16, 9)
    assert c3.evaluate({"m1": 1, "m2": 1}) == 0
