"""Engine-level tests: termination, confluence, normal forms, counting."""

import random
from fractions import Fraction

import pytest

from ncverify.poly import PolynomialRing
from ncverify.rewrite import (
    NCElement,
    OverlapFailure,
    RewriteSystem,
    anticommutator,
    commutator,
    normal_form_random,
)


def _sl2():
    # Basis e < f < h with [e,f]=h, [h,e]=2e, [h,f]=-2f.
    return RewriteSystem(
        [("e", 1), ("f", 1), ("h", 1)],
        {
            ("f", "e"): {("e", "f"): 1, ("h",): -1},
            ("h", "e"): {("e", "h"): 1, ("e",): 2},
            ("h", "f"): {("f", "h"): 1, ("f",): -2},
        },
    )


def _gl2():
    pairs = [(1, 2), (2, 1), (1, 1), (2, 2)]
    names = {pq: f"e{pq[0]}{pq[1]}" for pq in pairs}

    def bracket(a, b):
        (p, q), (r, s) = a, b
        out = {}
        if q == r:
            out[(p, s)] = out.get((p, s), 0) + 1
        if s == p:
            out[(r, q)] = out.get((r, q), 0) - 1
        return out

    rules = {}
    for i, a in enumerate(pairs):
        for j, b in enumerate(pairs):
            if i > j:
                rhs = {(names[b], names[a]): 1}
                for pq, c in bracket(a, b).items():
                    if c:
                        rhs[(names[pq],)] = rhs.get((names[pq],), 0) + c
                rules[(names[a], names[b])] = rhs
    return RewriteSystem([(names[pq], 1) for pq in pairs], rules)


def test_termination_violation_rejected():
    with pytest.raises(ValueError):
        RewriteSystem(
            [("x", 1), ("y", 1)],
            {("y", "x"): {("x", "y"): 1, ("y", "x"): 1}},
        )
    with pytest.raises(ValueError):
        RewriteSystem(
            [("x", 1), ("y", 2)],
            {("y", "x"): {("x", "y"): 1, ("y", "y"): 1}},
        )


def test_missing_rule_rejected():
    with pytest.raises(ValueError):
        RewriteSystem([("x", 1), ("y", 1)], {})


def test_sl2_normal_form_and_overlaps():
    s = _sl2()
    e, f, h = s.gen("e"), s.gen("f"), s.gen("h")
    assert (f * e).terms == {(0, 1): 1, (2,): -1}
    assert commutator(e, f) == h.normal_form()
    assert commutator(h, e) == 2 * e
    assert commutator(h, f) == -2 * f
    report = s.check_overlaps()
    assert report["resolved"] and report["ambiguities"] == 1


def test_broken_jacobi_detected():
    s = RewriteSystem(
        [("e", 1), ("f", 1), ("h", 1)],
        {
            ("f", "e"): {("e", "f"): 1, ("h",): -1},
            ("h", "e"): {("e", "h"): 1, ("e",): 2},
            ("h", "f"): {("f", "h"): 1, ("f",): 2},  # wrong sign
        },
    )
    with pytest.raises(OverlapFailure):
        s.check_overlaps()


def test_gl2_frozen_normal_form():
    s = _gl2()
    e12, e21 = s.gen("e12"), s.gen("e21")
    nf = e21 * e12
    assert nf == s.element({("e12", "e21"): 1, ("e11",): -1, ("e22",): 1})
    assert s.check_overlaps()["ambiguities"] == 4


def test_casimir_sl2_is_central():
    s = _sl2()
    e, f, h = s.gen("e"), s.gen("f"), s.gen("h")
    casimir = e * f + f * e + Fraction(1, 2) * (h * h)
    for g in (e, f, h):
        assert commutator(casimir, g) == 0


def test_graded_dim_pbw_series():
    s = _sl2()
    # U(sl2) has the Hilbert series of a polynomial ring in 3 variables.
    for n in range(10):
        assert s.graded_dim(n) == (n + 1) * (n + 2) // 2


def test_graded_dim_with_power_rule_cap():
    s = RewriteSystem(
        [("p", 1), ("q", 2)],
        {
            ("q", "p"): {("p", "q"): 1},
            ("q", "q"): {(): 1},
        },
    )
    # Words p^a q^b with b <= 1: one word per (a, b), degree a + 2b.
    dims = [s.graded_dim(n) for n in range(8)]
    assert dims == [1, 1, 2, 2, 2, 2, 2, 2]
    assert s.check_overlaps()["resolved"]


def test_commuting_blocks_split():
    # Two commuting copies of sl2; cross rules are plain swaps.
    names = [(f"{x}{c}", 1) for c in (1, 2) for x in "efh"]
    rules = {}
    base = {
        ("f", "e"): {("e", "f"): 1, ("h",): -1},
        ("h", "e"): {("e", "h"): 1, ("e",): 2},
        ("h", "f"): {("f", "h"): 1, ("f",): -2},
    }
    for c in (1, 2):
        for (g, h), rhs in base.items():
            rules[(f"{g}{c}", f"{h}{c}")] = {
                tuple(f"{x}{c}" for x in w): v for w, v in rhs.items()
            }
    order = [n for n, _ in names]
    for i, g in enumerate(order):
        for h in order[:i]:
            if (g, h) not in rules:
                rules[(g, h)] = {(h, g): 1}
    s = RewriteSystem(names, rules)
    assert s.nblocks == 2
    assert s.check_overlaps()["resolved"]
    e1, f1 = s.gen("e1"), s.gen("f1")
    e2, f2 = s.gen("e2"), s.gen("f2")
    assert commutator(e1, e2) == 0
    assert commutator(f1 * e1, e2 * f2) == 0
    lhs = (f1 * e2) * (e1 * f2)
    rhs = (f1 * e1) * (e2 * f2)
    assert lhs == rhs


def test_random_strategy_agrees():
    s = _gl2()
    rng = random.Random(42)
    gens = list(s.names)
    for _ in range(100):
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            w = tuple(s.rank[rng.choice(gens)] for _ in range(rng.randrange(5)))
            terms[w] = terms.get(w, 0) + Fraction(rng.randrange(-5, 6))
        e = NCElement(s, {w: c for w, c in terms.items() if c})
        assert e.normal_form() == normal_form_random(s, e, rng)


def test_polynomial_coefficients():
    ring = PolynomialRing(["t"])
    t = ring.var("t")
    s = RewriteSystem(
        [("x", 1), ("y", 1)],
        {("y", "x"): {("x", "y"): 1, (): t}},
    )
    x, y = s.gen("x"), s.gen("y")
    assert commutator(y, x) == s.scalar(t)
    assert s.check_overlaps()["resolved"]
    assert (y * y * x).terms == ((x * y * y) + 2 * t * y).terms


def test_anticommutator_and_degree():
    s = _sl2()
    e, f = s.gen("e"), s.gen("f")
    assert anticommutator(e, f) == 2 * (e * f) - s.element({("h",): 1})
    assert (e * f).degree() == 2
    assert s.zero_el().degree() is None


def test_text_round_trip_fraction_coeffs():
    s = _gl2()
    rng = random.Random(3)
    for _ in range(30):
        terms = {}
        for _ in range(rng.randrange(1, 5)):
            w = tuple(rng.randrange(4) for _ in range(rng.randrange(4)))
            terms[w] = Fraction(rng.randrange(-8, 9), rng.randrange(1, 4))
        e = NCElement(s, {w: c for w, c in terms.items() if c})
        assert s.parse(e.to_text()) == e
    assert s.zero_el().to_text() == "0"


def test_text_round_trip_polynomial_coeffs():
    ring = PolynomialRing(["a", "b"])
    a, b = ring.gens()
    s = RewriteSystem(
        [("x", 1), ("y", 1)],
        {("y", "x"): {("x", "y"): 1, (): a}},
    )
    e = s.scalar(a + 1) + (a * b - 2) * s.gen("x") + s.scalar(Fraction(1, 2)) * s.gen("y") * s.gen("y")
    text = e.to_text()
    assert s.parse(text, ring=ring) == e
