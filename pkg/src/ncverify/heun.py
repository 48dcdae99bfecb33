"""Quadratic-pair realisations inside the Racah and Hahn algebras.

Both algebras are presented as rewrite systems with three generators over a
ring of central parameters, the third generator being the commutator of the
first two.  Each admits a distinguished pair of elements of Heun type, built
from free affine coefficients, whose own commutator closes back on the pair
through the cubic family relations.  The solver below recovers the family
parameters by exclusive-pivot elimination: it repeatedly finds a basis
element owning a normal word with a nonzero rational coefficient that occurs
in no other remaining basis element, reads the matching coefficient off the
residual, and subtracts.  A zero final residual is an exact proof that the
pair satisfies the relations with the recovered parameters.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import Polynomial, PolynomialRing
from .rewrite import NCElement, RewriteSystem, anticommutator, commutator

__all__ = [
    "racah_ring",
    "racah_system",
    "heun_racah_pair",
    "hahn_ring",
    "hahn_system",
    "heun_hahn_pair",
    "extract_family_params",
    "printed_racah_params",
    "verify_racah_realisation",
    "verify_hahn_realisation",
]


RACAH_PARAMS = ("z0", "z1", "z2", "z3", "z4", "d", "e1", "e2", "gam")
HAHN_PARAMS = ("z0", "z2", "z3", "z5", "z13", "d1", "d2", "e1", "e2", "lam")


@lru_cache(maxsize=None)
def racah_ring() -> PolynomialRing:
    return PolynomialRing(RACAH_PARAMS)


@lru_cache(maxsize=None)
def racah_system() -> RewriteSystem:
    """Two degree-one generators, their commutator, four central parameters.

    The commutators of the third generator with the first two are quadratic,
    and the central quartic parameter rewrites its square.
    """
    ring = racah_ring()
    d = ring.var("d")
    e1 = ring.var("e1")
    e2 = ring.var("e2")
    gam = ring.var("gam")
    rules = {
        ("R2", "R1"): {("R1", "R2"): 1, ("R3",): -1},
        ("R3", "R1"): {
            ("R1", "R3"): 1,
            ("R1", "R1"): 1,
            ("R1", "R2"): 1,
            ("R2", "R1"): 1,
            ("R1",): d,
            (): e2,
        },
        ("R3", "R2"): {
            ("R2", "R3"): 1,
            ("R2", "R2"): -1,
            ("R1", "R2"): -1,
            ("R2", "R1"): -1,
            ("R2",): -d,
            (): -e1,
        },
        ("R3", "R3"): {
            (): gam,
            ("R1", "R1", "R2"): -1,
            ("R2", "R1", "R1"): -1,
            ("R1", "R2", "R2"): -1,
            ("R2", "R2", "R1"): -1,
            ("R1", "R1"): -1,
            ("R2", "R2"): -1,
            ("R1", "R2"): -(d + 1),
            ("R2", "R1"): -(d + 1),
            ("R1",): -(2 * e1 + d),
            ("R2",): -(2 * e2 + d),
        },
    }
    return RewriteSystem((("R1", 1), ("R2", 1), ("R3", 2)), rules)


def heun_racah_pair() -> tuple[NCElement, NCElement]:
    """The affine-plus-commutator pair with five free coefficients."""
    s = racah_system()
    ring = racah_ring()
    z0, z1, z2, z3, z4 = (ring.var(n) for n in ("z0", "z1", "z2", "z3", "z4"))
    r1, r2, r3 = s.gen("R1"), s.gen("R2"), s.gen("R3")
    a = s.element({(): z0, ("R1",): z1, ("R2",): z2}) + 2 * r3
    b = (
        s.element({
            (): z3,
            ("R1",): z1 * (z1 + z4) / 2,
            ("R2",): z2 * (z2 + z4) / 2,
            ("R3",): z4,
        })
        + 2 * anticommutator(r1, r2)
    )
    return a, b


@lru_cache(maxsize=None)
def hahn_ring() -> PolynomialRing:
    return PolynomialRing(HAHN_PARAMS)


@lru_cache(maxsize=None)
def hahn_system() -> RewriteSystem:
    """Generators of degrees one, two and three with five central parameters.

    The degree gap means the commutator rule for the first pair trades a
    two-letter word for a single letter of the same degree; termination then
    rests on the word-length component of the rewriting order.
    """
    ring = hahn_ring()
    d1 = ring.var("d1")
    d2 = ring.var("d2")
    e1 = ring.var("e1")
    e2 = ring.var("e2")
    lam = ring.var("lam")
    rules = {
        ("H2", "H1"): {("H1", "H2"): 1, ("H3",): -1},
        ("H3", "H1"): {
            ("H1", "H3"): 1,
            ("H1", "H1"): -2,
            ("H1",): d2,
            ("H2",): -1,
            (): -e2,
        },
        ("H3", "H2"): {
            ("H2", "H3"): 1,
            ("H1", "H2"): 2,
            ("H2", "H1"): 2,
            ("H2",): -d2,
            ("H1",): -d1,
            (): -e1,
        },
        ("H3", "H3"): {
            (): lam,
            ("H1", "H1", "H2"): 2,
            ("H2", "H1", "H1"): 2,
            ("H1", "H2"): -d2,
            ("H2", "H1"): -d2,
            ("H2",): 2 * e2,
            ("H1", "H1"): -(d1 + 4),
            ("H2", "H2"): 1,
            ("H1",): -2 * (e1 - d2),
        },
    }
    return RewriteSystem((("H1", 1), ("H2", 2), ("H3", 3)), rules)


def heun_hahn_pair(branch: int) -> tuple[NCElement, NCElement]:
    """The quadratic pair for one of the two sign branches.

    The first element is affine in the generators plus half an anticommutator;
    the second one is cubic, with every coefficient forced by the branch sign,
    the free affine data and the central parameters.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    s = hahn_system()
    ring = hahn_ring()
    sg = ring.const(branch)
    z0, z2, z3, z5, z13 = (ring.var(n) for n in ("z0", "z2", "z3", "z5", "z13"))
    d1, d2, e1 = ring.var("d1"), ring.var("d2"), ring.var("e1")
    h1, h2 = s.gen("H1"), s.gen("H2")
    # The factor shared by z1 and the z2 term of z6 carries the branch sign
    # twice: once in front and once inside on the z3 term.  Closure fails on
    # the lower branch under any other reading, and the pair obtained from
    # the upper branch by the parity automorphism composed with order
    # reversal confirms this one.
    shared = (z13 + 1) * (z13 - 2 * sg * z3 + 1)
    z1 = -sg * d1 / 4 - sg * shared
    z4 = sg / 2
    z6 = (
        e1 / 2
        + (d2 / 4 + sg * z2) * d1 / 3
        + d2 / 6 * (z13 + 1) * (2 * z13 + 2 * sg * z3 - 1)
        - sg * 2 * z2 / 3 * shared
    )
    z7 = (2 * z3 - sg) * (2 * z3 - 2 * sg * z13 - sg) / 4 - z2 ** 2 / 3 + sg * d2 * z2 / 6
    z8 = z2 / 3 * (2 * z3 - 3 * sg * z13 - 3 * sg) + sg * d2 * z3 / 6
    z9 = d2 / 12 - sg * 2 * z2 / 3
    z10 = d1 / 4 - z13 * (z13 + 1)
    z12 = -1 - z13
    a = (
        s.element({(): z0, ("H1",): z1, ("H2",): z2, ("H3",): z3})
        + s.scalar(z4) * anticommutator(h1, h2)
    )
    b = (
        s.element({
            (): z5,
            ("H1",): z6,
            ("H2",): z7,
            ("H3",): z8,
            ("H1", "H1"): z10,
            ("H1", "H1", "H2"): z12,
        })
        + s.scalar(z9) * anticommutator(h1, h2)
        + s.scalar(z13) * (h1 * h2 * h1)
    )
    return a, b


# -- recovering family parameters ----------------------------------------


def _as_poly(value, ring: PolynomialRing) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return ring.const(Fraction(value))


def _solve_combination(
    residual: NCElement,
    basis: list[tuple[str, NCElement]],
    ring: PolynomialRing,
) -> dict[str, Polynomial] | None:
    """Write the residual in the given basis, or return None if it cannot."""
    s = residual.sys
    coeffs: dict[str, Polynomial] = {}
    remaining = list(basis)
    while remaining:
        pick = None
        for idx, (_, el) in enumerate(remaining):
            for w in sorted(el.terms, key=lambda word: (len(word), word), reverse=True):
                c = _as_poly(el.terms[w], ring)
                if not c.is_constant() or not c:
                    continue
                shared = any(
                    w in other.terms and _as_poly(other.terms[w], ring)
                    for j, (_, other) in enumerate(remaining)
                    if j != idx
                )
                if shared:
                    continue
                pick = (idx, w, c.constant_value())
                break
            if pick:
                break
        if pick is None:
            if residual == 0:
                break
            return None
        idx, w, cval = pick
        name, el = remaining.pop(idx)
        found = _as_poly(residual.terms.get(w, 0), ring) * (Fraction(1) / cval)
        coeffs[name] = found
        if found:
            residual = residual - s.scalar(found) * el
    if residual != 0:
        return None
    for name, _ in remaining:
        coeffs[name] = ring.zero()
    for name, _ in basis:
        coeffs.setdefault(name, ring.zero())
    return coeffs


def extract_family_params(
    a: NCElement, b: NCElement, ring: PolynomialRing
) -> dict | None:
    """Solve both cubic family relations for the pair, exactly.

    The first relation determines the coefficients of the square of the
    second element, the anticommutator, the square of the first element and
    the affine tail; the second relation reuses three of those and adds the
    cube term and its own tail.  Returns None when either residual fails to
    lie in the span, which would disprove the closure claim.
    """
    s = a.sys
    c = commutator(a, b)
    one = s.scalar(Fraction(1))
    first = _solve_combination(
        commutator(a, c),
        [
            ("a0", b * b),
            ("a1", anticommutator(a, b)),
            ("a2", a * a),
            ("a4", b),
            ("a5", a),
            ("a8", one),
        ],
        ring,
    )
    if first is None:
        return None
    shifted = (
        commutator(b, c)
        + s.scalar(first["a1"]) * (b * b)
        + s.scalar(first["a2"]) * anticommutator(a, b)
        + s.scalar(first["a5"]) * b
    )
    second = _solve_combination(
        shifted,
        [("a0p", a * a * a), ("a3", a * a), ("a6", a), ("a9", one)],
        ring,
    )
    if second is None:
        return None
    return {**first, **second}


def printed_racah_params() -> dict[str, Polynomial]:
    """Closed forms of the recovered parameters in the Racah case.

    The constant of the first relation is listed under the neutral name c1.
    """
    ring = racah_ring()
    z0, z1, z2, z3, z4 = (ring.var(n) for n in ("z0", "z1", "z2", "z3", "z4"))
    d, e1, e2, gam = (ring.var(n) for n in ("d", "e1", "e2", "gam"))
    out: dict[str, Polynomial] = {}
    out["a0"] = ring.const(-6)
    out["a4"] = (
        4 * d ** 2
        + 2 * (z1 * z2 - 2) * d
        - 16 * (e1 - e2)
        - 4 * z0 * (z1 + z2)
        - 6 * z0 * z4
        + 12 * z3
    )
    out["a2"] = (
        -(z1 ** 2 + z2 ** 2 + 3 * z4 ** 2 + 3 * z1 * z2) / 2
        - 2 * z4 * (z1 + z2)
        + 2 * d
        - 2
    )
    out["a5"] = (
        -2 * (2 * z1 + 2 * z2 + 3 * z4) * z3
        - 4 * d * z0
        + (z1 ** 2 + 3 * z1 * z2 + 4 * z1 * z4 + z2 ** 2 + 4 * z2 * z4 + 3 * z4 ** 2 + 4) * z0
        + (2 * z4 - z1 * z2 * (z1 + z2) / 2 - z1 * z2 * z4) * d
        + 8 * (z2 + z4) * e1
        + 8 * (z1 + z4) * e2
        - 2 * d ** 2 * z4
    )
    out["c1"] = (
        2 * (2 * z1 + 2 * z2 + 3 * z4) * z0 * z3
        - 8 * (z2 + z4) * e1 * z0
        - 8 * (z1 + z4) * e2 * z0
        + 16 * (e1 + e2) * z3
        - 32 * e1 * e2
        - 6 * z3 ** 2
        + (2 * d - 2 - (z1 ** 2 + z2 ** 2 + 3 * z1 * z2 + 3 * z4 ** 2) / 2 - 2 * (z1 + z2) * z4) * z0 ** 2
        + d * z0 * z1 * z2 * (z1 + z2) / 2
        + d * (z0 * z4 - 2 * z3) * (z1 * z2 + 2 * d - 2)
        + (z2 ** 2 - 4) * (z1 * z2 - z1 ** 2 + 4 * d) * e1 / 2
        + (z1 ** 2 - 4) * (z1 * z2 - z2 ** 2 + 4 * d) * e2 / 2
        + 2 * gam * (z1 ** 2 - z1 * z2 + z2 ** 2 - 4 * d)
    )
    out["a1"] = 2 * z1 + 2 * z2 + 3 * z4
    out["a0p"] = ring.const(-2)
    out["a3"] = (
        -(z1 + z2) * (3 * z1 * z2 + 8) / 4
        - 3 * z4 ** 3 / 4
        + 3 * d * z4
        + 6 * z0
        - 3 * z4
        - 3 * (z1 ** 2 - 3 * z1 * z2 - z2 ** 2) * z4 / 4
        - 3 * (z1 + z2) * z4 ** 2 / 2
    )
    out["a6"] = (
        (z4 ** 2 - z1 * z2 * (z4 ** 2 + z1 * z2 + z2 * z4 + z1 * z4) / 2 - 2 * z1 * z2) * d
        - (z1 ** 2 + 3 * z1 * z2 + z2 ** 2 + 4 * (z1 + z2) * z4 + 3 * z4 ** 2 + 4) * z3
        + 2 * (z2 ** 2 + 4 * z2 * z4 + 2 * z4 ** 2 + 4) * e1
        + 3 * ((z1 ** 2 + z2 ** 2 + 3 * z1 * z2 + z4 ** 2) * z4 + z1 ** 2 * z2 + z1 * z2 ** 2) * z0 / 2
        + 2 * (z1 ** 2 + 4 * z1 * z4 + 2 * z4 ** 2 + 4) * e2
        - 6 * z0 ** 2
        - d ** 2 * z4 ** 2
        - 6 * d * z0 * z4
        + 4 * d * z3
        + ((3 * z4 ** 2 + 4) * (z1 + z2) + 6 * z4) * z0
        + 8 * gam
    )
    out["a9"] = (
        d ** 2 * z0 * z4 ** 2
        - 4 * d * z0 * z3
        - z1 * (z2 ** 2 - 4) * (z2 + z4) * (z1 - z2) * e1 / 4
        + z2 * (z1 ** 2 - 4) * (z1 + z4) * (z1 - z2) * e2 / 4
        - 2 * d ** 2 * z3 * z4
        + z4 * (z2 ** 2 - 4) * d * e1
        + z4 * (z1 ** 2 - 4) * d * e2
        + 8 * (z2 + z4) * e1 * z3
        + 8 * (z1 + z4) * e2 * z3
        - 16 * e1 * e2 * z4
        - (
            3 * (z4 ** 3 + 3 * z1 * z2 * z4 + z1 ** 2 * z2 + z1 ** 2 * z4 + z1 * z2 ** 2 + z2 ** 2 * z4) / 4
            + 3 * z4
            + 3 * z4 ** 2 * (z1 + z2) / 2
            + 2 * (z1 + z2)
        ) * z0 ** 2
        - (2 * z1 + 2 * z2 + 3 * z4) * z3 ** 2
        + 2 * z0 ** 3
        + 3 * d * z0 ** 2 * z4
        + (z1 * z2 * (z1 * z4 + z2 * z4 + z4 ** 2 + z1 * z2) / 2 + 2 * z1 * z2 - z4 ** 2) * d * z0
        - 2 * (z2 ** 2 + 4 * z2 * z4 + 2 * z4 ** 2 + 4) * e1 * z0
        - 2 * (z1 ** 2 + 4 * z1 * z4 + 2 * z4 ** 2 + 4) * e2 * z0
        - z1 * z2 * (z4 + (z1 + z2) / 2) * d * z3
        + (z1 ** 2 + 3 * z1 * z2 + 4 * z1 * z4 + z2 ** 2 + 4 * z2 * z4 + 3 * z4 ** 2 + 4) * z0 * z3
        + 2 * d * z3 * z4
        + gam * (z1 * z2 * (z1 + z2) - 8 * z0 + (z1 ** 2 - z1 * z2 + z2 ** 2 - 4 * d) * z4)
    )
    return out


def verify_racah_realisation() -> dict:
    """Recover the family parameters and compare with their closed forms.

    Seven of the nine closed forms and the constant slot agree exactly.  The
    remaining two differ by fixed misprints: the linear tail of the first
    relation needs the sum of the two central charges where the difference is
    printed, and one inner quadratic of the second relation's square term has
    its signs flipped, breaking the symmetry the rest of that line obeys.
    Both deviations are pinned term by term; anything else fails the check.
    """
    ring = racah_ring()
    a, b = heun_racah_pair()
    sol = extract_family_params(a, b, ring)
    if sol is None:
        return {"extracted": False, "ok": False}
    printed = printed_racah_params()
    exact = ("a0", "a1", "a2", "a5", "a6", "a9", "a0p")
    matches = {name: sol[name] == printed[name] for name in exact}
    constant_matches = sol["a8"] == printed["c1"]
    z1, z2, z4 = ring.var("z1"), ring.var("z2"), ring.var("z4")
    e2 = ring.var("e2")
    deviations = {
        "a4": sol["a4"] - printed["a4"] == -32 * e2,
        "a3": sol["a3"] - printed["a3"]
        == -Fraction(3, 4) * (6 * z1 * z2 + 2 * z2 ** 2) * z4,
    }
    return {
        "extracted": True,
        "matches": matches,
        "constant_slot_matches": constant_matches,
        "characterised_deviations": deviations,
        "ok": all(matches.values()) and constant_matches and all(deviations.values()),
    }


def _branch_transform(el: NCElement) -> NCElement:
    """Parity automorphism composed with order reversal and reindexing.

    The parity map negates the first generator together with two of the
    central parameters; reversal fixes the generators and flips their
    commutator.  Reindexing the free coefficients afterwards lands exactly
    on the other branch, so the two branches carry the same content.
    """
    ring = hahn_ring()
    s = hahn_system()
    flip = {n: ring.var(n) for n in HAHN_PARAMS}
    flip["d2"] = -ring.var("d2")
    flip["e1"] = -ring.var("e1")
    repar = {n: ring.var(n) for n in HAHN_PARAMS}
    repar["z13"] = -ring.var("z13") - 2
    repar["z5"] = ring.var("z5") - (ring.var("z13") + 1) * ring.var("e2")
    out = s.zero_el()
    for w, c in el.terms.items():
        cc = _as_poly(c, ring).substitute(flip).substitute(repar)
        sign = (-1) ** sum(1 for r in w if s.names[r] == "H1")
        word = tuple(s.names[r] for r in reversed(w))
        out = out + s.scalar(cc * sign) * s.element({word: 1})
    return out


def verify_hahn_realisation() -> dict:
    """Both sign branches close on the family with the expected top weights.

    Also checks that the two branches are images of one another under the
    parity-and-reversal transform, which certifies the branch-sign reading
    of the coefficient formulas independently of the closure computation.
    """
    ring = hahn_ring()
    branches = {}
    ok = True
    for branch in (1, -1):
        a, b = heun_hahn_pair(branch)
        sol = extract_family_params(a, b, ring)
        if sol is None:
            branches[branch] = {"extracted": False}
            ok = False
            continue
        good = (
            sol["a0"] == ring.const(-6)
            and sol["a0p"] == ring.const(-2)
            and sol["a1"] == ring.zero()
        )
        branches[branch] = {
            "extracted": True,
            "leading": sol["a0"].to_text(),
            "cube": sol["a0p"].to_text(),
            "mixed": sol["a1"].to_text(),
            "ok": good,
        }
        ok = ok and good
    up, low = heun_hahn_pair(1), heun_hahn_pair(-1)
    related = (
        _branch_transform(up[0]) == low[0] and _branch_transform(up[1]) == low[1]
    )
    ok = ok and related
    return {
        "branches": {str(k): v for k, v in branches.items()},
        "branches_related_by_transform": related,
        "ok": ok,
    }
