"""The three-generator cubic family: relations, potential calculus, Casimir.

The family lives over a ring of ten central parameters and is generated by
A, B, C of weights 3, 4, 6.  The first commutator closes on C, the other two
close on quadratic and cubic expressions with parameter coefficients, so the
rewriting rules of ``build_system`` order any word onto the PBW monomials
A^i B^j C^k.  The same relations arise as cyclic derivatives of a potential,
a single combination of cyclic words; ``potential_terms`` builds it and the
``verify_*`` helpers recheck both descriptions against each other in the free
algebra, with no rewriting involved.

``central_element`` returns the degree-12 Casimir with its ten parameter
coefficients; centrality is a finite symbolic computation.  The sl(3)-related
specialisation replaces the parameters by (anti)symmetrised polynomials in
k1, k2, k3 (weight 2) and l1, l2, l3 (weight 3), and ``closure_constant``
carries the degree-12 scalar that cuts out the centraliser quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .poly import Polynomial, PolynomialRing
from .rewrite import NCElement, RewriteSystem, anticommutator, commutator

__all__ = [
    "FamilyParameters",
    "FamilyAlgebra",
    "parameter_ring",
    "generic_parameters",
    "generic_algebra",
    "kl_ring",
    "specialised_parameters",
    "specialised_algebra",
    "closure_constant",
    "build_system",
    "central_element",
]

GEN_WEIGHTS = (("A", 3), ("B", 4), ("C", 6))
PARAM_NAMES = ("a0", "a0p", "a1", "a2", "a3", "a4", "a5", "a6", "a8", "a9")
PARAM_WEIGHTS = {"a0": 0, "a0p": 0, "a1": 1, "a2": 2, "a3": 3, "a4": 4,
                 "a5": 5, "a6": 6, "a8": 8, "a9": 9}
# Parameter weight budget of each commutator relation: one less than the
# weight of its left-hand side, per generator weights 3, 4, 6.
RELATION_BOUNDS = {"AB": 6, "AC": 8, "BC": 9}


@dataclass(frozen=True)
class FamilyParameters:
    """The ten structure coefficients; polynomials or plain rationals."""

    a0: object
    a0p: object
    a1: object
    a2: object
    a3: object
    a4: object
    a5: object
    a6: object
    a8: object
    a9: object

    def as_dict(self) -> dict[str, object]:
        return {n: getattr(self, n) for n in PARAM_NAMES}


@dataclass(frozen=True)
class FamilyAlgebra:
    system: RewriteSystem
    params: FamilyParameters


@lru_cache(maxsize=None)
def parameter_ring() -> PolynomialRing:
    return PolynomialRing(PARAM_NAMES, degrees=PARAM_WEIGHTS)


@lru_cache(maxsize=None)
def generic_parameters() -> FamilyParameters:
    ring = parameter_ring()
    return FamilyParameters(*(ring.var(n) for n in PARAM_NAMES))


def build_system(p: FamilyParameters) -> RewriteSystem:
    rules = {
        ("B", "A"): {("A", "B"): 1, ("C",): -1},
        ("C", "A"): {
            ("A", "C"): 1,
            ("B", "B"): -p.a0,
            ("A", "B"): -2 * p.a1,
            ("C",): p.a1,
            ("A", "A"): -p.a2,
            ("B",): -p.a4,
            ("A",): -p.a5,
            (): -p.a8,
        },
        ("C", "B"): {
            ("B", "C"): 1,
            ("A", "A", "A"): -p.a0p,
            ("B", "B"): p.a1,
            ("A", "B"): 2 * p.a2,
            ("C",): -p.a2,
            ("A", "A"): -p.a3,
            ("B",): p.a5,
            ("A",): -p.a6,
            (): -p.a9,
        },
    }
    return RewriteSystem(list(GEN_WEIGHTS), rules)


@lru_cache(maxsize=None)
def generic_algebra() -> FamilyAlgebra:
    return FamilyAlgebra(build_system(generic_parameters()), generic_parameters())


def _coeff_weight(c: object) -> int:
    if isinstance(c, Polynomial):
        return max(c.weighted_degree(), 0)
    return 0


def relation_corrections(p: FamilyParameters) -> dict[str, dict[tuple[int, ...], object]]:
    """The commutator values [A,B], [A,C], [B,C] as free-word dicts (A,B,C = 0,1,2)."""
    return {
        "AB": {(2,): 1},
        "AC": _free({(1, 1): p.a0, (0, 1): p.a1, (1, 0): p.a1, (0, 0): p.a2,
                     (1,): p.a4, (0,): p.a5, (): p.a8}),
        "BC": _free({(0, 0, 0): p.a0p, (1, 1): -p.a1, (0, 1): -p.a2, (1, 0): -p.a2,
                     (0, 0): p.a3, (1,): -p.a5, (0,): p.a6, (): p.a9}),
    }


def degree_bookkeeping(p: FamilyParameters) -> dict:
    """Check each relation value stays below the weight of its left side."""
    report = {}
    ok = True
    for name, terms in relation_corrections(p).items():
        weights = [sum((3, 4, 6)[x] for x in w) + _coeff_weight(c) for w, c in terms.items()]
        top = max(weights, default=0)
        report[name] = {"max_weight": top, "bound": RELATION_BOUNDS[name]}
        ok = ok and top <= RELATION_BOUNDS[name]
    report["ok"] = ok
    return report


# -- free-algebra potential calculus ------------------------------------

def _free(terms: dict) -> dict:
    return {w: c for w, c in terms.items() if c}


def _acc(d: dict, key, value) -> None:
    old = d.get(key)
    new = value if old is None else old + value
    if new:
        d[key] = new
    elif old is not None:
        del d[key]


def free_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            _acc(out, wa + wb, ca * cb)
    return out


def free_scale(a: dict, c) -> dict:
    return {} if not c else {w: c * v for w, v in a.items()}


def free_add(*terms: dict) -> dict:
    out: dict = {}
    for t in terms:
        for w, c in t.items():
            _acc(out, w, c)
    return out


def cyclic_canonical(word: tuple[int, ...]) -> tuple[int, ...]:
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def potential_terms(p: FamilyParameters) -> dict[tuple[int, ...], object]:
    """The potential as a dict on canonical rotations of cyclic words."""
    entries = [
        ((0, 1, 2), 1),
        ((1, 0, 2), -1),
        ((0, 0, 0, 0), -Fraction(1, 4) * p.a0p),
        ((0, 0, 0), -Fraction(1, 3) * p.a3),
        ((1, 1, 1), Fraction(1, 3) * p.a0),
        ((0, 0, 1), p.a2),
        ((0, 1, 1), p.a1),
        ((0, 0), -Fraction(1, 2) * p.a6),
        ((0, 1), p.a5),
        ((1, 1), Fraction(1, 2) * p.a4),
        ((2, 2), -Fraction(1, 2)),
        ((0,), -p.a9),
        ((1,), p.a8),
    ]
    pot: dict[tuple[int, ...], object] = {}
    for word, c in entries:
        if c:
            _acc(pot, cyclic_canonical(word), c)
    return pot


def cyclic_derivative(pot: dict, gen: int) -> dict:
    out: dict = {}
    for cw, c in pot.items():
        for s, letter in enumerate(cw):
            if letter == gen:
                _acc(out, cw[s + 1 :] + cw[:s], c)
    return out


def lower_potential(p: FamilyParameters) -> dict:
    """Terms of the potential of weight below 13 = 3 + 4 + 6."""
    pot = potential_terms(p)
    low = {}
    for cw, c in pot.items():
        if sum((3, 4, 6)[x] for x in cw) + _coeff_weight(c) < 13:
            low[cw] = c
    return low


def verify_potential_matches_relations(p: FamilyParameters) -> dict:
    pot = potential_terms(p)
    rels = relation_corrections(p)
    # Full derivatives vanish exactly on the defining relations.
    d_c = cyclic_derivative(pot, 2)
    d_b = cyclic_derivative(pot, 1)
    d_a = cyclic_derivative(pot, 0)
    rel1 = free_add({(0, 1): 1, (1, 0): -1}, free_scale(rels["AB"], -1))
    rel2 = free_add({(0, 2): 1, (2, 0): -1}, free_scale(rels["AC"], -1))
    rel3 = free_add({(1, 2): 1, (2, 1): -1}, free_scale(rels["BC"], -1))
    full_ok = d_c == rel1 and free_scale(d_b, -1) == rel2 and d_a == rel3
    # The below-top part alone produces the commutator values directly.
    low = lower_potential(p)
    low_ok = (
        free_scale(cyclic_derivative(low, 2), -1) == rels["AB"]
        and cyclic_derivative(low, 1) == rels["AC"]
        and free_scale(cyclic_derivative(low, 0), -1) == rels["BC"]
    )
    return {"full_derivatives": full_ok, "lower_part": low_ok, "ok": full_ok and low_ok}


def verify_free_associativity_criterion(p: FamilyParameters) -> dict:
    """The rewriting-consistency identity for the below-top potential part."""
    pot = potential_terms(p)
    low = lower_potential(p)
    dropped = {cw for cw in pot if cw not in low}
    top_only = dropped == {cyclic_canonical((0, 1, 2)), cyclic_canonical((1, 0, 2))}
    sides = [free_add(), free_add()]
    for gen in (0, 1, 2):
        d = cyclic_derivative(low, gen)
        x = {(gen,): 1}
        sides[0] = free_add(sides[0], free_mul(x, d))
        sides[1] = free_add(sides[1], free_mul(d, x))
    identity = sides[0] == sides[1]
    return {"top_words_only": top_only, "identity": identity,
            "ok": top_only and identity}


# -- the Casimir element -------------------------------------------------

def casimir_coefficients(p: FamilyParameters) -> dict[str, object]:
    third = Fraction(1, 3)
    sixth = Fraction(1, 6)
    return {
        "x1": sixth * (12 * p.a9 + 3 * p.a0 * p.a5 * p.a0p + 2 * p.a4 * p.a3
                       - p.a4 * p.a0p * p.a1 - 6 * p.a6 * p.a1),
        "x2": third * (-6 * p.a8 - 3 * p.a4 * p.a2 + p.a0 * p.a4 * p.a0p
                       + p.a0 * p.a6 + 6 * p.a5 * p.a1),
        "x3": sixth * (6 * p.a6 + 3 * p.a4 * p.a0p + 3 * p.a0 * p.a2 * p.a0p
                       - 4 * p.a3 * p.a1 - p.a0p * p.a1 * p.a1),
        "x4": third * (-3 * p.a5 + p.a0 * p.a3 + 3 * p.a2 * p.a1 + p.a0 * p.a0p * p.a1),
        "x5": third * (-3 * p.a4 - 4 * p.a0 * p.a2 + p.a0 * p.a0 * p.a0p
                       + 6 * p.a1 * p.a1),
        "x6": third * (2 * p.a3 - p.a0p * p.a1),
        "x7": -2 * p.a2 + p.a0 * p.a0p,
        "x8": 2 * p.a1,
        "x9": Fraction(1, 2) * p.a0p,
        "x10": -Fraction(2, 3) * p.a0,
    }


def central_element(alg: FamilyAlgebra) -> NCElement:
    s = alg.system
    x = casimir_coefficients(alg.params)
    a, b, c = s.gen("A"), s.gen("B"), s.gen("C")
    omega = (
        x["x1"] * a
        + x["x2"] * b
        + x["x3"] * (a * a)
        + x["x4"] * anticommutator(a, b)
        + x["x5"] * (b * b)
        + x["x6"] * (a * a * a)
        + x["x7"] * (a * b * a)
        + x["x8"] * (b * c)
        + (-x["x8"]) * (a * b * b)
        + x["x9"] * (a * a * a * a)
        + x["x10"] * (b * b * b)
        + c * c
    )
    return omega.normal_form()


def verify_centrality(alg: FamilyAlgebra) -> dict:
    omega = central_element(alg)
    witness = {}
    for name in ("A", "B", "C"):
        witness[name] = commutator(omega, alg.system.gen(name)) == 0
    return {"commutators": witness, "ok": all(witness.values())}


# -- the k,l specialisation ---------------------------------------------

@lru_cache(maxsize=None)
def kl_ring() -> PolynomialRing:
    return PolynomialRing(
        ["k1", "k2", "k3", "l1", "l2", "l3"],
        degrees={"k1": 2, "k2": 2, "k3": 2, "l1": 3, "l2": 3, "l3": 3},
    )


def _permutation_sign(perm: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def apply_index_symmetry(p: Polynomial, perm: tuple[int, int, int], negate_l: bool = False) -> Polynomial:
    """Permute the two index families in step; optionally negate the odd family."""
    if p.ring != kl_ring():
        raise ValueError("expected a polynomial over the k,l ring")
    out: dict = {}
    for exp, c in p.terms.items():
        new = [0] * 6
        for i in range(3):
            new[perm[i]] = exp[i]
            new[3 + perm[i]] = exp[3 + i]
        if negate_l and sum(exp[3:]) % 2:
            c = -c
        _acc(out, tuple(new), c)
    return Polynomial(p.ring, out)


def symmetrise(p: Polynomial, signed: bool) -> Polynomial:
    acc = kl_ring().zero()
    for perm in permutations((0, 1, 2)):
        image = apply_index_symmetry(p, perm)
        acc = acc + (_permutation_sign(perm) * image if signed else image)
    return acc / 6


@lru_cache(maxsize=None)
def specialised_parameters() -> FamilyParameters:
    ring = kl_ring()
    k1, k2, k3, l1, l2, l3 = ring.gens()
    F = Fraction
    a2 = F(1, 2) * (k1 + k2 + k3)
    a5 = symmetrise(2 * k2 * l1, signed=True)
    a6 = symmetrise(
        F(1, 16) * (-(k1 ** 3) + 2 * k1 ** 2 * k2 - 6 * k1 * k2 * k3)
        + F(3, 8) * (k1 ** 2 - 2 * k1 * k2)
        + F(1, 6) * l1 ** 2
        - F(5, 3) * l1 * l2,
        signed=False,
    )
    a8 = symmetrise(
        F(1, 128) * (k1 ** 4 - 8 * k1 ** 3 * k2 + 6 * k1 ** 2 * k2 ** 2 + 4 * k1 ** 2 * k2 * k3)
        - F(1, 32) * (3 * k1 ** 3 - 6 * k1 ** 2 * k2 + 2 * k1 * k2 * k3)
        - F(1, 24) * k1 * (l1 ** 2 - 6 * l2 ** 2 + 4 * l1 * l2 - 26 * l2 * l3)
        + F(1, 2) * l1 ** 2
        + l1 * l2,
        signed=False,
    )
    a9 = symmetrise(
        l2
        * (
            -F(4, 9) * l1 ** 2
            + F(1, 24) * (k1 ** 3 - 2 * k1 ** 2 * k2 + k1 * k2 ** 2 + 9 * k1 ** 2 * k3)
            + F(1, 2) * (k1 ** 2 - k1 * k2)
        ),
        signed=True,
    )
    zero = ring.zero()
    return FamilyParameters(
        a0=ring.const(-6), a0p=ring.const(-2), a1=zero, a2=a2, a3=zero,
        a4=zero, a5=a5, a6=a6, a8=a8, a9=a9,
    )


@lru_cache(maxsize=None)
def specialised_algebra() -> FamilyAlgebra:
    return FamilyAlgebra(build_system(specialised_parameters()), specialised_parameters())


@lru_cache(maxsize=None)
def closure_constant() -> Polynomial:
    """Degree-12 scalar equated to the Casimir in the centraliser quotient."""
    ring = kl_ring()
    k1, k2, k3, l1, l2, l3 = ring.gens()
    F = Fraction
    inner = (
        F(1, 4608) * k1 ** 6
        - F(1, 768) * k1 ** 5 * (1 + 2 * k2)
        + F(1, 768) * k1 ** 4 * (-39 + 6 * k2 + 5 * k2 ** 2 + 3 * k2 * k3)
        - F(1, 1152) * k1 ** 3 * (
            -648 - 468 * k2 + 6 * k2 ** 2 + 5 * k2 ** 3 - 6 * k2 * k3
            + 6 * k2 ** 2 * k3 + 2 * l1 ** 2 + 8 * l1 * l2 - 12 * l2 ** 2 + 140 * l2 * l3
        )
        - F(1, 2304) * k1 ** 2 * (
            2592 * k2 + 702 * k2 ** 2 + 468 * k2 * k3 + 42 * k2 ** 2 * k3
            + k2 ** 2 * k3 ** 2 - 40 * l1 ** 2 - 40 * k2 * l1 ** 2 + 416 * l1 * l2
            - 16 * k2 * l1 * l2 + 144 * k3 * l1 * l2 - 464 * l2 ** 2 + 56 * k2 * l2 ** 2
            - 360 * k3 * l2 ** 2 - 560 * l2 * l3 - 720 * k3 * l2 * l3
        )
        - F(1, 288) * k1 * (
            -108 * k2 * k3 - 24 * l1 ** 2 + 68 * k2 * l1 ** 2 + 17 * k2 * k3 * l1 ** 2
            - 672 * l1 * l2 - 52 * k2 * l1 * l2 - 296 * k3 * l1 * l2 - 2 * k2 * k3 * l1 * l2
            - 48 * l2 ** 2 - 206 * k3 * l2 ** 2 + 1392 * l2 * l3
        )
        + F(1, 432) * l1 * (
            -864 * l1 + l1 ** 3 - 1728 * l2 + 24 * l1 ** 2 * l2
            - 26 * l1 * l2 ** 2 + 244 * l1 * l2 * l3
        )
    )
    return symmetrise(inner, signed=False)


def specialised_casimir_shortcut() -> dict[str, Polynomial]:
    """Independently printed coefficient list for the specialised Casimir."""
    p = specialised_parameters()
    ring = kl_ring()
    return {
        "x1": 6 * p.a5 + 2 * p.a9,
        "x2": -2 * p.a6 - 2 * p.a8,
        "x3": 6 * p.a2 + p.a6,
        "x4": -p.a5,
        "x5": 8 * p.a2 - 24,
        "x6": ring.zero(),
        "x7": -2 * p.a2 + 12,
        "x8": ring.zero(),
        "x9": ring.const(-1),
        "x10": ring.const(4),
    }


def verify_specialised_casimir_form() -> dict:
    generic = casimir_coefficients(specialised_parameters())
    shortcut = specialised_casimir_shortcut()
    mismatches = [n for n in shortcut if generic[n] != shortcut[n]]
    return {"mismatches": mismatches, "ok": not mismatches}


def parameter_symmetry_report() -> dict:
    """Equivariance of the specialised coefficients under the index symmetries.

    Simultaneous index permutations act with the permutation sign on the two
    antisymmetric coefficients, negating the odd family flips them once more,
    and everything else, including the degree-12 closure scalar, is invariant.
    """
    p = specialised_parameters()
    a12 = closure_constant()
    even = {"a2": p.a2, "a6": p.a6, "a8": p.a8, "a12": a12}
    odd = {"a5": p.a5, "a9": p.a9}
    results = {}
    ok = True
    for perm in permutations((0, 1, 2)):
        for tau in (False, True):
            eps = _permutation_sign(perm) * (-1 if tau else 1)
            good = all(
                apply_index_symmetry(v, perm, tau) == v for v in even.values()
            ) and all(
                apply_index_symmetry(v, perm, tau) == eps * v for v in odd.values()
            )
            results[f"perm={perm},flip={tau}"] = good
            ok = ok and good
    return {"maps": results, "ok": ok}


# -- dimension counting --------------------------------------------------

def series_counts(weights: tuple[int, ...], order: int, numerator: tuple[int, ...] = ()) -> list[int]:
    """Coefficients of prod(1 - t^m) / prod(1 - t^w) up to the given order."""
    ways = [0] * (order + 1)
    ways[0] = 1
    for w in weights:
        for n in range(w, order + 1):
            ways[n] += ways[n - w]
    for m in numerator:
        for n in range(order, m - 1, -1):
            ways[n] -= ways[n - m]
    return ways


def verify_graded_dimensions(nmax: int = 36) -> dict:
    system = generic_algebra().system
    expected = series_counts((3, 4, 6), nmax)
    got = [system.graded_dim(n) for n in range(nmax + 1)]
    return {"nmax": nmax, "match": got == expected, "dims": got, "ok": got == expected}


def quotient_basis_counts(order: int) -> list[int]:
    """Ordered monomials in the six parameters and A, B with at most one C."""
    ways = series_counts((2, 2, 2, 3, 3, 3, 3, 4), order)
    out = list(ways)
    for n in range(6, order + 1):
        out[n] += ways[n - 6]
    return out


def verify_quotient_series(order: int = 24) -> dict:
    got = quotient_basis_counts(order)
    expected = series_counts((2, 2, 2, 3, 3, 3, 3, 4, 6), order, numerator=(12,))
    return {"order": order, "match": got == expected, "ok": got == expected}


def specialise(p: FamilyParameters, point: dict[str, Fraction]) -> FamilyParameters:
    """Numeric structure coefficients at a rational parameter point."""
    values = {}
    for name, v in p.as_dict().items():
        values[name] = v.evaluate(point) if isinstance(v, Polynomial) else Fraction(v)
    return FamilyParameters(**values)
