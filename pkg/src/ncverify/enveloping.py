"""Tensor powers of enveloping algebras and their diagonal centralisers.

``build_env(N, L, kind)`` returns the rewriting system of U(g)^(tensor L) for
g = gl(N) or sl(N).  Each copy carries the standard matrix-unit basis; for
the traceless kind the diagonal is replaced by the simple-root coweights
h_i = e_ii - e_(i+1)(i+1) and matrix units enter combinations with fractional
coefficients.  Generators of different copies commute, so the engine reduces
per copy and the structure constants are validated for antisymmetry and the
Jacobi identity when a table is first built.

``trace_element`` produces the cyclic invariant sums with one matrix-unit
factor per copy label (summation over all index tuples); these commute with
the diagonal image of every basis element, which ``verify_traces_central``
checks head on.  ``centraliser_generators`` builds the nine distinguished
elements of the two-copy sl(3) centraliser; the heavy verifications
(the three commutator relations, the degree-12 identity, the reduction of
the length-6 trace) each get their own ``verify_*`` entry point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import potential
from .poly import Polynomial
from .rewrite import NCElement, RewriteSystem, anticommutator, commutator

__all__ = [
    "EnvAlgebra",
    "build_env",
    "standard_algebra",
    "trace_element",
    "centraliser_generators",
    "verify_traces_central",
    "verify_trace_reduction",
    "verify_phi_relations",
    "verify_omega_image_symbolic",
    "verify_series_consistency",
]

Label = tuple


def _copy_basis(size: int, kind: str) -> tuple[Label, ...]:
    raising = [("e", p, q) for p in range(1, size + 1) for q in range(1, size + 1) if p < q]
    lowering = [("e", p, q) for p in range(1, size + 1) for q in range(1, size + 1) if p > q]
    if kind == "gl":
        cartan = [("e", p, p) for p in range(1, size + 1)]
    else:
        cartan = [("h", i) for i in range(1, size)]
    return tuple(raising + lowering + cartan)


def _label_name(label: Label, copy: int) -> str:
    if label[0] == "e":
        return f"e{label[1]}{label[2]}_{copy}"
    return f"h{label[1]}_{copy}"


def _gl_combo(label: Label) -> dict[tuple[int, int], int]:
    if label[0] == "e":
        return {(label[1], label[2]): 1}
    i = label[1]
    return {(i, i): 1, (i + 1, i + 1): -1}


def _bracket_gl(a: tuple[int, int], b: tuple[int, int]) -> dict[tuple[int, int], int]:
    (p, q), (r, s) = a, b
    out: dict[tuple[int, int], int] = {}
    if q == r:
        out[(p, s)] = out.get((p, s), 0) + 1
    if s == p:
        out[(r, q)] = out.get((r, q), 0) - 1
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _bracket_table(size: int, kind: str) -> dict[tuple[Label, Label], dict[Label, int]]:
    basis = _copy_basis(size, kind)
    table: dict[tuple[Label, Label], dict[Label, int]] = {}
    for x in basis:
        for y in basis:
            acc: dict[tuple[int, int], int] = {}
            for ga, ca in _gl_combo(x).items():
                for gb, cb in _gl_combo(y).items():
                    for gc, cc in _bracket_gl(ga, gb).items():
                        v = acc.get(gc, 0) + ca * cb * cc
                        if v:
                            acc[gc] = v
                        else:
                            acc.pop(gc, None)
            out: dict[Label, int] = {}
            if kind == "gl":
                for (p, q), c in acc.items():
                    out[("e", p, q)] = c
            else:
                diag = [acc.pop((p, p), 0) for p in range(1, size + 1)]
                if sum(diag):
                    raise AssertionError("bracket left the traceless subalgebra")
                running = 0
                for i in range(1, size):
                    running += diag[i - 1]
                    if running:
                        out[("h", i)] = running
                for (p, q), c in acc.items():
                    out[("e", p, q)] = c
            table[(x, y)] = {k: v for k, v in out.items() if v}
    _validate_lie(basis, table)
    return table


def _validate_lie(basis, table) -> None:
    def brk(x: dict[Label, int], y: dict[Label, int]) -> dict[Label, int]:
        acc: dict[Label, int] = {}
        for lx, cx in x.items():
            for ly, cy in y.items():
                for lz, cz in table[(lx, ly)].items():
                    v = acc.get(lz, 0) + cx * cy * cz
                    if v:
                        acc[lz] = v
                    else:
                        del acc[lz]
        return acc

    for x in basis:
        for y in basis:
            anti = {k: v for k, v in table[(x, y)].items()}
            for k, v in table[(y, x)].items():
                anti[k] = anti.get(k, 0) + v
            if any(anti.values()):
                raise AssertionError(f"antisymmetry fails on {x}, {y}")
    for x in basis:
        dx = {x: 1}
        for y in basis:
            dy = {y: 1}
            for z in basis:
                dz = {z: 1}
                total: dict[Label, int] = {}
                for part in (
                    brk(dx, table[(y, z)]),
                    brk(dy, table[(z, x)]),
                    brk(dz, table[(x, y)]),
                ):
                    for k, v in part.items():
                        total[k] = total.get(k, 0) + v
                if any(total.values()):
                    raise AssertionError(f"Jacobi fails on {x}, {y}, {z}")


@dataclass(frozen=True)
class EnvAlgebra:
    system: RewriteSystem
    size: int
    copies: int
    kind: str
    basis: tuple[Label, ...]

    def rank(self, label: Label, copy: int) -> int:
        return self.system.rank[_label_name(label, copy)]

    def gen(self, label: Label, copy: int) -> NCElement:
        return self.system.gen(_label_name(label, copy))

    def diag_combo(self, p: int, copy: int) -> dict[int, Fraction]:
        """The p-th diagonal matrix unit as a combination of generator ranks."""
        if self.kind == "gl":
            return {self.rank(("e", p, p), copy): Fraction(1)}
        out: dict[int, Fraction] = {}
        for j in range(1, self.size):
            c = (Fraction(1) if j >= p else Fraction(0)) - Fraction(j, self.size)
            if c:
                out[self.rank(("h", j), copy)] = c
        return out

    def unit_combo(self, p: int, q: int, copy: int) -> dict[int, Fraction]:
        if p == q:
            return self.diag_combo(p, copy)
        return {self.rank(("e", p, q), copy): Fraction(1)}

    def diagonal_gen(self, label: Label) -> NCElement:
        """Sum of the same basis element over all copies."""
        terms = {}
        for a in range(1, self.copies + 1):
            terms[(self.rank(label, a),)] = 1
        return NCElement(self.system, terms)


@lru_cache(maxsize=None)
def build_env(size: int, copies: int, kind: str) -> EnvAlgebra:
    if kind not in ("gl", "sl"):
        raise ValueError("kind must be gl or sl")
    basis = _copy_basis(size, kind)
    table = _bracket_table(size, kind)
    generators = []
    for a in range(1, copies + 1):
        for label in basis:
            generators.append((_label_name(label, a), 1))
    rules: dict[tuple[str, str], dict[tuple[str, ...], int]] = {}
    per_copy = len(basis)
    for a in range(1, copies + 1):
        for i in range(per_copy):
            for j in range(i):
                x, y = basis[i], basis[j]
                rhs: dict[tuple[str, ...], int] = {
                    (_label_name(y, a), _label_name(x, a)): 1
                }
                for lab, c in table[(x, y)].items():
                    key = (_label_name(lab, a),)
                    rhs[key] = rhs.get(key, 0) + c
                rules[(_label_name(x, a), _label_name(y, a))] = rhs
    names = [n for n, _ in generators]
    for gi, g in enumerate(names):
        for h in names[:gi]:
            if (g, h) not in rules:
                rules[(g, h)] = {(h, g): 1}
    system = RewriteSystem(generators, rules)
    env = EnvAlgebra(system, size, copies, kind, basis)
    if kind == "sl":
        total: dict[int, Fraction] = {}
        for p in range(1, size + 1):
            for r, c in env.diag_combo(p, 1).items():
                total[r] = total.get(r, Fraction(0)) + c
        if any(total.values()):
            raise AssertionError("diagonal units do not sum to zero")
    return env


@lru_cache(maxsize=None)
def standard_algebra() -> EnvAlgebra:
    return build_env(3, 2, "sl")


def standard_env_systems() -> list[tuple[str, EnvAlgebra]]:
    out = []
    for kind in ("gl", "sl"):
        for size in (2, 3):
            for copies in (1, 2, 3):
                out.append((f"{kind}{size}x{copies}", build_env(size, copies, kind)))
    return out


# -- invariant traces ----------------------------------------------------

@lru_cache(maxsize=None)
def trace_element(env: EnvAlgebra, pattern: tuple[int, ...], reversed_indices: bool = False) -> NCElement:
    """Cyclic matrix-unit sum with one factor per entry of the copy pattern."""
    d = len(pattern)
    if d < 1 or any(not 1 <= a <= env.copies for a in pattern):
        raise ValueError("bad copy pattern")
    raw: dict[tuple[int, ...], object] = {}
    for idx in product(range(1, env.size + 1), repeat=d):
        expansions: list[tuple[tuple[int, ...], Fraction]] = [((), Fraction(1))]
        for s in range(d):
            if reversed_indices:
                p, q = idx[s], idx[(s + 1) % d]
            else:
                p, q = idx[(s + 1) % d], idx[s]
            combo = env.unit_combo(p, q, pattern[s])
            expansions = [
                (w + (r,), c * fc)
                for (w, c) in expansions
                for r, fc in combo.items()
            ]
        for w, c in expansions:
            old = raw.get(w)
            new = c if old is None else old + c
            if new:
                raw[w] = new
            else:
                del raw[w]
    return NCElement(env.system, raw).normal_form()


def diagonal_casimir(env: EnvAlgebra, d: int, reversed_indices: bool = False) -> NCElement:
    """Same cyclic sum with every factor summed over all copies."""
    total = env.system.zero_el()
    for pattern in product(range(1, env.copies + 1), repeat=d):
        total = total + trace_element(env, pattern, reversed_indices)
    return total


@lru_cache(maxsize=None)
def centraliser_generators() -> dict[str, NCElement]:
    env = standard_algebra()
    half = Fraction(1, 2)

    def T(*pat: int) -> NCElement:
        return trace_element(env, pat)

    k1 = T(1, 1)
    k2 = T(2, 2)
    k3 = diagonal_casimir(env, 2)
    l1 = half * (T(1, 1, 1) + trace_element(env, (1, 1, 1), True))
    l2 = half * (T(2, 2, 2) + trace_element(env, (2, 2, 2), True))
    l3 = -1 * (half * (diagonal_casimir(env, 3) + diagonal_casimir(env, 3, True)))
    x = half * (T(1, 1, 2) - T(1, 2, 2)) + Fraction(1, 3) * (l1 - l2)
    y = (
        T(1, 1, 2, 2)
        + Fraction(3, 2) * (T(1, 1, 2) + T(1, 2, 2))
        - Fraction(1, 12) * (T(1, 2) * T(1, 2))
        - Fraction(5, 12) * (T(1, 1) * T(2, 2))
        + Fraction(5, 2) * T(1, 2)
    )
    z = commutator(x, y)
    return {
        "k1": k1, "k2": k2, "k3": k3,
        "l1": l1, "l2": l2, "l3": l3,
        "X": x, "Y": y, "Z": z,
    }


def evaluate_poly_at(p: Polynomial, assignments: dict[str, NCElement], system: RewriteSystem) -> NCElement:
    """Value of a commutative polynomial on pairwise commuting elements."""
    pows: dict[tuple[str, int], NCElement] = {}

    def power(name: str, e: int) -> NCElement:
        key = (name, e)
        if key not in pows:
            if e == 1:
                pows[key] = assignments[name]
            else:
                pows[key] = power(name, e - 1) * assignments[name]
        return pows[key]

    total = NCElement(system, {})
    names = p.ring.names
    for exp, c in p.terms.items():
        term: NCElement | None = None
        for i, e in enumerate(exp):
            if e:
                f = power(names[i], e)
                term = f if term is None else term * f
        part = NCElement(system, {(): c}) if term is None else c * term
        total = total + part
    return total


# -- verifications -------------------------------------------------------

def standard_trace_patterns(max_len: int = 4) -> list[tuple[int, ...]]:
    pats = []
    for d in range(2, max_len + 1):
        pats.extend(product((1, 2), repeat=d))
    return pats


def verify_traces_central(extra_patterns: tuple[tuple[int, ...], ...] = ((1, 1, 2, 2, 1, 2),)) -> dict:
    env = standard_algebra()
    patterns = standard_trace_patterns() + list(extra_patterns)
    failures = []
    for pat in patterns:
        t = trace_element(env, pat)
        for label in env.basis:
            if commutator(t, env.diagonal_gen(label)) != 0:
                failures.append({"pattern": pat, "label": label})
    return {
        "patterns": len(patterns),
        "commutators": len(patterns) * len(env.basis),
        "failures": failures,
        "ok": not failures,
    }


def verify_trace_reduction() -> dict:
    env = standard_algebra()

    def T(*pat: int) -> NCElement:
        return trace_element(env, pat)

    lhs = (
        2 * T(1, 1, 2, 2, 1, 2)
        + commutator(T(1, 1, 2), T(1, 1, 2, 2))
        + Fraction(1, 3) * (T(1, 1, 1) * T(2, 2, 2))
        - T(1, 1, 2) * T(1, 2, 2)
        - T(1, 1, 2, 2) * T(1, 2)
    )
    rhs = (
        T(1, 1) * T(1, 2, 2)
        - T(2, 2) * T(1, 1, 2)
        - 6 * T(1, 1, 2, 2)
        + 2 * (T(1, 1) * T(2, 2))
        - 12 * (T(1, 1, 2) + T(1, 2, 2))
        - 16 * T(1, 2)
    )
    top_len = max((len(w) for w in lhs.terms), default=0)
    return {
        "degree_six_cancels": top_len <= 5,
        "reduces_to_lower_generators": lhs == rhs,
        "ok": top_len <= 5 and lhs == rhs,
    }


def specialised_coefficients_at_generators() -> dict[str, NCElement]:
    env = standard_algebra()
    gens = centraliser_generators()
    central = {n: gens[n] for n in ("k1", "k2", "k3", "l1", "l2", "l3")}
    p = potential.specialised_parameters()
    return {
        name: evaluate_poly_at(getattr(p, name), central, env.system)
        for name in ("a2", "a5", "a6", "a8", "a9")
    }


def verify_phi_relations(tick=None) -> dict:
    """The three family relations hold on the distinguished elements."""
    env = standard_algebra()
    gens = centraliser_generators()
    x, y, z = gens["X"], gens["Y"], gens["Z"]
    coeffs = specialised_coefficients_at_generators()
    report = {}
    report["first"] = commutator(x, y) == z
    if tick:
        tick()
    rhs2 = (
        -6 * (y * y)
        + coeffs["a2"] * (x * x)
        + coeffs["a5"] * x
        + coeffs["a8"]
    )
    report["second"] = commutator(x, z) == rhs2
    if tick:
        tick()
    rhs3 = (
        -2 * (x * x * x)
        - coeffs["a2"] * anticommutator(x, y)
        - coeffs["a5"] * y
        + coeffs["a6"] * x
        + coeffs["a9"]
    )
    report["third"] = commutator(y, z) == rhs3
    report["ok"] = report["first"] and report["second"] and report["third"]
    return report


def verify_omega_image_symbolic(tick=None) -> dict:
    """Full expansion of the degree-12 identity in the tensor square."""
    env = standard_algebra()
    gens = centraliser_generators()
    x, y, z = gens["X"], gens["Y"], gens["Z"]
    central = {n: gens[n] for n in ("k1", "k2", "k3", "l1", "l2", "l3")}
    shortcut = potential.specialised_casimir_shortcut()

    def at(nm: str) -> NCElement:
        return evaluate_poly_at(shortcut[nm], central, env.system)

    if tick:
        tick()
    steps = [at("x1") * x, at("x2") * y, at("x3") * (x * x)]
    if tick:
        tick()
    steps.append(at("x4") * anticommutator(x, y))
    steps.append(at("x5") * (y * y))
    if tick:
        tick()
    steps.append(at("x7") * (x * y * x))
    if tick:
        tick()
    x2 = x * x
    steps.append(-1 * (x2 * x2))
    if tick:
        tick()
    y3 = y * y * y
    steps.append(4 * y3)
    if tick:
        tick()
    steps.append(z * z)
    if tick:
        tick()
    omega_img = env.system.zero_el()
    for s in steps:
        omega_img = omega_img + s
    target = evaluate_poly_at(potential.closure_constant(), central, env.system)
    ok = omega_img == target
    return {"identity": ok, "ok": ok}


def verify_generator_degrees() -> dict:
    gens = centraliser_generators()
    expected = {"k1": 2, "k2": 2, "k3": 2, "l1": 3, "l2": 3, "l3": 3,
                "X": 3, "Y": 4, "Z": 6}
    got = {n: gens[n].degree() for n in expected}
    return {"expected": expected, "got": got, "ok": got == expected}


def verify_trace_identities() -> dict:
    """Cross-expressions of the Casimir generators through plain traces."""
    env = standard_algebra()
    gens = centraliser_generators()

    def T(*pat: int) -> NCElement:
        return trace_element(env, pat)

    checks = {
        "k1": gens["k1"] == T(1, 1),
        "k2": gens["k2"] == T(2, 2),
        "k3": gens["k3"] == T(1, 1) + T(2, 2) + 2 * T(1, 2),
        "l1": gens["l1"] == T(1, 1, 1) + Fraction(3, 2) * gens["k1"],
        "l2": gens["l2"] == T(2, 2, 2) + Fraction(3, 2) * gens["k2"],
        "l3": gens["l3"]
        == -1 * gens["l1"] - 1 * gens["l2"] - 3 * (T(1, 1, 2) + T(1, 2, 2)) - 9 * T(1, 2),
    }
    return {"checks": checks, "ok": all(checks.values())}


def verify_casimir_conventions() -> dict:
    """Both index conventions agree up to the stated shift in one copy."""
    env = build_env(3, 1, "sl")
    c2 = trace_element(env, (1, 1))
    c2bar = trace_element(env, (1, 1), True)
    c3 = trace_element(env, (1, 1, 1))
    c3bar = trace_element(env, (1, 1, 1), True)
    checks = {
        "quadratic": c2 == c2bar,
        "cubic": c3 == c3bar - 3 * c2bar,
    }
    return {"checks": checks, "ok": all(checks.values())}


def casimir_eigenvalues(m1, m2) -> tuple[Fraction, Fraction]:
    """Scalars of the degree-2 and degree-3 invariants on the (m1, m2) module."""
    a, b = Fraction(m1), Fraction(m2)
    c2 = Fraction(2, 3) * (a * a + b * b + a * b) - 2
    c3 = Fraction(1, 9) * (a + 2 * b - 3) * (2 * a + b + 3) * (a - b - 3)
    return c2, c3


# -- the two-variable dimension series -----------------------------------

def bivariate_counts(order: int) -> list[list[int]]:
    """Coefficients of the printed two-variable series up to total degree order."""
    size = order + 1
    coeffs = [[0] * size for _ in range(size)]
    coeffs[0][0] = 1
    dens = [(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (2, 2), (3, 3)]
    for (a, b) in dens:
        for i in range(size):
            for j in range(size):
                if i >= a and j >= b:
                    coeffs[i][j] += coeffs[i - a][j - b]
    out = [row[:] for row in coeffs]
    for i in range(size):
        for j in range(size):
            if i >= 6 and j >= 6:
                out[i][j] -= coeffs[i - 6][j - 6]
    return out


def verify_series_consistency(order: int = 24) -> dict:
    table = bivariate_counts(order)
    diagonal = [0] * (order + 1)
    for i in range(order + 1):
        for j in range(order + 1 - i):
            diagonal[i + j] += table[i][j]
    quotient = potential.series_counts(
        (2, 2, 2, 3, 3, 3, 3, 4, 6), order, numerator=(12,)
    )
    return {
        "order": order,
        "diagonal": diagonal,
        "match": diagonal == quotient,
        "ok": diagonal == quotient,
    }
