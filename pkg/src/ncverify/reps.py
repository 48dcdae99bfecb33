"""Exact matrix representations used as an independent evaluation oracle.

Three small highest-weight modules of the rank-two special linear algebra
(defining, its dual, adjoint) are built from explicit matrix units; tensor
pairs of them represent the two-copy algebra, with the diagonal action as
the sum over copies.  ``evaluate`` sends any element of a matching rewriting
system to an exact rational matrix, which turns symbolic identities into
decisive matrix equalities: the rewrite engine and the oracle compute along
entirely separate paths, so agreement between them is meaningful evidence.

Kernel computations are straight Gaussian elimination over rationals with
first-nonzero pivoting, which keeps multiplicity counts deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import potential
from .enveloping import (
    EnvAlgebra,
    _bracket_table,
    _copy_basis,
    build_env,
    casimir_eigenvalues,
    centraliser_generators,
    standard_algebra,
    trace_element,
)
from .rewrite import NCElement, RewriteSystem

__all__ = [
    "Matrix",
    "MatrixRep",
    "TensorRep",
    "standard_reps",
    "tensor_rep",
    "standard_tensor_pairs",
    "evaluate",
    "lr_multiplicity",
    "verify_casimir_scalars",
    "verify_casimir_blocks",
    "verify_centraliser_commutation",
    "verify_omega_image_oracle",
    "verify_representation_independence",
]

Matrix = tuple[tuple[Fraction, ...], ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(_F1 if i == j else _F0 for j in range(n)) for i in range(n)
    )


def zero_matrix(n: int) -> Matrix:
    return tuple((_F0,) * n for _ in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    out = []
    for row in a:
        pairs = [(x, k) for k, x in enumerate(row) if x]
        out.append(
            tuple(sum((x * col[k] for x, k in pairs), _F0) for col in cols)
        )
    return tuple(out)


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb) for ra in a for rb in b
    )


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def is_scalar_matrix(a: Matrix, c) -> bool:
    n = len(a)
    return all(
        a[i][j] == (c if i == j else 0) for i in range(n) for j in range(n)
    )


def rank(rows: list[list[Fraction]], width: int) -> int:
    work = [row[:] for row in rows]
    r = 0
    for col in range(width):
        pivot = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = _F1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def kernel_dimension(rows: list[list[Fraction]], width: int) -> int:
    return width - rank(rows, width)


Label = tuple


class MatrixRep:
    """One copy of the algebra acting on a labeled highest-weight module."""

    def __init__(self, name: str, images: dict[Label, Matrix], weights: tuple[int, int] | None):
        self.name = name
        self.dimension = len(next(iter(images.values())))
        self.images = images
        self.weights = weights
        _check_structure(images)
        if weights is not None and _highest_weight_dim(images, weights) < 1:
            raise AssertionError(f"{name}: no highest-weight vector for {weights}")

    def __repr__(self) -> str:
        return f"MatrixRep({self.name}, dim={self.dimension})"


def _check_structure(images: dict[Label, Matrix]) -> None:
    table = _bracket_table(3, "sl")
    for x, mx in images.items():
        for y, my in images.items():
            want = zero_matrix(len(mx))
            for lab, c in table[(x, y)].items():
                want = mat_add(want, mat_scale(Fraction(c), images[lab]))
            if mat_commutator(mx, my) != want:
                raise AssertionError(f"structure constants fail on {x}, {y}")


def _highest_weight_dim(images: dict[Label, Matrix], weights: tuple[int, int]) -> int:
    n = len(next(iter(images.values())))
    rows: list[list[Fraction]] = []
    for lab in (("e", 1, 2), ("e", 2, 3)):
        rows.extend(list(r) for r in images[lab])
    for i, m in enumerate(weights):
        shifted = mat_sub(images[("h", i + 1)], mat_scale(Fraction(m - 1), identity(n)))
        rows.extend(list(r) for r in shifted)
    return kernel_dimension(rows, n)


def _unit(n: int, p: int, q: int) -> Matrix:
    return tuple(
        tuple(_F1 if (i, j) == (p - 1, q - 1) else _F0 for j in range(n))
        for i in range(n)
    )


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


@lru_cache(maxsize=None)
def standard_reps() -> dict[str, MatrixRep]:
    fund_images: dict[Label, Matrix] = {}
    for label in _copy_basis(3, "sl"):
        if label[0] == "e":
            fund_images[label] = _unit(3, label[1], label[2])
        else:
            i = label[1]
            fund_images[label] = mat_sub(_unit(3, i, i), _unit(3, i + 1, i + 1))
    fundamental = MatrixRep("fundamental", fund_images, (2, 1))
    dual_images = {
        lab: mat_scale(Fraction(-1), _transpose(m)) for lab, m in fund_images.items()
    }
    dual = MatrixRep("dual", dual_images, (1, 2))
    basis = _copy_basis(3, "sl")
    table = _bracket_table(3, "sl")
    index = {lab: i for i, lab in enumerate(basis)}
    adjoint_images: dict[Label, Matrix] = {}
    for g in basis:
        cols: list[list[Fraction]] = [[_F0] * 8 for _ in range(8)]
        for src in basis:
            for tgt, c in table[(g, src)].items():
                cols[index[tgt]][index[src]] = Fraction(c)
        adjoint_images[g] = tuple(tuple(row) for row in cols)
    adjoint = MatrixRep("adjoint", adjoint_images, (2, 2))
    return {"fundamental": fundamental, "dual": dual, "adjoint": adjoint}


class TensorRep:
    """Two commuting copies acting on the tensor product of two modules."""

    def __init__(self, left: MatrixRep, right: MatrixRep):
        self.left = left
        self.right = right
        self.name = f"{left.name}(x){right.name}"
        self.dimension = left.dimension * right.dimension
        il = identity(left.dimension)
        ir = identity(right.dimension)
        self.images: dict[tuple[Label, int], Matrix] = {}
        for lab, m in left.images.items():
            self.images[(lab, 1)] = kron(m, ir)
        for lab, m in right.images.items():
            self.images[(lab, 2)] = kron(il, m)
        for lab in left.images:
            com = mat_commutator(self.images[(lab, 1)], self.images[(lab, 2)])
            if not is_zero_matrix(com):
                raise AssertionError("copies fail to commute")

    def diagonal_image(self, label: Label) -> Matrix:
        return mat_add(self.images[(label, 1)], self.images[(label, 2)])

    def __repr__(self) -> str:
        return f"TensorRep({self.name}, dim={self.dimension})"


@lru_cache(maxsize=None)
def tensor_rep(left_name: str, right_name: str) -> TensorRep:
    reps = standard_reps()
    return TensorRep(reps[left_name], reps[right_name])


def standard_tensor_pairs() -> list[TensorRep]:
    return [
        tensor_rep("fundamental", "fundamental"),
        tensor_rep("fundamental", "dual"),
        tensor_rep("adjoint", "fundamental"),
    ]


def _parse_gen_name(name: str) -> tuple[Label, int]:
    head, _, copy = name.rpartition("_")
    if head.startswith("e"):
        return ("e", int(head[1]), int(head[2])), int(copy)
    return ("h", int(head[1:])), int(copy)


def _rank_images(sys_: RewriteSystem, rep) -> list[Matrix]:
    images = []
    for name in sys_.names:
        label, copy = _parse_gen_name(name)
        if isinstance(rep, TensorRep):
            key = (label, copy)
            if key not in rep.images:
                raise ValueError(f"no image for generator {name}")
            images.append(rep.images[key])
        else:
            if copy != 1 or label not in rep.images:
                raise ValueError(f"no image for generator {name}")
            images.append(rep.images[label])
    return images


def evaluate(element: NCElement, rep) -> Matrix:
    """Image of an element under the representation, word by word."""
    images = _rank_images(element.sys, rep)
    dim = len(images[0]) if images else 1
    memo: dict[tuple[int, ...], Matrix] = {(): identity(dim)}

    def word_value(w: tuple[int, ...]) -> Matrix:
        got = memo.get(w)
        if got is None:
            got = mat_mul(word_value(w[:-1]), images[w[-1]])
            memo[w] = got
        return got

    total = zero_matrix(dim)
    for w, c in sorted(element.terms.items()):
        coeff = c.constant_value() if hasattr(c, "constant_value") else Fraction(c)
        total = mat_add(total, mat_scale(coeff, word_value(w)))
    return total


def lr_multiplicity(left: MatrixRep, right: MatrixRep, target: tuple[int, int]) -> int:
    """Number of copies of the target module inside the tensor product."""
    t = TensorRep(left, right)
    n = t.dimension
    rows: list[list[Fraction]] = []
    for lab in (("e", 1, 2), ("e", 2, 3)):
        rows.extend(list(r) for r in t.diagonal_image(lab))
    for i, m in enumerate(target):
        shifted = mat_sub(
            t.diagonal_image(("h", i + 1)),
            mat_scale(Fraction(m - 1), identity(n)),
        )
        rows.extend(list(r) for r in shifted)
    return kernel_dimension(rows, n)


def poly_at_matrices(p, values: dict[str, Matrix], dim: int) -> Matrix:
    """Commutative polynomial evaluated on pairwise commuting matrices."""
    pows: dict[tuple[str, int], Matrix] = {}

    def power(name: str, e: int) -> Matrix:
        key = (name, e)
        if key not in pows:
            pows[key] = (
                values[name] if e == 1 else mat_mul(power(name, e - 1), values[name])
            )
        return pows[key]

    total = zero_matrix(dim)
    for exp, c in p.terms.items():
        term = None
        for i, e in enumerate(exp):
            if e:
                f = power(p.ring.names[i], e)
                term = f if term is None else mat_mul(term, f)
        term = identity(dim) if term is None else term
        total = mat_add(total, mat_scale(c, term))
    return total


# -- verification entry points -------------------------------------------

def verify_casimir_scalars() -> dict:
    env = build_env(3, 1, "sl")
    c2 = trace_element(env, (1, 1))
    c3 = trace_element(env, (1, 1, 1))
    results = {}
    ok = True
    for rep in standard_reps().values():
        v2, v3 = casimir_eigenvalues(*rep.weights)
        good = is_scalar_matrix(evaluate(c2, rep), v2) and is_scalar_matrix(
            evaluate(c3, rep), v3
        )
        results[rep.name] = {"quadratic": str(v2), "cubic": str(v3), "scalar": good}
        ok = ok and good
    return {"reps": results, "ok": ok}


def verify_casimir_blocks() -> dict:
    """Diagonal quadratic invariant splits the 9-dim product into two blocks."""
    env = standard_algebra()
    from .enveloping import diagonal_casimir

    t = tensor_rep("fundamental", "fundamental")
    m = evaluate(diagonal_casimir(env, 2), t)
    lam1, _ = casimir_eigenvalues(3, 1)
    lam2, _ = casimir_eigenvalues(1, 2)
    n = t.dimension
    shifted1 = mat_sub(m, mat_scale(lam1, identity(n)))
    shifted2 = mat_sub(m, mat_scale(lam2, identity(n)))
    dim1 = kernel_dimension([list(r) for r in shifted1], n)
    dim2 = kernel_dimension([list(r) for r in shifted2], n)
    split = is_zero_matrix(mat_mul(shifted1, shifted2))
    return {
        "block_dims": [dim1, dim2],
        "annihilating_product": split,
        "ok": split and dim1 == 6 and dim2 == 3,
    }


def verify_centraliser_commutation() -> dict:
    """Matrix images of the distinguished elements commute with the diagonal."""
    gens = centraliser_generators()
    basis = _copy_basis(3, "sl")
    failures = []
    for t in standard_tensor_pairs():
        for name in ("X", "Y", "Z"):
            m = evaluate(gens[name], t)
            for lab in basis:
                if not is_zero_matrix(mat_commutator(m, t.diagonal_image(lab))):
                    failures.append({"rep": t.name, "element": name, "label": lab})
    return {"failures": failures, "ok": not failures}


def verify_omega_image_oracle() -> dict:
    """The degree-12 identity as exact matrix equalities in three products."""
    gens = centraliser_generators()
    shortcut = potential.specialised_casimir_shortcut()
    a12 = potential.closure_constant()
    per_rep = {}
    ok = True
    for t in standard_tensor_pairs():
        central = {
            n: evaluate(gens[n], t)
            for n in ("k1", "k2", "k3", "l1", "l2", "l3")
        }
        x = evaluate(gens["X"], t)
        y = evaluate(gens["Y"], t)
        z = mat_commutator(x, y)
        z_matches = evaluate(gens["Z"], t) == z
        n = t.dimension

        def at(nm: str) -> Matrix:
            return poly_at_matrices(shortcut[nm], central, n)

        x2 = mat_mul(x, x)
        y2 = mat_mul(y, y)
        omega = mat_add(mat_mul(at("x1"), x), mat_mul(at("x2"), y))
        omega = mat_add(omega, mat_mul(at("x3"), x2))
        omega = mat_add(
            omega, mat_mul(at("x4"), mat_add(mat_mul(x, y), mat_mul(y, x)))
        )
        omega = mat_add(omega, mat_mul(at("x5"), y2))
        omega = mat_add(omega, mat_mul(at("x7"), mat_mul(x, mat_mul(y, x))))
        omega = mat_sub(omega, mat_mul(x2, x2))
        omega = mat_add(omega, mat_scale(Fraction(4), mat_mul(y2, y)))
        omega = mat_add(omega, mat_mul(z, z))
        target = poly_at_matrices(a12, central, n)
        good = z_matches and omega == target
        per_rep[t.name] = {
            "dimension": n,
            "bracket_image": z_matches,
            "identity": omega == target,
        }
        ok = ok and good
    return {"reps": per_rep, "ok": ok}


def _random_element(sys_: RewriteSystem, rng) -> NCElement:
    nletters = len(sys_.names)
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, 6)):
        w = tuple(rng.randrange(nletters) for _ in range(rng.randint(0, 5)))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if not c:
            continue
        terms[w] = terms.get(w, _F0) + c
    return NCElement(sys_, {w: c for w, c in terms.items() if c})


def verify_representation_independence(seed: int = 0, samples: int = 50) -> dict:
    """Rewriting commutes with evaluation on random unreduced elements."""
    import random

    rng = random.Random(seed)
    env1 = build_env(3, 1, "sl")
    env2 = standard_algebra()
    suites = [
        (env1, list(standard_reps().values())),
        (env2, standard_tensor_pairs()),
    ]
    checked = 0
    failures = []
    for env, reps in suites:
        for i in range(samples):
            e = _random_element(env.system, rng)
            nf = e.normal_form()
            for rep in reps:
                checked += 1
                if evaluate(e, rep) != evaluate(nf, rep):
                    failures.append({"system": env.kind, "sample": i, "rep": rep.name})
    return {"checked": checked, "failures": failures, "ok": not failures}
