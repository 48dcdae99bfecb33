"""Sparse multivariate polynomials over the rationals.

A polynomial is a dict mapping exponent tuples to nonzero ``Fraction``
coefficients, e.g. with variables ("x", "y") the dict {(2, 1): Fraction(3, 2)}
is 3/2 * x^2 * y.  Every polynomial belongs to a ``PolynomialRing`` with a
fixed, ordered, closed variable set; mixing rings raises instead of silently
capturing variables.  Rings may assign an integer weight to each variable,
used by ``weighted_degree`` for graded bookkeeping.

All arithmetic is exact.  The canonical text form lists terms in descending
graded-lexicographic order, each as ``coeff * var^exp * ...`` joined by
`` + ``; parsing the text form reproduces the polynomial bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Scalar = int | Fraction

__all__ = ["PolynomialRing", "Polynomial", "Scalar"]


class PolynomialRing:
    """Commutative polynomial ring with ordered variables and weights."""

    def __init__(self, names: Iterable[str], degrees: Mapping[str, int] | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable name")
        for n in self.names:
            if not n or any(c in n for c in " *^+()."):
                raise ValueError(f"invalid variable name {n!r}")
        self.index = {n: i for i, n in enumerate(self.names)}
        degrees = dict(degrees or {})
        unknown = set(degrees) - set(self.names)
        if unknown:
            raise ValueError(f"degree given for unknown variable {sorted(unknown)}")
        self.degrees = tuple(int(degrees.get(n, 1)) for n in self.names)
        self._zero_exp = (0,) * len(self.names)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self) -> int:
        return hash((self.names, self.degrees))

    def __repr__(self) -> str:
        return f"PolynomialRing({list(self.names)!r})"

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, value: Scalar) -> Polynomial:
        c = Fraction(value)
        return Polynomial(self, {} if c == 0 else {self._zero_exp: c})

    def var(self, name: str) -> Polynomial:
        if name not in self.index:
            raise ValueError(f"unknown variable {name!r}")
        exp = [0] * len(self.names)
        exp[self.index[name]] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def parse(self, text: str) -> Polynomial:
        """Inverse of Polynomial.to_text."""
        text = text.strip()
        if text == "0":
            return self.zero()
        terms: dict[tuple[int, ...], Fraction] = {}
        for chunk in text.split(" + "):
            parts = chunk.split(" * ")
            coeff = Fraction(parts[0])
            exp = [0] * len(self.names)
            for factor in parts[1:]:
                if "^" in factor:
                    name, _, power = factor.partition("^")
                    exp[self.index[name]] += int(power)
                else:
                    exp[self.index[factor]] += 1
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return Polynomial(self, {e: c for e, c in terms.items() if c != 0})


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: dict[tuple[int, ...], Fraction]):
        self.ring = ring
        self.terms = terms

    # -- basic queries ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(e == self.ring._zero_exp for e in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the empty monomial; raises if anything else is present."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[self.ring._zero_exp]

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        exp = [0] * len(self.ring.names)
        for name, e in monomial.items():
            exp[self.ring.index[name]] = e
        return self.terms.get(tuple(exp), Fraction(0))

    def variables_used(self) -> tuple[str, ...]:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return tuple(self.ring.names[i] for i in sorted(used))

    def total_degree(self) -> int:
        """Unweighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def weighted_degree(self) -> int:
        """Degree with the ring's variable weights; -1 for zero."""
        if not self.terms:
            return -1
        w = self.ring.degrees
        return max(sum(e * w[i] for i, e in enumerate(exp)) for exp in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Weighted-homogeneous, optionally of a prescribed degree."""
        if not self.terms:
            return True
        w = self.ring.degrees
        degs = {sum(e * w[i] for i, e in enumerate(exp)) for exp in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __eq__(self, other: object) -> bool:
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self.terms == p.terms

    __hash__ = None  # mutable dict inside; never use as a key

    def __add__(self, other: object) -> Polynomial:
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in p.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> Polynomial:
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in p.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)) and other != 0:
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and evaluation ------------------------------------

    def substitute(self, images: Mapping[str, Polynomial | Scalar]) -> Polynomial:
        """Simultaneously replace every used variable by its image.

        All images must live in one ring (scalars are coerced into it); a used
        variable without an image is an error.  Unused variables may be left
        unmapped, so partial dictionaries are fine for sparse polynomials.
        """
        used = self.variables_used()
        missing = [n for n in used if n not in images]
        if missing:
            raise ValueError(f"missing assignment for used variable {missing}")
        target: PolynomialRing | None = None
        for v in images.values():
            if isinstance(v, Polynomial):
                if target is None:
                    target = v.ring
                elif v.ring != target:
                    raise ValueError("substitution images from different rings")
        if target is None:
            target = self.ring
        imgs: dict[int, Polynomial] = {}
        for n in used:
            v = images[n]
            imgs[self.ring.index[n]] = v if isinstance(v, Polynomial) else target.const(v)
        powers: dict[tuple[int, int], Polynomial] = {}

        def img_pow(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = imgs[i] ** e
            return powers[key]

        order = sorted(imgs)  # Horner over used variables, innermost first

        def run(terms: dict[tuple[int, ...], Fraction], vpos: int) -> Polynomial:
            if vpos == len(order):
                acc = target.zero()
                for exp, c in terms.items():
                    acc = acc + target.const(c)
                return acc
            i = order[vpos]
            groups: dict[int, dict[tuple[int, ...], Fraction]] = {}
            for exp, c in terms.items():
                e = exp[i]
                stripped = exp[:i] + (0,) + exp[i + 1 :]
                g = groups.setdefault(e, {})
                g[stripped] = g.get(stripped, Fraction(0)) + c
            exps = sorted(groups, reverse=True)
            acc = run(groups[exps[0]], vpos + 1)
            for prev, e in zip(exps, exps[1:]):
                acc = acc * img_pow(i, prev - e) + run(groups[e], vpos + 1)
            if exps[-1]:
                acc = acc * img_pow(i, exps[-1])
            return acc

        if not self.terms:
            return target.zero()
        return run(self.terms, 0)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Value at a rational point; every used variable needs a value."""
        total = Fraction(0)
        names = self.ring.names
        for exp, c in self.terms.items():
            v = c
            for i, e in enumerate(exp):
                if e:
                    if names[i] not in point:
                        raise ValueError(f"missing value for variable {names[i]!r}")
                    v = v * Fraction(point[names[i]]) ** e
            total += v
        return total

    # -- text form -------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            factors = [str(self.terms[exp])]
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<poly {self.to_text()}>"
