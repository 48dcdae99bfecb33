"""Noncommutative rewriting with adjacent-pair rules and a diamond check.

Words are tuples of generator ranks.  A system is given by generators with
positive integer degrees and a rule set keyed by adjacent pairs: a swap rule
rewrites the two-letter word g.h (with rank(g) > rank(h)) and a power rule
rewrites g.g.  Every out-of-order pair must carry a rule, so the normal words
are exactly the rank-sorted words in which power-ruled generators never
repeat; ``graded_dim`` counts them by degree.

Termination is enforced at construction: each word of a replacement must be
strictly smaller than the rule's left side in the order (total degree, word
length, then one fewer inversion for the plain transposition).  Rewriting a
factor inside a context strictly decreases that measure, so reduction always
stops; ``check_overlaps`` then resolves every length-3 ambiguity to certify
that the normal form is independent of rewriting order.

Reduction is memoised per word.  Generators fall into commuting blocks
(connected components of rules with a genuine correction term); a word is
reduced block by block and the results recombined, which makes products in
tensor-square systems cheap and keeps the memo small.

Coefficients are duck typed: plain ints, ``Fraction`` and ``poly.Polynomial``
all work, and memoised word reductions use int arithmetic whenever the rule
corrections are integral.
"""

from __future__ import annotations

import sys as _sys
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import Polynomial, PolynomialRing

_sys.setrecursionlimit(max(_sys.getrecursionlimit(), 50000))

Word = tuple[int, ...]

__all__ = [
    "RewriteSystem",
    "NCElement",
    "commutator",
    "anticommutator",
    "OverlapFailure",
]


class OverlapFailure(Exception):
    """Raised when a length-3 ambiguity resolves two different ways."""


def _word_inversions(word: Word) -> int:
    inv = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j]:
                inv += 1
    return inv


class RewriteSystem:
    def __init__(
        self,
        generators: Sequence[tuple[str, int]],
        rules: Mapping[tuple[str, str], Mapping[tuple[str, ...], object]],
        memo_limit: int = 2_000_000,
    ):
        names = [n for n, _ in generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator name")
        for n in names:
            if not n or "." in n or " " in n or "(" in n:
                raise ValueError(f"invalid generator name {n!r}")
        self.names = tuple(names)
        self.degrees = tuple(int(d) for _, d in generators)
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        self.rank = {n: i for i, n in enumerate(self.names)}
        self.memo_limit = memo_limit
        self._memo: dict[Word, dict[Word, object]] = {}

        self.rules: dict[tuple[int, int], dict[Word, object]] = {}
        for (gn, hn), rhs in rules.items():
            g, h = self.rank[gn], self.rank[hn]
            if g < h:
                raise ValueError(f"rule key {gn}.{hn} is already in order")
            body: dict[Word, object] = {}
            for wnames, c in rhs.items():
                w = tuple(self.rank[x] for x in wnames)
                if c:
                    body[w] = body[w] + c if w in body else c
            self.rules[(g, h)] = {w: c for w, c in body.items() if c}
        for g in range(len(self.names)):
            for h in range(g):
                if (g, h) not in self.rules:
                    raise ValueError(
                        f"missing rule for pair {self.names[g]}.{self.names[h]}"
                    )
        for key, body in self.rules.items():
            self._validate_rule(key, body)

        self._assign_blocks()
        # Bring every right-hand side to normal form once, so reduction steps
        # never cascade through unreduced corrections, then drop the memo
        # entries computed with the mixed rule set.
        for key in list(self.rules):
            reduced: dict[Word, object] = {}
            for w, c in self.rules[key].items():
                for sw, sc in self.word_nf(w).items():
                    _merge(reduced, sw, c * sc)
            self.rules[key] = reduced
            self._validate_rule(key, reduced)
        self._memo = {}

    # -- construction helpers -------------------------------------------

    def _validate_rule(self, key: tuple[int, int], body: Mapping[Word, object]) -> None:
        g, h = key
        d0 = self.degrees[g] + self.degrees[h]
        for w in body:
            dw = sum(self.degrees[x] for x in w)
            if dw < d0:
                continue
            if dw == d0 and len(w) < 2:
                continue
            if dw == d0 and w == (h, g) and g > h:
                continue
            lhs = f"{self.names[g]}.{self.names[h]}"
            wtext = ".".join(self.names[x] for x in w) or "1"
            raise ValueError(f"rule {lhs} does not decrease on term {wtext}")

    def _assign_blocks(self) -> None:
        parent = list(range(len(self.names)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for (g, h), body in self.rules.items():
            if g == h or not _is_unit_swap(body, (h, g)):
                union(g, h)
                for w in body:
                    for x in w:
                        union(g, x)
        roots: dict[int, int] = {}
        block_of = []
        for x in range(len(self.names)):
            r = find(x)
            if r not in roots:
                roots[r] = len(roots)
            block_of.append(roots[r])
        # Relabel blocks in order of their smallest rank so that concatenating
        # per-block normal words in block order yields a globally sorted word.
        first_rank: dict[int, int] = {}
        for x, b in enumerate(block_of):
            first_rank.setdefault(b, x)
        relabel = {b: i for i, (b, _) in enumerate(sorted(first_rank.items(), key=lambda kv: kv[1]))}
        self.block_of = tuple(relabel[b] for b in block_of)
        self.nblocks = len(relabel)
        spans: dict[int, list[int]] = {}
        for x, b in enumerate(self.block_of):
            spans.setdefault(b, []).append(x)
        self._blocks_contiguous = all(
            ranks == list(range(ranks[0], ranks[-1] + 1)) for ranks in spans.values()
        )

    # -- element constructors -------------------------------------------

    def gen(self, name: str) -> NCElement:
        return NCElement(self, {(self.rank[name],): 1})

    def one_el(self) -> NCElement:
        return NCElement(self, {(): 1})

    def zero_el(self) -> NCElement:
        return NCElement(self, {})

    def element(self, data: Mapping[tuple[str, ...], object]) -> NCElement:
        terms: dict[Word, object] = {}
        for wnames, c in data.items():
            w = tuple(self.rank[x] for x in wnames)
            if c:
                _merge(terms, w, c)
        return NCElement(self, terms)

    def scalar(self, c: object) -> NCElement:
        return NCElement(self, {(): c} if c else {})

    # -- reduction -------------------------------------------------------

    def _block_nf(self, word: Word) -> dict[Word, object]:
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        rules = self.rules
        for i in range(len(word) - 1):
            rule = rules.get((word[i], word[i + 1]))
            if rule is None:
                continue
            pre, post = word[:i], word[i + 2 :]
            acc: dict[Word, object] = {}
            for rw, rc in rule.items():
                for sw, sc in self._block_nf(pre + rw + post).items():
                    _merge(acc, sw, rc * sc)
            if len(self._memo) >= self.memo_limit:
                self._memo.clear()
            self._memo[word] = acc
            return acc
        res = {word: 1}
        self._memo[word] = res
        return res

    def _split(self, word: Word) -> tuple[Word, ...]:
        parts: list[list[int]] = [[] for _ in range(self.nblocks)]
        block_of = self.block_of
        for x in word:
            parts[block_of[x]].append(x)
        return tuple(tuple(p) for p in parts)

    def word_nf(self, word: Word) -> dict[Word, object]:
        """Normal form of a single word as a dict word -> coefficient."""
        if self.nblocks == 1:
            return self._block_nf(word)
        parts = [self._block_nf(p) for p in self._split(word) if p]
        if not parts:
            return {(): 1}
        if len(parts) == 1:
            return parts[0]
        acc: dict[Word, object] = {}
        self._outer(acc, parts, 1)
        return acc

    def _outer(self, acc: dict[Word, object], parts: list[dict[Word, object]], c: object) -> None:
        combos: list[tuple[Word, object]] = [((), c)]
        for part in parts:
            combos = [
                (w + sw, cc * sc if sc != 1 else cc)
                for (w, cc) in combos
                for sw, sc in part.items()
            ]
        sort_needed = not self._blocks_contiguous
        for w, cc in combos:
            if sort_needed:
                w = tuple(sorted(w))
            _merge(acc, w, cc)

    def is_normal_word(self, word: Word) -> bool:
        return all(
            (word[i], word[i + 1]) not in self.rules for i in range(len(word) - 1)
        )

    # -- counting --------------------------------------------------------

    def graded_dim(self, n: int) -> int:
        """Number of normal words of total degree exactly n."""
        ways = [0] * (n + 1)
        ways[0] = 1
        for g in range(len(self.names)):
            d = self.degrees[g]
            capped = (g, g) in self.rules
            new = [0] * (n + 1)
            for total in range(n + 1):
                e = 0
                while e * d <= total and (e <= 1 or not capped):
                    new[total] += ways[total - e * d]
                    e += 1
            ways = new
        return ways[n]

    # -- confluence ------------------------------------------------------

    def check_overlaps(self) -> dict:
        """Resolve every length-3 ambiguity; returns a summary dict."""
        by_first: dict[int, list[int]] = {}
        for g, h in self.rules:
            by_first.setdefault(g, []).append(h)
        count = 0
        for (x, y), rule1 in sorted(self.rules.items()):
            for z in sorted(by_first.get(y, ())):
                count += 1
                left: dict[Word, object] = {}
                for w, c in rule1.items():
                    for sw, sc in self.word_nf(w + (z,)).items():
                        _merge(left, sw, c * sc)
                right: dict[Word, object] = {}
                for w, c in self.rules[(y, z)].items():
                    for sw, sc in self.word_nf((x,) + w).items():
                        _merge(right, sw, c * sc)
                if left != right:
                    word = ".".join(self.names[t] for t in (x, y, z))
                    raise OverlapFailure(
                        f"ambiguity {word} resolves two ways; difference on "
                        f"{_diff_witness(self, left, right)}"
                    )
        return {"ambiguities": count, "resolved": True}

    # -- text form -------------------------------------------------------

    def parse(self, text: str, ring: PolynomialRing | None = None) -> NCElement:
        """Inverse of NCElement.to_text; ring parses parenthesised coefficients."""
        text = text.strip()
        if text == "0":
            return self.zero_el()
        terms: dict[Word, object] = {}
        for chunk in _split_top_level(text):
            coeff_text, _, word_text = chunk.rpartition(" * ")
            if coeff_text.startswith("(") and coeff_text.endswith(")"):
                if ring is None:
                    raise ValueError("polynomial coefficient but no ring given")
                coeff: object = ring.parse(coeff_text[1:-1])
            else:
                coeff = Fraction(coeff_text)
            word = () if word_text == "1" else tuple(self.rank[n] for n in word_text.split("."))
            _merge(terms, word, coeff)
        return NCElement(self, terms)


def _is_unit_swap(body: Mapping[Word, object], target: Word) -> bool:
    if set(body) != {target}:
        return False
    c = body[target]
    return c == 1


def _split_top_level(text: str) -> list[str]:
    # Term separators inside parenthesised coefficients do not count.
    parts: list[str] = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            parts.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


def _merge(acc: dict, key, value) -> None:
    old = acc.get(key)
    if old is None:
        if value:
            acc[key] = value
        return
    new = old + value
    if new:
        acc[key] = new
    else:
        del acc[key]


def _diff_witness(sys_: RewriteSystem, left: dict, right: dict) -> str:
    for w in sorted(set(left) | set(right)):
        if left.get(w, 0) != right.get(w, 0):
            return ".".join(sys_.names[t] for t in w) or "1"
    return "?"


class NCElement:
    """Linear combination of words with duck-typed coefficients."""

    __slots__ = ("sys", "terms")

    def __init__(self, sys_: RewriteSystem, terms: dict[Word, object]):
        self.sys = sys_
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCElement):
            if other.sys is not self.sys:
                return NotImplemented
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other: NCElement) -> NCElement:
        if not isinstance(other, NCElement) or other.sys is not self.sys:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, c)
        return NCElement(self.sys, out)

    def __neg__(self) -> NCElement:
        return NCElement(self.sys, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NCElement) -> NCElement:
        if not isinstance(other, NCElement) or other.sys is not self.sys:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, -c)
        return NCElement(self.sys, out)

    def __mul__(self, other: object) -> NCElement:
        if isinstance(other, NCElement):
            if other.sys is not self.sys:
                return NotImplemented
            return _mul_elements(self.sys, self, other)
        if not other:
            return NCElement(self.sys, {})
        return NCElement(self.sys, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other: object) -> NCElement:
        if not other:
            return NCElement(self.sys, {})
        return NCElement(self.sys, {w: other * c for w, c in self.terms.items()})

    def scale(self, factor: object) -> NCElement:
        return self.__rmul__(factor)

    def normal_form(self) -> NCElement:
        sys_ = self.sys
        acc: dict[Word, object] = {}
        for w, c in self.terms.items():
            for sw, sc in sys_.word_nf(w).items():
                _merge(acc, sw, c * sc if sc != 1 else c)
        return NCElement(sys_, acc)

    def degree(self) -> int | None:
        """Filtration degree including polynomial coefficient weights; None if zero."""
        if not self.terms:
            return None
        degs = self.sys.degrees
        best = None
        for w, c in self.terms.items():
            d = sum(degs[x] for x in w)
            if isinstance(c, Polynomial):
                d += max(c.weighted_degree(), 0)
            if best is None or d > best:
                best = d
        return best

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        degs = self.sys.degrees
        names = self.sys.names
        parts = []
        for w in sorted(self.terms, key=lambda w: (sum(degs[x] for x in w), w)):
            c = self.terms[w]
            if isinstance(c, Polynomial):
                coeff = f"({c.to_text()})"
            else:
                coeff = str(c)
            word = ".".join(names[x] for x in w) if w else "1"
            parts.append(f"{coeff} * {word}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        text = self.to_text()
        return f"<nc {text[:120]}{'...' if len(text) > 120 else ''}>"


def _mul_elements(sys_: RewriteSystem, a: NCElement, b: NCElement) -> NCElement:
    acc: dict[Word, object] = {}
    if sys_.nblocks == 1:
        bnf = sys_._block_nf
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ca * cb
                if not c:
                    continue
                for sw, sc in bnf(wa + wb).items():
                    _merge(acc, sw, c * sc if sc != 1 else c)
        return NCElement(sys_, acc)
    asplit = {wa: sys_._split(wa) for wa in a.terms}
    bsplit = {wb: sys_._split(wb) for wb in b.terms}
    bnf = sys_._block_nf
    nblocks = sys_.nblocks
    for wa, ca in a.terms.items():
        sa = asplit[wa]
        for wb, cb in b.terms.items():
            c = ca * cb
            if not c:
                continue
            sb = bsplit[wb]
            parts = []
            for bid in range(nblocks):
                u = sa[bid] + sb[bid]
                if u:
                    parts.append(bnf(u))
            if not parts:
                _merge(acc, (), c)
            elif len(parts) == 1:
                for sw, sc in parts[0].items():
                    _merge(acc, sw, c * sc if sc != 1 else c)
            else:
                sys_._outer(acc, parts, c)
    return NCElement(sys_, acc)


def commutator(a: NCElement, b: NCElement) -> NCElement:
    return a * b - b * a


def anticommutator(a: NCElement, b: NCElement) -> NCElement:
    return a * b + b * a


def normal_form_random(sys_: RewriteSystem, element: NCElement, rng) -> NCElement:
    """Reduce with randomly chosen positions; oracle for strategy independence."""
    acc: dict[Word, object] = {}
    work = list(element.terms.items())
    while work:
        i = rng.randrange(len(work))
        word, coeff = work.pop(i)
        spots = [
            j
            for j in range(len(word) - 1)
            if (word[j], word[j + 1]) in sys_.rules
        ]
        if not spots:
            _merge(acc, word, coeff)
            continue
        j = rng.choice(spots)
        rule = sys_.rules[(word[j], word[j + 1])]
        pre, post = word[:j], word[j + 2 :]
        for rw, rc in rule.items():
            work.append((pre + rw + post, coeff * rc))
    return NCElement(sys_, acc)
