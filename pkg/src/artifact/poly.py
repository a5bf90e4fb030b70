"""Sparse multivariate polynomials over the rationals in the variables x1, x2, ...

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable, with
no zero exponents.  Coefficients are Python ints whenever possible and
``fractions.Fraction`` otherwise, so arithmetic stays exact.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .tableaux import Partition

Monomial = tuple[tuple[int, int], ...]
Coeff = Union[int, Fraction]
ONE: Monomial = ()


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class PolyParseError(ValueError):
    pass


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    d = dict(b)
    for v, e in a:
        d[v] -= e
    return tuple((v, e) for v, e in sorted(d.items()) if e)


def mono_from_exps(exps: Sequence[int], offset: int = 1) -> Monomial:
    """Monomial from a dense exponent vector; entry i belongs to x_{i+offset}."""
    return tuple((i + offset, e) for i, e in enumerate(exps) if e)


def mono_to_exps(m: Monomial, n: int) -> tuple[int, ...]:
    out = [0] * n
    for v, e in m:
        out[v - 1] = e
    return tuple(out)


def grlex_key(m: Monomial):
    """Sort key putting monomials in descending graded-lex order (x1 > x2 > ...)."""
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


def content(m: Monomial) -> Partition:
    """Multiset of positive exponents, as a partition."""
    return Partition(tuple(sorted((e for _, e in m), reverse=True)))


def format_monomial(m: Monomial) -> str:
    return " ".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | Iterable[tuple[Monomial, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Coeff] = {}
        for m, c in items:
            if c:
                c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
                clean[m] = _norm(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Coeff) -> "Poly":
        return cls({ONE: c})

    @classmethod
    def var(cls, i: int, e: int = 1) -> "Poly":
        if i < 1:
            raise ValueError("variables are indexed from 1")
        return cls({((i, e),): 1}) if e else cls.const(1)

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> "Poly":
        return cls({m: c})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=grlex_key)

    def coeff(self, m: Monomial) -> Coeff:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> frozenset[int]:
        return frozenset(v for m in self._terms for v, _ in m)

    def max_var(self) -> int:
        return max(self.variables(), default=0)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {mono_degree(m) for m in self._terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def leading(self) -> tuple[Monomial, Coeff]:
        m = min(self._terms, key=grlex_key)
        return m, self._terms[m]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Coeff) -> "Poly":
        if not c:
            return Poly()
        return Poly._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __truediv__(self, c: Coeff) -> "Poly":
        return self.scale(Fraction(1) / Fraction(c))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- printing -----------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot combine Poly with {type(x).__name__}")


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def sub(p: Poly, q: Poly) -> Poly:
    return p - q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(p: Poly, c: Coeff) -> Poly:
    return p.scale(c)


def poly_sum(polys: Iterable[Poly]) -> Poly:
    out: dict[Monomial, Coeff] = {}
    for p in polys:
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return Poly._raw({m: _norm(c) for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# Substitution, permutation, content
# ---------------------------------------------------------------------------


def substitute_zero(p: Poly, variables: Iterable[int]) -> Poly:
    kill = set(variables)
    return Poly._raw({m: c for m, c in p.items() if not any(v in kill for v, _ in m)})


def truncate_vars(p: Poly, n: int) -> Poly:
    """Set x_m = 0 for every m > n."""
    return Poly._raw({m: c for m, c in p.items() if all(v <= n for v, _ in m)})


def permute(p: Poly, w: Mapping[int, int] | Sequence[int]) -> Poly:
    """Apply the substitution x_i -> x_{w(i)}.

    ``w`` is a mapping or a sequence in one-line notation (w[0] is the image of 1);
    variables outside its domain are fixed.
    """
    if not isinstance(w, Mapping):
        w = {i + 1: int(x) for i, x in enumerate(w)}
    out = {}
    for m, c in p.items():
        nm = tuple(sorted((w.get(v, v), e) for v, e in m))
        out[nm] = c
    return Poly._raw(out)


def content_filter(p: Poly, mu: Partition | Iterable[int]) -> Poly:
    target = mu if isinstance(mu, Partition) else Partition(tuple(sorted((x for x in mu if x), reverse=True)))
    return Poly._raw({m: c for m, c in p.items() if content(m) == target})


def content_blocks(p: Poly) -> dict[Partition, Poly]:
    out: dict[Partition, dict] = {}
    for m, c in p.items():
        out.setdefault(content(m), {})[m] = c
    return {mu: Poly._raw(t) for mu, t in out.items()}


# ---------------------------------------------------------------------------
# Symmetric polynomials
# ---------------------------------------------------------------------------


def elementary(r: int, n: int, start: int = 1) -> Poly:
    """e_r in the variables x_start..x_{start+n-1}."""
    if r == 0:
        return Poly.const(1)
    if r < 0 or r > n:
        return Poly()
    idx = range(start, start + n)
    return Poly._raw({tuple((v, 1) for v in c): 1 for c in combinations(idx, r)})


def power_sum(l: int, n: int, start: int = 1) -> Poly:
    if l == 0:
        return Poly.const(n)
    return Poly._raw({((v, l),): 1 for v in range(start, start + n)})


def complete_homogeneous(r: int, n: int, start: int = 1) -> Poly:
    return poly_sum(monomial_sym(lam, n, start) for lam in _partitions_list(r))


def _partitions_list(r: int):
    from .tableaux import partitions_of

    return partitions_of(r)


def distinct_arrangements(parts: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Distinct exponent vectors of length n that are rearrangements of parts padded by 0."""
    parts = [p for p in parts if p]
    if len(parts) > n:
        return
    counts = Counter(parts)
    values = sorted(counts)

    def rec(pos: int, remaining: Counter, acc: list[int], left: int):
        if left == 0:
            yield tuple(acc + [0] * (n - pos))
            return
        if n - pos < left:
            return
        # leave position empty
        acc.append(0)
        yield from rec(pos + 1, remaining, acc, left)
        acc.pop()
        for v in values:
            if remaining[v]:
                remaining[v] -= 1
                acc.append(v)
                yield from rec(pos + 1, remaining, acc, left - 1)
                acc.pop()
                remaining[v] += 1

    yield from rec(0, counts, [], len(parts))


def monomial_sym(alpha: Partition | Sequence[int], n: int, start: int = 1) -> Poly:
    """m_α in the variables x_start..x_{start+n-1}."""
    parts = tuple(alpha)
    return Poly._raw({mono_from_exps(e, start): 1 for e in distinct_arrangements(parts, n)})


def exact_divide(p: Poly, q: Poly) -> Poly:
    """Quotient p / q, raising DivisionError if q does not divide p exactly."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lq, cq = q.leading()
    rem = dict(p.terms)
    quot: dict[Monomial, Coeff] = {}
    while rem:
        lm = min(rem, key=grlex_key)
        if not mono_divides(lq, lm):
            raise DivisionError(f"{format_poly(q)} does not divide the input")
        t = mono_div(lm, lq)
        c = _norm(Fraction(rem[lm]) / cq)
        quot[t] = _norm(quot.get(t, 0) + c)
        for m, cm in q.items():
            mm = mono_mul(t, m)
            v = rem.get(mm, 0) - c * cm
            if v:
                rem[mm] = _norm(v)
            else:
                rem.pop(mm, None)
    return Poly._raw({m: c for m, c in quot.items() if c})


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for m in p.monomials():
        c = p.coeff(m)
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if not m:
            body = format_coeff(a)
        elif a == 1:
            body = format_monomial(m)
        else:
            body = f"{format_coeff(a)} * {format_monomial(m)}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|x(\d+)|(\*\*|[-+*^()/]))")


def parse_poly(text: str) -> Poly:
    """Parse sums and products of rationals, variables x<i>, powers and parentheses.

    Juxtaposition multiplies, so ``3 * x1^2 x2`` and ``3*x1**2*x2`` agree.
    """
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected input at {text[pos:]!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    parser = _Parser(tokens)
    result = parser.expr()
    if parser.i != len(tokens):
        raise PolyParseError(f"trailing input in {text!r}")
    return result


class _Parser:
    def __init__(self, tokens):
        self.t = tokens
        self.i = 0

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Poly:
        sign = 1
        kind, val = self.peek()
        if (kind, val) in (("op", "-"), ("op", "+")):
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif (kind, val) == ("op", "/"):
                self.take()
                kind2, val2 = self.take()
                if kind2 != "num":
                    raise PolyParseError("only division by a number is supported")
                acc = acc / Fraction(val2)
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise PolyParseError("exponents must be nonnegative integers")
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(_norm(Fraction(val)))
        if kind == "var":
            return Poly.var(int(val))
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise PolyParseError("missing closing parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise PolyParseError(f"unexpected token {val!r}")


def orbit(p: Poly, n: int) -> set[Poly]:
    """Distinct images of p under all permutations of x1..xn (small n only)."""
    return {permute(p, w) for w in permutations(range(1, n + 1))}
