"""Catalogue of closed-form expansions whose coefficients depend on n.

Each :class:`Expansion` writes a polynomial in x_1..x_n as a combination of
polynomials in x_1..x_{n+1}.  Coefficients are rational functions of n (and
occasionally of a summation index j).  Two independent checks are offered:

* :func:`check_literal` evaluates both sides at a numeric n and compares them;
* :func:`recover_coefficients` solves for the coordinates of the left side in
  the span of the right-hand vectors at several n and interpolates each
  coordinate as P(n)/Q(n), which is then compared with the stated function.

Where a stated expansion does not hold as written, a ``corrected`` variant
sits next to it so reports can show both outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from flint import fmpq, fmpq_mat

from .poly import Poly, elementary, monomial_sym, poly_sum

# ---------------------------------------------------------------------------
# Rational functions of n
# ---------------------------------------------------------------------------


def _poly_eval(coeffs: Sequence[int | Fraction], n) -> Fraction:
    return sum((Fraction(c) * Fraction(n) ** i for i, c in enumerate(coeffs)), Fraction(0))


def _poly_mul(a: Sequence, b: Sequence) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    return out


def _strip(a: Sequence) -> list[Fraction]:
    a = [Fraction(c) for c in a]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


@dataclass(frozen=True)
class RatFn:
    """P(n)/Q(n) with coefficient lists ordered from the constant term up."""

    num: tuple
    den: tuple = (1,)

    def __call__(self, n) -> Fraction:
        return _poly_eval(self.num, n) / _poly_eval(self.den, n)

    def same_as(self, other: "RatFn") -> bool:
        return _strip(_poly_mul(self.num, other.den)) == _strip(_poly_mul(other.num, self.den))

    def __str__(self) -> str:
        def show(cs):
            cs = _strip(cs)
            terms = []
            for i in range(len(cs) - 1, -1, -1):
                c = cs[i]
                if c == 0:
                    continue
                mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
                if mono and abs(c) == 1:
                    text = ("-" if c < 0 else "+") + mono
                else:
                    text = ("-" if c < 0 else "+") + str(abs(c)) + (f"*{mono}" if mono else "")
                terms.append(text)
            s = "".join(terms) or "0"
            return s[1:] if s.startswith("+") else s

        den = _strip(self.den)
        if den == [1]:
            return show(self.num)
        return f"({show(self.num)})/({show(den)})"


def ratfn(num: Sequence, den: Sequence = (1,)) -> RatFn:
    return RatFn(tuple(num), tuple(den))


class InterpolationError(ArithmeticError):
    pass


def interpolate_rational(points: Sequence[tuple[int, Fraction]], max_deg: int = 2) -> RatFn:
    """Smallest P/Q (deg ≤ max_deg each, Q monic) through all the points.

    Degrees are tried in increasing total order.  Each candidate is fitted on
    the first unknowns-many points and must then reproduce every remaining
    point; at least one spare point is required.
    """
    pts = [(Fraction(n), Fraction(y)) for n, y in points]
    for total in range(0, 2 * max_deg + 1):
        for dq in range(0, min(total, max_deg) + 1):
            dp = total - dq
            if dp > max_deg:
                continue
            unknowns = dp + 1 + dq
            if len(pts) <= unknowns:
                continue
            fit = _fit(pts[:unknowns], dp, dq)
            if fit is None:
                continue
            if all(_poly_eval(fit.den, n) != 0 and fit(n) == y for n, y in pts):
                return fit
    raise InterpolationError(f"no rational function of degree <= {max_deg} fits {len(pts)} points")


def _fit(pts, dp: int, dq: int) -> RatFn | None:
    # P(n) - y*(q_0 + ... + q_{dq-1} n^{dq-1}) = y*n^dq, with Q monic of degree dq.
    m = len(pts)
    A = fmpq_mat(m, m)
    b = fmpq_mat(m, 1)
    for i, (n, y) in enumerate(pts):
        for a in range(dp + 1):
            A[i, a] = _q(n**a)
        for a in range(dq):
            A[i, dp + 1 + a] = _q(-y * n**a)
        b[i, 0] = _q(y * n**dq)
    if A.rank() < m:
        return None
    x = A.solve(b)
    sol = [Fraction(int(x[i, 0].p), int(x[i, 0].q)) for i in range(m)]
    return RatFn(tuple(sol[: dp + 1]), tuple(sol[dp + 1 :]) + (Fraction(1),))


def _q(c: Fraction) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


# ---------------------------------------------------------------------------
# Expansions
# ---------------------------------------------------------------------------

Coef = RatFn | Callable[[int, int], Fraction]


@dataclass
class Term:
    """coef · Σ vectors(n).  A j-dependent coefficient is a callable (n, j)."""

    coef: Coef
    vectors: Callable[[int], list[tuple[int, Poly]]]
    label: str

    def coefficient(self, n: int, j: int) -> Fraction:
        return self.coef(n) if isinstance(self.coef, RatFn) else Fraction(self.coef(n, j))


@dataclass
class Expansion:
    name: str
    family: str
    lhs: Callable[[int], Poly]
    terms: list[Term]
    n_min: int
    corrected: "Expansion | None" = field(default=None, repr=False)

    def rhs(self, n: int) -> Poly:
        return poly_sum(v.scale(t.coefficient(n, j)) for t in self.terms for j, v in t.vectors(n))


def check_literal(e: Expansion, n: int) -> tuple[bool, Poly, Poly]:
    lhs, rhs = e.lhs(n), e.rhs(n)
    return lhs == rhs, lhs, rhs


def solve_in_span(vectors: Sequence[Poly], target: Poly) -> list[Fraction] | None:
    """Coordinates of target in the span of linearly independent vectors.

    Returns None when the target is outside the span.  Raises ValueError when
    the vectors are dependent, because coordinates would not be unique.
    """
    monos = sorted({m for v in list(vectors) + [target] for m in v.terms})
    col = {m: i for i, m in enumerate(monos)}
    r = len(vectors)
    M = fmpq_mat(max(len(monos), 1), r + 1)
    for j, v in enumerate(vectors):
        for m, c in v.items():
            M[col[m], j] = _q(c)
    for m, c in target.items():
        M[col[m], r] = _q(c)
    R, rank = M.rref()
    pivots = []
    for i in range(rank):
        for j in range(r + 1):
            if R[i, j] != 0:
                pivots.append(j)
                break
    if r in pivots:
        return None
    if len(pivots) < r:
        raise ValueError("right-hand vectors are linearly dependent")
    return [Fraction(int(R[i, r].p), int(R[i, r].q)) for i in range(r)]


@dataclass
class Recovery:
    term: str
    stated: str
    recovered: str | None
    ok: bool
    points: list[tuple[int, Fraction]]


def coordinates(e: Expansion, n: int) -> dict[tuple[int, int], Fraction] | None:
    """Coordinates of lhs(n) on each individual right-hand vector, keyed (term, j)."""
    keys, vecs = [], []
    for t_idx, t in enumerate(e.terms):
        for j, v in t.vectors(n):
            keys.append((t_idx, j))
            vecs.append(v)
    sol = solve_in_span(vecs, e.lhs(n))
    return None if sol is None else dict(zip(keys, sol))


def recover_coefficients(e: Expansion, ns: Sequence[int]) -> list[Recovery]:
    """Interpolate each n-only coefficient from exact coordinates at every n in ns."""
    coords = {n: coordinates(e, n) for n in ns}
    out = []
    for t_idx, t in enumerate(e.terms):
        if not isinstance(t.coef, RatFn):
            # j-dependent: compare coordinate by coordinate at every n.
            ok = all(
                c is not None and all(c[(t_idx, j)] == t.coefficient(n, j) for j, _ in t.vectors(n))
                for n, c in coords.items()
            )
            out.append(Recovery(t.label, "j-dependent", "matched pointwise" if ok else None, ok, []))
            continue
        pts = []
        consistent = True
        for n, c in coords.items():
            if c is None:
                consistent = False
                break
            vals = {c[(t_idx, j)] for j, _ in t.vectors(n)}
            if len(vals) > 1:
                consistent = False
                break
            if vals:
                pts.append((n, vals.pop()))
        recovered = None
        ok = False
        if consistent and pts:
            try:
                fit = interpolate_rational(pts)
                recovered = str(fit)
                ok = fit.same_as(t.coef)
            except InterpolationError:
                pass
        out.append(Recovery(t.label, str(t.coef), recovered, ok, pts))
    return out


# ---------------------------------------------------------------------------
# Building blocks.  N = n + 1 throughout.
# ---------------------------------------------------------------------------


def x(i: int, e: int = 1) -> Poly:
    return Poly.var(i, e)


def s(a: int, b: int, e: int = 1, skip: Sequence[int] = ()) -> Poly:
    return poly_sum(x(k, e) for k in range(a, b + 1) if k not in skip)


def _one(p: Poly) -> list[tuple[int, Poly]]:
    return [(0, p)]


def _r3() -> Poly:
    return x(3, 2) * (x(2) - x(1)) - x(3) * (x(2, 2) - x(1, 2)) + (x(2, 2) * x(1) - x(2) * x(1, 2))


def _a(j: int, top: int) -> Poly:
    """(x_j^2 - x_1^2)·Σ_{k≠1,j} x_k + (x_j^2 x_1 - x_j x_1^2), k ≤ top."""
    return (x(j, 2) - x(1, 2)) * s(2, top, skip=(j,)) + (x(j, 2) * x(1) - x(j) * x(1, 2))


def _b(j: int, top: int) -> Poly:
    """(x_j - x_1)·Σ_{k≠1,j} x_k^2 - (x_j^2 x_1 - x_j x_1^2), k ≤ top."""
    return (x(j) - x(1)) * s(2, top, 2, skip=(j,)) - (x(j, 2) * x(1) - x(j) * x(1, 2))


def _u(j: int) -> Poly:
    return (x(2) - x(1)) * (x(j, 2) - x(3, 2))


def _w(j: int) -> Poly:
    return (x(2, 2) - x(1, 2)) * (x(j) - x(3))


def _pairs(top: int):
    return [(j, k) for j in range(3, top + 1) for k in range(j + 1, top + 1)]


R = ratfn


def _degree1_and_2() -> list[Expansion]:
    """Expansions of degree 1 and 2 (Specht bases, trivial and standard pieces)."""
    out = []
    out.append(
        Expansion(
            "sum-x",
            "low-degree",
            lambda n: s(1, n),
            [
                Term(R([0, 1], [1, 1]), lambda n: _one(s(1, n + 1)), "e1"),
                Term(R([1], [1, 1]), lambda n: [(j, x(j) - x(1)) for j in range(2, n + 1)], "standard j<=n"),
                Term(R([0, -1], [1, 1]), lambda n: _one(x(n + 1) - x(1)), "standard j=n+1"),
            ],
            n_min=2,
        )
    )
    out.append(
        Expansion(
            "standard-times-sum",
            "low-degree",
            lambda n: (x(2) - x(1)) * s(3, n),
            [
                Term(R([-2, 1], [-1, 1]), lambda n: _one((x(2) - x(1)) * s(3, n + 1)), "f=1 j=2"),
                Term(R([1], [-1, 1]), lambda n: [(j, (x(2) - x(1)) * (x(j) - x(3))) for j in range(4, n + 1)], "11 j<=n"),
                Term(R([2, -1], [-1, 1]), lambda n: _one((x(2) - x(1)) * (x(n + 1) - x(3))), "11 j=n+1"),
            ],
            n_min=3,
        )
    )
    out.append(
        Expansion(
            "e2",
            "low-degree",
            lambda n: elementary(2, n),
            [
                Term(R([-1, 1], [1, 1]), lambda n: _one(elementary(2, n + 1)), "e2"),
                Term(
                    R([1], [1, 1]),
                    lambda n: [(j, (x(j) - x(1)) * s(2, n + 1, skip=(j,))) for j in range(2, n + 1)],
                    "f=1 j<=n",
                ),
                Term(R([0, -1], [1, 1]), lambda n: _one((x(n + 1) - x(1)) * s(2, n)), "f=1 j=n+1"),
            ],
            n_min=2,
        )
    )
    out.append(
        Expansion(
            "x1",
            "general-n",
            lambda n: x(1),
            [
                Term(R([1], [1, 1]), lambda n: _one(s(1, n + 1)), "e1"),
                Term(R([-1], [1, 1]), lambda n: [(j, x(j) - x(1)) for j in range(2, n + 2)], "standard"),
            ],
            n_min=1,
        )
    )
    out.append(
        Expansion(
            "x3-standard",
            "general-n",
            lambda n: (x(2) - x(1)) * x(3),
            [
                Term(R([1], [-1, 1]), lambda n: _one((x(2) - x(1)) * s(3, n + 1)), "f=1 j=2"),
                Term(R([-1], [-1, 1]), lambda n: [(j, (x(2) - x(1)) * (x(j) - x(3))) for j in range(4, n + 2)], "11"),
            ],
            n_min=3,
        )
    )

    def x1x2(literal: bool) -> Expansion:
        if literal:
            f1 = lambda n: [(j, (x(2) - x(1)) * s(2, n + 1, skip=(j,))) for j in range(3, n + 2)]
        else:
            f1 = lambda n: [(j, (x(j) - x(1)) * s(2, n + 1, skip=(j,))) for j in range(3, n + 2)]
        return Expansion(
            "x1x2" if literal else "x1x2 (corrected)",
            "general-n",
            lambda n: x(1) * x(2),
            [
                Term(R([2], [0, -1, 1]), lambda n: [(j * 100 + k, (x(j) - x(1)) * (x(k) - x(2))) for j, k in _pairs(n + 1)], "11 pairs"),
                Term(
                    lambda n, j: Fraction(n + 4 - 2 * j, n * (n - 1)),
                    lambda n: [(j, (x(2) - x(1)) * (x(j) - x(3))) for j in range(4, n + 2)],
                    "11 j",
                ),
                Term(R([1], [1, 1]), lambda n: _one((x(2) - x(1)) * s(3, n + 1)), "f=1 j=2"),
                Term(R([-2], [-1, 0, 1]), f1, "f=1 j>=3"),
                Term(R([2], [0, 1, 1]), lambda n: _one(elementary(2, n + 1)), "e2"),
            ],
            n_min=3,
        )

    lit = x1x2(True)
    lit.corrected = x1x2(False)
    out.append(lit)
    return out


def _degree3() -> list[Expansion]:
    """Degree-3 expansions written in the simplified basis (A_j, B_j, R, U_j, W_j)."""
    out = []
    n2m1 = [-1, 0, 1]
    def a2(literal: bool) -> Expansion:
        tail = R([1], n2m1) if literal else R([0, 1], n2m1)
        return Expansion(
            "A2" if literal else "A2 (corrected)",
            "degree-3 split",
            lambda n: _a(2, n),
            [
                Term(R([-1, -1, 1], n2m1), lambda n: _one(_a(2, n + 1) - _w(n + 1)), "A2 - W_{n+1}"),
                Term(R([1], n2m1), lambda n: _one(poly_sum(_u(j) for j in range(4, n + 2)) - _b(2, n + 1)), "sum U - B2"),
                Term(tail, lambda n: [(j, _w(j)) for j in range(4, n + 1)], "W j<=n"),
                Term(R([1], [1, 1]), lambda n: _one(_r3()), "R"),
            ],
            n_min=3,
        )

    def b2(literal: bool) -> Expansion:
        tail = R([1], n2m1) if literal else R([0, 1], n2m1)
        return Expansion(
            "B2" if literal else "B2 (corrected)",
            "degree-3 split",
            lambda n: _b(2, n),
            [
                Term(R([-1, -1, 1], n2m1), lambda n: _one(_b(2, n + 1) - _u(n + 1)), "B2 - U_{n+1}"),
                Term(R([1], n2m1), lambda n: _one(poly_sum(_w(j) for j in range(4, n + 2)) - _a(2, n + 1)), "sum W - A2"),
                Term(tail, lambda n: [(j, _u(j)) for j in range(4, n + 1)], "U j<=n"),
                Term(R([-1], [1, 1]), lambda n: _one(_r3()), "R"),
            ],
            n_min=3,
        )

    for build in (a2, b2):
        lit = build(True)
        lit.corrected = build(False)
        out.append(lit)
    out.append(
        Expansion(
            "m21",
            "degree-3 split",
            lambda n: monomial_sym((2, 1), n),
            [
                Term(R([1], [1, 1]), lambda n: [(j, _a(j, n + 1) + _b(j, n + 1)) for j in range(2, n + 1)], "A+B j<=n"),
                Term(R([-1, 1], [1, 1]), lambda n: _one(monomial_sym((2, 1), n + 1)), "m21"),
                Term(
                    R([0, -1], [1, 1]),
                    lambda n: _one((x(n + 1, 2) - x(1, 2)) * s(2, n) + (x(n + 1) - x(1)) * s(2, n, 2)),
                    "A+B j=n+1",
                ),
            ],
            n_min=3,
        )
    )

    def a_minus_w(n):
        return _a(2, n + 1) - poly_sum(_w(j) for j in range(4, n + 2))

    def u_minus_b(n):
        return poly_sum(_u(j) for j in range(4, n + 2)) - _b(2, n + 1)

    def w_mono(literal: bool) -> Expansion:
        sign = 1 if literal else -1
        return Expansion(
            "w-monomial" if literal else "w-monomial (corrected)",
            "degree-3 monomials",
            lambda n: (x(2, 2) - x(1, 2)) * x(3),
            [
                Term(R([-1], [1, 1]), lambda n: _one(_r3()), "R"),
                Term(R([0, 1], n2m1), lambda n: _one(a_minus_w(n)), "A2 - sum W"),
                Term(R([sign], n2m1), lambda n: _one(u_minus_b(n)), "sum U - B2"),
            ],
            n_min=3,
        )

    def u_mono(literal: bool) -> Expansion:
        sign = 1 if literal else -1
        return Expansion(
            "u-monomial" if literal else "u-monomial (corrected)",
            "degree-3 monomials",
            lambda n: (x(2) - x(1)) * x(3, 2),
            [
                Term(R([1], [1, 1]), lambda n: _one(_r3()), "R"),
                Term(R([1], n2m1), lambda n: _one(a_minus_w(n)), "A2 - sum W"),
                Term(R([0, sign], n2m1), lambda n: _one(u_minus_b(n)), "sum U - B2"),
            ],
            n_min=3,
        )

    for build in (w_mono, u_mono):
        lit = build(True)
        lit.corrected = build(False)
        out.append(lit)
    out.append(
        Expansion(
            "antisym-x1x2",
            "degree-3 monomials",
            lambda n: x(2, 2) * x(1) - x(2) * x(1, 2),
            [
                Term(R([-1, 1], [1, 1]), lambda n: _one(_r3()), "R"),
                Term(R([1], [1, 1]), lambda n: _one(a_minus_w(n)), "A2 - sum W"),
                Term(R([1], [1, 1]), lambda n: _one(u_minus_b(n)), "sum U - B2"),
            ],
            n_min=3,
        )
    )

    def sym_x1x2(literal: bool) -> Expansion:
        last = (lambda n: elementary(2, n + 1)) if literal else (lambda n: monomial_sym((2, 1), n + 1))
        return Expansion(
            "sym-x1x2" if literal else "sym-x1x2 (corrected)",
            "degree-3 monomials",
            lambda n: x(2, 2) * x(1) + x(2) * x(1, 2),
            [
                Term(
                    R([2], [0, -1, 1]),
                    lambda n: [
                        (j * 100 + k, (x(j) - x(1)) * (x(k, 2) - x(2, 2)) + (x(j, 2) - x(1, 2)) * (x(k) - x(2)))
                        for j, k in _pairs(n + 1)
                    ],
                    "pairs",
                ),
                Term(
                    lambda n, j: Fraction(n + 4 - 2 * j, n * (n - 1)),
                    lambda n: [(j, _u(j) + _w(j)) for j in range(4, n + 2)],
                    "U+W j",
                ),
                Term(R([2], [0, 1, 1]), lambda n: _one(last(n)), "symmetric"),
                Term(R([1], [1, 1]), lambda n: _one(_a(2, n + 1) + _b(2, n + 1)), "A2+B2"),
                Term(R([-2], n2m1), lambda n: [(j, _a(j, n + 1) + _b(j, n + 1)) for j in range(3, n + 2)], "A+B j>=3"),
            ],
            n_min=3,
        )
    lit = sym_x1x2(True)
    lit.corrected = sym_x1x2(False)
    out.append(lit)
    return out


def catalogue() -> list[Expansion]:
    return _degree1_and_2() + _degree3()


__all__ = [
    "Expansion",
    "InterpolationError",
    "RatFn",
    "Recovery",
    "Term",
    "catalogue",
    "check_literal",
    "coordinates",
    "interpolate_rational",
    "ratfn",
    "recover_coefficients",
    "solve_in_span",
]
