"""Reference polynomials for the worked example on the shape 221 and the small bases.

The shape-221 data concerns T = [[1,2],[3,5],[4]], M = [[1,1],[3,4],[4]] and
C = [[0,0],[1,2],[2]], their images under iota / iota-hat, and their infinite
lifts.  Strings are in the polynomial text grammar of :mod:`artifact.poly`.

Two of the displayed factors contain a non-homogeneous term (x1^3 x3^2 x4 in
the first factor, x1^3 x3^2 in the second).  ``LITERAL`` keeps them as printed
and ``CORRECTED`` replaces x3^2 by x3^4 in both places, which restores
homogeneity.  Checks report both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .poly import Poly, elementary, monomial_sym, parse_poly, poly_sum, power_sum
from .tableaux import InfSsyt, InfSyt, SsytTableau, StdTableau, iota, iota_hat

T221 = StdTableau.parse("1 2;3 5;4")
M221 = SsytTableau.parse("1 1;3 4;4")
C221 = SsytTableau.parse("0 0;1 2;2")
T221_HAT = InfSyt(((3, 5), (4,)))
M221_HAT = InfSsyt(((3, 4), (4,)), ((1, 2),))
C221_HAT = InfSsyt(((1, 2), (2,)))

_A_LIT = "(x1 x3^3 x4^4 - x1 x4^3 x3^4 - x1^3 x3 x4^4 + x4^3 x3 x1^4 + x1^3 x3^2 x4 - x3^3 x1^4 x4)"
_B_LIT = "(x3^3 x4^4 - x4^3 x3^4 - x1^3 x4^4 + x4^3 x1^4 + x1^3 x3^2 - x3^3 x1^4)"
_A_FIX = _A_LIT.replace("x1^3 x3^2 x4", "x1^3 x3^4 x4")
_B_FIX = _B_LIT.replace("x1^3 x3^2 -", "x1^3 x3^4 -")
_P = "(x3^2 x4^2 + x1^2 x4^2 + x1^2 x3^2 + x1^2 x3 x4 + x1 x3^2 x4 + x1 x3 x4^2)"

F_CT = "(x3 x4^2 - x4 x3^2 - x1 x4^2 + x4 x1^2 + x1 x3^2 - x3 x1^2)(x5^2 - x2^2)"
Q_CT = "x5 + x2"
Q_MT = "x1 x2 x3 x4 x5 (x3 x4 + x1 x4 + x1 x3)(x5^2 + x5 x2 + x2^2)"
Q_IOTA_EXTRA = (
    "x1 x3 x4 x6 (x3 x4 + x1 x4 + x1 x3)(x5^3 + x5^2 x2 + x5 x2^2 + x2^3)"
    f" + x2 x5 x6 {_P} (x5^2 + x5 x2 + x2^2)"
)
Q_TAIL1 = f"x1 x3 x4 (x3 x4 + x1 x4 + x1 x3)(x5^3 + x5^2 x2 + x5 x2^2 + x2^3) + x2 x5 {_P} (x5^2 + x5 x2 + x2^2)"
Q_TAIL11 = f"{_P} (x5^3 + x5^2 x2 + x5 x2^2 + x2^3)"


@dataclass(frozen=True)
class Displays:
    """The shape-221 polynomials, with the two factor strings as given."""

    a: str
    b: str

    @property
    def f_mt(self) -> Poly:
        return parse_poly(f"{self.a}(x5^4 x2 - x2^4 x5)")

    @property
    def iota_extra(self) -> Poly:
        """F_{ι̂M,ιT} - F_{M,T}."""
        return parse_poly(f"x6 {self.a}(x5^4 - x2^4) + x6 {self.b}(x5^4 x2 - x2^4 x5)")

    @property
    def tail1(self) -> Poly:
        """Coefficient of the tail Σ_{i≥6} x_i in the stable expansion."""
        return parse_poly(f"{self.a}(x5^4 - x2^4) + {self.b}(x5^4 x2 - x2^4 x5)")

    @property
    def tail11(self) -> Poly:
        """Coefficient of the tail Σ_{6≤i<j} x_i x_j."""
        return parse_poly(f"{self.b}(x5^4 - x2^4)")

    def stable_truncated(self, N: int) -> Poly:
        """The three-part stable expansion with the tails cut off after x_N."""
        e1 = power_sum(1, N - 5, start=6)
        e2 = elementary(2, N - 5, start=6)
        return self.f_mt + self.tail1 * e1 + self.tail11 * e2


LITERAL = Displays(_A_LIT, _B_LIT)
CORRECTED = Displays(_A_FIX, _B_FIX)


def f_ct() -> Poly:
    return parse_poly(F_CT)


def q_ct() -> Poly:
    return parse_poly(Q_CT)


def q_mt() -> Poly:
    return parse_poly(Q_MT)


def q_iota() -> Poly:
    return q_mt() + parse_poly(Q_IOTA_EXTRA)


def q_stable_truncated(N: int) -> Poly:
    e1 = power_sum(1, N - 5, start=6)
    e2 = elementary(2, N - 5, start=6)
    return q_mt() + parse_poly(Q_TAIL1) * e1 + parse_poly(Q_TAIL11) * e2


def iota_pair() -> tuple[SsytTableau, StdTableau]:
    return iota_hat(M221), iota(T221)


# ---------------------------------------------------------------------------
# Small bases for general n
# ---------------------------------------------------------------------------


def _x(i: int, e: int = 1) -> Poly:
    return Poly.var(i, e)


def _s(n: int, skip: tuple[int, ...], e: int = 1) -> Poly:
    return poly_sum(_x(k, e) for k in range(1, n + 1) if k not in skip)


def _anti(j: int) -> Poly:
    return _x(j, 2) * _x(1) - _x(j) * _x(1, 2)


def _pairs(n: int, lo: int = 3):
    return [(j, k) for j in range(lo, n + 1) for k in range(j + 1, n + 1)]


@dataclass(frozen=True)
class SmallBasis:
    label: str
    M: Callable[[int], SsytTableau]
    basis: Callable[[int], list[Poly]]


def _row(n: int, tail: tuple[int, ...], below: tuple[tuple[int, ...], ...] = ()) -> SsytTableau:
    first = (0,) * (n - sum(map(len, below)) - len(tail)) + tail
    return SsytTableau((first,) + below)


SMALL_BASES: list[SmallBasis] = [
    SmallBasis("0..00", lambda n: _row(n, ()), lambda n: [Poly.const(1)]),
    SmallBasis("0..01", lambda n: _row(n, (1,)), lambda n: [power_sum(1, n)]),
    SmallBasis("0..11", lambda n: _row(n, (1, 1)), lambda n: [elementary(2, n)]),
    SmallBasis("0..12", lambda n: _row(n, (1, 2)), lambda n: [monomial_sym((2, 1), n)]),
    SmallBasis("0..0/1", lambda n: _row(n, (), ((1,),)), lambda n: [_x(j) - _x(1) for j in range(2, n + 1)]),
    SmallBasis(
        "0..0/11",
        lambda n: _row(n, (), ((1, 1),)),
        lambda n: [(_x(2) - _x(1)) * (_x(j) - _x(3)) for j in range(4, n + 1)]
        + [(_x(j) - _x(1)) * (_x(k) - _x(2)) for j, k in _pairs(n)],
    ),
    SmallBasis(
        "0..01/1",
        lambda n: _row(n, (1,), ((1,),)),
        lambda n: [(_x(j) - _x(1)) * _s(n, (1, j)) for j in range(2, n + 1)],
    ),
    SmallBasis(
        "0..01/2",
        lambda n: _row(n, (1,), ((2,),)),
        lambda n: [(_x(j, 2) - _x(1, 2)) * _s(n, (1, j)) + _anti(j) for j in range(2, n + 1)],
    ),
    SmallBasis(
        "0..02/1",
        lambda n: _row(n, (2,), ((1,),)),
        lambda n: [(_x(j) - _x(1)) * _s(n, (1, j), 2) - _anti(j) for j in range(2, n + 1)],
    ),
    SmallBasis(
        "0..0/1/2",
        lambda n: _row(n, (), ((1,), (2,))),
        lambda n: [
            _x(l, 2) * (_x(i) - _x(1)) - _x(l) * (_x(i, 2) - _x(1, 2)) + _anti(i)
            for i in range(2, n + 1)
            for l in range(i + 1, n + 1)
        ],
    ),
    SmallBasis(
        "0..0/12",
        lambda n: _row(n, (), ((1, 2),)),
        lambda n: [(_x(2) - _x(1)) * (_x(j, 2) - _x(3, 2)) + (_x(2, 2) - _x(1, 2)) * (_x(j) - _x(3)) for j in range(4, n + 1)]
        + [(_x(j) - _x(1)) * (_x(k, 2) - _x(2, 2)) + (_x(j, 2) - _x(1, 2)) * (_x(k) - _x(2)) for j, k in _pairs(n)],
    ),
]


__all__ = [
    "C221",
    "C221_HAT",
    "CORRECTED",
    "Displays",
    "LITERAL",
    "M221",
    "M221_HAT",
    "SMALL_BASES",
    "SmallBasis",
    "T221",
    "T221_HAT",
    "f_ct",
    "iota_pair",
    "q_ct",
    "q_iota",
    "q_mt",
    "q_stable_truncated",
]
