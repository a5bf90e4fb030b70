from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.poly import (
    DivisionError,
    Poly,
    PolyParseError,
    complete_homogeneous,
    content_blocks,
    elementary,
    exact_divide,
    format_poly,
    monomial_sym,
    mono_from_exps,
    parse_poly,
    permute,
    power_sum,
    substitute_zero,
    truncate_vars,
)

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
monos = st.tuples(*(st.integers(0, 2) for _ in range(4))).map(mono_from_exps)
polys = st.dictionaries(monos, coeffs, max_size=5).map(Poly)


def evaluate(p: Poly, point: dict[int, Fraction]) -> Fraction:
    total = Fraction(0)
    for m, c in p.items():
        term = Fraction(c)
        for i, e in m:
            term *= point.get(i, 0) ** e
        total += term
    return total


points = st.fixed_dictionaries({i: st.fractions(-3, 3, max_denominator=4) for i in range(1, 5)})


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()


@given(polys, polys, points)
def test_arithmetic_agrees_with_evaluation(p, q, pt):
    assert evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt)
    assert evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt)


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@given(polys, st.sets(st.integers(1, 4)), points)
def test_substitute_zero_is_evaluation_at_zero(p, zs, pt):
    zeroed = {i: (0 if i in zs else v) for i, v in pt.items()}
    assert evaluate(substitute_zero(p, zs), pt) == evaluate(p, zeroed)


@given(polys, polys.filter(bool))
def test_exact_division_inverts_multiplication(p, q):
    assert exact_divide(p * q, q) == p


def test_inexact_division_raises():
    with pytest.raises(DivisionError):
        exact_divide(parse_poly("x1^2 + x2"), parse_poly("x1 + x2"))


def test_parser_grammar():
    assert parse_poly("(x1 + x2)^2") == parse_poly("x1^2 + 2 x1 x2 + x2^2")
    assert parse_poly("x1 x2 / 2") == parse_poly("1/2 * x1 * x2")
    assert parse_poly("3(x1 - x2)x3") == parse_poly("3 x1 x3 - 3 x2 x3")
    assert parse_poly("x1**3") == Poly.var(1, 3)
    for bad in ("x1 +", "(x1", "y2", "x1 ^ x2"):
        with pytest.raises(PolyParseError):
            parse_poly(bad)


def test_printer_is_canonical():
    assert format_poly(parse_poly("x2 + x1^2 - 1/2")) == format_poly(parse_poly("-1/2 + x2 + x1^2"))
    assert format_poly(Poly()) == "0"


@pytest.mark.parametrize("n", range(1, 6))
def test_newton_identities(n):
    e1, e2, e3 = (elementary(r, n) for r in (1, 2, 3))
    p1, p2, p3 = (power_sum(r, n) for r in (1, 2, 3))
    assert 2 * e2 == e1 * p1 - p2
    assert 3 * e3 == e2 * p1 - e1 * p2 + p3


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_homogeneous_duality(n):
    # sum_{i} (-1)^i e_i h_{r-i} = 0 for r >= 1
    for r in range(1, 4):
        total = sum(((-1) ** i) * elementary(i, n) * complete_homogeneous(r - i, n) for i in range(r + 1))
        assert total == Poly()


def test_monomial_symmetric_functions():
    assert monomial_sym((2, 1), 3) == parse_poly("x1^2 x2 + x1^2 x3 + x2^2 x1 + x2^2 x3 + x3^2 x1 + x3^2 x2")
    assert monomial_sym((1, 1), 4) == elementary(2, 4)
    assert monomial_sym((1, 1, 1), 2) == Poly()
    assert power_sum(2, 2, start=3) == parse_poly("x3^2 + x4^2")


@given(polys)
def test_symmetric_group_action(p):
    swap = {1: 2, 2: 1}
    assert permute(permute(p, swap), swap) == p
    assert permute(elementary(2, 4), swap) == elementary(2, 4)


@given(polys)
def test_content_blocks_partition_the_terms(p):
    blocks = content_blocks(p)
    assert sum(blocks.values(), Poly()) == p


def test_truncate_vars():
    assert truncate_vars(parse_poly("x1 + x2 x5 + x3"), 3) == parse_poly("x1 + x3")
