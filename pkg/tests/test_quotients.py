from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.evsym import ev_from_poly, ev_from_sym
from artifact.poly import Poly, elementary, parse_poly
from artifact.quotients import (
    OutOfModelError,
    e_products_rank,
    h_set,
    h_to_i,
    i_to_h,
    images_rank,
    project,
    rinf_k_window,
    rnk0_dim,
    rnk0_reduce,
    rnks_slice,
    standard_monomials,
    sym_convert,
    sym_mod_pk,
)
from artifact.tableaux import Partition, SsytTableau, enumerate_cct, partitions_of


def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def total_dim(n, k, s):
    return sum(rnks_slice(n, k, s, d).quotient_rank for d in range(n * (k - 1) + 1))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(1, 4)])
def test_rnk0_has_k_to_the_n_standard_monomials(n, k):
    assert sum(rnk0_dim(n, k, d) for d in range(n * (k - 1) + 1)) == k**n


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 6) for k in range(1, n + 1)])
def test_rnk_dimension_is_k_factorial_times_stirling(n, k):
    assert total_dim(n, k, k) == factorial(k) * stirling2(n, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_coinvariant_ring_has_dimension_n_factorial(n):
    assert total_dim(n, n, n) == factorial(n)


@pytest.mark.parametrize("n,k,d", [(3, 2, 2), (4, 3, 3), (4, 2, 2)])
def test_slices_shrink_as_s_grows(n, k, d):
    ranks = [rnks_slice(n, k, s, d).quotient_rank for s in range(min(k, n) + 1)]
    assert ranks == sorted(ranks, reverse=True)
    assert ranks[0] == rnk0_dim(n, k, d)


def test_projection_kills_the_ideal_and_fixes_the_complement():
    sl = rnks_slice(3, 3, 1, 3)
    assert project(elementary(3, 3), sl) == Poly()
    for m in sl.complement():
        assert project(Poly.monomial(m), sl) == Poly.monomial(m)
    F = parse_poly("x1^2 x2 + 3 x1 x2 x3")
    assert project(F, sl) == project(project(F, sl), sl)
    assert images_rank([F, elementary(3, 3), F.scale(2)], sl) == 1


def test_rnk0_reduce_and_invalid_slice():
    assert rnk0_reduce(parse_poly("x1^3 + x1 x2"), 3) == parse_poly("x1 x2")
    assert len(standard_monomials(2, 2, 2)) == 1
    with pytest.raises(ValueError):
        rnks_slice(2, 3, 3, 1)


CCTS = [C for n in range(2, 5) for lam in partitions_of(n) for C in enumerate_cct(lam)]


@pytest.mark.parametrize("C", CCTS, ids=str)
@pytest.mark.parametrize("k", [2, 3, 4])
def test_h_vectors_and_multisets_correspond(C, k):
    for h in h_set(C, k, 3).vectors:
        I = h_to_i(h, C, k, "hom")
        assert len(I) == k - 1
        assert i_to_h(I, C, "hom") == h
        J = h_to_i(h, C, k, "set")
        assert J.is_set() and len(J) == k - 1
        assert i_to_h(J, C, "set") == h


def test_h_set_of_worked_tableau():
    C = SsytTableau.parse("0 0 1;2")
    assert [str(I) for I in (h_to_i(h, C, 4, "set") for h in h_set(C, 4, 3).vectors)] == [
        "{1,2,3}", "{1,2,4}", "{1,2,5}", "{1,2,6}",
    ]


partitions = st.integers(1, 6).flatmap(lambda D: st.sampled_from(partitions_of(D)))


@given(partitions, st.sampled_from("mehp"), st.sampled_from("mehp"))
def test_symmetric_basis_conversion_round_trips(lam, a, b):
    there = sym_convert({lam: Fraction(2, 3)}, a, b)
    assert sym_convert(there, b, a) == {lam: Fraction(2, 3)}


@given(partitions, st.integers(1, 5))
def test_reduction_mod_high_power_sums_is_idempotent(lam, k):
    once = sym_mod_pk({lam: 1}, k, "m", "m")
    assert sym_mod_pk(once, k, "m", "m") == once
    if lam[0] < k:
        assert sym_mod_pk({lam: 1}, k, "p", "p") == {lam: 1}


@pytest.mark.parametrize("k,D", [(k, D) for k in range(1, 5) for D in range(1, 7)])
def test_e_products_give_a_basis_of_the_quotient(k, D):
    rank, count = e_products_rank(k, D)
    assert rank == count == sum(1 for lam in partitions_of(D) if not lam.parts or lam[0] < k)


def test_infinite_window_reduction():
    W = rinf_k_window(3, 2, 2)
    assert W.is_zero(ev_from_sym(Partition((2,)), 2))
    assert not W.is_zero(ev_from_sym(Partition((1, 1)), 2))
    assert W.reduce(ev_from_poly(parse_poly("x1^2 + x1 x2"), 2)) == ev_from_poly(parse_poly("x1 x2"), 2)
    assert rinf_k_window(3, 5, 2).reduce(ev_from_sym(Partition((2,)), 1)) == ev_from_sym(Partition((2,)), 1)
    with pytest.raises(OutOfModelError):
        W.reduce(ev_from_poly(parse_poly("x4^2"), 4))
    with pytest.raises(OutOfModelError):
        W.reduce(ev_from_poly(parse_poly("x1"), 1))
    with pytest.raises(ValueError):
        rinf_k_window(3, 0, 2)
