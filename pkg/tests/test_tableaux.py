from collections import Counter
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact.tableaux import (
    InfShape,
    InfSsyt,
    InfSyt,
    MultiSet,
    Partition,
    SsytTableau,
    StdTableau,
    TableauError,
    asi,
    asi_c,
    c_total,
    c_value,
    comp_n,
    comp_n_inv,
    content_multiset,
    ct,
    ct_J,
    descents,
    dsi_c,
    dspc,
    enumerate_cct,
    enumerate_inf_ssyt,
    enumerate_ssyt,
    enumerate_ssyt_content,
    enumerate_syt,
    evacuation,
    f_value,
    hook_length_count,
    iota,
    iota_hat,
    iota_hat_by_definition,
    iota_tilde,
    iota_tilde_shift,
    is_cocharge,
    lift,
    multisets_of_size,
    partitions_of,
    represented_content,
    split_M0,
    standardize,
    submultiset_count,
    syt_count,
)

SMALL_SHAPES = [lam for n in range(1, 7) for lam in partitions_of(n)]


def _cells(lam):
    return [(i, j) for i, ln in enumerate(lam.parts) for j in range(ln)]


def brute_ssyt(lam, d):
    """Fill every cell with 0..d and keep the semistandard fillings of sum d."""
    cells = _cells(lam)
    out = set()
    for vals in product(range(d + 1), repeat=len(cells)):
        if sum(vals) != d:
            continue
        fill = dict(zip(cells, vals))
        rows_ok = all(fill[(i, j)] <= fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill)
        cols_ok = all(fill[(i, j)] < fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill)
        if rows_ok and cols_ok:
            out.add(tuple(tuple(fill[(i, j)] for j in range(ln)) for i, ln in enumerate(lam.parts)))
    return out


def test_partition_counts_match_known_sequence():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("lam", SMALL_SHAPES + [Partition((4, 2, 1))])
def test_syt_count_matches_hook_length_formula(lam):
    syts = enumerate_syt(lam)
    assert len(syts) == hook_length_count(lam) == syt_count(lam)
    assert len(set(syts)) == len(syts)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(0, 4)])
def test_ssyt_enumeration_against_brute_force(n, d):
    for lam in partitions_of(n):
        assert {M.rows for M in enumerate_ssyt(lam, d)} == brute_ssyt(lam, d)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 7) for d in range(0, 5)])
def test_rsk_dimension_identity(n, d):
    total = sum(len(enumerate_ssyt(lam, d)) * syt_count(lam) for lam in partitions_of(n))
    assert total == comb(n + d - 1, d)


@pytest.mark.parametrize("lam", SMALL_SHAPES)
def test_ct_is_a_bijection_onto_cocharge_tableaux(lam):
    images = [ct(T) for T in enumerate_syt(lam)]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_cct(lam))
    assert all(is_cocharge(C) for C in images)


def test_ct_of_the_worked_example():
    assert ct(StdTableau.parse("1 2;3 5;4")) == SsytTableau.parse("0 0;1 2;2")


@pytest.mark.parametrize("lam", [lam for lam in SMALL_SHAPES if lam.n <= 5])
def test_ct_J_round_trip(lam):
    n = lam.n
    for size in range(n):
        for J in multisets_of_size(size, list(range(1, n))):
            dom = [T for T in enumerate_syt(lam) if descents(T) <= J.support()]
            imgs = [ct_J(T, J) for T in dom]
            want = enumerate_ssyt_content(lam, represented_content(comp_n(J, n)))
            assert sorted(imgs) == sorted(want)
            for T, M in zip(dom, imgs):
                assert standardize(M) == (T, J)


def test_ct_J_requires_descents_inside_J():
    T = StdTableau.parse("1 3;2")
    with pytest.raises(TableauError):
        ct_J(T, MultiSet(()))


@st.composite
def syt(draw, nmax=7):
    n = draw(st.integers(1, nmax))
    lam = draw(st.sampled_from(partitions_of(n)))
    return draw(st.sampled_from(enumerate_syt(lam)))


@given(syt())
def test_evacuation_is_an_involution_reflecting_descents(T):
    E = evacuation(T)
    assert evacuation(E) == T
    assert E.shape == T.shape
    assert descents(E) == dsi_c(T)
    assert asi(E) == asi_c(T)


@given(syt())
def test_iota_and_iota_tilde(T):
    I = iota(T)
    assert I.shape == T.shape.plus()
    assert I.n == T.n + 1
    assert iota_tilde(T) == iota_tilde_shift(T)


@given(st.integers(1, 5), st.integers(0, 4), st.data())
def test_iota_hat_adds_a_zero(n, d, data):
    lam = data.draw(st.sampled_from(partitions_of(n)))
    Ms = enumerate_ssyt(lam, d)
    if not Ms:
        return
    M = data.draw(st.sampled_from(Ms))
    H = iota_hat(M)
    assert H == iota_hat_by_definition(M)
    assert sorted(H.entries()) == sorted(M.entries() + [0])
    assert f_value(H) == f_value(M)
    assert lift(H) == lift(M)


@given(st.integers(1, 8), st.lists(st.integers(1, 7), max_size=6))
def test_comp_n_round_trip(n, elems):
    J = MultiSet.of(e for e in elems if e < n)
    alpha = comp_n(J, n)
    assert sum(alpha) == n
    assert comp_n_inv(alpha, n) == J


def test_content_multiset_recovers_J():
    J = MultiSet((2, 2, 4))
    assert content_multiset(represented_content(comp_n(J, 5))) == J


def test_dspc_of_worked_example():
    assert dspc(SsytTableau.parse("0 0;1 2;2")) == MultiSet((2, 3))


@given(st.lists(st.integers(1, 4), max_size=6), st.integers(0, 7))
def test_submultiset_count_against_brute_force(values, f):
    brute = len(set(combinations(sorted(values), f))) if f <= len(values) else 0
    assert submultiset_count(list(Counter(values).values()), f) == brute


def test_c_values_of_index_one_two():
    M = InfSsyt((), ((1, 1), (2, 1)))
    assert [c_value(M, f) for f in range(4)] == [1, 2, 1, 0]
    assert c_total(M) == 4


@pytest.mark.parametrize("d", range(0, 5))
def test_infinite_ssyt_enumeration(d):
    for size in range(0, d + 1):
        for mu in partitions_of(size):
            Ms = enumerate_inf_ssyt(mu, d)
            assert len(set(Ms)) == len(Ms)
            assert all(M.total == d and M.shape == InfShape(mu) for M in Ms)


@pytest.mark.parametrize("d", range(0, 4))
def test_infinite_ssyt_are_limits_of_finite_ones(d):
    n = 2 * d + 2
    lifted = {lift(M) for lam in partitions_of(n) for M in enumerate_ssyt(lam, d)}
    direct = {M for size in range(d + 1) for mu in partitions_of(size) for M in enumerate_inf_ssyt(mu, d)}
    assert lifted == direct


def test_infinite_tableau_realization_and_lift():
    M = InfSsyt.parse("3 4;4 | mult: 1 2")
    assert M.realize_at(5) == SsytTableau.parse("1 2;3 4;4")
    assert lift(M.realize_at(9)) == M
    T = InfSyt(((3, 5), (4,)))
    assert T.realize_at(5) == StdTableau.parse("1 2;3 5;4")
    with pytest.raises(TableauError):
        M.realize_at(4)


def test_split_M0():
    M0, alpha = split_M0(SsytTableau.parse("0 1 2;1 3"))
    assert M0 == SsytTableau.parse("0 0 0;1 3")
    assert alpha == Partition((2, 1))


def test_parse_rejects_non_semistandard():
    with pytest.raises(TableauError):
        SsytTableau.parse("1 0;2")
    with pytest.raises(TableauError):
        StdTableau.parse("1 2;2")
