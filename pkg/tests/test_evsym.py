import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import displays
from artifact.evsym import (
    EvSym,
    EvSymError,
    elementary_ev,
    ev_from_poly,
    ev_from_sym,
    m_alpha_decompose,
    rebase,
    reconstruct,
    stable_invariance_holds,
    stable_quotient,
    stable_specht,
    stable_window,
    truncate,
)
from artifact.poly import Poly, elementary, monomial_sym, parse_poly
from artifact.specht import specht, specht_quotient
from artifact.tableaux import InfShape, Partition, enumerate_inf_ssyt, enumerate_syt, lift, partitions_of

small_partitions = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)
head_polys = st.sampled_from(["0", "1", "x1", "x1 - 2 x2", "x1^2 x2 + 1/3", "x2^3"]).map(parse_poly)


def sample(alpha, base, head):
    return ev_from_poly(head, base) * ev_from_sym(alpha, base)


@given(small_partitions, small_partitions, head_polys, head_polys, st.integers(6, 8))
def test_truncation_is_a_ring_homomorphism(a, b, p, q, N):
    F, G = sample(a, 2, p), sample(b, 2, q)
    assert truncate(F + G, N) == truncate(F, N) + truncate(G, N)
    assert truncate(F * G, N) == truncate(F, N) * truncate(G, N)


@given(small_partitions, st.integers(0, 3), st.integers(4, 7))
def test_full_monomial_truncates_to_the_finite_one(alpha, base, N):
    assert truncate(ev_from_sym(alpha, base), N) == monomial_sym(alpha, N)


@given(small_partitions, head_polys, st.integers(0, 3))
def test_rebase_does_not_change_the_function(alpha, head, extra):
    F = sample(alpha, 2, head)
    G = rebase(F, 2 + extra)
    assert G == F
    for N in (6, 7):
        assert truncate(G, N) == truncate(F, N)


@given(small_partitions, head_polys)
def test_json_round_trip(alpha, head):
    F = sample(alpha, 2, head)
    data = json.loads(json.dumps(F.to_json()))
    assert data["schema_version"] == 1
    assert EvSym.from_json(data) == F


@given(small_partitions, head_polys)
def test_reconstruct_inverts_truncate(alpha, head):
    F = sample(alpha, 2, head)
    N = 2 + len(alpha) + 2
    assert reconstruct(truncate(F, N), 2, N, F.degree_bound) == F


@given(small_partitions, small_partitions, head_polys)
def test_m_alpha_decomposition_recombines(a, b, head):
    F = sample(a, 2, head) + sample(b, 2, parse_poly("x1 x2"))
    dec = m_alpha_decompose(F)
    assert dec.recombine() == F


def test_reconstruct_rejects_non_symmetric_input():
    with pytest.raises(EvSymError):
        reconstruct(parse_poly("x3 + 2 x4"), 2, 5)
    with pytest.raises(EvSymError):
        reconstruct(parse_poly("x3 x4 x5"), 2, 5)


def test_constructor_validation():
    with pytest.raises(EvSymError):
        ev_from_poly(parse_poly("x4"), 2)
    with pytest.raises(EvSymError):
        rebase(elementary_ev(2, 3), 2)
    with pytest.raises(EvSymError):
        truncate(elementary_ev(2, 3), 2)


def test_elementary_truncation():
    assert truncate(elementary_ev(3, 1), 6) == elementary(3, 6)


def stable_pairs(max_d):
    for k in range(0, 3):
        for fshape in partitions_of(k):
            syts = {lift(T) for T in enumerate_syt(InfShape(fshape).realize_at(k + (fshape[0] if k else 0) + 1))}
            for d in range(k, max_d + 1):
                for M in enumerate_inf_ssyt(fshape, d):
                    for T in sorted(syts):
                        yield M, T


PAIRS = list(stable_pairs(4))


@pytest.mark.parametrize("M,T", PAIRS, ids=[f"{M}/{T}" for M, T in PAIRS])
def test_stable_specht_truncates_to_the_finite_polynomial(M, T):
    F = stable_specht(M, T)
    N0 = stable_window(M, T)
    for N in (N0, N0 + 2):
        assert truncate(F, N) == specht(M.realize_at(N), T.realize_at(N))
    assert stable_invariance_holds(F, N0 + 1)


def test_worked_example_stable_expansion():
    F = stable_specht(displays.M221_HAT, displays.T221_HAT)
    for N in (6, 7, 8):
        assert truncate(F, N) == displays.CORRECTED.stable_truncated(N)
    Q = stable_quotient(displays.M221_HAT, displays.T221_HAT)
    for N in (6, 7):
        assert truncate(Q, N) == displays.q_stable_truncated(N)
        assert truncate(Q, N) == specht_quotient(displays.M221_HAT.realize_at(N), displays.T221_HAT.realize_at(N))
