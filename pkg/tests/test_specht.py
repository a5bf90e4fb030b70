from math import factorial

import pytest
from flint import fmpq, fmpq_mat

from artifact import displays
from artifact.poly import Poly, elementary, permute
from artifact.specht import (
    RnISpec,
    basis_RnI,
    column_vandermonde,
    minimal_cct,
    r_values,
    specht,
    specht_I,
    specht_I_hom,
    specht_quotient,
    summands_RnI,
)
from artifact.tableaux import MultiSet, SsytTableau, StdTableau, comp_n, enumerate_ssyt, enumerate_syt, partitions_of, syt_count


def rank(polys):
    monos = sorted({m for p in polys for m in p.terms})
    if not polys or not monos:
        return 0
    col = {m: j for j, m in enumerate(monos)}
    mat = fmpq_mat(len(polys), len(monos))
    for i, p in enumerate(polys):
        for m, c in p.items():
            mat[i, col[m]] = fmpq(c.numerator, c.denominator) if hasattr(c, "denominator") else c
    return mat.rank()


def multinomial(parts):
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def test_worked_example_F_CT_and_Q():
    T, C, M = displays.T221, displays.C221, displays.M221
    assert specht(C, T) == displays.f_ct()
    assert specht_quotient(C, T) == displays.q_ct()
    assert specht_quotient(M, T) == displays.q_mt()


def test_worked_example_F_MT_matches_the_homogeneous_reading():
    F = specht(displays.M221, displays.T221)
    assert F == displays.CORRECTED.f_mt
    assert F.is_homogeneous(F.degree())
    # the display as printed is not homogeneous, so it cannot equal F
    assert not displays.LITERAL.f_mt.is_homogeneous()


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions_of(n)])
def test_minimal_cocharge_gives_the_classical_specht_polynomial(lam):
    C0 = minimal_cct(lam)
    for T in enumerate_syt(lam):
        assert specht(C0, T) == column_vandermonde(T) or specht(C0, T) == -column_vandermonde(T)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(0, 4)])
def test_V_M_has_dimension_f_lambda_and_is_stable_under_S_n(n, d):
    for lam in partitions_of(n):
        for M in enumerate_ssyt(lam, d):
            basis = [specht(M, T) for T in enumerate_syt(lam)]
            assert rank(basis) == syt_count(lam)
            for i in range(1, n):
                moved = [permute(p, {i: i + 1, i + 1: i}) for p in basis]
                assert rank(basis + moved) == syt_count(lam)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(0, 4)])
def test_quotient_times_vandermonde(n, d):
    for lam in partitions_of(n):
        for M in enumerate_ssyt(lam, d):
            for T in enumerate_syt(lam):
                assert specht_quotient(M, T) * specht(minimal_cct(lam), T) == specht(M, T)


def test_r_values_match_the_gap_count():
    # I = {1,3} in n = 5: gaps below 1 are none, below 3 is {2}
    assert r_values(MultiSet((1, 3)), 5) == [(1, 0), (3, 1)]


@pytest.mark.parametrize(
    "n,I,flavor",
    [(5, (1, 3), "plain"), (5, (1, 3, 3), "hom"), (4, (2,), "plain"), (4, (1, 1), "hom"), (6, (2, 4), "plain"), (6, (1, 2, 2), "hom")],
)
def test_R_nI_dimension_is_multinomial(n, I, flavor):
    I = MultiSet(I)
    spec = RnISpec(n, I, flavor)
    dim = sum(syt_count(s.C.shape) for s in summands_RnI(spec))
    assert dim == multinomial(comp_n(I, n))
    polys = [p for _, _, p in basis_RnI(spec)]
    assert rank(polys) == dim


def test_hom_variant_has_degree_sum_of_I():
    C = SsytTableau.parse("0 0 1;1 2")
    T = StdTableau.parse("1 2 4;3 5")
    F = specht_I_hom(C, T, MultiSet((1, 3, 3)))
    assert F.is_homogeneous(7)
    assert F == specht(C, T) * elementary(3, 5)
    assert specht_I(C, T, MultiSet((1, 3))) == specht(C, T)
