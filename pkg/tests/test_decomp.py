from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import decomp
from artifact.decomp import (
    DecompositionError,
    a_d,
    build_atlas,
    change_of_basis,
    content_dimension,
    decompose,
    degree_dimension,
    embedded_coordinates,
    f_param,
    p_q_maps,
    ssyt_d,
    supp,
)
from artifact.poly import Poly, mono_from_exps, parse_poly, power_sum
from artifact.specht import specht
from artifact.tableaux import Partition, SsytTableau, enumerate_syt, f_value, partitions_of

GRID = [(n, d) for n in range(1, 5) for d in range(0, 4)]


@pytest.mark.parametrize("flavor", decomp.FLAVORS)
@pytest.mark.parametrize("n,d", GRID)
def test_every_atlas_is_a_basis(n, d, flavor):
    atlas = build_atlas(n, d, flavor, use_cache=False)
    assert atlas.size == atlas.rank() == degree_dimension(n, d)


@pytest.mark.parametrize("n,d", GRID)
def test_content_blocks_have_the_expected_size(n, d):
    atlas = build_atlas(n, d)
    for mu, block in atlas.blocks.items():
        assert len(block.index) == content_dimension(n, mu) == len(block.monomials)


@pytest.mark.parametrize("shape,d", [(lam, d) for n in range(1, 5) for lam in partitions_of(n) for d in range(4)])
def test_A_d_and_SSYT_d_are_equinumerous(shape, d):
    assert len(a_d(shape, d)) == len(ssyt_d(shape, d))


homog = st.dictionaries(
    st.sampled_from([e for e in product(range(3), repeat=3) if sum(e) == 2]).map(mono_from_exps),
    st.fractions(-4, 4, max_denominator=5),
    max_size=6,
).map(Poly)


@given(homog, st.sampled_from(decomp.FLAVORS))
def test_decomposition_recovers_the_input(F, flavor):
    dec = decompose(F, 3, 2, flavor)
    assert dec.total() == F


def test_x1_splits_into_trivial_and_standard_parts():
    dec = decompose(parse_poly("x1"), 3)
    trivial = SsytTableau.parse("0 0 1")
    assert dec.components[trivial] == power_sum(1, 3).scale(Fraction(1, 3))
    assert dec.components[trivial] + sum((v for k, v in dec.components.items() if k != trivial), Poly()) == parse_poly("x1")
    assert len(dec.components) == 2


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (3, 3)])
def test_basis_elements_decompose_to_themselves(n, d):
    for lam in partitions_of(n):
        for M in ssyt_d(lam, d):
            T = enumerate_syt(lam)[-1]
            assert supp(specht(M, T), n) == {M}
            assert f_param(specht(M, T), n) == f_value(M)


def test_decompose_input_errors():
    with pytest.raises(DecompositionError):
        decompose(parse_poly("x1 + x2^2"), 2)
    with pytest.raises(DecompositionError):
        decompose(parse_poly("x3"), 2)
    with pytest.raises(DecompositionError):
        decompose(parse_poly("x1"), 2, d=2)
    assert f_param(Poly()) == -1


@pytest.mark.parametrize("shape,d", [(lam, d) for n in range(2, 5) for lam in partitions_of(n) for d in range(4)])
def test_change_of_basis_is_invertible_and_independent_of_T(shape, d):
    cob = change_of_basis(shape, d)
    assert cob.t_independent
    assert cob.as_fmpq().rank() == len(cob.cols)


def test_p_q_maps_partition_the_components():
    F = specht(SsytTableau.parse("0 0 1;2"), enumerate_syt(Partition((3, 1)))[0])
    split = p_q_maps(F, 4, 1)
    assert split.pF + split.qF + split.rest == F


def test_embedded_coordinates_shapes():
    dom, tgt, mat = embedded_coordinates(3, 2, Partition((1, 1)))
    assert mat.nrows() == len(dom) == content_dimension(3, Partition((1, 1)))
    assert mat.ncols() == len(tgt) == content_dimension(4, Partition((1, 1)))


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("ARTIFACT_CACHE_DIR", str(tmp_path))
    decomp.clear_memory()
    fresh = build_atlas(3, 3, "vtilde", use_cache=True)
    assert list(tmp_path.glob("atlas-*.txt"))
    decomp.clear_memory()
    loaded = build_atlas(3, 3, "vtilde", use_cache=True)
    assert loaded is not fresh
    for key, block in fresh.blocks.items():
        assert loaded.blocks[key].matrix == block.matrix
        assert loaded.blocks[key].index == block.index


def test_corrupt_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("ARTIFACT_CACHE_DIR", str(tmp_path))
    decomp.clear_memory()
    build_atlas(2, 2, use_cache=True)
    for path in tmp_path.glob("atlas-*.txt"):
        path.write_text(path.read_text().splitlines()[0] + "\nblock 2 x y\n")
    decomp.clear_memory()
    assert build_atlas(2, 2, use_cache=True).rank() == degree_dimension(2, 2)
