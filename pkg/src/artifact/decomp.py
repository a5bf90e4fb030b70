"""Exact linear algebra against the Specht-type bases of Q[x_n]_d.

Three flavors of basis are supported:

``vm``
    F_{M,T} over M in SSYT_d(λ).  Each F_{M,T} lives in a single content
    block, so the atlas is split by content and every block is square.
``vtilde``
    F_{M⁰,T}·m_M, which mixes contents, so the atlas is one block per degree.
``cihom``
    F_{C,T}·∏_{i ∈ Asp^c_I(C)} e_i over the pairs (C, I) of A_d(λ).

Atlases are cached on disk (see :func:`cache_dir`) because building the
polynomials dominates the runtime.  Matrices are handled with FLINT's exact
rational matrices.
"""

from __future__ import annotations

import hashlib
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Literal, Sequence

from flint import fmpq, fmpq_mat

from .poly import (
    Monomial,
    Poly,
    content_blocks,
    distinct_arrangements,
    grlex_key,
    mono_from_exps,
    monomial_sym,
)
from .specht import specht, specht_I_hom
from .tableaux import (
    MultiSet,
    Partition,
    SsytTableau,
    StdTableau,
    dspc,
    enumerate_cct,
    enumerate_ssyt,
    enumerate_syt,
    f_value,
    partitions_of,
    split_M0,
)

Flavor = Literal["vm", "vtilde", "cihom"]
FLAVORS: tuple[str, ...] = ("vm", "vtilde", "cihom")
CACHE_VERSION = 1

_cache_enabled = os.environ.get("ARTIFACT_NO_CACHE", "") == ""


class RankError(ArithmeticError):
    """A basis that must span turned out rank deficient."""


class DecompositionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Index types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CIIndex:
    """A pair (C, I) from A_d(λ)."""

    C: SsytTableau
    I: MultiSet

    def __str__(self) -> str:
        return f"({self.C}, {self.I})"


def a_d(shape: Partition, d: int) -> list[CIIndex]:
    """A_d(λ): cocharge C with multisets I ⊇ Dsp^c(C) inside 1..n summing to d."""
    n = shape.n
    out = []
    for C in enumerate_cct(shape):
        D = dspc(C)
        rest = d - D.total()
        if rest < 0:
            continue
        for p in partitions_of(rest):
            if p.parts and p[0] > n:
                continue
            out.append(CIIndex(C, D.union(p.parts)))
    return sorted(out, key=lambda x: (x.C.rows, x.I.elems))


def ssyt_d(shape: Partition, d: int) -> list[SsytTableau]:
    return enumerate_ssyt(shape, d)


def content_of(M: SsytTableau) -> Partition:
    return Partition(tuple(sorted((x for x in M.entries() if x), reverse=True)))


def content_dimension(n: int, mu: Partition) -> int:
    """n!/∏ m_h!, counting zeros among the multiplicities."""
    if len(mu) > n:
        return 0
    out = factorial(n) // factorial(n - len(mu))
    for part in set(mu.parts):
        out //= factorial(mu.parts.count(part))
    return out


def degree_dimension(n: int, d: int) -> int:
    return comb(n + d - 1, d)


@lru_cache(maxsize=None)
def block_monomials(n: int, mu: Partition) -> tuple[Monomial, ...]:
    return tuple(sorted((mono_from_exps(e) for e in distinct_arrangements(mu.parts, n)), key=grlex_key))


@lru_cache(maxsize=None)
def degree_monomials(n: int, d: int) -> tuple[Monomial, ...]:
    out = []
    for mu in partitions_of(d):
        out.extend(block_monomials(n, mu))
    return tuple(sorted(out, key=grlex_key))


# ---------------------------------------------------------------------------
# Atlas
# ---------------------------------------------------------------------------


def _to_fmpq(c) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _from_fmpq(q: fmpq):
    num, den = int(q.p), int(q.q)
    return num if den == 1 else Fraction(num, den)


@dataclass
class Block:
    """Basis elements of one block written against that block's monomials."""

    key: Partition
    monomials: tuple[Monomial, ...]
    index: list
    matrix: fmpq_mat
    _inverse: fmpq_mat | None = field(default=None, repr=False)

    @property
    def column_of(self) -> dict[Monomial, int]:
        return {m: j for j, m in enumerate(self.monomials)}

    def rank(self) -> int:
        return self.matrix.rank() if self.index and self.monomials else 0

    def inverse(self) -> fmpq_mat:
        if self._inverse is None:
            if self.matrix.nrows() != self.matrix.ncols() or self.rank() != self.matrix.nrows():
                raise RankError(f"block {self.key}: basis of size {len(self.index)} is not invertible")
            self._inverse = self.matrix.inv()
        return self._inverse

    def vector(self, p: Poly) -> fmpq_mat:
        cols = self.column_of
        row = [fmpq(0)] * len(self.monomials)
        for m, c in p.items():
            if m not in cols:
                raise DecompositionError(f"monomial outside block {self.key}")
            row[cols[m]] = _to_fmpq(c)
        return fmpq_mat(1, len(row), row)

    def poly_of_row(self, i: int) -> Poly:
        return Poly({m: _from_fmpq(self.matrix[i, j]) for j, m in enumerate(self.monomials)})


@dataclass
class BasisAtlas:
    n: int
    d: int
    flavor: str
    blocks: dict[Partition, Block]

    def entries(self) -> list[tuple[object, Poly]]:
        return [(idx, b.poly_of_row(i)) for b in self.blocks.values() for i, idx in enumerate(b.index)]

    @property
    def size(self) -> int:
        return sum(len(b.index) for b in self.blocks.values())

    def rank(self) -> int:
        return sum(b.rank() for b in self.blocks.values())

    def dimension(self) -> int:
        return degree_dimension(self.n, self.d)

    def check(self) -> None:
        if self.size != self.dimension() or self.rank() != self.dimension():
            raise RankError(
                f"{self.flavor} atlas n={self.n} d={self.d}: {self.size} elements, "
                f"rank {self.rank()}, expected {self.dimension()}"
            )


def _vm_index(n: int, d: int) -> dict[Partition, list[tuple[SsytTableau, StdTableau]]]:
    groups: dict[Partition, list] = defaultdict(list)
    for lam in partitions_of(n):
        syts = enumerate_syt(lam)
        for M in enumerate_ssyt(lam, d):
            for T in syts:
                groups[content_of(M)].append((M, T))
    return groups


def _vtilde_poly(M: SsytTableau, T: StdTableau) -> Poly:
    M0, alpha = split_M0(M)
    return specht(M0, T) * monomial_sym(alpha, T.n)


def _index_and_polys(n: int, d: int, flavor: str):
    """Yield (block key, index list, polynomial factory)."""
    if flavor == "vm":
        for mu, idx in sorted(_vm_index(n, d).items(), key=lambda kv: kv[0].parts, reverse=True):
            yield mu, idx, lambda pair: specht(*pair)
    elif flavor == "vtilde":
        idx = [(M, T) for lam in partitions_of(n) for M in enumerate_ssyt(lam, d) for T in enumerate_syt(lam)]
        yield Partition(), idx, lambda pair: _vtilde_poly(*pair)
    elif flavor == "cihom":
        idx = [(ci, T) for lam in partitions_of(n) for ci in a_d(lam, d) for T in enumerate_syt(lam)]
        yield Partition(), idx, lambda pair: specht_I_hom(pair[0].C, pair[1], pair[0].I)
    else:
        raise ValueError(f"unknown flavor {flavor!r}; choose from {FLAVORS}")


def _block_monomials_for(n: int, d: int, flavor: str, key: Partition) -> tuple[Monomial, ...]:
    return block_monomials(n, key) if flavor == "vm" else degree_monomials(n, d)


def _build_block(n: int, d: int, flavor: str, key, index, make) -> Block:
    monos = _block_monomials_for(n, d, flavor, key)
    cols = {m: j for j, m in enumerate(monos)}
    mat = fmpq_mat(len(index), len(monos))
    for i, item in enumerate(index):
        for m, c in make(item).items():
            mat[i, cols[m]] = _to_fmpq(c)
    return Block(key, monos, list(index), mat)


_memory: dict[tuple[int, int, str], BasisAtlas] = {}


def build_atlas(n: int, d: int, flavor: str = "vm", *, check: bool = True, use_cache: bool | None = None) -> BasisAtlas:
    """The basis of Q[x_n]_d of the given flavor; rank deficiency is a hard error."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    key = (n, d, flavor)
    if key in _memory:
        return _memory[key]
    use_cache = _cache_enabled if use_cache is None else use_cache
    stored = _load_cached(n, d, flavor) if use_cache else None
    blocks: dict[Partition, Block] = {}
    for bkey, index, make in _index_and_polys(n, d, flavor):
        monos = _block_monomials_for(n, d, flavor, bkey)
        if stored is not None and bkey in stored and stored[bkey][0] == (len(index), len(monos)):
            blocks[bkey] = Block(bkey, monos, list(index), stored[bkey][1])
        else:
            blocks[bkey] = _build_block(n, d, flavor, bkey, index, make)
    atlas = BasisAtlas(n, d, flavor, blocks)
    if check:
        atlas.check()
    if use_cache and stored is None:
        _store_cached(atlas)
    _memory[key] = atlas
    return atlas


def clear_memory() -> None:
    _memory.clear()


# ---------------------------------------------------------------------------
# Disk cache: versioned header, then sparse row-major (row, col, p/q) triplets
# ---------------------------------------------------------------------------


def set_cache_enabled(flag: bool) -> None:
    global _cache_enabled
    _cache_enabled = flag


def cache_dir() -> Path:
    root = os.environ.get("ARTIFACT_CACHE_DIR")
    return Path(root) if root else Path.home() / ".cache" / "artifact"


def _cache_path(n: int, d: int, flavor: str) -> Path:
    digest = hashlib.sha256(f"atlas|v{CACHE_VERSION}|{n}|{d}|{flavor}".encode()).hexdigest()[:24]
    return cache_dir() / f"atlas-{digest}.txt"


def _header(n: int, d: int, flavor: str) -> str:
    return f"artifact-atlas {CACHE_VERSION} n={n} d={d} flavor={flavor}"


def _store_cached(atlas: BasisAtlas) -> None:
    path = _cache_path(atlas.n, atlas.d, atlas.flavor)
    lines = [_header(atlas.n, atlas.d, atlas.flavor)]
    for key, block in atlas.blocks.items():
        rows, cols = block.matrix.nrows(), block.matrix.ncols()
        lines.append(f"block {','.join(map(str, key.parts))} {rows} {cols}")
        for i in range(rows):
            for j in range(cols):
                q = block.matrix[i, j]
                if q != 0:
                    lines.append(f"{i} {j} {q.p}/{q.q}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text("\n".join(lines) + "\n")
        tmp.replace(path)
    except OSError:
        pass


def _load_cached(n: int, d: int, flavor: str):
    path = _cache_path(n, d, flavor)
    try:
        text = path.read_text()
    except OSError:
        return None
    lines = text.splitlines()
    if not lines or lines[0] != _header(n, d, flavor):
        return None
    out = {}
    current = None
    try:
        for line in lines[1:]:
            if line.startswith("block"):
                _, parts, rows, cols = line.split(" ")
                key = Partition(tuple(int(x) for x in parts.split(",") if x))
                current = fmpq_mat(int(rows), int(cols))
                out[key] = ((int(rows), int(cols)), current)
            else:
                i, j, q = line.split(" ")
                num, den = q.split("/")
                current[int(i), int(j)] = fmpq(int(num), int(den))
    except (ValueError, TypeError):
        return None
    return out


# ---------------------------------------------------------------------------
# Decomposition and supports
# ---------------------------------------------------------------------------


@dataclass
class Decomposition:
    n: int
    d: int
    flavor: str
    coords: dict[tuple, object]
    components: dict

    def support(self) -> set:
        return set(self.components)

    def total(self) -> Poly:
        out = Poly()
        for p in self.components.values():
            out = out + p
        return out


def _check_input(F: Poly, n: int, d: int | None) -> int:
    if F.max_var() > n:
        raise DecompositionError(f"x{F.max_var()} is outside x1..x{n}")
    if not F:
        return 0 if d is None else d
    deg = F.degree()
    if not F.is_homogeneous() or (d is not None and deg != d):
        raise DecompositionError("input must be homogeneous of the requested degree")
    return deg


def decompose(F: Poly, n: int, d: int | None = None, flavor: str = "vm") -> Decomposition:
    """Split F into its V_M (or Ṽ_M, or V_C^h) components inside Q[x_n]_d."""
    d = _check_input(F, n, d)
    atlas = build_atlas(n, d, flavor)
    coords: dict[tuple, object] = {}
    if flavor == "vm":
        pieces = content_blocks(F)
    else:
        pieces = {Partition(): F} if F else {}
    for key, piece in pieces.items():
        block = atlas.blocks.get(key)
        if block is None:
            raise DecompositionError(f"content {key} does not fit in {n} variables")
        sol = block.vector(piece) * block.inverse()
        for i, idx in enumerate(block.index):
            if sol[0, i] != 0:
                coords[idx] = _from_fmpq(sol[0, i])
    return Decomposition(n, d, flavor, coords, _components(coords, flavor))


def _components(coords: dict, flavor: str) -> dict:
    groups: dict = defaultdict(Poly)
    for (label, T), c in coords.items():
        if flavor == "vm":
            p = specht(label, T)
        elif flavor == "vtilde":
            p = _vtilde_poly(label, T)
        else:
            p = specht_I_hom(label.C, T, label.I)
        groups[label] = groups[label] + p.scale(c)
    return {k: v for k, v in groups.items() if v}


def supp(F: Poly, n: int) -> set[SsytTableau]:
    return decompose(F, n).support()


def f_param(F: Poly, n: int | None = None) -> int:
    """Largest f_M over the support, at the smallest window holding F by default."""
    if not F:
        return -1
    n = max(F.max_var(), 1) if n is None else n
    return max(f_value(M) for M in supp(F, n))


# ---------------------------------------------------------------------------
# Change of basis and the conjecture maps
# ---------------------------------------------------------------------------


@dataclass
class ChangeOfBasis:
    shape: Partition
    d: int
    n: int
    rows: list[CIIndex]
    cols: list[SsytTableau]
    matrix: list[list]
    t_independent: bool

    def as_fmpq(self) -> fmpq_mat:
        flat = [_to_fmpq(x) for row in self.matrix for x in row]
        return fmpq_mat(len(self.rows), len(self.cols), flat)


def change_of_basis(shape: Partition, d: int, n: int | None = None, tableaux: Sequence[StdTableau] | None = None) -> ChangeOfBasis:
    """Express F^{I,hom}_{C,T} through the F_{M,T} with the same T.

    Every T in ``tableaux`` (all of SYT(λ) by default) must give the same
    matrix; ``t_independent`` records whether they did.
    """
    n = shape.n if n is None else n
    if n != shape.n:
        raise ValueError("the shape must be a partition of n")
    rows = a_d(shape, d)
    cols = ssyt_d(shape, d)
    col_of = {M: j for j, M in enumerate(cols)}
    matrices = []
    for T in tableaux or enumerate_syt(shape):
        mat = [[0] * len(cols) for _ in rows]
        for i, ci in enumerate(rows):
            dec = decompose(specht_I_hom(ci.C, T, ci.I), n, d)
            for (M, T2), c in dec.coords.items():
                if T2 != T:
                    raise DecompositionError(f"F^hom_{ci},{T} has a component off the tableau {T}: {M},{T2}")
                mat[i][col_of[M]] = c
        matrices.append(mat)
    result = ChangeOfBasis(shape, d, n, rows, cols, matrices[0], all(m == matrices[0] for m in matrices))
    if len(rows) != len(cols) or result.as_fmpq().rank() != len(rows):
        raise RankError(f"change of basis for {shape}, d={d} is singular")
    return result


@dataclass
class PQSplit:
    pF: Poly
    qF: Poly
    rest: Poly
    decomposition: Decomposition


def p_q_maps(F: Poly, n: int, f: int) -> PQSplit:
    """Decompose F in n+1 variables and sort the components by f_N."""
    dec = decompose(F, n + 1)
    parts = {f: Poly(), f - 1: Poly(), None: Poly()}
    for N, comp in dec.components.items():
        fN = f_value(N)
        key = fN if fN in (f, f - 1) else None
        parts[key] = parts[key] + comp
    return PQSplit(parts[f], parts[f - 1], parts[None], dec)


# ---------------------------------------------------------------------------
# Block coordinates used by the conjecture scan
# ---------------------------------------------------------------------------


def embedded_coordinates(n: int, d: int, mu: Partition) -> tuple[list, list, fmpq_mat]:
    """Coordinates of every F_{M,T} (content μ, n variables) in the atlas at n+1.

    Returns (domain index, target index, matrix) with one row per domain element.
    """
    small = build_atlas(n, d).blocks.get(mu)
    big = build_atlas(n + 1, d).blocks[mu]
    if small is None:
        return [], list(big.index), fmpq_mat(0, len(big.index))
    cols = big.column_of
    emb = fmpq_mat(len(small.index), len(big.monomials))
    for j, m in enumerate(small.monomials):
        jj = cols[m]
        for i in range(len(small.index)):
            q = small.matrix[i, j]
            if q != 0:
                emb[i, jj] = q
    return list(small.index), list(big.index), emb * big.inverse()


def submatrix(mat: fmpq_mat, rows: Iterable[int], cols: Iterable[int]) -> fmpq_mat:
    rows, cols = list(rows), list(cols)
    out = fmpq_mat(len(rows), len(cols))
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            out[a, b] = mat[i, j]
    return out


def matrix_rank(mat: fmpq_mat) -> int:
    if mat.nrows() == 0 or mat.ncols() == 0:
        return 0
    return mat.rank()


__all__ = [
    "BasisAtlas",
    "Block",
    "CACHE_VERSION",
    "ChangeOfBasis",
    "CIIndex",
    "Decomposition",
    "DecompositionError",
    "FLAVORS",
    "PQSplit",
    "RankError",
    "a_d",
    "block_monomials",
    "build_atlas",
    "cache_dir",
    "change_of_basis",
    "clear_memory",
    "content_dimension",
    "content_of",
    "decompose",
    "degree_dimension",
    "degree_monomials",
    "embedded_coordinates",
    "f_param",
    "matrix_rank",
    "p_q_maps",
    "set_cache_enabled",
    "ssyt_d",
    "submatrix",
    "supp",
]
