"""Generalized higher Specht polynomials and the spaces they span.

``specht(M, T)`` is the signed column symmetrization of the row orbit of the
monomial that puts the entry of ``M`` in the box of ``T`` containing ``i`` on
the variable ``x_i``.  Everything else in this module is built on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Literal, Sequence

from .poly import Poly, distinct_arrangements, elementary, exact_divide, mono_from_exps
from .tableaux import (
    HVector,
    MultiSet,
    Partition,
    Rows,
    SsytTableau,
    StdTableau,
    TableauError,
    dspc,
    enumerate_cct,
    enumerate_syt,
    partitions_of,
)

Flavor = Literal["plain", "hom"]


def _check_shapes(M_rows: Rows, T_rows: Rows) -> None:
    if tuple(map(len, M_rows)) != tuple(map(len, T_rows)):
        raise TableauError(f"shape mismatch between {M_rows} and {T_rows}")


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _signed_perms(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((p, _perm_sign(p)) for p in permutations(range(k)))


def p_MT(M: SsytTableau, T: StdTableau):
    """The monomial ∏ x_i^{M at v_T(i)}."""
    _check_shapes(M.rows, T.rows)
    exps = [0] * T.n
    for mr, tr in zip(M.rows, T.rows):
        for h, i in zip(mr, tr):
            exps[i - 1] = h
    return mono_from_exps(exps)


@lru_cache(maxsize=200_000)
def _specht_rows(M_rows: Rows, T_rows: Rows) -> Poly:
    _check_shapes(M_rows, T_rows)
    n = sum(len(r) for r in T_rows)
    row_options = []
    for mr, tr in zip(M_rows, T_rows):
        row_options.append([(tr, arr) for arr in distinct_arrangements(mr, len(mr))])
    columns = []
    if T_rows:
        for c in range(len(T_rows[0])):
            col = tuple(r[c] - 1 for r in T_rows if len(r) > c)
            if len(col) > 1:
                columns.append(col)

    terms: dict[tuple[int, ...], int] = {}
    for choice in product(*row_options):
        exps = [0] * n
        for tr, arr in choice:
            for i, e in zip(tr, arr):
                exps[i - 1] = e
        terms[tuple(exps)] = 1

    for col in columns:
        new: dict[tuple[int, ...], int] = {}
        perms = _signed_perms(len(col))
        for exps, coeff in terms.items():
            vals = [exps[v] for v in col]
            if len(set(vals)) < len(vals):
                continue
            base = list(exps)
            for p, sign in perms:
                for j, v in enumerate(col):
                    base[col[p[j]]] = vals[j]
                key = tuple(base)
                new[key] = new.get(key, 0) + sign * coeff
        terms = {k: v for k, v in new.items() if v}
    return Poly._raw({mono_from_exps(e): c for e, c in terms.items()})


def specht(M: SsytTableau, T: StdTableau | Rows) -> Poly:
    """F_{M,T}.  T may be any filling of the shape by 1..n."""
    T_rows = T.rows if isinstance(T, StdTableau) else tuple(tuple(r) for r in T)
    return _specht_rows(M.rows, T_rows)


def minimal_cct(shape: Partition) -> SsytTableau:
    """C⁰: every entry in row i equals i - 1."""
    return SsytTableau(tuple((i,) * ln for i, ln in enumerate(shape)))


def specht_quotient(M: SsytTableau, T: StdTableau) -> Poly:
    """Q_{M,T} = F_{M,T} / F_{C⁰,T}."""
    return exact_divide(specht(M, T), specht(minimal_cct(M.shape), T))


def column_vandermonde(T: StdTableau) -> Poly:
    """∏ over columns of ∏_{a above b} (x_b - x_a): the classical Specht polynomial."""
    out = Poly.const(1)
    for col in T.columns():
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                out = out * (Poly.var(col[j]) - Poly.var(col[i]))
    return out


# ---------------------------------------------------------------------------
# r-values and h-vectors
# ---------------------------------------------------------------------------


def r_values(I: MultiSet, n: int) -> list[tuple[int, int]]:
    """Pairs (i, r_i) for every element of I, one pair per copy.

    The first copy of an element of Î = I ∩ {1..n-1} is counted by the gaps
    below it; every other copy (including all copies of 0 and n) uses the
    complementary count.
    """
    if any(i > n for i in I):
        raise TableauError(f"{I} has elements above n={n}")
    hat = sorted({i for i in I if 1 <= i <= n - 1})
    k_hat = len(hat) + 1
    gaps = [j for j in range(1, n) if j not in hat]
    out = []
    seen: set[int] = set()
    for i in I:
        if i in hat and i not in seen:
            seen.add(i)
            out.append((i, sum(1 for j in gaps if j < i)))
        else:
            out.append((i, n - k_hat + sum(1 for j in hat + [n] if j > i)))
    return out


def r_values_inf(I: MultiSet) -> list[tuple[int, int]]:
    """r_i = #{j ∈ ℕ∖Î : j < i} for a finite set I of positive integers."""
    hat = set(I)
    return [(i, sum(1 for j in range(1, i) if j not in hat)) for i in I]


def asp_c(C, I: MultiSet) -> MultiSet:
    D = dspc(C)
    if not I.contains(D):
        raise TableauError(f"Dsp^c = {D} is not contained in {I}")
    return I.minus(D)


def _asp_with_r(C, I: MultiSet, n: int | None) -> list[tuple[int, int]]:
    """(i, r_i) for the copies of I left after removing Dsp^c(C)."""
    D = dspc(C)
    if not I.contains(D):
        raise TableauError(f"Dsp^c = {D} is not contained in {I}")
    pairs = r_values(I, n) if n is not None else r_values_inf(I)
    removed = set()
    out = []
    for i, r in pairs:
        if i in D.elems and i not in removed:
            removed.add(i)
            continue
        out.append((i, r))
    return out


def h_vec_set(C, I: MultiSet, n: int | None = None) -> HVector:
    """h_r = #{i ∈ Asp^c_I(C) : r_i = r}, r ≥ 1 (n=None uses the infinite r-values)."""
    return HVector.from_values(r for _, r in _asp_with_r(C, I, n))


def h_vec_hom(C, I: MultiSet) -> HVector:
    """Characteristic vector of Asp^c_I(C) with the multiplicity of 0 dropped."""
    return HVector.from_values(asp_c(C, I))


def e_product(h: HVector, n: int) -> Poly:
    out = Poly.const(1)
    for r, k in h.entries:
        out = out * elementary(r, n) ** k
    return out


def specht_I(C: SsytTableau, T: StdTableau, I: MultiSet) -> Poly:
    return specht(C, T) * e_product(h_vec_set(C, I, T.n), T.n)


def specht_I_hom(C: SsytTableau, T: StdTableau, I: MultiSet) -> Poly:
    return specht(C, T) * e_product(h_vec_hom(C, I), T.n)


# ---------------------------------------------------------------------------
# Bases
# ---------------------------------------------------------------------------


def basis_VM(M: SsytTableau) -> list[tuple[StdTableau, Poly]]:
    return [(T, specht(M, T)) for T in enumerate_syt(M.shape)]


@dataclass(frozen=True)
class RnISpec:
    n: int
    I: MultiSet
    flavor: Flavor = "plain"

    def __post_init__(self) -> None:
        if any(i > self.n for i in self.I):
            raise TableauError(f"{self.I} is not inside 0..{self.n}")
        if self.flavor not in ("plain", "hom"):
            raise ValueError(f"unknown flavor {self.flavor!r}")


@dataclass(frozen=True)
class Summand:
    """One family V_C^h of a direct sum: the cocharge tableau and its multiplier."""

    C: SsytTableau
    h: HVector

    def label(self) -> str:
        mult = " ".join(f"e{r}" + (f"^{k}" if k > 1 else "") for r, k in self.h.entries)
        return f"V[{self.C}]" + (f" {mult}" if mult else "")


def summands_RnI(spec: RnISpec) -> list[Summand]:
    out = []
    for lam in partitions_of(spec.n):
        for C in enumerate_cct(lam):
            if not spec.I.contains(dspc(C)):
                continue
            h = h_vec_hom(C, spec.I) if spec.flavor == "hom" else h_vec_set(C, spec.I, spec.n)
            out.append(Summand(C, h))
    return out


def basis_RnI(spec: RnISpec) -> list[tuple[SsytTableau, StdTableau, Poly]]:
    out = []
    for s in summands_RnI(spec):
        mult = e_product(s.h, spec.n)
        for T in enumerate_syt(s.C.shape):
            out.append((s.C, T, specht(s.C, T) * mult))
    return out


def iter_ssyt_degree(n: int, d: int) -> Iterator[SsytTableau]:
    """Every M in SSYT_d(λ) over all λ ⊢ n, shapes in lex-descending order."""
    from .tableaux import enumerate_ssyt

    for lam in partitions_of(n):
        yield from enumerate_ssyt(lam, d)
