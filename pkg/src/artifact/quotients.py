"""Graded pieces of the quotient rings R_{n,k,0}, R_{n,k,s}, R_{n,k} and R_{∞,k}.

R_{n,k,s} is Q[x_1..x_n] modulo x_i^k and e_n, e_{n-1}, ..., e_{n-s+1}.  Since
the x_i^k part is a monomial ideal, every slice is computed inside the span of
the monomials with all exponents below k, and the e_r part is handled by exact
row reduction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Literal, Mapping

from flint import fmpq, fmpq_mat

from .evsym import EvSym
from .poly import (
    Monomial,
    Poly,
    complete_homogeneous,
    elementary,
    grlex_key,
    mono_from_exps,
    monomial_sym,
    power_sum,
)
from .specht import asp_c, h_vec_hom, h_vec_set
from .tableaux import HVector, InfSsyt, MultiSet, Partition, SsytTableau, TableauError, dspc, partitions_of

Flavor = Literal["hom", "set"]


class OutOfModelError(ValueError):
    """The windowed model of R_{∞,k} cannot answer this query."""


def _to_fmpq(c) -> fmpq:
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _from_fmpq(q: fmpq):
    num, den = int(q.p), int(q.q)
    return num if den == 1 else Fraction(num, den)


# ---------------------------------------------------------------------------
# R_{n,k,0}
# ---------------------------------------------------------------------------


def rnk0_reduce(F: Poly, k: int) -> Poly:
    """Normal form modulo the monomial ideal (x_i^k)."""
    return Poly({m: c for m, c in F.items() if all(e < k for _, e in m)})


@lru_cache(maxsize=None)
def standard_monomials(n: int, k: int, d: int) -> tuple[Monomial, ...]:
    """Monomials of degree d in x_1..x_n with every exponent below k."""
    out = []
    for mu in partitions_of(d):
        if mu.parts and (mu[0] >= k or len(mu) > n):
            continue
        out.extend(monomial_sym(mu, n).terms)
    return tuple(sorted(out, key=grlex_key))


def rnk0_dim(n: int, k: int, d: int) -> int:
    return len(standard_monomials(n, k, d))


# ---------------------------------------------------------------------------
# R_{n,k,s}
# ---------------------------------------------------------------------------


@dataclass
class QuotientSlice:
    """Degree-d slice of R_{n,k,s}.

    ``ideal_basis`` holds the reduced products g·m spanning the ideal slice;
    ``rref``/``pivots`` give the echelon form used by :func:`project`.
    """

    n: int
    k: int
    s: int
    d: int
    monomials: tuple[Monomial, ...]
    ideal_basis: list[Poly]
    rref: fmpq_mat
    pivots: list[int]

    @property
    def ideal_rank(self) -> int:
        return len(self.pivots)

    @property
    def quotient_rank(self) -> int:
        return len(self.monomials) - self.ideal_rank

    def complement(self) -> list[Monomial]:
        piv = set(self.pivots)
        return [m for j, m in enumerate(self.monomials) if j not in piv]


def _generators(n: int, s: int) -> list[Poly]:
    return [elementary(r, n) for r in range(n - s + 1, n + 1)]


def _pivots(R: fmpq_mat, rank: int) -> list[int]:
    out = []
    for i in range(rank):
        for j in range(R.ncols()):
            if R[i, j] != 0:
                out.append(j)
                break
    return out


@lru_cache(maxsize=None)
def rnks_slice(n: int, k: int, s: int, d: int) -> QuotientSlice:
    if not 0 <= s <= min(k, n):
        raise ValueError(f"s={s} must satisfy 0 <= s <= min(k, n) = {min(k, n)}")
    monos = standard_monomials(n, k, d)
    cols = {m: j for j, m in enumerate(monos)}
    basis = []
    for r, g in zip(range(n - s + 1, n + 1), _generators(n, s)):
        if r > d:
            continue
        for m in standard_monomials(n, k, d - r):
            prod = rnk0_reduce(g * Poly.monomial(m), k)
            if prod:
                basis.append(prod)
    mat = fmpq_mat(max(len(basis), 1), max(len(monos), 1))
    for i, p in enumerate(basis):
        for m, c in p.items():
            mat[i, cols[m]] = _to_fmpq(c)
    if basis and monos:
        R, rank = mat.rref()
    else:
        R, rank = mat, 0
    return QuotientSlice(n, k, s, d, monos, basis, R, _pivots(R, rank))


def project(F: Poly, sl: QuotientSlice) -> Poly:
    """Normal form of F in the slice: coordinates on the non-pivot monomials."""
    F = rnk0_reduce(F, sl.k)
    cols = {m: j for j, m in enumerate(sl.monomials)}
    vec = [fmpq(0)] * len(sl.monomials)
    for m, c in F.items():
        if m not in cols:
            raise ValueError("polynomial is not homogeneous of the slice degree")
        vec[cols[m]] = _to_fmpq(c)
    for i, p in enumerate(sl.pivots):
        c = vec[p]
        if c != 0:
            for j in range(p, len(vec)):
                r = sl.rref[i, j]
                if r != 0:
                    vec[j] -= c * r
    return Poly({sl.monomials[j]: _from_fmpq(c) for j, c in enumerate(vec) if c != 0})


def images_rank(polys: Iterable[Poly], sl: QuotientSlice) -> int:
    """Rank of the images of ``polys`` in the slice."""
    rows = [project(p, sl) for p in polys]
    comp = sl.complement()
    if not rows or not comp:
        return 0
    cols = {m: j for j, m in enumerate(comp)}
    mat = fmpq_mat(len(rows), len(comp))
    for i, p in enumerate(rows):
        for m, c in p.items():
            mat[i, cols[m]] = _to_fmpq(c)
    return mat.rank()


def a_d_ks(ci_pairs: Iterable, n: int, k: int, s: int) -> list:
    """Filter A_d(λ) pairs down to A_d^{k,s}(λ): |I| < k and max Asp^c ≤ n - s."""
    out = []
    for ci in ci_pairs:
        rest = asp_c(ci.C, ci.I)
        if len(ci.I) < k and max(rest, default=0) <= n - s:
            out.append(ci)
    return out


# ---------------------------------------------------------------------------
# H-vectors and the I <-> h bijections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HSet:
    C: object
    k: int
    max_r: int
    vectors: tuple[HVector, ...]


def h_set(C: SsytTableau | InfSsyt, k: int, max_r: int) -> HSet:
    """Vectors h with Σ h_r < k - |Dsp^c(C)|, listed for r ≤ max_r."""
    budget = k - len(dspc(C)) - 1
    vecs = []
    if budget >= 0:
        for counts in product(range(budget + 1), repeat=max_r):
            if sum(counts) <= budget:
                vecs.append(HVector(tuple((r + 1, h) for r, h in enumerate(counts) if h)))
    return HSet(C, k, max_r, tuple(sorted(set(vecs))))


def i_to_h(I: MultiSet, C, flavor: Flavor = "hom") -> HVector:
    if flavor == "hom":
        return h_vec_hom(C, I)
    if not I.is_set() or 0 in I:
        raise TableauError(f"set flavor needs a set of positive integers, got {I}")
    return h_vec_set(C, I, None)


def h_to_i(h: HVector, C, k: int, flavor: Flavor = "hom") -> MultiSet:
    """Inverse of :func:`i_to_h` on multisets (hom) or sets (set) of size k - 1."""
    D = dspc(C)
    zeros = k - 1 - len(D) - h.total()
    if zeros < 0:
        raise TableauError(f"{h} is not in H^{k} for {C}")
    if flavor == "hom":
        return D.union([0] * zeros + list(h.as_multiset()))
    # set flavor: walk up N∖D, taking h_0 elements, skipping one, taking h_1, ...
    want = {0: zeros, **dict(h.entries)}
    top = max(want)
    chosen: list[int] = []
    r, x = 0, 0
    while r <= top:
        taken = 0
        while taken < want.get(r, 0):
            x += 1
            if x in D:
                continue
            chosen.append(x)
            taken += 1
        r += 1
        if r <= top:
            x += 1
            while x in D:
                x += 1
    I = D.union(chosen)
    if h_vec_set(C, I, None) != h:
        raise TableauError(f"no set realizes {h} for {C}")
    return I


# ---------------------------------------------------------------------------
# Symmetric functions modulo high power sums
# ---------------------------------------------------------------------------

SymBasis = Literal["m", "e", "p", "h"]


def _basis_poly(basis: str, lam: Partition, nvars: int) -> Poly:
    if basis == "m":
        return monomial_sym(lam, nvars)
    out = Poly.const(1)
    for part in lam:
        if basis == "e":
            out = out * elementary(part, nvars)
        elif basis == "p":
            out = out * power_sum(part, nvars)
        elif basis == "h":
            out = out * monomial_h(part, nvars)
        else:
            raise ValueError(f"unknown basis {basis!r}")
    return out


def monomial_h(r: int, nvars: int) -> Poly:
    return complete_homogeneous(r, nvars)


@lru_cache(maxsize=None)
def _to_m_matrix(basis: str, D: int) -> tuple[tuple[Partition, ...], fmpq_mat]:
    """Rows: basis elements of degree D written in the m-basis (truncation to D variables)."""
    parts = tuple(partitions_of(D))
    mat = fmpq_mat(len(parts), len(parts))
    for i, lam in enumerate(parts):
        poly = _basis_poly(basis, lam, D)
        for j, mu in enumerate(parts):
            mat[i, j] = _to_fmpq(poly.coeff(mono_from_exps(mu.parts)))
    return parts, mat


def sym_convert(element: Mapping[Partition, object], source: str, target: str) -> dict[Partition, object]:
    """Change of basis between m, e, p and h at each degree present."""
    by_deg: dict[int, dict] = defaultdict(dict)
    for lam, c in element.items():
        by_deg[lam.n][lam] = c
    out: dict[Partition, object] = {}
    for D, coeffs in by_deg.items():
        parts, S = _to_m_matrix(source, D)
        _, Tm = _to_m_matrix(target, D)
        vec = fmpq_mat(1, len(parts), [_to_fmpq(coeffs.get(lam, 0)) for lam in parts])
        res = vec * S * Tm.inv()
        for j, lam in enumerate(parts):
            if res[0, j] != 0:
                out[lam] = _from_fmpq(res[0, j])
    return out


def sym_mod_pk(element: Mapping[Partition, object], k: int, basis: str = "m", out: str = "p") -> dict[Partition, object]:
    """Reduce modulo (p_l : l ≥ k): drop every p_ρ having a part ≥ k."""
    in_p = sym_convert(element, basis, "p")
    kept = {rho: c for rho, c in in_p.items() if not rho.parts or rho[0] < k}
    return kept if out == "p" else sym_convert(kept, "p", out)


def e_products_rank(k: int, D: int) -> tuple[int, int]:
    """(rank, count) of the reductions of e_λ, ℓ(λ) < k, λ ⊢ D."""
    lams = [lam for lam in partitions_of(D) if len(lam) < k]
    parts = partitions_of(D)
    mat = fmpq_mat(max(len(lams), 1), len(parts))
    for i, lam in enumerate(lams):
        red = sym_mod_pk({lam: 1}, k, "e", "p")
        for j, rho in enumerate(parts):
            mat[i, j] = _to_fmpq(red.get(rho, 0))
    return (mat.rank() if lams else 0), len(lams)


# ---------------------------------------------------------------------------
# R_{∞,k} in a window
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RinfKWindow:
    """Degree-d part of R_{∞,k} for eventually symmetric inputs of base ≤ n.

    A term head·m_γ(x_{>base}) lies in the ideal (x_i^k, p_l : l ≥ k) exactly
    when every monomial it contains has an exponent ≥ k, that is when head has
    an exponent ≥ k or γ has a part ≥ k.  Dropping those terms is therefore
    the full reduction map; when k > d it is the identity.
    """

    n: int
    k: int
    d: int

    def _check(self, F: EvSym) -> None:
        if F.base > self.n:
            raise OutOfModelError(f"input has base {F.base}, outside the window base {self.n}")
        for (head, tail) in F.terms:
            if sum(e for _, e in head) + tail.n != self.d:
                raise OutOfModelError(f"input is not homogeneous of degree {self.d}")

    def reduce(self, F: EvSym) -> EvSym:
        self._check(F)
        if self.k > self.d:
            return F
        terms = {
            (head, tail): c
            for (head, tail), c in F.terms.items()
            if all(e < self.k for _, e in head) and (not tail.parts or tail[0] < self.k)
        }
        return EvSym(F.base, F.degree_bound, terms)

    def is_zero(self, F: EvSym) -> bool:
        return self.reduce(F).is_zero()


def rinf_k_window(n: int, k: int, d: int) -> RinfKWindow:
    if k < 1:
        raise ValueError("k must be positive")
    return RinfKWindow(n, k, d)


def lambda_part_mod_pk(element: Mapping[Partition, object], k: int, basis: str = "m") -> dict[Partition, object]:
    """Reduction of a pure symmetric function, returned in the m-basis."""
    return sym_mod_pk(element, k, basis, "m")


__all__ = [
    "HSet",
    "OutOfModelError",
    "QuotientSlice",
    "RinfKWindow",
    "a_d_ks",
    "e_products_rank",
    "h_set",
    "h_to_i",
    "i_to_h",
    "images_rank",
    "lambda_part_mod_pk",
    "project",
    "rinf_k_window",
    "rnk0_dim",
    "rnk0_reduce",
    "rnks_slice",
    "standard_monomials",
    "sym_convert",
    "sym_mod_pk",
]
