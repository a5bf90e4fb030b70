"""Eventually symmetric functions in a windowed normal form.

An :class:`EvSym` at base ``n`` is a finite sum ``c · head · m_γ(x_{n+1}, x_{n+2}, …)``
where ``head`` only involves ``x_1..x_n`` and ``m_γ`` is the monomial symmetric
function of the partition ``γ`` in the tail variables.  Every computation on
these objects goes through a finite truncation, which is faithful as soon as
the window contains at least as many tail variables as the longest tail.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .poly import (
    Coeff,
    Monomial,
    Poly,
    distinct_arrangements,
    exact_divide,
    format_coeff,
    format_monomial,
    mono_mul,
    monomial_sym,
    parse_poly,
    permute,
)
from .specht import asp_c, h_vec_hom, r_values_inf, specht
from .tableaux import HVector, InfSsyt, InfSyt, MultiSet, Partition, TableauError

SCHEMA_VERSION = 1

Key = tuple[Monomial, Partition]


class EvSymError(ValueError):
    """Input is not eventually symmetric beyond the requested base."""


def _norm(c) -> Coeff:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _sub_partitions(gamma: Partition) -> Iterable[tuple[Partition, Partition]]:
    """Every split of the multiset of parts of γ into (β, γ∖β)."""
    counts = sorted(Counter(gamma.parts).items(), reverse=True)
    for take in product(*(range(m + 1) for _, m in counts)):
        beta = [v for (v, _), t in zip(counts, take) for _ in range(t)]
        rest = [v for (v, m), t in zip(counts, take) for _ in range(m - t)]
        yield Partition(tuple(beta)), Partition(tuple(rest))


@dataclass(frozen=True)
class EvSym:
    base: int
    degree_bound: int
    terms: Mapping[Key, Coeff] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (head, tail), c in self.terms.items():
            if c == 0:
                continue
            if head and head[-1][0] > self.base:
                raise EvSymError(f"head {format_monomial(head)} uses a variable above base {self.base}")
            if sum(e for _, e in head) + tail.n > self.degree_bound:
                raise EvSymError("term exceeds the degree bound")
            clean[(head, tail)] = _norm(c)
        object.__setattr__(self, "terms", clean)

    # -- basic views ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def tails(self) -> set[Partition]:
        return {tail for _, tail in self.terms}

    def max_tail_length(self) -> int:
        return max((len(t) for t in self.tails()), default=0)

    def by_tail(self) -> dict[Partition, Poly]:
        """The polynomial coefficient of each tail m_γ."""
        groups: dict[Partition, dict] = defaultdict(dict)
        for (head, tail), c in self.terms.items():
            groups[tail][head] = c
        return {t: Poly(g) for t, g in groups.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, EvSym):
            return NotImplemented
        base = max(self.base, other.base)
        return rebase(self, base).terms == rebase(other, base).terms

    def __hash__(self) -> int:
        return hash(frozenset(tail_zero(self).terms.items()))

    def __add__(self, other: "EvSym") -> "EvSym":
        return ev_add(self, other)

    def __sub__(self, other: "EvSym") -> "EvSym":
        return ev_add(self, other.scale(-1))

    def __mul__(self, other) -> "EvSym":
        if isinstance(other, EvSym):
            return ev_mul(self, other)
        if isinstance(other, Poly):
            return ev_mul(self, ev_from_poly(other))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "EvSym":
        return EvSym(self.base, self.degree_bound, {k: v * c for k, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for tail, poly in sorted(self.by_tail().items(), key=lambda kv: (kv[0].n, kv[0].parts)):
            label = f"m[{tail}]>{self.base}" if tail.parts else ""
            body = str(poly)
            parts.append(body if not label else f"({body}) * {label}")
        return " + ".join(parts)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "base": self.base,
            "degree_bound": self.degree_bound,
            "terms": [
                [format_monomial(head) if head else "1", list(tail.parts), format_coeff(c)]
                for (head, tail), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1].parts, kv[0][0]))
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "EvSym":
        terms = {}
        for head_text, tail, coeff in data["terms"]:
            head = parse_poly(head_text.replace(" ", "*")).leading()[0]
            terms[(head, Partition(tuple(tail)))] = Fraction(coeff)
        return cls(data["base"], data["degree_bound"], terms)


# ---------------------------------------------------------------------------
# Constructors and ring operations
# ---------------------------------------------------------------------------


def ev_from_poly(p: Poly, base: int | None = None) -> EvSym:
    base = p.max_var() if base is None else base
    if p.max_var() > base:
        raise EvSymError(f"polynomial uses x{p.max_var()}, above base {base}")
    return EvSym(base, p.degree() if p else 0, {(m, Partition()): c for m, c in p.items()})


def ev_from_sym(alpha: Partition | Iterable[int], base: int = 0) -> EvSym:
    """The full monomial symmetric function m_α, split into head and tail pieces."""
    alpha = alpha if isinstance(alpha, Partition) else Partition(tuple(sorted(alpha, reverse=True)))
    terms: dict[Key, Coeff] = {}
    for beta, gamma in _sub_partitions(alpha):
        if len(beta) > base:
            continue
        for m in monomial_sym(beta, base).terms:
            terms[(m, gamma)] = 1
    return EvSym(base, alpha.n, terms)


def elementary_ev(r: int, base: int = 0) -> EvSym:
    return ev_from_sym(Partition((1,) * r), base)


def rebase(F: EvSym, new_base: int) -> EvSym:
    """Move the head/tail boundary up to ``new_base`` without changing the function."""
    if new_base < F.base:
        raise EvSymError(f"cannot rebase from {F.base} down to {new_base}")
    if new_base == F.base:
        return F
    width = new_base - F.base
    terms: dict[Key, Coeff] = defaultdict(int)
    for (head, tail), c in F.terms.items():
        for beta, rest in _sub_partitions(tail):
            if len(beta) > width:
                continue
            for m in monomial_sym(beta, width, F.base + 1).terms:
                terms[(mono_mul(head, m), rest)] += c
    return EvSym(new_base, F.degree_bound, terms)


def truncate(F: EvSym, N: int) -> Poly:
    """Set x_m = 0 for every m > N."""
    if N < F.base:
        raise EvSymError(f"truncation size {N} is below base {F.base}")
    out: dict[Monomial, Coeff] = defaultdict(int)
    for tail, poly in F.by_tail().items():
        tail_poly = monomial_sym(tail, N - F.base, F.base + 1) if tail.parts else Poly.const(1)
        for m, c in (poly * tail_poly).items():
            out[m] += c
    return Poly(out)


def tail_zero(F: EvSym) -> Poly:
    return Poly({head: c for (head, tail), c in F.terms.items() if not tail.parts})


def reconstruct(p: Poly, base: int, N: int, degree_bound: int | None = None) -> EvSym:
    """Recover the normal form from a truncation to x_1..x_N.

    Raises :class:`EvSymError` unless ``p`` is symmetric in ``x_{base+1}..x_N``
    and no tail is too long to be seen in the window.
    """
    if p.max_var() > N:
        raise EvSymError(f"polynomial uses x{p.max_var()}, beyond the window {N}")
    width = N - base
    groups: dict[Key, dict[Monomial, Coeff]] = defaultdict(dict)
    for m, c in p.items():
        head = tuple((v, e) for v, e in m if v <= base)
        tail_exps = sorted((e for v, e in m if v > base), reverse=True)
        groups[(head, Partition(tuple(tail_exps)))][m] = c
    terms = {}
    for (head, tail), block in groups.items():
        if len(tail) >= width and tail.parts:
            raise EvSymError(f"tail {tail} fills the whole window of {width} variables")
        coeffs = set(block.values())
        expected = _arrangement_count(tail.parts, width)
        if len(coeffs) != 1 or len(block) != expected:
            raise EvSymError(
                f"not symmetric beyond x{base}: head {format_monomial(head)}, tail {tail}"
            )
        terms[(head, tail)] = coeffs.pop()
    bound = p.degree() if degree_bound is None else degree_bound
    return EvSym(base, max(bound, 0), terms)


@lru_cache(maxsize=None)
def _arrangement_count(parts: tuple[int, ...], width: int) -> int:
    return sum(1 for _ in distinct_arrangements(parts, width))


@lru_cache(maxsize=None)
def _tail_product(g: Partition, h: Partition) -> tuple[tuple[Partition, int], ...]:
    """m_γ·m_δ = Σ c_ε m_ε, read off in len(γ) + len(δ) variables where no m_ε vanishes."""
    if not g.parts or not h.parts:
        return ((h if not g.parts else g, 1),)
    width = len(g) + len(h)
    prod = monomial_sym(g, width) * monomial_sym(h, width)
    out = []
    for m, c in prod.items():
        exps = [e for _, e in m]
        if [v for v, _ in m] == list(range(1, len(m) + 1)) and exps == sorted(exps, reverse=True):
            out.append((Partition(tuple(exps)), int(c)))
    return tuple(out)


def ev_add(F: EvSym, G: EvSym) -> EvSym:
    base = max(F.base, G.base)
    F, G = rebase(F, base), rebase(G, base)
    terms: dict[Key, Coeff] = defaultdict(int)
    for src in (F, G):
        for k, c in src.terms.items():
            terms[k] += c
    return EvSym(base, max(F.degree_bound, G.degree_bound), terms)


def ev_mul(F: EvSym, G: EvSym) -> EvSym:
    """Heads multiply as polynomials and tails through the products m_γ·m_δ."""
    base = max(F.base, G.base)
    F, G = rebase(F, base), rebase(G, base)
    terms: dict[Key, Coeff] = defaultdict(int)
    for (hf, g), c in F.terms.items():
        for (hg, h), d in G.terms.items():
            head = mono_mul(hf, hg)
            for eps, k in _tail_product(g, h):
                terms[(head, eps)] += c * d * k
    return EvSym(base, F.degree_bound + G.degree_bound, terms)


def ev_sum(items: Iterable[EvSym]) -> EvSym:
    out = EvSym(0, 0, {})
    for F in items:
        out = ev_add(out, F)
    return out


# ---------------------------------------------------------------------------
# Stable Specht polynomials
# ---------------------------------------------------------------------------


def _check_inf_shapes(M: InfSsyt, T: InfSyt) -> None:
    if M.shape != T.shape:
        raise TableauError(f"shape mismatch between {M} and {T}")


def stable_base(T: InfSyt) -> int:
    """Variables above the largest finite entry of T̂ only ever sit in the first row."""
    return T.max_entry()


def _realization_start(M: InfSsyt, T: InfSyt) -> int:
    n = max(M.min_size(), T.max_entry(), 1)
    while True:
        try:
            M.realize_at(n)
            T.realize_at(n)
            return n
        except TableauError:
            n += 1


def stable_window(M: InfSsyt, T: InfSyt) -> int:
    """A truncation size at which the finite F_{M,T} determines the stable one."""
    start = max(_realization_start(M, T), stable_base(T))
    return start + M.mult_total() + 1


def _stable_at(M: InfSsyt, T: InfSyt, N: int) -> EvSym:
    p = specht(M.realize_at(N), T.realize_at(N))
    return reconstruct(p, stable_base(T), N, M.total)


def stable_specht(M: InfSsyt, T: InfSyt) -> EvSym:
    """F_{M̂,T̂}, reconstructed from two consecutive windows that must agree."""
    _check_inf_shapes(M, T)
    N = stable_window(M, T)
    for attempt in range(2):
        try:
            first = _stable_at(M, T, N)
            if first == _stable_at(M, T, N + 1):
                return first
        except EvSymError:
            pass
        N += M.mult_total() + 1
    raise EvSymError(f"window reconstruction for ({M}, {T}) did not stabilize")


def inf_asp_c(C: InfSsyt, I: MultiSet) -> MultiSet:
    return asp_c(C, I)


def stable_specht_I_hom(C: InfSsyt, T: InfSyt, I: MultiSet) -> EvSym:
    """F_{Ĉ,T̂} times the full e_i for every i in Asp^c_I(Ĉ)."""
    F = stable_specht(C, T)
    for r, k in h_vec_hom(C, I).entries:
        for _ in range(k):
            F = ev_mul(F, elementary_ev(r, F.base))
    return F


def stable_specht_I(C: InfSsyt, T: InfSyt, I: MultiSet) -> EvSym:
    """Set flavor: the multiplier uses the infinite r-values of I."""
    if not I.is_set() or 0 in I:
        raise TableauError(f"{I} must be a set of positive integers")
    D = asp_c(C, I)
    h = HVector.from_values(r for i, r in r_values_inf(I) if i in D)
    F = stable_specht(C, T)
    for r, k in h.entries:
        for _ in range(k):
            F = ev_mul(F, elementary_ev(r, F.base))
    return F


def minimal_inf_cct(T: InfSyt | InfSsyt) -> InfSsyt:
    """Ĉ⁰: zeros in the infinite row, the value i in the i-th finite row."""
    return InfSsyt(tuple((i + 1,) * len(r) for i, r in enumerate(T.rows)))


def stable_quotient(M: InfSsyt, T: InfSyt) -> EvSym:
    """Q_{M̂,T̂}: divide every tail coefficient by the polynomial F_{Ĉ⁰,T̂}."""
    F = stable_specht(M, T)
    denom = tail_zero(stable_specht(minimal_inf_cct(M), T))
    terms: dict[Key, Coeff] = {}
    for tail, poly in F.by_tail().items():
        for m, c in exact_divide(poly, denom).items():
            terms[(m, tail)] = c
    return EvSym(F.base, F.degree_bound, terms)


# ---------------------------------------------------------------------------
# Decomposition over full monomial symmetric functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialSymDecomp:
    base: int
    parts: Mapping[Partition, Poly]

    def recombine(self) -> EvSym:
        return ev_sum(
            ev_mul(ev_from_poly(p, self.base), ev_from_sym(alpha, self.base))
            for alpha, p in self.parts.items()
        )


def m_alpha_decompose(F: EvSym) -> MonomialSymDecomp:
    """F = Σ_α π_α(F)·m_α with polynomial π_α(F) in x_1..x_base.

    Tails are peeled from the largest size down: the tail-γ part of m_γ has
    head 1, and everything else m_γ contributes has a strictly smaller tail.
    """
    remaining = dict(F.terms)
    parts: dict[Partition, Poly] = {}
    while remaining:
        top = max(tail.n for _, tail in remaining)
        if top == 0:
            break
        peel = defaultdict(dict)
        for (head, tail), c in remaining.items():
            if tail.n == top:
                peel[tail][head] = c
        for gamma, heads in peel.items():
            coeff = Poly(heads)
            parts[gamma] = coeff
            expansion = ev_from_sym(gamma, F.base)
            for (head, tail), c in expansion.terms.items():
                for hm, hc in heads.items():
                    key = (mono_mul(hm, head), tail)
                    remaining[key] = remaining.get(key, 0) - hc * c
        remaining = {k: v for k, v in remaining.items() if v != 0}
    rest = {head: c for (head, tail), c in remaining.items()}
    if rest:
        parts[Partition()] = Poly(rest)
    return MonomialSymDecomp(F.base, parts)


def pi_alpha(F: EvSym, alpha: Partition) -> Poly:
    return m_alpha_decompose(F).parts.get(alpha, Poly())


def stable_invariance_holds(F: EvSym, N: int) -> bool:
    """Every adjacent swap of two variables above the base fixes the truncation."""
    p = truncate(F, N)
    for i in range(F.base + 1, N):
        if permute(p, {i: i + 1, i + 1: i}) != p:
            return False
    return True


__all__ = [
    "EvSym",
    "EvSymError",
    "MonomialSymDecomp",
    "SCHEMA_VERSION",
    "elementary_ev",
    "ev_add",
    "ev_from_poly",
    "ev_from_sym",
    "ev_mul",
    "ev_sum",
    "inf_asp_c",
    "m_alpha_decompose",
    "minimal_inf_cct",
    "pi_alpha",
    "rebase",
    "reconstruct",
    "stable_base",
    "stable_invariance_holds",
    "stable_quotient",
    "stable_specht",
    "stable_specht_I",
    "stable_specht_I_hom",
    "stable_window",
    "tail_zero",
    "truncate",
]
