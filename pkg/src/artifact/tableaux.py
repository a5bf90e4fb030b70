"""Partitions, multisets, tableaux (finite and infinite) and the maps between them.

Conventions used throughout the package:

* partitions are tuples of positive integers in weakly decreasing order;
* semistandard entries start at 0, standard entries run over 1..n;
* tableaux store their rows as tuples of tuples, top row first;
* every value is immutable, so all functions here are pure.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

Rows = tuple[tuple[int, ...], ...]


class TableauError(ValueError):
    """Raised when an input violates the precondition of a tableau map."""


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise TableauError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise TableauError(f"partition parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def plus(self) -> "Partition":
        """The shape with one extra box in the first row."""
        if not self.parts:
            return Partition((1,))
        return Partition((self.parts[0] + 1,) + self.parts[1:])

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(tuple(sorted((int(t) for t in re.split(r"[,\s]+", text) if t), reverse=True)))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n, lexicographically descending."""
    if n < 0:
        raise TableauError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux of the given shape."""
    from math import factorial

    conj = shape.conjugate()
    prod = 1
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            prod *= (row_len - c - 1) + (conj[c] - r - 1) + 1
    return factorial(shape.n) // prod


# ---------------------------------------------------------------------------
# Multisets
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class MultiSet:
    """A finite multiset of nonnegative integers, stored as a sorted tuple."""

    elems: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        elems = tuple(sorted(int(e) for e in self.elems))
        if any(e < 0 for e in elems):
            raise TableauError(f"multiset elements must be nonnegative: {elems}")
        object.__setattr__(self, "elems", elems)

    @classmethod
    def of(cls, items: Iterable[int]) -> "MultiSet":
        return cls(tuple(items))

    @classmethod
    def from_mult(cls, mult: dict[int, int]) -> "MultiSet":
        return cls(tuple(v for v, m in mult.items() for _ in range(m)))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __contains__(self, x: object) -> bool:
        return x in self.elems

    @property
    def mult(self) -> dict[int, int]:
        return dict(Counter(self.elems))

    def count(self, x: int) -> int:
        return self.elems.count(x)

    def support(self) -> frozenset[int]:
        return frozenset(self.elems)

    def total(self) -> int:
        return sum(self.elems)

    def is_set(self) -> bool:
        return len(set(self.elems)) == len(self.elems)

    def contains(self, other: Iterable[int]) -> bool:
        """Multiplicity-wise containment (coincides with D ⊆ Ĵ when D is a set)."""
        mine = Counter(self.elems)
        return all(mine[v] >= m for v, m in Counter(other).items())

    def minus(self, other: Iterable[int]) -> "MultiSet":
        """Remove one copy of each element of other; other must be contained."""
        rest = Counter(self.elems)
        for v in other:
            if rest[v] <= 0:
                raise TableauError(f"{v} is not contained in {self}")
            rest[v] -= 1
        return MultiSet.from_mult(dict(rest))

    def union(self, other: Iterable[int]) -> "MultiSet":
        return MultiSet(self.elems + tuple(other))

    def shift(self, by: int = 1) -> "MultiSet":
        return MultiSet(tuple(e + by for e in self.elems))

    def without(self, value: int) -> "MultiSet":
        return MultiSet(tuple(e for e in self.elems if e != value))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elems)) + "}"

    @classmethod
    def parse(cls, text: str) -> "MultiSet":
        text = text.strip().strip("{}[]()")
        if not text:
            return cls()
        return cls(tuple(int(t) for t in re.split(r"[,\s]+", text) if t))


def multisets_of_size(size: int, values: Sequence[int]) -> list[MultiSet]:
    """All multisets of the given size with elements from values."""
    from itertools import combinations_with_replacement

    return [MultiSet(c) for c in combinations_with_replacement(sorted(values), size)]


def submultiset_count(mult: Iterable[int], size: int) -> int:
    """Number of sub-multisets of the given size of a multiset with these multiplicities."""
    poly = [1]
    for m in mult:
        new = [0] * (len(poly) + m)
        for i, c in enumerate(poly):
            for j in range(m + 1):
                new[i + j] += c
        poly = new
    return poly[size] if 0 <= size < len(poly) else 0


# ---------------------------------------------------------------------------
# Tableaux
# ---------------------------------------------------------------------------


def _rows(rows: Iterable[Iterable[int]]) -> Rows:
    return tuple(tuple(int(x) for x in r) for r in rows if len(tuple(r)) > 0) if rows else ()


def _shape_of(rows: Rows) -> Partition:
    return Partition(tuple(len(r) for r in rows))


def _is_row_weak(rows: Rows) -> bool:
    return all(r[i] <= r[i + 1] for r in rows for i in range(len(r) - 1))


def _is_row_strict(rows: Rows) -> bool:
    return all(r[i] < r[i + 1] for r in rows for i in range(len(r) - 1))


def _is_col_strict(rows: Rows) -> bool:
    return all(rows[j][c] < rows[j + 1][c] for j in range(len(rows) - 1) for c in range(len(rows[j + 1])))


def format_rows(rows: Rows, sep: str = ";") -> str:
    return sep.join(" ".join(map(str, r)) for r in rows)


def parse_rows(text: str) -> Rows:
    """Parse rows separated by ';' or newlines, entries separated by spaces or commas."""
    chunks = [c for c in re.split(r"[;\n/]", text.strip()) if c.strip()]
    return tuple(tuple(int(t) for t in re.split(r"[,\s]+", c.strip()) if t) for c in chunks)


class _TableauBase:
    rows: Rows

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(self.entries())

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[c] for r in self.rows if len(r) > c) for c in range(len(self.rows[0]))]

    def __str__(self) -> str:
        return format_rows(self.rows)


@dataclass(frozen=True, order=True)
class StdTableau(_TableauBase):
    rows: Rows
    _pos: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        rows = _rows(self.rows)
        object.__setattr__(self, "rows", rows)
        n = sum(len(r) for r in rows)
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise TableauError(f"standard tableau must contain 1..{n} once: {rows}")
        _shape_of(rows)
        if not (_is_row_strict(rows) and _is_col_strict(rows)):
            raise TableauError(f"not a standard tableau: {rows}")
        object.__setattr__(self, "_pos", {x: (i, j) for i, r in enumerate(rows) for j, x in enumerate(r)})

    def position(self, i: int) -> tuple[int, int]:
        """(row, column) of entry i, both 0-based."""
        return self._pos[i]

    def row_of(self, i: int) -> int:
        return self._pos[i][0]

    @classmethod
    def parse(cls, text: str) -> "StdTableau":
        return cls(parse_rows(text))


@dataclass(frozen=True, order=True)
class SsytTableau(_TableauBase):
    rows: Rows

    def __post_init__(self) -> None:
        rows = _rows(self.rows)
        object.__setattr__(self, "rows", rows)
        _shape_of(rows)
        if any(x < 0 for r in rows for x in r):
            raise TableauError(f"entries must be nonnegative: {rows}")
        if not (_is_row_weak(rows) and _is_col_strict(rows)):
            raise TableauError(f"not semistandard: {rows}")

    @property
    def total(self) -> int:
        """The entry sum Σ(M)."""
        return sum(self.entries())

    def content(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries()))

    @classmethod
    def parse(cls, text: str) -> "SsytTableau":
        return cls(parse_rows(text))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _cells(shape: Partition) -> list[tuple[int, int]]:
    return [(r, c) for r, ln in enumerate(shape) for c in range(ln)]


@lru_cache(maxsize=None)
def _syt_rows(parts: tuple[int, ...]) -> tuple[Rows, ...]:
    n = sum(parts)
    if n == 0:
        return ((),)
    out: list[Rows] = []
    # n sits at an outer corner; remove it and recurse.
    for r, ln in enumerate(parts):
        if ln > 0 and (r + 1 == len(parts) or parts[r + 1] < ln):
            smaller = list(parts)
            smaller[r] -= 1
            sm = tuple(p for p in smaller if p > 0)
            for rows in _syt_rows(sm):
                new = [list(x) for x in rows] + [[] for _ in range(len(parts) - len(rows))]
                new[r].append(n)
                out.append(tuple(tuple(x) for x in new))
    out.sort(key=lambda rows: tuple(x for row in rows for x in row))
    return tuple(out)


def enumerate_syt(shape: Partition) -> list[StdTableau]:
    """All standard tableaux of the shape, in lex order of their row-reading words."""
    return [StdTableau(rows) for rows in _syt_rows(tuple(shape.parts))]


def _fill_ssyt(shape: Partition, bound_ok, max_entry: int) -> Iterator[Rows]:
    """Backtracking over semistandard fillings in reading order, trying values increasingly."""
    cells = _cells(shape)
    grid: list[list[int]] = [[0] * ln for ln in shape]

    def rec(idx: int, acc: int) -> Iterator[Rows]:
        if idx == len(cells):
            if bound_ok(acc, None):
                yield tuple(tuple(r) for r in grid)
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            if not bound_ok(acc + v, (idx + 1, v)):
                break
            grid[r][c] = v
            yield from rec(idx + 1, acc + v)

    yield from rec(0, 0)


def enumerate_ssyt(shape: Partition, d: int) -> list[SsytTableau]:
    """All semistandard tableaux of the shape with entry sum d."""
    cells = _cells(shape)
    # the smallest possible sum of the boxes from index i on is Σ row(box)
    tail_min = [0] * (len(cells) + 1)
    for i in range(len(cells) - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] + cells[i][0]

    def ok(acc: int, step) -> bool:
        if step is None:
            return acc == d
        idx, v = step
        # later boxes in the same row are at least v; use the weaker row bound elsewhere
        return acc + tail_min[idx] <= d

    return [SsytTableau(rows) for rows in _fill_ssyt(shape, ok, d)]


def enumerate_ssyt_content(shape: Partition, content: Iterable[int]) -> list[SsytTableau]:
    """All semistandard tableaux of the shape whose entries form the given multiset.

    A content shorter than the shape size is padded with zeros.
    """
    content = list(content)
    n = shape.n
    if len(content) > n:
        return []
    target = Counter(content + [0] * (n - len(content)))
    return [M for M in enumerate_ssyt(shape, sum(content)) if Counter(M.entries()) == target]


def is_cocharge(M: SsytTableau) -> bool:
    """Each h > 0 has its leftmost instance in a row strictly below some instance of h-1."""
    rows = M.rows
    values = set(M.entries())
    for h in values:
        if h == 0:
            continue
        if h - 1 not in values:
            return False
        # leftmost instance: smallest column; among equal columns the top one
        leftmost = min(((c, r) for r, row in enumerate(rows) for c, x in enumerate(row) if x == h))
        row_h = leftmost[1]
        top_prev = min(r for r, row in enumerate(rows) if h - 1 in row)
        if not top_prev < row_h:
            return False
    return True


def enumerate_cct(shape: Partition) -> list[SsytTableau]:
    """All cocharge tableaux of the shape, found by filtering semistandard fillings.

    The filter deliberately avoids ct so that it can serve as an independent
    check of ct's image.
    """
    return list(_cct_tuple(shape))


@lru_cache(maxsize=None)
def _cct_tuple(shape: Partition) -> tuple[SsytTableau, ...]:
    bound = max(shape.n - 1, 0)
    fills = (SsytTableau(rows) for rows in _fill_ssyt(shape, lambda acc, step: True, bound))
    return tuple(C for C in fills if is_cocharge(C))


# ---------------------------------------------------------------------------
# Descent sets
# ---------------------------------------------------------------------------


def descents(T: StdTableau) -> frozenset[int]:
    return frozenset(i for i in range(1, T.n) if T.row_of(i + 1) > T.row_of(i))


def dsi_c(T: StdTableau) -> frozenset[int]:
    return frozenset(T.n - i for i in descents(T))


def asi(T: StdTableau) -> frozenset[int]:
    return frozenset(range(1, T.n)) - descents(T)


def asi_c(T: StdTableau) -> frozenset[int]:
    return frozenset(T.n - i for i in asi(T))


# ---------------------------------------------------------------------------
# Compositions and destandardization
# ---------------------------------------------------------------------------


def comp_n(J: MultiSet, n: int) -> tuple[int, ...]:
    if any(j > n for j in J):
        raise TableauError(f"{J} has an element above n={n}")
    padded = (0,) + J.elems + (n,)
    return tuple(padded[h + 1] - padded[h] for h in range(len(padded) - 1))


def comp_n_inv(alpha: Sequence[int], n: int) -> MultiSet:
    if sum(alpha) != n or any(a < 0 for a in alpha):
        raise TableauError(f"{tuple(alpha)} is not a weak composition of {n}")
    acc, out = 0, []
    for a in alpha[:-1]:
        acc += a
        out.append(acc)
    return MultiSet(tuple(out))


def represented_content(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(h for h, a in enumerate(alpha) for _ in range(a))


def content_multiset(content: Sequence[int]) -> MultiSet:
    """The multiset J without copies of n whose composition represents the content."""
    content = sorted(content)
    k = (content[-1] + 1) if content else 1
    alpha = [0] * k
    for v in content:
        alpha[v] += 1
    return comp_n_inv(alpha, len(content))


def ct_J(T: StdTableau, J: MultiSet) -> SsytTableau:
    if not set(descents(T)) <= J.support():
        raise TableauError(f"Dsi(T)={sorted(descents(T))} is not contained in {J}")
    word = represented_content(comp_n(J, T.n))
    return SsytTableau(tuple(tuple(word[x - 1] for x in r) for r in T.rows))


def ct(T: StdTableau) -> SsytTableau:
    return ct_J(T, MultiSet(tuple(sorted(descents(T)))))


def standardize(M: SsytTableau) -> tuple[StdTableau, MultiSet]:
    """Inverse of ct_J: number equal entries left to right, smaller values first.

    The returned multiset never contains n, since copies of n do not affect ct_J.
    """
    cells = sorted(((x, c, r) for r, row in enumerate(M.rows) for c, x in enumerate(row)))
    grid = [list(r) for r in M.rows]
    for i, (_, c, r) in enumerate(cells, start=1):
        grid[r][c] = i
    return StdTableau(tuple(tuple(r) for r in grid)), content_multiset(M.entries())


# ---------------------------------------------------------------------------
# Evacuation and the iota maps
# ---------------------------------------------------------------------------


def evacuation(T: StdTableau) -> StdTableau:
    """Schützenberger involution via repeated jeu-de-taquin deflation."""
    n = T.n
    grid = [list(r) for r in T.rows]
    out = [[0] * len(r) for r in T.rows]
    for step in range(n):
        r, c = 0, 0
        while True:
            right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
            below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                grid[r][c] = right
                c += 1
            else:
                grid[r][c] = below
                r += 1
        grid[r].pop()
        if not grid[r]:
            grid.pop()
        out[r][c] = n - step
    return StdTableau(tuple(tuple(r) for r in out))


def iota(T: StdTableau) -> StdTableau:
    rows = [list(r) for r in T.rows] or [[]]
    rows[0].append(T.n + 1)
    return StdTableau(tuple(tuple(r) for r in rows))


def iota_tilde(S: StdTableau) -> StdTableau:
    return evacuation(iota(evacuation(S)))


def iota_tilde_shift(S: StdTableau) -> StdTableau:
    """Shortcut for ι̃: add 1 to each entry, shift row 1 right, put 1 in the corner."""
    rows = [[x + 1 for x in r] for r in S.rows] or [[]]
    rows[0] = [1] + rows[0]
    return StdTableau(tuple(tuple(r) for r in rows))


def iota_hat(M: SsytTableau) -> SsytTableau:
    rows = [list(r) for r in M.rows] or [[]]
    rows[0] = [0] + rows[0]
    return SsytTableau(tuple(tuple(r) for r in rows))


def iota_hat_by_definition(M: SsytTableau) -> SsytTableau:
    """ι̂ computed literally as ct_{J+} ∘ ι̃ ∘ ct_J^{-1}."""
    S, J = standardize(M)
    return ct_J(iota_tilde(S), J.shift(1))


def dspc_from_content(content: Iterable[int]) -> MultiSet:
    """Multiset {#entries ≥ t : 1 ≤ t ≤ max entry}."""
    vals = [v for v in content if v > 0]
    if not vals:
        return MultiSet()
    return MultiSet(tuple(sum(1 for v in vals if v >= t) for t in range(1, max(vals) + 1)))


# ---------------------------------------------------------------------------
# Infinite objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class InfShape:
    finite_part: Partition = Partition()

    def realize_at(self, n: int) -> Partition:
        first = n - self.finite_part.n
        if self.finite_part.parts and first < self.finite_part[0]:
            raise TableauError(f"size {n} is too small for finite part {self.finite_part}")
        if first <= 0 and self.finite_part.parts:
            raise TableauError(f"size {n} is too small")
        return Partition(((first,) if first > 0 else ()) + self.finite_part.parts)

    def __str__(self) -> str:
        return f"(∞;{self.finite_part})"


@dataclass(frozen=True, order=True)
class InfSyt:
    """An infinite standard tableau; only the rows below the first are stored."""

    rows: Rows = ()

    def __post_init__(self) -> None:
        rows = _rows(self.rows)
        object.__setattr__(self, "rows", rows)
        ents = [x for r in rows for x in r]
        if len(set(ents)) != len(ents) or any(x <= 0 for x in ents):
            raise TableauError(f"finite part needs distinct positive entries: {rows}")
        if not (_is_row_strict(rows) and _is_col_strict(rows)):
            raise TableauError(f"finite part is not standard: {rows}")
        self.realize_at(max(ents, default=0) + (len(rows[0]) if rows else 0))

    @property
    def shape(self) -> InfShape:
        return InfShape(_shape_of(self.rows))

    def max_entry(self) -> int:
        return max((x for r in self.rows for x in r), default=0)

    def first_row(self, n: int) -> tuple[int, ...]:
        used = {x for r in self.rows for x in r}
        return tuple(i for i in range(1, n + 1) if i not in used)

    def realize_at(self, n: int) -> StdTableau:
        if n < self.max_entry():
            raise TableauError(f"size {n} is below the largest finite entry {self.max_entry()}")
        first = self.first_row(n)
        if self.rows and len(first) < len(self.rows[0]):
            raise TableauError(f"size {n} is too small for {self}")
        return StdTableau((first,) + self.rows)

    def __str__(self) -> str:
        return format_rows(self.rows)


@dataclass(frozen=True, order=True)
class InfSsyt:
    """An infinite semistandard tableau: finite part plus first-row multiplicities."""

    rows: Rows = ()
    mult: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        rows = _rows(self.rows)
        object.__setattr__(self, "rows", rows)
        mult = dict(self.mult) if not isinstance(self.mult, dict) else self.mult
        clean = tuple(sorted((int(h), int(m)) for h, m in mult.items() if m > 0))
        if any(h <= 0 for h, _ in clean):
            raise TableauError("multiplicities are only attached to positive values")
        object.__setattr__(self, "mult", clean)
        if any(x <= 0 for r in rows for x in r):
            raise TableauError(f"finite part entries must be positive: {rows}")
        if not (_is_row_weak(rows) and _is_col_strict(rows)):
            raise TableauError(f"finite part is not semistandard: {rows}")

    @property
    def shape(self) -> InfShape:
        return InfShape(_shape_of(self.rows))

    def mult_dict(self) -> dict[int, int]:
        return dict(self.mult)

    def mult_total(self) -> int:
        return sum(m for _, m in self.mult)

    def finite_size(self) -> int:
        return sum(len(r) for r in self.rows)

    def mult_index(self) -> Partition:
        return Partition(tuple(sorted((h for h, m in self.mult for _ in range(m)), reverse=True)))

    def content(self) -> tuple[int, ...]:
        """Positive part of the content (zeros of the infinite row are ignored)."""
        return tuple(sorted([x for r in self.rows for x in r] + list(self.mult_index())))

    @property
    def total(self) -> int:
        return sum(self.content())

    def min_size(self) -> int:
        return self.finite_size() + self.mult_total()

    def realize_at(self, n: int) -> SsytTableau:
        first_len = n - self.finite_size()
        if n < self.min_size() or (self.rows and first_len < len(self.rows[0])):
            raise TableauError(f"size {n} is too small for {self}")
        mults = sorted(self.mult_index())
        first = (0,) * (first_len - len(mults)) + tuple(mults)
        try:
            return SsytTableau(((first,) if first else ()) + self.rows)
        except TableauError as err:
            raise TableauError(f"size {n} is too small for {self}: {err}") from None

    def __str__(self) -> str:
        base = format_rows(self.rows)
        ms = " ".join(f"{h}^{m}" for h, m in self.mult)
        return f"{base} | mult: {ms}".strip()

    @classmethod
    def parse(cls, text: str) -> "InfSsyt":
        if "|" in text:
            left, right = text.split("|", 1)
        else:
            left, right = text, ""
        right = right.replace("mult:", "").strip()
        mult: dict[int, int] = {}
        for tok in right.split():
            h, _, m = tok.partition("^")
            mult[int(h)] = mult.get(int(h), 0) + (int(m) if m else 1)
        return cls(parse_rows(left), tuple(mult.items()))


def lift(obj: Union[Partition, StdTableau, SsytTableau]):
    """Limit object under repeated ι / ι̂ / λ ↦ λ+."""
    if isinstance(obj, Partition):
        return InfShape(Partition(obj.parts[1:]))
    if isinstance(obj, StdTableau):
        return InfSyt(obj.rows[1:])
    if isinstance(obj, SsytTableau):
        first = obj.rows[0] if obj.rows else ()
        return InfSsyt(obj.rows[1:], tuple(Counter(x for x in first if x > 0).items()))
    raise TypeError(f"cannot lift {type(obj).__name__}")


def realize_at(obj, n: int):
    return obj.realize_at(n)


def is_cocharge_inf(M: InfSsyt) -> bool:
    """Cocharge test for infinite tableaux, via a large finite realization."""
    return is_cocharge(M.realize_at(M.min_size() + (len(M.rows[0]) if M.rows else 0)))


def enumerate_inf_ssyt(fshape: Partition, d: int) -> list[InfSsyt]:
    """All infinite semistandard tableaux with this finite part and entry sum d."""
    size = fshape.n
    out = []
    for s in range(0, d - size + 1):
        if not fshape.parts and s:
            break
        fills = enumerate_ssyt(fshape, s) if fshape.parts else [SsytTableau(())]
        for fin in fills:
            rows = tuple(tuple(x + 1 for x in r) for r in fin.rows)
            rest = d - s - size
            for p in partitions_of(rest):
                out.append(InfSsyt(rows, tuple(Counter(p.parts).items())))
    return sorted(out, key=lambda M: (M.rows, M.mult))


def enumerate_inf_cct(fshape: Partition, n: int) -> list[InfSsyt]:
    """Infinite cocharge tableaux with this finite part that are realized at size n."""
    try:
        shape = InfShape(fshape).realize_at(n)
    except TableauError:
        return []
    return sorted({lift(C) for C in enumerate_cct(shape)}, key=lambda M: (M.rows, M.mult))


def dspc(M: Union[SsytTableau, InfSsyt]) -> MultiSet:
    return dspc_from_content(M.content())


def cocharge_dspc_ok(C: SsytTableau) -> bool:
    return dspc(C).is_set()


# ---------------------------------------------------------------------------
# f-values and sub-multiset counts
# ---------------------------------------------------------------------------


def f_value(M: Union[SsytTableau, InfSsyt]) -> int:
    if isinstance(M, InfSsyt):
        return M.mult_total()
    return sum(1 for x in (M.rows[0] if M.rows else ()) if x > 0)


def split_M0(M: Union[SsytTableau, InfSsyt]):
    """(M⁰, index of m_M): zero the first row and record its nonzero entries."""
    if isinstance(M, InfSsyt):
        return InfSsyt(M.rows, ()), M.mult_index()
    first = M.rows[0] if M.rows else ()
    m0 = SsytTableau(((0,) * len(first),) + M.rows[1:]) if M.rows else M
    return m0, Partition(tuple(sorted((x for x in first if x > 0), reverse=True)))


def c_value(M: InfSsyt, f: int) -> int:
    return submultiset_count([m for _, m in M.mult], f)


def c_total(M: InfSsyt) -> int:
    total = 1
    for _, m in M.mult:
        total *= m + 1
    return total


# ---------------------------------------------------------------------------
# h-vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class HVector:
    """Finitely supported vector r ↦ h_r over r ≥ 1."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        raw = dict(self.entries) if not isinstance(self.entries, dict) else self.entries
        clean = tuple(sorted((int(r), int(h)) for r, h in raw.items() if h != 0))
        if any(r < 1 or h < 0 for r, h in clean):
            raise TableauError(f"invalid h-vector {clean}")
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "HVector":
        return cls(tuple(Counter(v for v in values if v > 0).items()))

    def get(self, r: int) -> int:
        return dict(self.entries).get(r, 0)

    def total(self) -> int:
        return sum(h for _, h in self.entries)

    def degree(self) -> int:
        return sum(r * h for r, h in self.entries)

    def as_multiset(self) -> MultiSet:
        return MultiSet(tuple(r for r, h in self.entries for _ in range(h)))

    def __str__(self) -> str:
        return "(" + ",".join(f"{r}:{h}" for r, h in self.entries) + ")"


def syt_count(shape: Partition) -> int:
    return hook_length_count(shape)


__all__ = [name for name in dir() if not name.startswith("_")]
