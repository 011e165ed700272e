"""
Partitions, standard Young tableaux and the two counting formulas used by the
census: ``f^λ`` (hook lengths) and ``s_λ(1^k)`` (hook contents).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from . import _guard
from .perm import ParseError

__all__ = [
    "Partition", "StandardTableau", "BijectionError",
    "partitions", "conjugate", "chain_encode", "chain_decode",
    "tableau_descents", "syt_count", "ssyt_count", "enumerate_syt",
    "enumerate_ssyt", "replacement_map", "descent_count_bijection_check",
    "parse_partition", "parse_tableau", "format_tableau", "format_partition",
]

SYT_CAP = 12


class Partition(tuple):
    """Weakly decreasing positive parts; ``Partition()`` is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
        if self and self[-1] < 1:
            raise ValueError(f"parts must be positive: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``λ_i`` (one-based), zero past the last row."""
        return self[i - 1] if i <= len(self) else 0

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def plus_one(self) -> Partition:
        """``λ + 1``: first part grown by one (``(1)`` for the empty partition)."""
        if not self:
            return Partition((1,))
        return Partition((self[0] + 1,) + tuple(self[1:]))

    def add_box(self, row: int) -> Partition | None:
        """Add a cell at the end of row ``row`` (zero-based); ``None`` if that breaks shape."""
        if row > len(self) or (row > 0 and self[row - 1] == self.part(row + 1)):
            return None
        parts = list(self)
        if row == len(parts):
            parts.append(1)
        else:
            parts[row] += 1
        return Partition(parts)


EMPTY = Partition()


def format_partition(lam: Sequence[int]) -> str:
    """``211`` style when every part is a digit, ``(10,2)`` otherwise, ``∅`` if empty."""
    if not lam:
        return "∅"
    if all(p <= 9 for p in lam):
        return "".join(map(str, lam))
    return "(" + ",".join(map(str, lam)) + ")"


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not r for r in rows):
            raise ValueError("tableau rows must be nonempty")
        shape = Partition(len(r) for r in rows)
        n = shape.size
        if sorted(v for r in rows for v in r) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError(f"columns not increasing between {upper} and {lower}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def first_row(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def at(self, row: int, col: int) -> int:
        """Entry in ``row``, ``col`` (both one-based), as in ``Q(1, i)``."""
        return self.rows[row - 1][col - 1]

    def row_of(self) -> dict[int, int]:
        """Map entry -> one-based row index."""
        return {v: r for r, row in enumerate(self.rows, 1) for v in row}

    def __str__(self) -> str:
        return format_tableau(self)


def format_tableau(t: StandardTableau | Sequence[Sequence[int]]) -> str:
    rows = t.rows if isinstance(t, StandardTableau) else t
    return "".join("[" + " ".join(map(str, r)) + "]" for r in rows)


def parse_partition(text: str) -> Partition:
    tokens = [tok for tok in re.split(r"[\s,]+", text.strip()) if tok]
    for tok in tokens:
        if not tok.isdigit() or int(tok) == 0:
            raise ParseError(f"partition parts are positive integers, got {tok!r}", tok)
    try:
        return Partition(int(t) for t in tokens)
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


def parse_tableau(text: str) -> StandardTableau:
    """Parse the bracketed form ``[1 3 6][2 4][5 7]``."""
    text = text.strip()
    if not re.fullmatch(r"(\[[\d\s,]*\]\s*)+", text):
        raise ParseError(f"expected rows like [1 3 6][2 4], got {text!r}", text)
    rows = []
    for body in re.findall(r"\[([^\]]*)\]", text):
        rows.append(tuple(int(t) for t in re.split(r"[\s,]+", body.strip()) if t))
    try:
        return StandardTableau(tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


def chain_encode(t: StandardTableau) -> tuple[Partition, ...]:
    """Shapes of the entries ``<= i`` for ``i = 0..n``."""
    row = t.row_of()
    counts: list[int] = []
    chain = [EMPTY]
    for v in range(1, t.n + 1):
        r = row[v] - 1
        if r == len(counts):
            counts.append(0)
        counts[r] += 1
        chain.append(Partition(counts))
    return tuple(chain)


def chain_decode(chain: Sequence[Sequence[int]]) -> StandardTableau:
    if not chain or len(chain[0]) != 0:
        raise ValueError("a chain starts at the empty partition")
    rows: list[list[int]] = []
    for v, (small, big) in enumerate(zip(chain, chain[1:]), 1):
        small, big = Partition(small), Partition(big)
        if big.size != small.size + 1 or not big.contains(small):
            raise ValueError(f"{small} -> {big} does not add exactly one box")
        r = next(i for i in range(len(big)) if big.part(i + 1) != small.part(i + 1))
        if r == len(rows):
            rows.append([])
        rows[r].append(v)
    return StandardTableau(tuple(tuple(r) for r in rows))


def tableau_descents(t: StandardTableau) -> frozenset[int]:
    """``{i | i + 1 sits in a strictly lower row than i}``."""
    row = t.row_of()
    return frozenset(i for i in range(1, t.n) if row[i + 1] > row[i])


def _cells(shape: Sequence[int]):
    for r, length in enumerate(shape):
        for c in range(length):
            yield r, c


def _hook(shape: Sequence[int], conj: Sequence[int], r: int, c: int) -> int:
    return (shape[r] - c - 1) + (conj[c] - r - 1) + 1


def syt_count(shape: Sequence[int]) -> int:
    """``f^λ`` by the hook length formula."""
    shape = Partition(shape)
    conj = conjugate(shape)
    hooks = prod(_hook(shape, conj, r, c) for r, c in _cells(shape))
    n_fact = factorial(shape.size)
    q, rem = divmod(n_fact, hooks)
    if rem:
        raise ArithmeticError(f"hook product {hooks} does not divide {shape.size}!")
    return q


def ssyt_count(shape: Sequence[int], k: int) -> int:
    """``s_λ(1^k)``: semistandard fillings of ``shape`` with entries in ``[k]``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    shape = Partition(shape)
    conj = conjugate(shape)
    value = Fraction(1)
    for r, c in _cells(shape):
        value *= Fraction(k + c - r, _hook(shape, conj, r, c))
    if value.denominator != 1:
        raise ArithmeticError(f"hook content product for {shape}, k={k} is not an integer: {value}")
    return int(value)


def enumerate_syt(shape: Sequence[int], cap: int = SYT_CAP) -> Iterator[StandardTableau]:
    """Every SYT of ``shape``, each once, by peeling the largest entry off a corner."""
    shape = Partition(shape)
    _guard.check(shape.size, cap, "enumerate_syt")

    def fillings(lam: tuple[int, ...]) -> Iterator[list[list[int]]]:
        n = sum(lam)
        if n == 0:
            yield [[] for _ in shape]
            return
        for r in range(len(lam)):
            below = lam[r + 1] if r + 1 < len(lam) else 0
            if lam[r] > below:
                smaller = lam[:r] + (lam[r] - 1,) + lam[r + 1:]
                for rows in fillings(smaller):
                    rows[r].append(n)
                    yield rows

    for rows in fillings(tuple(shape)):
        yield StandardTableau(tuple(tuple(r) for r in rows))


def enumerate_ssyt(shape: Sequence[int], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard fillings with entries in ``[k]``, as tuples of rows."""
    shape = Partition(shape)
    cells = list(_cells(shape))
    grid = [[0] * length for length in shape]

    def fill(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, k + 1):
            grid[r][c] = v
            yield from fill(idx + 1)
        grid[r][c] = 0

    yield from fill(0)


class BijectionError(AssertionError):
    """The first-row replacement map misbehaved on some shape."""


def replacement_map(q: StandardTableau) -> tuple[tuple[int, ...], ...]:
    """
    Replace every entry in ``[u_i, u_{i+1} - 1]`` by ``i``, where ``u`` is the first row.

    On tableaux with ``des(Q) + λ_1 = n`` the result has strictly increasing rows,
    weakly increasing columns and entries in ``[λ_1]``.
    """
    u = q.first_row
    label = {}
    for i, start in enumerate(u, 1):
        stop = u[i] if i < len(u) else q.n + 1
        for v in range(start, stop):
            label[v] = i
    return tuple(tuple(label[v] for v in row) for row in q.rows)


def _row_strict_column_weak(filling, k: int) -> bool:
    for row in filling:
        if any(a >= b for a, b in zip(row, row[1:])) or any(not 1 <= v <= k for v in row):
            return False
    for upper, lower in zip(filling, filling[1:]):
        if any(a > b for a, b in zip(upper, lower)):
            return False
    return True


def descent_count_bijection_check(shape: Sequence[int], cap: int = SYT_CAP) -> tuple[int, int]:
    """
    Count SYT of ``shape`` with ``des(Q) + λ_1 = n`` and compare with ``s_λ'(1^λ_1)``.

    Returns ``(enumerated, formula)``. Raises :class:`BijectionError` if the
    replacement map leaves the target family, collides, or misses a target.
    """
    shape = Partition(shape)
    n = shape.size
    if n == 0:
        return 1, 1
    lam1 = shape[0]
    images = set()
    count = 0
    for q in enumerate_syt(shape, cap):
        if len(tableau_descents(q)) + lam1 != n:
            continue
        count += 1
        image = replacement_map(q)
        if not _row_strict_column_weak(image, lam1):
            raise BijectionError(f"{format_tableau(q)} maps outside the target family: {image}")
        if image in images:
            raise BijectionError(f"{format_tableau(q)} collides at {image}")
        images.add(image)
    targets = {
        tuple(tuple(col[r] for col in t if r < len(col)) for r in range(len(shape)))
        for t in enumerate_ssyt(conjugate(shape), lam1)
    }
    if images != targets:
        raise BijectionError(f"map is not onto for shape {tuple(shape)}")
    return count, ssyt_count(conjugate(shape), lam1)
