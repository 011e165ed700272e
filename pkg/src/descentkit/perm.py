"""
Permutations, words and descent machinery.

Everything is one-based, as in the usual notation: ``p[0]`` holds
``π(1)`` but every public function speaks in positions ``1..n``.

>>> p = parse_permutation("234615")
>>> sorted(descent_set(p))
[4]
>>> subsequence(p, {2, 4, 5})
Word(361)
>>> descent_word(parse_permutation("534612"))
'DUUDU'
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from math import factorial

__all__ = [
    "Permutation", "Word", "ParseError",
    "parse_permutation", "descent_set", "ascent_set", "des", "asc",
    "subsequence", "factor", "reverse_complement", "descent_word",
    "word_descents", "descents_mask", "standardize",
    "lex_successor", "perm_from_rank", "permutations_lex",
]


class ParseError(ValueError):
    """Malformed textual input; ``token`` is the offending piece."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


def _compact(entries: Sequence[int]) -> str:
    if all(v <= 9 for v in entries):
        return "".join(map(str, entries))
    return " ".join(map(str, entries))


class Word(tuple):
    """A finite sequence of distinct positive integers, e.g. a subsequence ``π_I``."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in entries))
        if len(set(self)) != len(self):
            raise ValueError(f"word entries must be distinct: {tuple(self)}")
        if any(v < 1 for v in self):
            raise ValueError(f"word entries must be positive: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"{type(self).__name__}({_compact(self)})"

    def __str__(self) -> str:
        return _compact(self)

    @property
    def n(self) -> int:
        return len(self)


class Permutation(Word):
    """A bijection of ``[n]`` in one-line notation."""

    def __new__(cls, entries: Iterable[int]):
        self = super().__new__(cls, entries)
        if not self:
            raise ValueError("a permutation needs at least one entry")
        if set(self) != set(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))


def parse_permutation(text: str) -> Permutation:
    """
    Parse ``"4 3 6 5 1 7 2"``, ``"4,3,6,5,1,7,2"`` or the compact ``"4365172"``.

    The compact form is only accepted when it has fewer than ten digits, since
    ``"101"`` could otherwise mean several things.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation", "")
    if re.fullmatch(r"\d+", text) and len(text) > 1:
        if len(text) >= 10:
            raise ParseError(
                f"compact digit string {text!r} is ambiguous for n >= 10; "
                "separate entries with spaces or commas", text)
        tokens = list(text)
    else:
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
    values = []
    for tok in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"not a positive integer: {tok!r}", tok)
        values.append(int(tok))
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if v in seen:
            raise ParseError(f"duplicate value {v}", tok)
        seen.add(v)
    for tok, v in zip(tokens, values):
        if not 1 <= v <= n:
            raise ParseError(f"value {v} out of range 1..{n}", tok)
    return Permutation(values)


def descent_set(w: Sequence[int]) -> frozenset[int]:
    """``{i | w(i) > w(i+1)}``, one-based."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def asc(w: Sequence[int]) -> int:
    # an empty word has no positions at all
    return max(len(w) - 1, 0) - des(w)


def descents_mask(D: Iterable[int]) -> int:
    """Bitmask with bit ``i - 1`` set for each descent position ``i``."""
    mask = 0
    for i in D:
        if i < 1:
            raise ValueError(f"descent positions are >= 1, got {i}")
        mask |= 1 << (i - 1)
    return mask


def word_descents(word: str) -> frozenset[int]:
    """Descent positions of a ``U``/``D`` descent word."""
    bad = set(word) - {"U", "D"}
    if bad:
        raise ValueError(f"descent words use only U and D, got {''.join(sorted(bad))!r}")
    return frozenset(i for i, ch in enumerate(word, 1) if ch == "D")


def subsequence(p: Sequence[int], I: Iterable[int]) -> Word:
    """``π_I``: the entries at positions ``I`` read left to right."""
    idx = sorted(set(I))
    if idx and (idx[0] < 1 or idx[-1] > len(p)):
        bad = idx[0] if idx[0] < 1 else idx[-1]
        raise IndexError(f"index {bad} out of range 1..{len(p)}")
    return Word(p[i - 1] for i in idx)


def factor(p: Sequence[int], i: int, j: int) -> Word:
    """The contiguous factor ``π_[i, j]`` (empty when ``j < i``)."""
    if i < 1 or j > len(p):
        raise IndexError(f"window [{i}, {j}] outside 1..{len(p)}")
    return Word(p[i - 1:j])


def reverse_complement(p: Permutation) -> Permutation:
    n = len(p)
    return Permutation(n + 1 - v for v in reversed(p))


def descent_word(w: Sequence[int]) -> str:
    if not len(w):
        raise ValueError("descent word of an empty sequence is undefined")
    return "".join("D" if w[i] > w[i + 1] else "U" for i in range(len(w) - 1))


def standardize(w: Sequence[int]) -> Permutation:
    """Replace the entries of a word by their ranks, giving a permutation."""
    rank = {v: r for r, v in enumerate(sorted(w), 1)}
    return Permutation(rank[v] for v in w)


def lex_successor(p: Sequence[int]) -> Permutation | None:
    """Next permutation in lexicographic order, or ``None`` after the last."""
    a = list(p)
    i = len(a) - 2
    while i >= 0 and a[i] > a[i + 1]:
        i -= 1
    if i < 0:
        return None
    j = len(a) - 1
    while a[j] < a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return Permutation(a)


def perm_from_rank(n: int, rank: int) -> Permutation:
    """The ``rank``-th permutation of ``[n]`` in lexicographic order (0-based rank)."""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for k in range(n, 0, -1):
        q, rank = divmod(rank, factorial(k - 1))
        out.append(pool.pop(q))
    return Permutation(out)


def permutations_lex(n: int, start: int = 0, stop: int | None = None) -> Iterator[Permutation]:
    """Permutations of ``[n]`` with lexicographic ranks in ``[start, stop)``."""
    stop = factorial(n) if stop is None else stop
    if start >= stop:
        return
    p: Permutation | None = perm_from_rank(n, start)
    for _ in range(stop - start):
        assert p is not None
        yield p
        p = lex_successor(p)
