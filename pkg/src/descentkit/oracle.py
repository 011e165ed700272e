"""
Exponential reference implementations.

Nothing here touches RSK, growth diagrams or the triangle walk; every value
comes from scanning all ``2^n`` index subsets directly.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from . import _guard
from .growth import StatTriangle
from .perm import descents_mask

__all__ = [
    "LsProfile", "brute_profile", "brute_len_w", "brute_lis", "brute_lds",
    "brute_greene", "subsequence_words", "reconstruct_triangle_from_profile", "boundary_words",
]

ORACLE_MAX_N = 20


def _subsequences(p: Sequence[int]):
    n = len(p)
    for mask in range(1, 1 << n):
        yield [p[i] for i in range(n) if mask >> i & 1]


def _dmask(sub: Sequence[int]) -> int:
    m = 0
    for t in range(len(sub) - 1):
        if sub[t] > sub[t + 1]:
            m |= 1 << t
    return m


@dataclass(frozen=True)
class LsProfile:
    """Longest length for every exact descent set; keys are bitmasks (bit ``i-1`` for ``i``)."""

    n: int
    values: dict[int, int]

    def __getitem__(self, D: Iterable[int] | int) -> int:
        mask = D if isinstance(D, int) else descents_mask(D)
        return self.values.get(mask, 0)

    def ls_d(self, d: int) -> int:
        return max((v for m, v in self.values.items() if m.bit_count() == d), default=0)

    def key(self) -> tuple[int, ...]:
        """Dense vector over all ``D ⊆ [n-1]``, for grouping permutations."""
        return tuple(self.values.get(m, 0) for m in range(1 << max(self.n - 1, 0)))


def brute_profile(p: Sequence[int]) -> LsProfile:
    _guard.check(len(p), ORACLE_MAX_N, "brute_profile")
    values: dict[int, int] = {}
    for sub in _subsequences(p):
        m = _dmask(sub)
        if len(sub) > values.get(m, 0):
            values[m] = len(sub)
    return LsProfile(len(p), values)


def brute_lis(w: Sequence[int]) -> int:
    """Quadratic longest increasing subsequence."""
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if w[i] < w[j]:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def brute_lds(w: Sequence[int]) -> int:
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if w[i] > w[j]:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def brute_greene(p: Sequence[int], k: int) -> int:
    """Largest subsequence with no decreasing run of ``k + 1``, i.e. a union of ``k`` increasing ones."""
    _guard.check(len(p), ORACLE_MAX_N, "brute_greene")
    return max((len(s) for s in _subsequences(p) if brute_lds(s) <= k), default=0)


def subsequence_words(p: Sequence[int]) -> frozenset[str]:
    """Descent words of all nonempty subsequences."""
    _guard.check(len(p), ORACLE_MAX_N, "subsequence_words")
    return frozenset(
        "".join("D" if a > b else "U" for a, b in zip(sub, sub[1:])) for sub in _subsequences(p)
    )


def brute_len_w(p: Sequence[int], w: str, words: frozenset[str] | None = None) -> int:
    """
    Longest subsequence whose descent word is a prefix of ``w`` repeated forever.

    ``words`` may carry a precomputed :func:`subsequence_words` of ``p``.
    """
    if words is None:
        words = subsequence_words(p)
    n = len(p)
    periodic = (w * (n // max(len(w), 1) + 1))[: max(n - 1, 0)]
    return max((len(word) + 1 for word in words if periodic.startswith(word)), default=0)


def boundary_words(p: Sequence[int]) -> Callable[[int, int], tuple[str, str]]:
    """Descent words of ``π_[1, i-1]`` and ``π_[j+1, n]`` for a window ``[i, j]``."""
    def words(i: int, j: int) -> tuple[str, str]:
        left, right = p[: i - 1], p[j:]
        w = "".join("D" if a > b else "U" for a, b in zip(left, left[1:]))
        v = "".join("D" if a > b else "U" for a, b in zip(right, right[1:]))
        return w, v
    return words


def reconstruct_triangle_from_profile(
    n: int,
    ls: Callable[[frozenset[int]], int],
    boundary: Callable[[int, int], tuple[str, str]],
) -> StatTriangle:
    """
    Rebuild every ``a_{i,j}`` from ``ls_D`` queries alone.

    ``is(π_[i, j])`` is the largest ``k`` such that some subsequence has descent
    word ``w x U^(k-1) y v``, where ``w``, ``v`` are the descent words outside
    the window and ``x``, ``y`` range over ``{U, D}`` (dropped at the ends);
    ``ds`` uses ``D^(k-1)`` instead.
    """
    def realised(word: str) -> bool:
        D = frozenset(i for i, ch in enumerate(word, 1) if ch == "D")
        return len(word) + 1 <= n and ls(D) >= len(word) + 1

    pairs = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            w, v = boundary(i, j)
            xs = [""] if i == 1 else ["U", "D"]
            ys = [""] if j == n else ["U", "D"]
            entry = []
            for letter in "UD":
                found = 0
                for k in range(j - i + 1, 0, -1):
                    if any(realised(w + x + letter * (k - 1) + y + v) for x in xs for y in ys):
                        found = k
                        break
                entry.append(found)
            pairs[i, j] = (entry[0], entry[1])
    return StatTriangle.from_pairs(n, pairs)
