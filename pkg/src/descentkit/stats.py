"""
Longest subsequences under descent restrictions.

``ls_d(π)`` is the longest subsequence with exactly ``d`` descents and
``ls_D(π)`` the longest with descent set exactly ``D``; both are 0 when no
such subsequence exists. The main routes go through the ``(is, ds)``
triangle of all factors; the other entry points are alternative derivations
(first rows of ``Q`` and ``evac(Q)``, peeling, existence tests) kept so they
can be checked against each other.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import combinations

from .growth import StatTriangle, build_growth, evacuate, stat_triangle
from .perm import descent_set, des, word_descents
from .rsk import rsk

__all__ = [
    "StatTriangle", "lis", "lds", "ls_d", "ls1_via_first_rows",
    "composition_to_descents", "descents_to_composition", "ls_D", "ls_D_from_triangle",
    "ls_singleton_via_good_pairs", "ls_singleton_threshold", "ls_singleton_formula",
    "ls_D_existence", "ls_D_peel", "alternating_length", "len_w",
    "has_descent_word", "ls_d_via_growth", "triangle_of",
]


def lis(w: Sequence[int]) -> int:
    """Longest increasing subsequence by patience sorting."""
    piles: list[int] = []
    for x in w:
        k = bisect_left(piles, x)
        if k == len(piles):
            piles.append(x)
        else:
            piles[k] = x
    return len(piles)


def lds(w: Sequence[int]) -> int:
    return lis([-x for x in w])


@lru_cache(maxsize=4096)
def _triangle_cached(w: tuple[int, ...]) -> StatTriangle:
    return stat_triangle(w)


def triangle_of(w: Sequence[int]) -> StatTriangle:
    """``(is, ds)`` triangle of a permutation or word (cached on the entries)."""
    return _triangle_cached(tuple(w))


def ls_d(p: Sequence[int], d: int, tri: StatTriangle | None = None) -> int:
    """
    Best total of ``is`` over ``d + 1`` consecutive windows covering ``p``.

    ``best[t][j]`` is the best total for ``t`` nonempty windows covering ``[1, j]``.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    n = len(p)
    if d > des(p):
        return 0
    tri = tri or triangle_of(p)
    inc = tri.inc
    best = [0] + [inc[1][j] for j in range(1, n + 1)]
    for t in range(2, d + 2):
        nxt = [0] * (n + 1)
        for j in range(t, n + 1):
            nxt[j] = max(best[jp] + inc[jp + 1][j] for jp in range(t - 1, j))
        best = nxt
    return best[n]


def ls1_via_first_rows(p: Sequence[int]) -> int:
    """``max{i + j | Q(1, i) + evac(Q)(1, j) <= n}``; only meaningful if ``p`` has a descent."""
    n = len(p)
    if des(p) == 0:
        warnings.warn("ls1_via_first_rows on an increasing permutation; returning 0", stacklevel=2)
        return 0
    q = rsk(p).recording
    u, v = q.first_row, evacuate(q).first_row
    return max(
        (i + j for i, ui in enumerate(u, 1) for j, vj in enumerate(v, 1) if ui + vj <= n),
        default=0,
    )


def composition_to_descents(c: Sequence[int]) -> frozenset[int]:
    """
    ``D_c``: runs of the composition alternate descents and ascents, ending on descents.

    >>> sorted(composition_to_descents((2, 3, 1)))
    [1, 2, 6]
    """
    if not c or any(part < 1 for part in c):
        raise ValueError(f"compositions have positive parts: {tuple(c)}")
    k = len(c)
    D = set()
    start = 1
    for t, part in enumerate(c):
        if (k - 1 - t) % 2 == 0:
            D.update(range(start, start + part))
        start += part
    return frozenset(D)


def descents_to_composition(D: Iterable[int]) -> tuple[int, ...]:
    """Inverse of :func:`composition_to_descents` on nonempty sets."""
    D = frozenset(D)
    if not D:
        raise ValueError("the empty set has no composition")
    parts = []
    inside = 1 in D
    run = 0
    for i in range(1, max(D) + 1):
        if (i in D) == inside:
            run += 1
        else:
            parts.append(run)
            inside, run = not inside, 1
    parts.append(run)
    return tuple(parts)


def ls_D_from_triangle(tri: StatTriangle, D: Iterable[int]) -> int:
    """
    Greedy walk over the ``(is, ds)`` triangle for a nonempty ``D = D_c``.

    Starting from ``cursor = 1``, each block of ``c`` moves the cursor to the
    first ``j`` where ``a_{cursor, j}`` reaches ``part + 1`` in ``ds`` (descent
    blocks) or ``is`` (ascent blocks); the tail contributes ``is`` of
    ``a_{cursor, n}``.
    """
    D = frozenset(D)
    if not D:
        return tri.inc[1][tri.n]
    if max(D) >= tri.n:
        return 0
    c = descents_to_composition(D)
    n, k = tri.n, len(c)
    cursor = 1
    for t, part in enumerate(c):
        table = tri.dec if (k - 1 - t) % 2 == 0 else tri.inc
        row = table[cursor]
        nxt = next((j for j in range(cursor, n + 1) if row[j] == part + 1), None)
        if nxt is None:
            return 0
        cursor = nxt
    return sum(c) + tri.inc[cursor][n]


def ls_D(p: Sequence[int], D: Iterable[int], tri: StatTriangle | None = None) -> int:
    """Longest subsequence of ``p`` (permutation or word) whose descent set is exactly ``D``."""
    D = frozenset(D)
    if not D:
        return lis(p)
    if min(D) < 1:
        raise ValueError(f"descent positions are >= 1: {sorted(D)}")
    if max(D) >= len(p):
        return 0
    return ls_D_from_triangle(tri or triangle_of(p), D)


def ls_singleton_via_good_pairs(p: Sequence[int], i: int) -> int:
    """``max{i + j | Q(1, i) + Q_e(1, j) <= n and Q_e(1, j + 1) != Q_e(1, j) + 1}``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    n = len(p)
    q = rsk(p).recording
    u, v = q.first_row, evacuate(q).first_row
    if i > len(u):
        return 0
    best = 0
    for j in range(1, len(v) + 1):
        # past the end of the row the second condition holds vacuously
        good = j == len(v) or v[j] != v[j - 1] + 1
        if u[i - 1] + v[j - 1] <= n and good:
            best = max(best, i + j)
    return best


def ls_singleton_threshold(p: Sequence[int], i: int) -> tuple[bool, int]:
    """
    Existence of a subsequence with descent set ``{i}``, and a lower bound.

    With ``k`` the last descent and ``j = is(π_[1, k])`` a subsequence exists
    iff ``i <= j``, and then it can be taken of length ``i + n - k``.
    Returns ``(exists, bound)``; ``bound`` is 0 when nothing exists.
    """
    D = descent_set(p)
    if not D:
        raise ValueError("threshold is undefined for an increasing permutation")
    k = max(D)
    j = lis(p[:k])
    if i <= j:
        return True, i + len(p) - k
    return False, 0


def ls_singleton_formula(p: Sequence[int], i: int) -> int:
    """``i + is(π_[k+1, n])`` for the first descent ``k`` with ``is(π_[1, k]) >= i``."""
    for k in sorted(descent_set(p)):
        if lis(p[:k]) >= i:
            return i + lis(p[k:])
    raise ValueError(f"no descent k with is(prefix) >= {i}; ls_{{{i}}} is 0")


def ls_D_existence(p: Sequence[int], D: Iterable[int]) -> bool:
    """
    Decide ``ls_D(p) != 0`` by splitting off the last run ``[i, i + l - 1]`` of ``D``.

    ``k`` is the largest index such that ``π_[k, n]`` holds a decreasing
    subsequence with ``l + 1`` entries; a subsequence exists iff
    ``i <= ls_{D'}(π_[1, k])`` where ``D'`` is ``D`` without that run.
    """
    D = frozenset(D)
    if not D:
        raise ValueError("D must be nonempty")
    if des(p) == 0:
        raise ValueError("existence test needs a permutation with a descent")
    i = max(D)
    while i - 1 in D:
        i -= 1
    length = max(D) - i + 1
    rest = D - set(range(i, i + length))
    k = next((k for k in range(len(p), 0, -1) if lds(p[k - 1:]) >= length + 1), None)
    if k is None:
        return False
    return i <= ls_D(p[:k], rest)


def ls_D_peel(p: Sequence[int], D: Iterable[int]) -> int:
    """
    Peel the first run of ``D`` off the front, recursing on a suffix.

    Only valid when ``ls_D(p, D) != 0``; raises ``ValueError`` when the peel
    cannot even locate its split point.
    """
    D = frozenset(D)
    w = tuple(p)
    total = 0
    while D:
        if 1 in D:
            m = 1
            while m + 1 in D:
                m += 1
            stat = lds
        else:
            m = min(D) - 1
            stat = lis
        k = next((k for k in range(1, len(w) + 1) if stat(w[:k]) == m + 1), None)
        if k is None:
            raise ValueError(f"cannot peel {sorted(D)} from {w}: no subsequence exists")
        total += m
        w = w[k - 1:]
        D = frozenset(x - m for x in D if x > m)
    return total + lis(w)


def alternating_length(p: Sequence[int]) -> int:
    """
    Longest subsequence whose descent set is ``{1, 3, 5, ...}``.

    With ``k`` the largest count for which ``{1, 3, ..., 2k - 1}`` is realised,
    the answer is ``2k`` if that realisation has length exactly ``2k`` and
    ``2k + 1`` otherwise. ``k = 0`` leaves single letters.
    """
    n = len(p)
    if n == 0:
        return 0
    tri = triangle_of(p)
    for k in range(n // 2, 0, -1):
        value = ls_D(p, range(1, 2 * k, 2), tri)
        if value:
            return 2 * k if value == 2 * k else 2 * k + 1
    return 1


def has_descent_word(p: Sequence[int], w: str) -> bool:
    """
    Whether some subsequence has descent word exactly ``w``.

    Cutting a subsequence with descent set ``D(w)`` down to ``len(w) + 1``
    letters keeps the descent set, so this is ``ls_{D(w)} >= len(w) + 1``.
    """
    D = word_descents(w)
    size = len(w) + 1
    if size > len(p):
        return False
    return ls_D(p, D) >= size


def len_w(p: Sequence[int], w: str) -> int:
    """Longest subsequence whose descent word is a prefix of ``www...``."""
    if not w:
        raise ValueError("w must be nonempty")
    word_descents(w)
    n = len(p)
    if n == 0:
        return 0
    periodic = (w * (n // len(w) + 1))[: n - 1]
    for size in range(n, 0, -1):
        if has_descent_word(p, periodic[: size - 1]):
            return size
    return 1


def ls_d_via_growth(p: Sequence[int], d: int) -> int:
    """
    Cut the base of the growth diagram into ``d + 1`` sub-triangles and add the
    first parts of their apexes ``Λ[i-1][j]``; maximise over all cuts.
    """
    n = len(p)
    if d < 0:
        raise ValueError("d must be >= 0")
    if d > des(p):
        return 0
    g = build_growth(rsk(p).recording)
    best = 0
    for cuts in combinations(range(1, n), d):
        bounds = (0, *cuts, n)
        total = sum(g[a, b][0] for a, b in zip(bounds, bounds[1:]))
        best = max(best, total)
    return best
