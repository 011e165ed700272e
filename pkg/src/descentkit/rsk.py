"""Robinson–Schensted row insertion for permutations and words of distinct letters."""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Sequence
from dataclasses import dataclass

from .tableau import Partition, StandardTableau

__all__ = ["RskPair", "rsk", "rsk_shape", "greene_sums", "first_row_milestones"]


@dataclass(frozen=True)
class RskPair:
    insertion: StandardTableau
    recording: StandardTableau

    @property
    def P(self) -> StandardTableau:
        return self.insertion

    @property
    def Q(self) -> StandardTableau:
        return self.recording

    @property
    def shape(self) -> Partition:
        return self.recording.shape


def _insert_all(w: Sequence[int]):
    rows: list[list[int]] = []
    rec: list[list[int]] = []
    for step, x in enumerate(w, 1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                rec.append([step])
                break
            row = rows[r]
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                rec[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return rows, rec


def rsk(w: Sequence[int]) -> RskPair:
    """
    Insertion and recording tableaux of ``w``.

    Words of distinct letters are accepted; their insertion tableau is then
    built on the standardized word so that both outputs are standard.
    """
    if len(set(w)) != len(w):
        raise ValueError("rsk needs distinct entries")
    rank = {v: r for r, v in enumerate(sorted(w), 1)}
    rows, rec = _insert_all([rank[v] for v in w])
    return RskPair(
        StandardTableau(tuple(map(tuple, rows))),
        StandardTableau(tuple(map(tuple, rec))),
    )


def rsk_shape(w: Sequence[int]) -> Partition:
    """Shape of the RSK tableaux, without building the tableaux."""
    rows, _ = _insert_all(w)
    return Partition(len(r) for r in rows)


def greene_sums(w: Sequence[int], k: int) -> int:
    """``is_k``: sum of the first ``k`` row lengths."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(rsk_shape(w)[:k])


def first_row_milestones(q: StandardTableau) -> tuple[int, ...]:
    """First row of a recording tableau: ``u_i`` is where an increasing run of length ``i`` can first end."""
    return q.first_row
