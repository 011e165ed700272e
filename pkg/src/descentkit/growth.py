"""
Evacuation growth diagrams.

The diagram of an SYT ``Q`` of size ``n`` is a triangle of partitions
``Λ[i][j]`` for ``0 <= i <= j <= n``. The top chain ``Λ[0][0..n]`` encodes
``Q``, the diagonal is empty, and each remaining cell is the partition
squeezed between ``Λ[i][j-1]`` and ``Λ[i-1][j]`` that differs from
``Λ[i-1][j-1]`` when there is a choice. The right edge read from the bottom
up encodes ``evac(Q)``, and ``Λ[i-1][j]`` is the RSK shape of ``π_[i, j]``.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .perm import Permutation
from .rsk import rsk
from .tableau import EMPTY, Partition, StandardTableau, chain_decode, chain_encode, format_partition

__all__ = [
    "GrowthDiagram", "StatTriangle", "LocalRuleError",
    "build_growth", "sandwiched", "evacuate", "factor_shape", "stat_triangle",
    "audit_local_rule", "render_ascii", "render_dot", "render_json",
]


class LocalRuleError(RuntimeError):
    pass


def sandwiched(lower: Partition, upper: Partition) -> list[Partition]:
    """Partitions ``ν`` with ``lower ⊂ ν ⊂ upper``, one box above ``lower``."""
    out = []
    for row in range(len(lower) + 1):
        nu = lower.add_box(row)
        if nu is not None and upper.contains(nu):
            out.append(nu)
    return out


def _local_rule(diag: Partition, left: Partition, up: Partition) -> Partition:
    choices = sandwiched(left, up)
    if not choices:
        raise LocalRuleError(f"no partition between {left!r} and {up!r}")
    if len(choices) == 1:
        return choices[0]
    return choices[0] if choices[1] == diag else choices[1]


@dataclass(frozen=True)
class GrowthDiagram:
    n: int
    cells: tuple[tuple[Partition | None, ...], ...]  # cells[i][j], None below the diagonal

    def __getitem__(self, ij: tuple[int, int]) -> Partition:
        i, j = ij
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"Λ[{i}][{j}] outside 0 <= i <= j <= {self.n}")
        cell = self.cells[i][j]
        assert cell is not None
        return cell

    def top_chain(self) -> tuple[Partition, ...]:
        return tuple(self[0, j] for j in range(self.n + 1))

    def right_chain(self) -> tuple[Partition, ...]:
        return tuple(self[self.n - i, self.n] for i in range(self.n + 1))


def build_growth(q: StandardTableau) -> GrowthDiagram:
    n = q.n
    cells: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for j, lam in enumerate(chain_encode(q)):
        cells[0][j] = lam
    for i in range(1, n + 1):
        cells[i][i] = EMPTY
        for j in range(i + 1, n + 1):
            cells[i][j] = _local_rule(cells[i - 1][j - 1], cells[i][j - 1], cells[i - 1][j])
    return GrowthDiagram(n, tuple(map(tuple, cells)))


def audit_local_rule(g: GrowthDiagram) -> list[tuple[int, int]]:
    """Cells that break containment or keep the diagonal value despite a second choice."""
    bad = []
    for i in range(1, g.n + 1):
        if g[i, i] != EMPTY:
            bad.append((i, i))
        for j in range(i + 1, g.n + 1):
            cell, left, up, diag = g[i, j], g[i, j - 1], g[i - 1, j], g[i - 1, j - 1]
            choices = sandwiched(left, up)
            if cell not in choices or (len(choices) == 2 and cell == diag):
                bad.append((i, j))
    return bad


def evacuate(q: StandardTableau) -> StandardTableau:
    return chain_decode(build_growth(q).right_chain())


def factor_shape(g: GrowthDiagram, i: int, j: int) -> Partition:
    """RSK shape of the factor ``π_[i, j]`` (one-based, inclusive)."""
    if not 1 <= i <= j <= g.n:
        raise IndexError(f"window [{i}, {j}] outside 1..{g.n}")
    return g[i - 1, j]


@dataclass(frozen=True)
class StatTriangle:
    """``a_{i,j} = (is, ds)`` of every factor ``π_[i, j]``, one-based."""

    n: int
    inc: tuple[tuple[int, ...], ...]  # inc[i][j]; zero where undefined
    dec: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> tuple[int, int]:
        i, j = ij
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"a[{i}][{j}] outside 1 <= i <= j <= {self.n}")
        return self.inc[i][j], self.dec[i][j]

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable summary of every off-diagonal entry, row by row."""
        return tuple(self[i, j] for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))

    @classmethod
    def from_pairs(cls, n: int, pairs: dict[tuple[int, int], tuple[int, int]]) -> StatTriangle:
        inc = [[0] * (n + 1) for _ in range(n + 1)]
        dec = [[0] * (n + 1) for _ in range(n + 1)]
        for (i, j), (a, b) in pairs.items():
            inc[i][j], dec[i][j] = a, b
        return cls(n, tuple(map(tuple, inc)), tuple(map(tuple, dec)))


def stat_triangle(p: Sequence[int] | GrowthDiagram) -> StatTriangle:
    """Read every ``a_{i,j}`` off one growth diagram: first part and number of rows of ``Λ[i-1][j]``."""
    g = p if isinstance(p, GrowthDiagram) else build_growth(rsk(p).recording)
    n = g.n
    inc = [[0] * (n + 1) for _ in range(n + 1)]
    dec = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lam = g.cells[i - 1][j]
            inc[i][j] = lam[0]
            dec[i][j] = len(lam)
    return StatTriangle(n, tuple(map(tuple, inc)), tuple(map(tuple, dec)))


def render_ascii(g: GrowthDiagram) -> str:
    """
    Diamond layout: apex on top, the empty diagonal along the bottom, ``Q`` up
    the left edge and ``evac(Q)`` up the right edge. Empty cells print as ``.``.
    """
    def label(lam):
        return format_partition(lam) if lam else "."

    width = max(len(label(g[i, j])) for i in range(g.n + 1) for j in range(i, g.n + 1)) + 1
    lines = []
    for h in range(g.n, -1, -1):
        line = [" "] * ((2 * g.n + 1) * width)
        for i in range(0, g.n - h + 1):
            text = label(g[i, i + h])
            start = (2 * i + h) * width
            line[start:start + len(text)] = text
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


def render_dot(g: GrowthDiagram) -> str:
    out = ["digraph growth {", "  node [shape=plaintext];"]
    for i in range(g.n + 1):
        for j in range(i, g.n + 1):
            out.append(f'  c{i}_{j} [label="{format_partition(g[i, j])}", '
                       f'pos="{i + j},{j - i}!"];')
    for i in range(g.n + 1):
        for j in range(i, g.n + 1):
            if j < g.n:
                out.append(f"  c{i}_{j} -> c{i}_{j + 1};")
            if i + 1 <= j:
                out.append(f"  c{i + 1}_{j} -> c{i}_{j};")
    out.append("}")
    return "\n".join(out)


def growth_payload(g: GrowthDiagram) -> dict:
    cells = [[i, j, list(g[i, j])] for i in range(g.n + 1) for j in range(i, g.n + 1)]
    return {"n": g.n, "cells": cells}


def render_json(g: GrowthDiagram) -> str:
    return json.dumps(growth_payload(g))


def growth_of(p: Permutation) -> GrowthDiagram:
    return build_growth(rsk(p).recording)
