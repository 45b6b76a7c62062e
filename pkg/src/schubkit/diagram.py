"""Cell diagrams and the constructions built on them.

Cells are 1-indexed ``(row, col)`` pairs.  A :class:`Diagram` also carries
its bounding grid so that empty trailing rows/columns survive column
permutations and serialization.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .permutation import Permutation

Cell = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    cells: frozenset[Cell]
    n_rows: int
    n_cols: int

    def __post_init__(self) -> None:
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        object.__setattr__(self, "cells", cells)
        for i, j in cells:
            if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
                raise ValueError(f"cell {(i, j)} outside {self.n_rows}x{self.n_cols} grid")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], n_rows: int | None = None,
                   n_cols: int | None = None) -> "Diagram":
        cells = frozenset(cells)
        if n_rows is None:
            n_rows = max((i for i, _ in cells), default=0)
        if n_cols is None:
            n_cols = max((j for _, j in cells), default=0)
        return cls(cells, n_rows, n_cols)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def column(self, j: int) -> frozenset[int]:
        return frozenset(i for i, c in self.cells if c == j)

    def columns(self) -> list[frozenset[int]]:
        """Row sets of columns 1..n_cols."""
        cols: list[set[int]] = [set() for _ in range(self.n_cols)]
        for i, j in self.cells:
            cols[j - 1].add(i)
        return [frozenset(c) for c in cols]

    def with_cells(self, cells: Iterable[Cell]) -> "Diagram":
        return Diagram(frozenset(cells), self.n_rows, self.n_cols)

    def resized(self, n_rows: int, n_cols: int) -> "Diagram":
        return Diagram(self.cells, n_rows, n_cols)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {"n_rows": self.n_rows, "n_cols": self.n_cols,
                "cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls(frozenset((int(i), int(j)) for i, j in data["cells"]),
                   int(data["n_rows"]), int(data["n_cols"]))

    def ascii(self, live: str = "□", empty: str = "·") -> str:
        lines = []
        for i in range(1, self.n_rows + 1):
            lines.append(" ".join(live if (i, j) in self.cells else empty
                                  for j in range(1, self.n_cols + 1)))
        return "\n".join(lines)


def from_columns(columns: Sequence[Iterable[int]], n_rows: int) -> Diagram:
    cells = {(i, j) for j, col in enumerate(columns, start=1) for i in col}
    return Diagram(frozenset(cells), n_rows, len(columns))


def rothe(w: Permutation) -> Diagram:
    n = w.n
    winv = w.inverse()
    cells = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
             if i < winv(j) and j < w(i)}
    return Diagram(frozenset(cells), n, n)


def rank(w: Permutation, cell: Cell) -> int:
    """Number of permutation dots strictly northwest of a Rothe cell."""
    i, j = cell
    if cell not in rothe(w):
        raise ValueError(f"{cell} is not a cell of D({w})")
    return sum(1 for k in range(1, i) if w(k) < j)


def skyline(alpha: Sequence[int]) -> Diagram:
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("weak composition entries must be nonnegative")
    cells = {(i, j) for i, a in enumerate(alpha, start=1) for j in range(1, a + 1)}
    return Diagram(frozenset(cells), len(alpha), max(alpha, default=0))


def weight(d: Diagram) -> tuple[int, ...]:
    wt = [0] * d.n_rows
    for i, _ in d.cells:
        wt[i - 1] += 1
    return tuple(wt)


def column_leq(r: Iterable[int], s: Iterable[int]) -> bool:
    r, s = sorted(r), sorted(s)
    return len(r) == len(s) and all(a <= b for a, b in zip(r, s))


def diagram_leq(c: Diagram, d: Diagram) -> bool:
    if c.n_cols != d.n_cols:
        raise ValueError("diagrams must have the same number of columns")
    return all(column_leq(a, b) for a, b in zip(c.columns(), d.columns()))


def is_percent_avoiding(d: Diagram) -> bool:
    cells = d.cells
    for i, j in cells:
        for i2, j2 in cells:
            if i < i2 and j2 < j and (i, j2) not in cells and (i2, j) not in cells:
                return False
    return True


def upward_closure(d: Diagram) -> Diagram:
    """Fill each occupied column from row 1 down to its lowest cell."""
    cells = set(d.cells)
    for j, col in enumerate(d.columns(), start=1):
        if col:
            cells.update((i, j) for i in range(1, max(col) + 1))
    return d.with_cells(cells)


def missing_teeth(d: Diagram) -> frozenset[Cell]:
    return frozenset((i - 1, j) for i, j in d.cells if i > 1 and (i - 1, j) not in d.cells)


def is_packed_column(rows: Iterable[int]) -> bool:
    rows = set(rows)
    return rows == set(range(1, len(rows) + 1))


def packed_columns(d: Diagram) -> frozenset[int]:
    """Non-empty columns without missing teeth (top-justified columns)."""
    return frozenset(j for j, col in enumerate(d.columns(), start=1)
                     if col and is_packed_column(col))


def strip_packed(d: Diagram) -> Diagram:
    packed = packed_columns(d)
    return d.with_cells(c for c in d.cells if c[1] not in packed)


def is_column_perm_of_skyline(d: Diagram) -> tuple[int, ...] | None:
    """Return the row weights if the columns can be sorted into a skyline.

    Columns must form a chain under inclusion; the witness composition is
    then ``weight(d)``.
    """
    cols = sorted((c for c in d.columns() if c), key=len, reverse=True)
    for big, small in zip(cols, cols[1:]):
        if not small <= big:
            return None
    return weight(d)


def sort_columns_to_skyline(d: Diagram) -> Diagram:
    """Reorder columns by decreasing size; equals ``skyline(weight(d))`` when the
    diagram is a column-permuted skyline."""
    cols = sorted(d.columns(), key=len, reverse=True)
    return from_columns(cols, d.n_rows)


def permute_columns(d: Diagram, order: Sequence[int]) -> Diagram:
    """New column ``t`` is old column ``order[t]`` (1-indexed)."""
    cols = d.columns()
    return from_columns([cols[j - 1] for j in order], d.n_rows)


def column_multiset(d: Diagram) -> list[tuple[int, ...]]:
    return sorted(tuple(sorted(c)) for c in d.columns())


def dark_cloud(d: Diagram) -> Diagram:
    """Bottom-to-top, take the rightmost cell whose column has no dark cell yet."""
    used_cols: set[int] = set()
    dark: set[Cell] = set()
    for i in range(d.n_rows, 0, -1):
        row = sorted((j for r, j in d.cells if r == i and j not in used_cols), reverse=True)
        if row:
            dark.add((i, row[0]))
            used_cols.add(row[0])
    return d.with_cells(dark)


def snow(d: Diagram) -> Diagram:
    cells = set(d.cells)
    for i, j in dark_cloud(d).cells:
        cells.update((r, j) for r in range(1, i + 1))
    return d.with_cells(cells)


def d_top(d: Diagram, a: Iterable[Cell]) -> Diagram:
    """Add every cell strictly above a distinguished cell."""
    a = frozenset(a)
    if not a <= d.cells:
        raise ValueError("distinguished cells must lie in the diagram")
    cols = [j for _, j in a]
    if len(cols) != len(set(cols)):
        raise ValueError("at most one distinguished cell per column")
    cells = set(d.cells)
    for i, j in a:
        cells.update((r, j) for r in range(1, i))
    return d.with_cells(cells)


def append_packed_columns(d: Diagram, heights: Sequence[int]) -> Diagram:
    """Add top-justified columns of the given heights after the existing ones."""
    cols = list(d.columns())
    n_rows = max([d.n_rows, *heights]) if heights else d.n_rows
    for h in heights:
        cols.append(frozenset(range(1, h + 1)))
    return from_columns(cols, n_rows)
