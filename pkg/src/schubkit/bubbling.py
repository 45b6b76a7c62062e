"""Dead square diagrams, (K-)bubbling moves, and distinguished-square constructions."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .diagram import Cell, Diagram, d_top, rothe, weight
from .permutation import (
    ChainWitness,
    Permutation,
    flatten,
    is_fireworks,
    is_valid_chain_witness,
    is_vexillary,
)

DEFAULT_STATE_BOUND = 2_000_000


class ClosureBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DeadSquareDiagram:
    """(D, F, A): all cells, dead cells, distinguished live cells."""

    cells: frozenset[Cell]
    dead: frozenset[Cell]
    distinguished: frozenset[Cell]
    n_rows: int
    n_cols: int

    @classmethod
    def start(cls, d: Diagram, a: Iterable[Cell] = ()) -> "DeadSquareDiagram":
        return cls(d.cells, frozenset(), frozenset(a), d.n_rows, d.n_cols)

    @property
    def live(self) -> frozenset[Cell]:
        return self.cells - self.dead

    def diagram(self) -> Diagram:
        return Diagram(self.cells, self.n_rows, self.n_cols)

    def weight(self) -> tuple[int, ...]:
        return weight(self.diagram())

    def excess(self) -> int:
        return len(self.dead)

    def key(self) -> tuple:
        return (tuple(sorted(self.cells)), tuple(sorted(self.dead)), tuple(sorted(self.distinguished)))

    def to_json(self) -> dict:
        return {"D": [list(c) for c in sorted(self.cells)],
                "F": [list(c) for c in sorted(self.dead)],
                "A": [list(c) for c in sorted(self.distinguished)]}

    def ascii(self) -> str:
        lines = []
        for i in range(1, self.n_rows + 1):
            row = []
            for j in range(1, self.n_cols + 1):
                c = (i, j)
                if c in self.distinguished:
                    row.append("◆")
                elif c in self.dead:
                    row.append("■")
                elif c in self.cells:
                    row.append("□")
                else:
                    row.append("·")
            lines.append(" ".join(row))
        return "\n".join(lines)


def validation_error(state: DeadSquareDiagram) -> str | None:
    """Reason the triple is not a dead square diagram, or ``None``."""
    if not state.dead <= state.cells:
        return "dead cells outside the diagram"
    live = state.live
    if not state.distinguished <= live:
        return "distinguished cells must be live"
    for i, j in state.dead:
        ok = False
        for a_i, a_j in state.distinguished:
            if a_j == j and a_i < i and not any((r, j) in live for r in range(a_i + 1, i)):
                ok = True
                break
        if not ok:
            return f"dead cell {(i, j)} has no distinguished cell above it"
    return None


def validate(state: DeadSquareDiagram) -> bool:
    return validation_error(state) is None


def bubble_move(state: DeadSquareDiagram, cell: Cell) -> DeadSquareDiagram:
    i, j = cell
    if cell not in state.live:
        raise ValueError(f"{cell} is not a live cell")
    above = (i - 1, j)
    if i <= 1 or above in state.cells:
        raise ValueError(f"cell above {cell} is not empty")
    cells = (state.cells - {cell}) | {above}
    a = state.distinguished
    if cell in a:
        a = (a - {cell}) | {above}
    return DeadSquareDiagram(cells, state.dead, a, state.n_rows, state.n_cols)


def k_bubble_move(state: DeadSquareDiagram, cell: Cell) -> DeadSquareDiagram:
    i, j = cell
    if cell not in state.distinguished:
        raise ValueError(f"{cell} is not distinguished")
    above = (i - 1, j)
    if i <= 1 or above in state.cells:
        raise ValueError(f"cell above {cell} is not empty")
    return DeadSquareDiagram(state.cells | {above}, state.dead | {cell},
                             (state.distinguished - {cell}) | {above},
                             state.n_rows, state.n_cols)


def _successors(state: DeadSquareDiagram):
    cells = state.cells
    dead = state.dead
    for cell in cells:
        i, j = cell
        if i <= 1 or (i - 1, j) in cells or cell in dead:
            continue
        yield bubble_move(state, cell)
        if cell in state.distinguished:
            yield k_bubble_move(state, cell)


def _check_start(d: Diagram, a: frozenset[Cell]) -> None:
    if not a <= d.cells:
        raise ValueError("distinguished cells must lie in the diagram")
    cols = [j for _, j in a]
    if len(cols) != len(set(cols)):
        raise ValueError("at most one distinguished cell per column")


def enumerate_sbd(d: Diagram, a: Iterable[Cell] = (),
                  bound: int = DEFAULT_STATE_BOUND) -> set[DeadSquareDiagram]:
    """Breadth-first closure of (D, {}, A) under bubbling and K-bubbling."""
    a = frozenset(a)
    _check_start(d, a)
    start = DeadSquareDiagram.start(d, a)
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for nxt in _successors(state):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise ClosureBoundExceeded(f"more than {bound} bubbling states")
                queue.append(nxt)
    return seen


def sbd_weights(d: Diagram, a: Iterable[Cell] = (),
                bound: int = DEFAULT_STATE_BOUND) -> frozenset[tuple[int, ...]]:
    return frozenset(s.weight() for s in enumerate_sbd(d, a, bound))


def sbd_live_diagrams(d: Diagram, a: Iterable[Cell] = (),
                      bound: int = DEFAULT_STATE_BOUND) -> frozenset[frozenset[Cell]]:
    return frozenset(s.cells for s in enumerate_sbd(d, a, bound))


def weights_with_excess(states: Iterable[DeadSquareDiagram]) -> frozenset[tuple[int, ...]]:
    """{(wt, m - ex)}: each weight extended by the excess deficit coordinate."""
    states = list(states)
    if not states:
        return frozenset()
    m = max(s.excess() for s in states)
    return frozenset(s.weight() + (m - s.excess(),) for s in states)


# -- distinguished squares for Rothe diagrams -------------------------------------

def _require_vexillary(w: Permutation) -> None:
    if not is_vexillary(w):
        raise ValueError(f"{w} is not vexillary")


def _rank_table(w: Permutation, d: Diagram) -> dict[Cell, int]:
    return {(i, j): sum(1 for k in range(1, i) if w(k) < j) for i, j in d.cells}


def linking_classes(w: Permutation) -> list[frozenset[Cell]]:
    """Classes of D(w) under equality of i - r(i, j)."""
    _require_vexillary(w)
    d = rothe(w)
    ranks = _rank_table(w, d)
    classes: dict[int, set[Cell]] = {}
    for (i, j), r in ranks.items():
        classes.setdefault(i - r, set()).add((i, j))
    return [frozenset(classes[k]) for k in sorted(classes)]


def _squares_below(d: Diagram, cell: Cell) -> int:
    i, j = cell
    return sum(1 for r, c in d.cells if c == j and r > i)


def _order_key(d: Diagram, side: str):
    sign = 1 if side == "left" else -1
    return lambda cell: (-cell[0], _squares_below(d, cell), sign * cell[1])


def order_cells(w: Permutation, side: str = "left") -> list[Cell]:
    """Left or right bubbling order on D(w)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    _require_vexillary(w)
    d = rothe(w)
    return sorted(d.cells, key=_order_key(d, side))


def _a_from_order(w: Permutation, side: str) -> frozenset[Cell]:
    d = rothe(w)
    ranks = _rank_table(w, d)
    chosen: set[Cell] = set()
    used_cols: set[int] = set()
    used_classes: set[int] = set()
    for cell in order_cells(w, side):
        cls = cell[0] - ranks[cell]
        if cell[1] in used_cols or cls in used_classes:
            continue
        chosen.add(cell)
        used_cols.add(cell[1])
        used_classes.add(cls)
    return frozenset(chosen)


def _a_new(w: Permutation) -> frozenset[Cell]:
    d = rothe(w)
    key = _order_key(d, "right")
    chosen: set[Cell] = set()
    for i in range(w.n, 0, -1):
        row = sorted((c for c in d.cells if c[0] == i), key=key)
        for cell in row:
            j = cell[1]
            if not any(c == j and r > i for r, c in chosen):
                chosen.add(cell)
                break
    return frozenset(chosen)


def _a_right_prime(w: Permutation) -> frozenset[Cell]:
    d = rothe(w)
    key = _order_key(d, "right")
    current = set(_a_from_order(w, "right"))
    for i in range(w.n, 0, -1):
        row = sorted((c for c in current if c[0] == i), key=key)
        if len(row) <= 1:
            continue
        for cell in row[1:]:
            current.discard(cell)
            lifted = (i - 1, cell[1])
            if lifted not in d.cells:
                raise AssertionError(f"lifted square {lifted} left D({w})")
            current.add(lifted)
    return frozenset(current)


def southmost_cells(d: Diagram) -> frozenset[Cell]:
    return frozenset((max(col), j) for j, col in enumerate(d.columns(), start=1) if col)


def build_A(w: Permutation, variant: str = "left") -> frozenset[Cell]:
    """Distinguished squares: ``left``, ``right``, ``new``, ``right_prime`` or ``southmost``."""
    if variant == "southmost":
        if not is_fireworks(w):
            raise ValueError(f"{w} is not fireworks")
        return southmost_cells(rothe(w))
    _require_vexillary(w)
    if variant in ("left", "right"):
        return _a_from_order(w, variant)
    if variant == "new":
        return _a_new(w)
    if variant == "right_prime":
        return _a_right_prime(w)
    raise ValueError(f"unknown variant {variant!r}")


def build_A_chain(w: Permutation, witness: ChainWitness) -> frozenset[Cell]:
    """Union of per-block distinguished sets, each embedded at its block offset.

    A block at positions s..e with values m..m' sits in D(w) shifted by
    (s - 1) rows and (m - 1) columns.
    """
    if not is_valid_chain_witness(w, witness):
        raise ValueError(f"invalid chain witness for {w}")
    a: set[Cell] = set()
    for start, block, kind in zip(witness.cut_points, witness.blocks(w), witness.block_kinds):
        flat = Permutation(flatten(block))
        local = build_A(flat, "left" if kind == "vexillary" else "southmost")
        row_off, col_off = start - 1, min(block) - 1
        a.update((i + row_off, j + col_off) for i, j in local)
    result = frozenset(a)
    if not result <= rothe(w).cells:
        raise AssertionError("embedded block squares fell outside D(w)")
    return result


def d_top_of(w: Permutation, variant: str = "left") -> Diagram:
    return d_top(rothe(w), build_A(w, variant))
