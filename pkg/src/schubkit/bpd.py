"""Bumpless pipe dreams: tilings, pipe tracing, enumeration, droop moves.

Each tile is a set of edge midpoints (N, S, E, W) that carry pipe.  Pipes
enter along the bottom edge and leave through the right edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .diagram import Cell
from .permutation import Permutation, all_permutations, as_permutation
from .polynomial import MultiPolynomial

DEFAULT_MAX_N = 5

N, S, E, W = "N", "S", "E", "W"

TILE_EDGES: dict[str, frozenset[str]] = {
    "B": frozenset(),
    "X": frozenset({N, S, E, W}),
    "V": frozenset({N, S}),
    "H": frozenset({E, W}),
    "J": frozenset({N, W}),  # ┘ : up-elbow, the tiles in U(P)
    "R": frozenset({S, E}),  # ┌
}
EDGES_TILE = {edges: name for name, edges in TILE_EDGES.items()}
TILE_NAMES = {"B": "Blank", "X": "Cross", "V": "Vertical", "H": "Horizontal",
              "J": "ElbowLeftTop", "R": "ElbowBottomRight"}
NAME_TILES = {v: k for k, v in TILE_NAMES.items()}
TILE_GLYPHS = {"B": "·", "X": "┼", "V": "│", "H": "─", "J": "┘", "R": "┌"}


class BpdError(ValueError):
    pass


class BpdBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Bpd:
    tiles: tuple[str, ...]  # row-major tile codes, length n*n

    @property
    def n(self) -> int:
        return int(round(len(self.tiles) ** 0.5))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[str]]) -> "Bpd":
        flat = tuple(t for row in rows for t in row)
        return cls(flat)

    def tile(self, i: int, j: int) -> str:
        return self.tiles[(i - 1) * self.n + (j - 1)]

    def rows(self) -> list[str]:
        n = self.n
        return ["".join(self.tiles[r * n:(r + 1) * n]) for r in range(n)]

    def cells_of(self, kind: str) -> frozenset[Cell]:
        n = self.n
        return frozenset((k // n + 1, k % n + 1) for k, t in enumerate(self.tiles) if t == kind)

    def blanks(self) -> frozenset[Cell]:
        return self.cells_of("B")

    def up_elbows(self) -> frozenset[Cell]:
        return self.cells_of("J")

    def canonical(self) -> str:
        return "".join(self.tiles)

    def to_json(self) -> list[list[str]]:
        return [[TILE_NAMES[t] for t in row] for row in self.rows()]

    @classmethod
    def from_json(cls, data) -> "Bpd":
        return cls.from_rows([[NAME_TILES[name] for name in row] for row in data])

    def ascii(self) -> str:
        return "\n".join("".join(TILE_GLYPHS[t] for t in row) for row in self.rows())


@dataclass(frozen=True)
class MarkedBpd:
    bpd: Bpd
    marks: frozenset[Cell]

    def __post_init__(self):
        if not self.marks <= self.bpd.up_elbows():
            raise BpdError("marks must sit on ┘ tiles")


def validation_error(p: Bpd) -> str | None:
    n = p.n
    if n * n != len(p.tiles):
        return "tile count is not a square"
    if any(t not in TILE_EDGES for t in p.tiles):
        return "unknown tile code"
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = TILE_EDGES[p.tile(i, j)]
            if i == 1 and N in e:
                return f"pipe leaves through the top at {(i, j)}"
            if j == 1 and W in e:
                return f"pipe leaves through the left at {(i, j)}"
            if i == n and S not in e:
                return f"bottom edge of {(i, j)} carries no pipe"
            if j == n and E not in e:
                return f"right edge of {(i, j)} carries no pipe"
            if i < n and (S in e) != (N in TILE_EDGES[p.tile(i + 1, j)]):
                return f"vertical mismatch below {(i, j)}"
            if j < n and (E in e) != (W in TILE_EDGES[p.tile(i, j + 1)]):
                return f"horizontal mismatch right of {(i, j)}"
    return None


def is_valid(p: Bpd) -> bool:
    return validation_error(p) is None


def _trace(p: Bpd) -> tuple[tuple[int, ...], bool]:
    """Follow pipes; return (w, reduced).

    Processing rows bottom to top and columns left to right, every tile's
    south and west inputs are already labelled.  A second crossing of the
    same pair is read as a bump.
    """
    err = validation_error(p)
    if err:
        raise BpdError(err)
    n = p.n
    from_below = {j: j for j in range(1, n + 1)}  # label on the S edge of the current row
    crossed: set[frozenset[int]] = set()
    reduced = True
    w = [0] * n
    for i in range(n, 0, -1):
        from_left = None
        up: dict[int, int] = {}
        for j in range(1, n + 1):
            t = p.tile(i, j)
            south = from_below.get(j)
            if t == "B":
                continue
            if t == "V":
                up[j] = south
            elif t == "H":
                pass  # horizontal pipe passes through
            elif t == "R":
                from_left = south
            elif t == "J":
                up[j] = from_left
                from_left = None
            elif t == "X":
                pair = frozenset((south, from_left))
                if pair in crossed:
                    reduced = False
                    up[j], from_left = from_left, south
                else:
                    crossed.add(pair)
                    up[j] = south
        w[i - 1] = from_left
        from_below = up
    return tuple(w), reduced


def permutation_of(p: Bpd) -> Permutation:
    return Permutation(_trace(p)[0])


def is_reduced(p: Bpd) -> bool:
    return _trace(p)[1]


def rothe_bpd(w) -> Bpd:
    w = as_permutation(w)
    n = w.n
    grid = [["B"] * n for _ in range(n)]
    horiz = set()
    vert = set()
    for i in range(1, n + 1):
        c = w(i)
        grid[i - 1][c - 1] = "R"
        horiz.update((i, j) for j in range(c + 1, n + 1))
        vert.update((r, c) for r in range(i + 1, n + 1))
    for i, j in horiz | vert:
        if (i, j) in horiz and (i, j) in vert:
            grid[i - 1][j - 1] = "X"
        elif (i, j) in horiz:
            grid[i - 1][j - 1] = "H"
        else:
            grid[i - 1][j - 1] = "V"
    return Bpd.from_rows(grid)


def _check_bound(n: int, max_n: int) -> None:
    if n > max_n:
        raise BpdBoundExceeded(f"n={n} exceeds the BPD bound {max_n}")


_ALL_CACHE: dict[int, dict[tuple[int, ...], frozenset[Bpd]]] = {}


def _all_bpds(n: int) -> dict[tuple[int, ...], frozenset[Bpd]]:
    """Every valid n x n tiling, grouped by permutation (row-major backtracking)."""
    if n in _ALL_CACHE:
        return _ALL_CACHE[n]
    grid: list[str] = []
    found: dict[tuple[int, ...], set[Bpd]] = {}

    def options(i: int, j: int) -> tuple[str, ...]:
        north = i > 1 and S in TILE_EDGES[grid[(i - 2) * n + j - 1]]
        west = j > 1 and E in TILE_EDGES[grid[(i - 1) * n + j - 2]]
        if north and west:
            opts = ("X", "J")
        elif north:
            opts = ("V",)
        elif west:
            opts = ("H",)
        else:
            opts = ("B", "R")
        keep = []
        for t in opts:
            e = TILE_EDGES[t]
            if i == n and S not in e:
                continue
            if j == n and E not in e:
                continue
            keep.append(t)
        return tuple(keep)

    def rec(k: int) -> None:
        if k == n * n:
            p = Bpd(tuple(grid))
            w, _ = _trace(p)
            found.setdefault(w, set()).add(p)
            return
        i, j = divmod(k, n)
        for t in options(i + 1, j + 1):
            grid.append(t)
            rec(k + 1)
            grid.pop()

    rec(0)
    result = {w: frozenset(s) for w, s in found.items()}
    _ALL_CACHE[n] = result
    return result


def enumerate_bpds(w, max_n: int = DEFAULT_MAX_N) -> frozenset[Bpd]:
    w = as_permutation(w)
    _check_bound(w.n, max_n)
    return _all_bpds(w.n).get(w.images, frozenset())


# -- droop moves ------------------------------------------------------------------

def _elbows_in(p: Bpd, r0: int, r1: int, c0: int, c1: int) -> set[Cell]:
    return {(i, j) for i in range(r0, r1 + 1) for j in range(c0, c1 + 1) if p.tile(i, j) in "JR"}


def _edges(p: Bpd) -> list[set[str]]:
    return [set(TILE_EDGES[t]) for t in p.tiles]


def _from_edges(edges: list[set[str]]) -> Bpd | None:
    try:
        return Bpd(tuple(EDGES_TILE[frozenset(e)] for e in edges))
    except KeyError:
        return None


def _reroute(p: Bpd, a: int, b: int, c: int, d: int) -> Bpd | None:
    """Droop the pipe turning at the ┌ in (a, b) so that it turns at (c, d).

    The pipe now runs up column b to row c, east to column d, up to row a and
    on east as before.  Returns ``None`` if the edges do not form tiles.
    """
    n = p.n
    edges = _edges(p)

    def cell(i, j):
        return edges[(i - 1) * n + (j - 1)]

    # remove the old path: east along row a from b to d, south along column b from a to c
    cell(a, b).discard(E)
    cell(a, b).discard(S)
    for j in range(b + 1, d + 1):
        cell(a, j).discard(W)
        if j < d:
            cell(a, j).discard(E)
    for i in range(a + 1, c + 1):
        cell(i, b).discard(N)
        if i < c:
            cell(i, b).discard(S)
    # add the new path: south along column d from a to c, east along row c from b to d
    cell(a, d).add(S)
    for i in range(a + 1, c + 1):
        cell(i, d).add(N)
        if i < c:
            cell(i, d).add(S)
    cell(c, b).add(E)
    for j in range(b + 1, d + 1):
        cell(c, j).add(W)
        if j < d:
            cell(c, j).add(E)
    q = _from_edges(edges)
    if q is None or not is_valid(q):
        return None
    return q


def _droop_targets(p: Bpd):
    """Yield (a, b, c, d): ┌ at (a,b), blank at (c,d), no other elbows in the rectangle."""
    n = p.n
    for a, b in p.cells_of("R"):
        for c in range(a + 1, n + 1):
            for d in range(b + 1, n + 1):
                if p.tile(c, d) != "B":
                    continue
                if _elbows_in(p, a, c, b, d) != {(a, b)}:
                    continue
                yield a, b, c, d


def droop_moves(p: Bpd) -> set[Bpd]:
    out = set()
    for a, b, c, d in _droop_targets(p):
        q = _reroute(p, a, b, c, d)
        if q is not None:
            out.add(q)
    return out


def k_droop_moves(p: Bpd) -> set[Bpd]:
    """Both K-theoretic shapes: the drooping pipe ends on another pipe's ┘ elbow."""
    n = p.n
    out = set()
    w = permutation_of(p)
    for a, b in p.cells_of("R"):
        for c, d in p.cells_of("J"):
            if not (c > a and d > b):
                continue
            elbows = _elbows_in(p, a, c, b, d)
            # shape 1: the other pipe's ┌ lies in row c at (c, e), b < e < d
            for e in range(b + 1, d):
                if p.tile(c, e) == "R" and elbows == {(a, b), (c, e), (c, d)}:
                    q = _k_droop(p, a, b, c, d, (c, e))
                    if q is not None and permutation_of(q) == w:
                        out.add(q)
            # shape 2: the other pipe's ┌ lies in column d at (c - 1, d)
            if c - 1 > a and p.tile(c - 1, d) == "R" and elbows == {(a, b), (c - 1, d), (c, d)}:
                q = _k_droop(p, a, b, c, d, (c - 1, d))
                if q is not None and permutation_of(q) == w:
                    out.add(q)
    return out


def _k_droop(p: Bpd, a: int, b: int, c: int, d: int, partner: Cell) -> Bpd | None:
    """Reroute the ┌ at (a,b) so its corner lands on ``partner``, which becomes a cross."""
    pc, pd = partner
    return _reroute(p, a, b, pc, pd)


def droop_closure(w, max_n: int = DEFAULT_MAX_N, k_theoretic: bool = True) -> frozenset[Bpd]:
    w = as_permutation(w)
    _check_bound(w.n, max_n)
    start = rothe_bpd(w)
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        nxt = droop_moves(p)
        if k_theoretic:
            nxt |= k_droop_moves(p)
        for q in nxt:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def mbpd_weight(m: MarkedBpd) -> tuple[int, ...]:
    n = m.bpd.n
    out = [0] * n
    for i, _ in m.bpd.blanks() | m.marks:
        out[i - 1] += 1
    return tuple(out)


def marked_bpds(w, max_n: int = DEFAULT_MAX_N):
    for p in sorted(enumerate_bpds(w, max_n), key=Bpd.canonical):
        ups = sorted(p.up_elbows())
        for choice in product((False, True), repeat=len(ups)):
            yield MarkedBpd(p, frozenset(c for c, on in zip(ups, choice) if on))


def grothendieck_via_bpd(w, max_n: int = DEFAULT_MAX_N) -> MultiPolynomial:
    """sum over marked BPDs of (-1)^(|D(P)| + |S| - l(w)) x^wt(P, S).

    Summed per BPD in closed form: x^{blank rows} * prod_{┘ tiles} (1 - x_row).
    """
    w = as_permutation(w)
    n = w.n
    ell = w.length()
    total = MultiPolynomial.zero(n)
    one = MultiPolynomial.constant(1, n)
    for p in enumerate_bpds(w, max_n):
        blanks = p.blanks()
        exp = [0] * n
        for i, _ in blanks:
            exp[i - 1] += 1
        sign = -1 if (len(blanks) - ell) % 2 else 1
        term = MultiPolynomial.monomial(exp) * sign
        for i, _ in p.up_elbows():
            term = term * (one - MultiPolynomial.variable(i, n))
        total = total + term
    return total


def grothendieck_via_mbpd_sum(w, max_n: int = DEFAULT_MAX_N) -> MultiPolynomial:
    """Literal sum over marked BPDs; slow, kept as a cross-check."""
    w = as_permutation(w)
    n = w.n
    ell = w.length()
    terms: dict[tuple[int, ...], int] = {}
    for m in marked_bpds(w, max_n):
        sign = -1 if (len(m.bpd.blanks()) + len(m.marks) - ell) % 2 else 1
        e = mbpd_weight(m)
        terms[e] = terms.get(e, 0) + sign
    return MultiPolynomial(terms, n)


def all_rothe_bpds(n: int):
    return {w: rothe_bpd(w) for w in all_permutations(n)}
