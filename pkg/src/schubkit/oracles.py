"""Slow, independent reference implementations used to cross-check the fast paths.

None of these share code with the routines they validate.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

Point = tuple[int, ...]


def _subset_sum(p: Sequence[int], subset: Iterable[int]) -> int:
    return sum(p[i] for i in subset)


def m_convex_by_submodularity(points: Iterable[Sequence[int]]) -> bool:
    """M-convexity via base polyhedra.

    ``S`` is M-convex iff ``f(T) = max_{s in S} s(T)`` is submodular and
    ``S`` is exactly the set of integer points of the base polyhedron of ``f``.
    """
    pts = {tuple(p) for p in points}
    if not pts:
        return True
    n = len(next(iter(pts)))
    if len({sum(p) for p in pts}) > 1:
        return False
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    f = {t: max(_subset_sum(p, t) for p in pts) for t in subsets}
    for a in subsets:
        for b in subsets:
            if f[a] + f[b] < f[a | b] + f[a & b]:
                return False
    total = f[frozenset(range(n))]
    lo = [min(p[i] for p in pts) for i in range(n)]
    hi = [f[frozenset([i])] for i in range(n)]
    base = set()
    for cand in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if sum(cand) != total:
            continue
        if all(_subset_sum(cand, t) <= f[t] for t in subsets):
            base.add(cand)
    return base == pts


def _solve_exact(columns: list[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Unique solution of sum_k lam_k columns[k] = rhs, or None (inconsistent or singular)."""
    rows = len(rhs)
    k = len(columns)
    mat = [[Fraction(columns[c][r]) for c in range(k)] + [Fraction(rhs[r])] for r in range(rows)]
    piv_cols = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pivot is None:
            return None  # dependent columns: not an affinely independent subset
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    if any(mat[i][-1] != 0 for i in range(r, rows)):
        return None
    return [mat[i][-1] for i in range(k)]


def in_hull_caratheodory(p: Sequence[int], vertices: Sequence[Sequence[int]]) -> bool:
    """Membership by trying every affinely independent subset of at most d+1 vertices."""
    verts = sorted({tuple(v) for v in vertices})
    d = len(p)
    for size in range(1, min(d + 1, len(verts)) + 1):
        for subset in combinations(verts, size):
            cols = [list(v) + [1] for v in subset]
            lam = _solve_exact(cols, list(p) + [1])
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def hull_lattice_points_bruteforce(points: Iterable[Sequence[int]]) -> frozenset[Point]:
    pts = sorted({tuple(q) for q in points})
    n = len(pts[0])
    lo = [min(q[i] for q in pts) for i in range(n)]
    hi = [max(q[i] for q in pts) for i in range(n)]
    return frozenset(c for c in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
                     if in_hull_caratheodory(c, pts))
