"""M-convexity, lattice points of convex hulls, and saturated Newton polytopes.

Hull membership is decided exactly: a phase-one simplex over
:class:`fractions.Fraction` with Bland's rule.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .polynomial import MultiPolynomial

Point = tuple[int, ...]


def _as_points(points: Iterable[Sequence[int]]) -> frozenset[Point]:
    pts = frozenset(tuple(int(a) for a in p) for p in points)
    dims = {len(p) for p in pts}
    if len(dims) > 1:
        raise ValueError("points must share one dimension")
    return pts


def m_convex_violation(points: Iterable[Sequence[int]]) -> tuple | None:
    """First failure of the exchange axiom, or ``None`` when the set is M-convex.

    The witness is ``(x, y, i)`` (``i`` 1-indexed) or, when coordinate sums
    differ, ``(x, y, None)``.
    """
    pts = _as_points(points)
    ordered = sorted(pts, reverse=True)
    if not ordered:
        return None
    n = len(ordered[0])
    s0 = sum(ordered[0])
    for p in ordered:
        if sum(p) != s0:
            return (ordered[0], p, None)
    for x in ordered:
        for y in ordered:
            if x == y:
                continue
            for i in range(n):
                if x[i] <= y[i]:
                    continue
                found = False
                for j in range(n):
                    if x[j] < y[j]:
                        xe = list(x)
                        xe[i] -= 1
                        xe[j] += 1
                        ye = list(y)
                        ye[j] -= 1
                        ye[i] += 1
                        if tuple(xe) in pts and tuple(ye) in pts:
                            found = True
                            break
                if not found:
                    return (x, y, i + 1)
    return None


def is_m_convex(points: Iterable[Sequence[int]]) -> bool:
    return m_convex_violation(points) is None


def in_convex_hull(p: Sequence[int], vertices: Sequence[Sequence[int]]) -> bool:
    """Exact test for ``p`` in conv(vertices) via phase-one simplex.

    Solves ``sum_v lam_v v = p, sum_v lam_v = 1, lam >= 0`` by minimizing the
    sum of artificial variables; Bland's rule guarantees termination.
    """
    verts = [tuple(v) for v in vertices]
    if not verts:
        return False
    d = len(p)
    m = d + 1
    k = len(verts)
    # Rows: one per coordinate, plus the convexity row; make every rhs >= 0.
    rows: list[list[Fraction]] = []
    for r in range(m):
        if r < d:
            coeffs = [Fraction(v[r]) for v in verts]
            rhs = Fraction(p[r])
        else:
            coeffs = [Fraction(1)] * k
            rhs = Fraction(1)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[r] = Fraction(1)
        rows.append(coeffs + art + [rhs])
    ncols = k + m
    basis = list(range(k, k + m))
    # Objective (minimize sum of artificials) expressed as reduced costs.
    obj = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for c in range(ncols + 1):
            obj[c] -= row[c]
    for b in basis:
        obj[b] = Fraction(0)
    while True:
        entering = next((c for c in range(ncols) if obj[c] < 0), None)
        if entering is None:
            break
        best = None
        leave = None
        for r, row in enumerate(rows):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # Unbounded cannot happen for a phase-one problem bounded below by 0.
            raise ArithmeticError("phase-one simplex reported unbounded")
        prow = rows[leave]
        piv = prow[entering]
        prow[:] = [c / piv for c in prow]
        for r, row in enumerate(rows):
            if r != leave and row[entering] != 0:
                f = row[entering]
                row[:] = [a - f * b for a, b in zip(row, prow)]
        if obj[entering] != 0:
            f = obj[entering]
            obj[:] = [a - f * b for a, b in zip(obj, prow)]
        basis[leave] = entering
    # obj[-1] holds -(phase-one optimum).
    return obj[-1] == 0


def hull_lattice_points(points: Iterable[Sequence[int]]) -> frozenset[Point]:
    """All integer points of conv(points).

    Candidates come from the bounding box, restricted to the common
    coordinate-sum hyperplane when there is one.
    """
    pts = _as_points(points)
    if not pts:
        raise ValueError("hull of an empty point set")
    ordered = sorted(pts)
    n = len(ordered[0])
    lo = [min(p[i] for p in ordered) for i in range(n)]
    hi = [max(p[i] for p in ordered) for i in range(n)]
    sums = {sum(p) for p in ordered}
    target = next(iter(sums)) if len(sums) == 1 else None
    result = set(pts)
    for cand in _box_points(lo, hi, target):
        if cand in result:
            continue
        if in_convex_hull(cand, ordered):
            result.add(cand)
    return frozenset(result)


def _box_points(lo: Sequence[int], hi: Sequence[int], target: int | None):
    n = len(lo)
    if target is None:
        yield from product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        return
    # Coordinates with a fixed sum; prune with the remaining min/max.
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + lo[i]
        suffix_hi[i] = suffix_hi[i + 1] + hi[i]

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        for a in range(lo[i], hi[i] + 1):
            rest = remaining - a
            if suffix_lo[i + 1] <= rest <= suffix_hi[i + 1]:
                prefix.append(a)
                yield from rec(i + 1, rest, prefix)
                prefix.pop()

    yield from rec(0, target, [])


def is_snp(f: MultiPolynomial) -> bool:
    if not f:
        raise ValueError("the zero polynomial has no Newton polytope")
    supp = frozenset(f.terms)
    return hull_lattice_points(supp) == supp
