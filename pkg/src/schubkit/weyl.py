"""Dual characters of flagged Weyl modules and schubitope lattice points.

The module spanned by products of column minors of a generic upper
triangular matrix ``Y`` splits into torus weight spaces: the product indexed
by ``C <= D`` has weight ``wt(C)``.  The multiplicity of ``x^mu`` in the dual
character is therefore the rank of the expanded products with weight ``mu``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import Iterable, Iterator, Sequence

from .convexity import hull_lattice_points
from .diagram import Diagram, from_columns, skyline, snow, weight
from .polynomial import MultiPolynomial

DEFAULT_SIZE_BOUND = 50_000

YMonomial = tuple[int, ...]  # sorted variable codes r * 64 + c for y_{rc}
YPoly = dict[YMonomial, int]


class SizeBoundExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def dominated_columns(column: tuple[int, ...] | frozenset[int], n_rows: int) -> tuple[frozenset[int], ...]:
    """All row sets S with S <= column (elementwise after sorting)."""
    target = sorted(column)
    k = len(target)
    out = []
    for combo in combinations(range(1, n_rows + 1), k):
        if all(a <= b for a, b in zip(combo, target)):
            out.append(frozenset(combo))
    return tuple(out)


def _column_choices(d: Diagram) -> list[tuple[frozenset[int], ...]]:
    return [dominated_columns(tuple(sorted(col)), d.n_rows) for col in d.columns()]


def count_dominated(d: Diagram) -> int:
    total = 1
    for choices in _column_choices(d):
        total *= len(choices)
    return total


def enumerate_dominated(d: Diagram) -> Iterator[Diagram]:
    for cols in product(*_column_choices(d)):
        yield from_columns(cols, d.n_rows)


def chi_support(d: Diagram) -> frozenset[tuple[int, ...]]:
    """{wt(C) : C <= D}, built as a Minkowski sum over columns."""
    n = d.n_rows
    sums: set[tuple[int, ...]] = {(0,) * n}
    for choices in _column_choices(d):
        col_wts = set()
        for s in choices:
            v = [0] * n
            for r in s:
                v[r - 1] += 1
            col_wts.add(tuple(v))
        sums = {tuple(a + b for a, b in zip(p, q)) for p in sums for q in col_wts}
    return frozenset(sums)


# -- symbolic minors ------------------------------------------------------------

def _ymul(p: YPoly, q: YPoly) -> YPoly:
    out: YPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> tuple[tuple[YMonomial, int], ...]:
    """det of Y restricted to ``rows`` x ``cols`` (Y upper triangular), expanded."""
    if not rows:
        return (((), 1),)
    r0 = rows[0]
    rest = rows[1:]
    out: YPoly = {}
    for t, c in enumerate(cols):
        if r0 > c:
            continue
        sub = minor(rest, cols[:t] + cols[t + 1:])
        sign = -1 if t % 2 else 1
        code = r0 * 64 + c
        for m, coef in sub:
            key = tuple(sorted(m + (code,)))
            out[key] = out.get(key, 0) + sign * coef
    return tuple((m, c) for m, c in out.items() if c)


def minor_product(c_cols: Sequence[Iterable[int]], d_cols: Sequence[Iterable[int]]) -> YPoly:
    """prod_j det(Y restricted to rows C_j, columns D_j)."""
    result: YPoly = {(): 1}
    for c, dcol in zip(c_cols, d_cols):
        if not dcol:
            continue
        m = dict(minor(tuple(sorted(c)), tuple(sorted(dcol))))
        result = _ymul(result, m)
    return result


def _primitive(row: YPoly) -> YPoly:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def exact_rank(rows: Iterable[YPoly]) -> int:
    """Rank over Q of sparse integer vectors, by fraction-free elimination.

    Each stored row has a distinct leading key; a new row is reduced by
    cross-multiplying against the stored row sharing its lead.
    """
    pivots: dict[YMonomial, YPoly] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            new = {k: v * a for k, v in row.items()}
            for k, v in piv.items():
                val = new.get(k, 0) - b * v
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)


def dual_character(d: Diagram, size_bound: int = DEFAULT_SIZE_BOUND) -> MultiPolynomial:
    total = count_dominated(d)
    if total > size_bound:
        raise SizeBoundExceeded(f"{total} dominated diagrams exceed bound {size_bound}")
    d_cols = d.columns()
    by_weight: dict[tuple[int, ...], list[YPoly]] = {}
    for c in product(*_column_choices(d)):
        wt = [0] * d.n_rows
        for col in c:
            for r in col:
                wt[r - 1] += 1
        by_weight.setdefault(tuple(wt), []).append(minor_product(c, d_cols))
    terms = {mu: exact_rank(products) for mu, products in by_weight.items()}
    return MultiPolynomial(terms, d.n_rows)


def schubitope_lattice_points(d: Diagram) -> frozenset[tuple[int, ...]]:
    return hull_lattice_points(chi_support(d))


def scalar_ratio(f: MultiPolynomial, g: MultiPolynomial) -> Fraction | None:
    """c with f == c * g, or ``None``."""
    if not f or not g or f.num_vars != g.num_vars:
        return None
    if set(f.terms) != set(g.terms):
        return None
    exp = next(iter(g.terms))
    c = Fraction(f.terms[exp], g.terms[exp])
    for e, v in g.terms.items():
        if f.terms[e] != c * v:
            return None
    return c


def is_scalar_multiple_of_chi(f: MultiPolynomial, d: Diagram,
                              size_bound: int = DEFAULT_SIZE_BOUND) -> int | None:
    """Integer c with f == c * chi_D (sign included), else ``None``."""
    if not f:
        raise ValueError("f must be nonzero")
    chi = dual_character(d, size_bound)
    if f.num_vars != chi.num_vars:
        n = max(f.num_vars, chi.num_vars)
        try:
            f, chi = f.extend(n), chi.extend(n)
        except ValueError:
            return None
    c = scalar_ratio(f, chi)
    if c is None or c.denominator != 1:
        return None
    return int(c)


def is_snowy(gamma: Sequence[int]) -> bool:
    pos = [g for g in gamma if g > 0]
    return len(pos) == len(set(pos))


def find_snowy_equivalent(alpha: Sequence[int]) -> tuple[int, ...]:
    """The unique snowy gamma with snow(skyline(gamma)) == snow(skyline(alpha)).

    Brute force over compositions fitting the bounding box of the snow
    diagram; raises if the match is missing or not unique.
    """
    alpha = tuple(alpha)
    target = snow(skyline(alpha)).cells
    n_cols = max(alpha, default=0)
    matches = []
    for gamma in product(range(n_cols + 1), repeat=len(alpha)):
        if not is_snowy(gamma):
            continue
        if snow(skyline(gamma)).cells == target:
            matches.append(gamma)
    if len(matches) != 1:
        raise AssertionError(f"expected one snowy match for {alpha}, found {matches}")
    return matches[0]


def snow_weight(alpha: Sequence[int]) -> tuple[int, ...]:
    return weight(snow(skyline(alpha)))
