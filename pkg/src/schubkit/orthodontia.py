"""Orthodontic sequences of %-avoiding diagrams and the polynomials they define."""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    Diagram,
    is_column_perm_of_skyline,
    is_packed_column,
    is_percent_avoiding,
    packed_columns,
    strip_packed,
)
from .polynomial import MultiPolynomial, demazure_lascoux


class OrthodontiaError(ValueError):
    pass


@dataclass(frozen=True)
class OrthodonticSequence:
    i_seq: tuple[int, ...]
    k_vec: tuple[int, ...]
    m_seq: tuple[int, ...]
    n_rows: int

    def to_json(self) -> dict:
        return {"i": list(self.i_seq), "k": list(self.k_vec), "m": list(self.m_seq)}


def _packed_counts(d: Diagram) -> list[int]:
    """k_a: number of packed columns holding exactly a squares, a = 1..n_rows."""
    k = [0] * d.n_rows
    for col in d.columns():
        if col and is_packed_column(col):
            k[len(col) - 1] += 1
    return k


def _swap_rows(d: Diagram, i: int) -> Diagram:
    swapped = set()
    for r, c in d.cells:
        if r == i:
            r = i + 1
        elif r == i + 1:
            r = i
        swapped.add((r, c))
    return d.with_cells(swapped)


def orthodontic_sequence(d: Diagram) -> OrthodonticSequence:
    if not is_percent_avoiding(d):
        raise OrthodontiaError("orthodontia needs a %-avoiding diagram")
    skyline_like = is_column_perm_of_skyline(d) is not None
    k_vec = tuple(_packed_counts(d))
    i_seq: list[int] = []
    m_seq: list[int] = []
    current = strip_packed(d)
    guard = max(1, d.n_rows) ** 2 * max(1, d.n_cols) + 1
    while current.cells:
        if len(i_seq) > guard:
            raise OrthodontiaError("orthodontia failed to terminate")
        j = min(c for _, c in current.cells)
        col = current.column(j)
        teeth = [r for r in range(1, d.n_rows) if r not in col and r + 1 in col]
        i = min(teeth)
        swapped = _swap_rows(current, i)
        if skyline_like and is_column_perm_of_skyline(swapped) is None:
            raise OrthodontiaError("row swap left the column-permuted skyline class")
        i_seq.append(i)
        m_seq.append(len(packed_columns(swapped)))
        current = strip_packed(swapped)
    return OrthodonticSequence(tuple(i_seq), k_vec, tuple(m_seq), d.n_rows)


def _omega_power(i: int, power: int, n: int) -> MultiPolynomial:
    return MultiPolynomial.monomial([power] * i + [0] * (n - i))


def eval_orthodontia(d: Diagram) -> MultiPolynomial:
    """omega^k * pibar_{i_1}(omega_{i_1}^{m_1} pibar_{i_2}( ... ))."""
    seq = orthodontic_sequence(d)
    n = d.n_rows
    poly = MultiPolynomial.constant(1, n)
    for i, m in zip(reversed(seq.i_seq), reversed(seq.m_seq)):
        poly = demazure_lascoux(_omega_power(i, m, n) * poly, i)
    for a, k in enumerate(seq.k_vec, start=1):
        if k:
            poly = _omega_power(a, k, n) * poly
    return poly


def eval_orthodontia_flat(d: Diagram) -> MultiPolynomial:
    """All omega factors gathered innermost; valid for column-permuted skylines."""
    if is_column_perm_of_skyline(d) is None:
        raise OrthodontiaError("flat evaluation needs a column-permuted skyline diagram")
    seq = orthodontic_sequence(d)
    n = d.n_rows
    exp = [0] * n
    for a, k in enumerate(seq.k_vec, start=1):
        for r in range(a):
            exp[r] += k
    for i, m in zip(seq.i_seq, seq.m_seq):
        for r in range(i):
            exp[r] += m
    poly = MultiPolynomial.monomial(exp) if n else MultiPolynomial.constant(1, 0)
    for i in reversed(seq.i_seq):
        poly = demazure_lascoux(poly, i)
    return poly
