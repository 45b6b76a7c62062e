"""Sparse integer polynomials and the Grothendieck/Schubert/Lascoux recursions.

A :class:`MultiPolynomial` maps exponent tuples to nonzero Python ints.
Instances are treated as immutable values; every operation returns a new one.
"""
from __future__ import annotations

import threading
from typing import Iterable, Mapping, Sequence

from .permutation import Permutation, as_permutation

Exponent = tuple[int, ...]


class MultiPolynomial:
    __slots__ = ("terms", "num_vars", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, num_vars: int = 0):
        clean: dict[Exponent, int] = {}
        for exp, coef in (terms or {}).items():
            if coef:
                if len(exp) != num_vars:
                    raise ValueError(f"exponent {exp} has length != {num_vars}")
                clean[tuple(exp)] = int(coef)
        self.terms = clean
        self.num_vars = num_vars
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[Exponent, int], num_vars: int) -> "MultiPolynomial":
        """Wrap an already-clean dict without copying."""
        p = cls.__new__(cls)
        p.terms = terms
        p.num_vars = num_vars
        p._hash = None
        return p

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPolynomial":
        return cls._raw({}, num_vars)

    @classmethod
    def constant(cls, c: int, num_vars: int) -> "MultiPolynomial":
        return cls._raw({(0,) * num_vars: c} if c else {}, num_vars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "MultiPolynomial":
        exp = tuple(exp)
        return cls._raw({exp: coef} if coef else {}, len(exp))

    @classmethod
    def variable(cls, i: int, num_vars: int) -> "MultiPolynomial":
        """x_i, 1-indexed."""
        exp = [0] * num_vars
        exp[i - 1] = 1
        return cls.monomial(exp)

    @classmethod
    def omega(cls, i: int, num_vars: int) -> "MultiPolynomial":
        """x_1 x_2 ... x_i."""
        return cls.monomial([1] * i + [0] * (num_vars - i))

    @classmethod
    def indicator(cls, points: Iterable[Sequence[int]], num_vars: int | None = None) -> "MultiPolynomial":
        pts = [tuple(p) for p in points]
        if num_vars is None:
            num_vars = len(pts[0]) if pts else 0
        return cls({p: 1 for p in pts}, num_vars)

    # -- basic protocol -----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.num_vars: other} if other else {})
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"MultiPolynomial({to_text(self)!r}, num_vars={self.num_vars})"

    def __str__(self) -> str:
        return to_text(self)

    def _coerce(self, other) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            if other.num_vars != self.num_vars:
                raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")
            return other
        if isinstance(other, int):
            return MultiPolynomial.constant(other, self.num_vars)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other) -> "MultiPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPolynomial._raw(out, self.num_vars)

    __radd__ = __add__

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial._raw({e: -c for e, c in self.terms.items()}, self.num_vars)

    def __sub__(self, other) -> "MultiPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPolynomial":
        if isinstance(other, int):
            if other == 0:
                return MultiPolynomial.zero(self.num_vars)
            return MultiPolynomial._raw({e: c * other for e, c in self.terms.items()}, self.num_vars)
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPolynomial._raw({e: c for e, c in out.items() if c}, self.num_vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPolynomial.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ----------------------------------------------------------
    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return min(sum(e) for e in self.terms)

    def extend(self, num_vars: int) -> "MultiPolynomial":
        """Append unused variables."""
        if num_vars < self.num_vars:
            return self.truncate(num_vars)
        pad = (0,) * (num_vars - self.num_vars)
        return MultiPolynomial._raw({e + pad: c for e, c in self.terms.items()}, num_vars)

    def truncate(self, num_vars: int) -> "MultiPolynomial":
        """Drop trailing variables, which must not occur."""
        for e in self.terms:
            if any(e[num_vars:]):
                raise ValueError("cannot drop a variable that occurs")
        return MultiPolynomial._raw({e[:num_vars]: c for e, c in self.terms.items()}, num_vars)

    def substitute_shift(self, offset: int, num_vars: int) -> "MultiPolynomial":
        """Rename x_i to x_{i+offset} inside ``num_vars`` variables."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * num_vars
            for i, a in enumerate(e):
                if a:
                    new[i + offset] = a
            out[tuple(new)] = c
        return MultiPolynomial._raw(out, num_vars)

    def swap(self, i: int) -> "MultiPolynomial":
        """s_i: exchange x_i and x_{i+1}."""
        a, b = i - 1, i
        out = {}
        for e, c in self.terms.items():
            l = list(e)
            l[a], l[b] = l[b], l[a]
            out[tuple(l)] = c
        return MultiPolynomial._raw(out, self.num_vars)

    def to_json(self) -> dict:
        return {"num_vars": self.num_vars,
                "terms": [{"exp": list(e), "coef": str(self.terms[e])} for e in sorted_exponents(self)]}

    @classmethod
    def from_json(cls, data: dict) -> "MultiPolynomial":
        n = int(data["num_vars"])
        return cls({tuple(int(a) for a in t["exp"]): int(t["coef"]) for t in data["terms"]}, n)


def term_order_key(exp: Exponent) -> tuple:
    """Canonical term order: total degree ascending, then lex descending."""
    return (sum(exp), tuple(-a for a in exp))


def sorted_exponents(f: MultiPolynomial) -> list[Exponent]:
    return sorted(f.terms, key=term_order_key)


def leading_exponent(f: MultiPolynomial, order: str = "lex") -> Exponent:
    """Largest exponent, degree first.

    ``lex`` breaks ties with x_1 > x_2 > ...; ``revlex`` compares the last
    variable first (x_n > ... > x_1), the order in which a top Lascoux
    polynomial leads with its snow weight.
    """
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    if order == "lex":
        return max(f.terms, key=lambda e: (sum(e), e))
    if order == "revlex":
        return max(f.terms, key=lambda e: (sum(e), e[::-1]))
    raise ValueError(f"unknown term order {order!r}")


def _monomial_text(exp: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, exp):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def to_text(f: MultiPolynomial, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i}" for i in range(1, f.num_vars + 1)]
    if not f.terms:
        return "0"
    out = []
    for exp in sorted_exponents(f):
        c = f.terms[exp]
        mono = _monomial_text(exp, names)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


# -- operators ------------------------------------------------------------------

def divided_difference(f: MultiPolynomial, i: int) -> MultiPolynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.

    For p = e_i > q = e_{i+1}:
    (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1})
        = sum_{t=0}^{p-q-1} x_i^{p-1-t} x_{i+1}^{q+t}
    and the case p < q is the negative of the swapped one.
    """
    if not 1 <= i < f.num_vars:
        raise ValueError(f"divided difference index {i} out of range for {f.num_vars} variables")
    a, b = i - 1, i
    out: dict[Exponent, int] = {}
    for e, c in f.terms.items():
        p, q = e[a], e[b]
        if p == q:
            continue
        if p > q:
            sign, hi, lo = 1, p, q
        else:
            sign, hi, lo = -1, q, p
        l = list(e)
        for t in range(hi - lo):
            l[a] = hi - 1 - t
            l[b] = lo + t
            key = tuple(l)
            out[key] = out.get(key, 0) + sign * c
    return MultiPolynomial._raw({k: v for k, v in out.items() if v}, f.num_vars)


def _times_xi_one_minus_xj(f: MultiPolynomial, i: int | None, j: int) -> MultiPolynomial:
    """f * x_i * (1 - x_j) (drop the x_i factor when ``i`` is None)."""
    out: dict[Exponent, int] = {}
    for e, c in f.terms.items():
        l = list(e)
        if i is not None:
            l[i - 1] += 1
        base = tuple(l)
        out[base] = out.get(base, 0) + c
        l[j - 1] += 1
        shifted = tuple(l)
        out[shifted] = out.get(shifted, 0) - c
    return MultiPolynomial._raw({k: v for k, v in out.items() if v}, f.num_vars)


def demazure_lascoux(f: MultiPolynomial, i: int) -> MultiPolynomial:
    """pi-bar_i(f) = d_i(x_i (1 - x_{i+1}) f)."""
    return divided_difference(_times_xi_one_minus_xj(f, i, i + 1), i)


def homogeneous_component(f: MultiPolynomial, k: int) -> MultiPolynomial:
    return MultiPolynomial._raw({e: c for e, c in f.terms.items() if sum(e) == k}, f.num_vars)


def top_component(f: MultiPolynomial) -> MultiPolynomial:
    return homogeneous_component(f, f.degree())


def bottom_component(f: MultiPolynomial) -> MultiPolynomial:
    return homogeneous_component(f, f.min_degree())


def support(f: MultiPolynomial) -> frozenset[Exponent]:
    return frozenset(f.terms)


def is_symmetric_in(f: MultiPolynomial, i: int) -> bool:
    return f.swap(i) == f


# -- polynomial families ----------------------------------------------------------

_lock = threading.Lock()
_groth_memo: dict[tuple[int, ...], MultiPolynomial] = {}
_schub_memo: dict[tuple[int, ...], MultiPolynomial] = {}
_lascoux_memo: dict[tuple[int, ...], MultiPolynomial] = {}


def clear_caches() -> None:
    with _lock:
        _groth_memo.clear()
        _schub_memo.clear()
        _lascoux_memo.clear()


def _staircase(n: int) -> MultiPolynomial:
    return MultiPolynomial.monomial(tuple(range(n - 1, -1, -1)))


def _first_ascent(imgs: tuple[int, ...]) -> int | None:
    for i in range(len(imgs) - 1):
        if imgs[i] < imgs[i + 1]:
            return i + 1
    return None


def _recurse_perm(imgs: tuple[int, ...], memo: dict, step) -> MultiPolynomial:
    # Walk up to the longest element iteratively, then come back down.
    chain = []
    cur = imgs
    while cur not in memo:
        i = _first_ascent(cur)
        if i is None:
            with _lock:
                memo[cur] = _staircase(len(cur))
            break
        chain.append((cur, i))
        l = list(cur)
        l[i - 1], l[i] = l[i], l[i - 1]
        cur = tuple(l)
    poly = memo[cur]
    for w, i in reversed(chain):
        poly = step(poly, i)
        with _lock:
            memo[w] = poly
    return memo[imgs]


def _groth_step(g: MultiPolynomial, i: int) -> MultiPolynomial:
    return divided_difference(_times_xi_one_minus_xj(g, None, i + 1), i)


def grothendieck(w: Permutation | Sequence[int] | str) -> MultiPolynomial:
    """Grothendieck polynomial in n variables, always descending via the first ascent."""
    w = as_permutation(w)
    return _recurse_perm(w.images, _groth_memo, _groth_step)


def grothendieck_via_ascent(w: Permutation, i: int) -> MultiPolynomial:
    """One recursion step taken at a chosen ascent ``i``, the rest memoized."""
    if not w(i) < w(i + 1):
        raise ValueError(f"{i} is not an ascent of {w}")
    return _groth_step(grothendieck(w.swap_positions(i)), i)


def schubert(w: Permutation | Sequence[int] | str) -> MultiPolynomial:
    """Schubert polynomial from the classical divided-difference recursion."""
    w = as_permutation(w)
    return _recurse_perm(w.images, _schub_memo, divided_difference)


def _lascoux(alpha: tuple[int, ...]) -> MultiPolynomial:
    if alpha in _lascoux_memo:
        return _lascoux_memo[alpha]
    for i in range(len(alpha) - 1):
        if alpha[i] < alpha[i + 1]:
            swapped = list(alpha)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            result = demazure_lascoux(_lascoux(tuple(swapped)), i + 1)
            break
    else:
        result = MultiPolynomial.monomial(alpha)
    with _lock:
        _lascoux_memo[alpha] = result
    return result


def lascoux(alpha: Sequence[int]) -> MultiPolynomial:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("weak composition entries must be nonnegative")
    return _lascoux(alpha)


def castelnuovo_mumford(w: Permutation | Sequence[int] | str) -> MultiPolynomial:
    return top_component(grothendieck(w))


def homogenized_grothendieck(w: Permutation | Sequence[int] | str) -> MultiPolynomial:
    """Signed z-homogenization; the last variable is z."""
    g = grothendieck(w)
    lo, hi = g.min_degree(), g.degree()
    out = {}
    for e, c in g.terms.items():
        k = sum(e)
        signed = c if (k - lo) % 2 == 0 else -c
        if signed <= 0:
            raise ArithmeticError(f"sign alternation fails for {w} at {e}")
        out[e + (hi - k,)] = signed
    return MultiPolynomial._raw(out, g.num_vars + 1)
