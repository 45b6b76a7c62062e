"""Permutations in one-line notation and the permutation classes used throughout.

Permutations are 1-indexed: ``w.images[i - 1] == w(i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

ALMOST_VEXILLARY_PATTERNS = ("13254", "315264", "316254")


class ConsistencyError(AssertionError):
    """Two independent routes to the same answer disagreed."""


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"2143"`` (n <= 9) or ``"2,1,4,3"``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def swap_positions(self, i: int) -> "Permutation":
        """Right multiplication by the adjacent transposition s_i."""
        imgs = list(self.images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Permutation(tuple(imgs))

    def length(self) -> int:
        return length(self)

    def to_json(self) -> list[int]:
        return list(self.images)


def as_permutation(w: Permutation | Sequence[int] | str) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return Permutation.parse(w)
    return Permutation(tuple(w))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order."""
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def length(w: Permutation) -> int:
    imgs = w.images
    return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    imgs = w.images
    return tuple(
        sum(1 for b in range(a + 1, len(imgs)) if imgs[b] < imgs[a]) for a in range(len(imgs))
    )


def flatten(values: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic permutation of 1..len(values)."""
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


@lru_cache(maxsize=None)
def _contains(word: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    k = len(pattern)
    if k > len(word):
        return False
    if k == 0:
        return True
    # Extend the match position by position, pruning on relative order.
    def extend(start: int, chosen: list[int]) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for pos in range(start, len(word) - (k - depth) + 1):
            v = word[pos]
            ok = True
            for t, u in enumerate(chosen):
                if (pattern[t] < pattern[depth]) != (u < v):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                if extend(pos + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def contains_pattern(w: Permutation | Sequence[int], p: Permutation | Sequence[int] | str) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``."""
    word = tuple(w.images if isinstance(w, Permutation) else w)
    pat = as_permutation(p).images
    return _contains(word, pat)


def contains_pattern_bruteforce(w: Sequence[int], p: Sequence[int]) -> bool:
    """Reference check over every subsequence; used as a test oracle."""
    target = tuple(p)
    return any(flatten(sub) == target for sub in combinations(tuple(w), len(target)))


def is_dominant(w: Permutation) -> bool:
    return not contains_pattern(w, (1, 3, 2))


def is_vexillary(w: Permutation) -> bool:
    return not contains_pattern(w, (2, 1, 4, 3))


def decreasing_runs(values: Sequence[int]) -> list[tuple[int, ...]]:
    runs: list[list[int]] = []
    for v in values:
        if runs and runs[-1][-1] > v:
            runs[-1].append(v)
        else:
            runs.append([v])
    return [tuple(r) for r in runs]


def is_fireworks(w: Permutation | Sequence[int]) -> bool:
    values = w.images if isinstance(w, Permutation) else tuple(w)
    initials = [run[0] for run in decreasing_runs(values)]
    return all(a < b for a, b in zip(initials, initials[1:]))


def is_almost_vexillary_by_patterns(w: Permutation) -> bool:
    return not any(contains_pattern(w, p) for p in ALMOST_VEXILLARY_PATTERNS)


def is_almost_vexillary_structural(w: Permutation) -> bool:
    """Stripped Rothe diagram is a column permutation of a skyline diagram."""
    from .diagram import is_column_perm_of_skyline, rothe, strip_packed

    return is_column_perm_of_skyline(strip_packed(rothe(w))) is not None


def is_almost_vexillary(w: Permutation) -> bool:
    by_pattern = is_almost_vexillary_by_patterns(w)
    structural = is_almost_vexillary_structural(w)
    if by_pattern != structural:
        raise ConsistencyError(
            f"almost-vexillary tests disagree on {w}: patterns={by_pattern}, structure={structural}"
        )
    return by_pattern


@dataclass(frozen=True)
class ChainWitness:
    """Segmentation of positions into blocks of consecutive values.

    ``cut_points`` runs from 1 to n + 1; block ``t`` covers positions
    ``cut_points[t] .. cut_points[t + 1] - 1``.
    """

    cut_points: tuple[int, ...]
    block_kinds: tuple[str, ...]
    block_minima: tuple[int, ...]

    def blocks(self, w: Permutation) -> list[tuple[int, ...]]:
        c = self.cut_points
        return [w.images[c[t] - 1 : c[t + 1] - 1] for t in range(len(c) - 1)]

    def to_json(self) -> dict:
        return {
            "cut_points": list(self.cut_points),
            "block_kinds": list(self.block_kinds),
            "block_minima": list(self.block_minima),
        }


def _block_kind(values: tuple[int, ...]) -> str | None:
    if max(values) - min(values) + 1 != len(values):
        return None
    flat = Permutation(flatten(values))
    if is_vexillary(flat):
        return "vexillary"
    if is_fireworks(flat):
        return "fireworks"
    return None


def chain_decomposition(w: Permutation) -> ChainWitness | None:
    """Find a dominant fireworks-vexillary chain witness, or ``None``.

    Blocks are tried longest-first, so a single block is returned whenever
    ``w`` itself is vexillary or fireworks.
    """
    n = w.n
    imgs = w.images
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def search(start: int, minima: tuple[int, ...]) -> list[tuple[int, str, int]] | None:
        if start == n:
            return []
        key = (start, minima)
        if key in failed:
            return None
        for end in range(n, start, -1):
            block = imgs[start:end]
            kind = _block_kind(block)
            if kind is None:
                continue
            new_minima = minima + (min(block),)
            if contains_pattern(new_minima, (1, 3, 2)):
                continue
            rest = search(end, new_minima)
            if rest is not None:
                return [(end, kind, min(block))] + rest
        failed.add(key)
        return None

    found = search(0, ())
    if found is None:
        return None
    cuts = (1,) + tuple(end + 1 for end, _, _ in found)
    return ChainWitness(
        cut_points=cuts,
        block_kinds=tuple(kind for _, kind, _ in found),
        block_minima=tuple(m for _, _, m in found),
    )


def is_valid_chain_witness(w: Permutation, witness: ChainWitness) -> bool:
    c = witness.cut_points
    if c[0] != 1 or c[-1] != w.n + 1 or any(a >= b for a, b in zip(c, c[1:])):
        return False
    blocks = witness.blocks(w)
    if len(blocks) != len(witness.block_kinds) or len(blocks) != len(witness.block_minima):
        return False
    for block, kind, m in zip(blocks, witness.block_kinds, witness.block_minima):
        if min(block) != m or max(block) - min(block) + 1 != len(block):
            return False
        flat = Permutation(flatten(block))
        if kind == "vexillary" and not is_vexillary(flat):
            return False
        if kind == "fireworks" and not is_fireworks(flat):
            return False
    return not contains_pattern(witness.block_minima, (1, 3, 2))
