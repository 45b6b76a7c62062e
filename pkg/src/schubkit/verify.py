"""Verification suites: each checks one family of identities case by case.

Every suite returns a :class:`VerificationReport`.  Case work runs in a
process pool when ``threads > 1``; results are merged and sorted so the
report does not depend on the worker count.
"""
from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Sequence

from . import bpd as bpd_mod
from .bubbling import (
    DEFAULT_STATE_BOUND,
    build_A,
    build_A_chain,
    d_top_of,
    enumerate_sbd,
    sbd_live_diagrams,
    sbd_weights,
    weights_with_excess,
)
from .convexity import hull_lattice_points, is_m_convex
from .diagram import (
    Diagram,
    append_packed_columns,
    column_multiset,
    d_top,
    is_column_perm_of_skyline,
    is_packed_column,
    permute_columns,
    rothe,
    skyline,
    snow,
    sort_columns_to_skyline,
    strip_packed,
    upward_closure,
    weight,
)
from .oracles import hull_lattice_points_bruteforce, m_convex_by_submodularity
from .orthodontia import eval_orthodontia, eval_orthodontia_flat
from .permutation import (
    Permutation,
    all_permutations,
    as_permutation,
    chain_decomposition,
    is_almost_vexillary_by_patterns,
    is_almost_vexillary_structural,
    is_fireworks,
    is_vexillary,
    lehmer_code,
)
from .polynomial import (
    MultiPolynomial,
    castelnuovo_mumford,
    grothendieck,
    homogenized_grothendieck,
    is_symmetric_in,
    lascoux,
    leading_exponent,
    support,
    to_text,
    top_component,
)
from .weyl import (
    DEFAULT_SIZE_BOUND,
    find_snowy_equivalent,
    is_scalar_multiple_of_chi,
    scalar_ratio,
    schubitope_lattice_points,
)

log = logging.getLogger(__name__)

# (case, claim, ok, expected, actual)
Check = tuple[str, str, bool, object, object]


@dataclass(frozen=True)
class Config:
    max_n: int = 7
    sbd_state_bound: int = DEFAULT_STATE_BOUND
    weyl_size_bound: int = DEFAULT_SIZE_BOUND
    bpd_max_n: int = bpd_mod.DEFAULT_MAX_N
    search_bound: int = 200_000
    threads: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("max_n", "sbd_state_bound", "weyl_size_bound", "bpd_max_n",
                     "search_bound", "threads"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class Failure:
    case: str
    claim: str
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"case": self.case, "claim": self.claim,
                "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    suite: str
    n: int
    params: dict = field(default_factory=dict)
    cases_run: int = 0
    cases_passed: int = 0
    failures: list[Failure] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    wall_time_ms: float = 0.0
    report_only: bool = False

    @property
    def ok(self) -> bool:
        return self.report_only or not self.failures

    def add(self, check: Check) -> None:
        case, claim, ok, expected, actual = check
        self.cases_run += 1
        if ok:
            self.cases_passed += 1
        else:
            self.failures.append(Failure(case, claim, _show(expected), _show(actual)))

    def finish(self) -> None:
        self.failures.sort(key=lambda f: (len(f.case), f.case, f.claim))
        self.records.sort(key=lambda r: (len(str(r.get("case", ""))), str(r.get("case", "")),
                                         str(r.get("claim", ""))))
        assert self.cases_passed <= self.cases_run
        assert len(self.failures) == self.cases_run - self.cases_passed

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "failures": [f.to_json() for f in self.failures],
            "wall_time_ms": round(self.wall_time_ms, 3),
            "params": self.params,
            "records": self.records,
            "report_only": self.report_only,
        }

    def summary(self) -> str:
        status = "REPORT" if self.report_only else ("PASS" if self.ok else "FAIL")
        return (f"{status} {self.suite} n={self.n}: {self.cases_passed}/{self.cases_run} "
                f"in {self.wall_time_ms / 1000:.2f}s")


def _show(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, MultiPolynomial):
        return to_text(value)
    if isinstance(value, (set, frozenset)):
        return repr(sorted(value))
    return str(value)


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (threads * 8))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _padded(vec: Sequence[int], n: int) -> tuple[int, ...]:
    vec = tuple(vec)
    if len(vec) > n:
        if any(vec[n:]):
            raise ValueError(f"{vec} does not fit in {n} coordinates")
        return vec[:n]
    return vec + (0,) * (n - len(vec))


def _weight_n(d: Diagram, n: int) -> tuple[int, ...]:
    return _padded(weight(d), n)


def compositions(max_len: int, max_sum: int) -> list[tuple[int, ...]]:
    out = []
    for length in range(1, max_len + 1):
        for alpha in itertools.product(range(max_sum + 1), repeat=length):
            if sum(alpha) <= max_sum:
                out.append(alpha)
    return out


# -- per-case workers (top level so they pickle) ---------------------------------

def _case_engines(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    g = grothendieck(w)
    out: list[Check] = [(w_str, "orthodontia=grothendieck", eval_orthodontia(rothe(w)) == g,
                         g, eval_orthodontia(rothe(w)))]
    if w.n <= cfg.bpd_max_n:
        b = bpd_mod.grothendieck_via_bpd(w, cfg.bpd_max_n)
        out.append((w_str, "bpd=grothendieck", b == g, g, b))
    return out


def _case_lascoux(alpha: tuple[int, ...], cfg: Config) -> list[Check]:
    lhs = eval_orthodontia(skyline(alpha))
    rhs = lascoux(alpha)
    case = ",".join(map(str, alpha))
    flat = eval_orthodontia_flat(skyline(alpha))
    return [(case, "orthodontia(skyline)=lascoux", lhs == rhs, rhs, lhs),
            (case, "flat-orthodontia=lascoux", flat == rhs, rhs, flat)]


def _case_shuffle(job: tuple[tuple[int, ...], tuple[int, ...]], cfg: Config) -> list[Check]:
    alpha, order = job
    d = permute_columns(skyline(alpha), order)
    lhs = eval_orthodontia(d)
    rhs = lascoux(alpha)
    case = ",".join(map(str, alpha)) + "|" + ",".join(map(str, order))
    return [(case, "column-shuffle invariance", lhs == rhs, rhs, lhs)]


def _case_vexillary_sbd(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    d = rothe(w)
    supp = support(grothendieck(w))
    bound = cfg.sbd_state_bound
    out: list[Check] = []
    for variant in ("left", "right", "new"):
        got = sbd_weights(d, build_A(w, variant), bound)
        out.append((w_str, f"sbd-weights[{variant}]=supp", got == supp, supp, got))
    top_r = d_top(d, build_A(w, "right"))
    top_new = d_top(d, build_A(w, "new"))
    top_l = d_top(d, build_A(w, "left"))
    out.append((w_str, "dtop[right]=dtop[new]", top_r == top_new,
                top_r.sorted_cells(), top_new.sorted_cells()))
    out.append((w_str, "dtop[left]~dtop[right] columns", column_multiset(top_l) == column_multiset(top_r),
                column_multiset(top_r), column_multiset(top_l)))
    a_new, a_rp = build_A(w, "new"), build_A(w, "right_prime")
    out.append((w_str, "A_new=A'_R", a_new == a_rp, a_new, a_rp))
    code_poly = lascoux(lehmer_code(w))
    out.append((w_str, "grothendieck=lascoux(code)", code_poly == grothendieck(w),
                grothendieck(w), code_poly))
    if w.n <= 5:
        out.extend(_pushing_up_checks(w, d, bound))
    return out


def _pushing_up_checks(w: Permutation, d: Diagram, bound: int) -> list[Check]:
    out: list[Check] = []
    a = build_A(w, "left")
    base = sbd_live_diagrams(d, a, bound)
    for i, j in sorted(a):
        if (i - 1, j) not in d.cells:
            continue
        a2 = (a - {(i, j)}) | {(i - 1, j)}
        pushed = sbd_live_diagrams(d, a2, bound)
        case = f"{w}@{(i, j)}"
        out.append((case, "push-up keeps live diagrams", pushed == base, len(base), len(pushed)))
        out.append((case, "push-up keeps dtop", d_top(d, a) == d_top(d, a2), None, None))
    return out


def _case_vexillary_top(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    top = castelnuovo_mumford(w)
    dt = d_top_of(w, "left")
    c = is_scalar_multiple_of_chi(top, dt, cfg.weyl_size_bound)
    return [(w_str, f"top=c*chi(dtop) c={c}", c is not None, "integer c", c)]


def _case_vexillary_top_support(w_str: str, cfg: Config) -> list[Check]:
    from .weyl import chi_support
    w = Permutation.parse(w_str)
    dt = d_top_of(w, "left")
    got = frozenset(_padded(p, w.n) for p in chi_support(dt))
    supp = support(castelnuovo_mumford(w))
    return [(w_str, "supp(top)=supp(chi(dtop))", got == supp, supp, got)]


def _case_snow(alpha: tuple[int, ...], cfg: Config) -> list[Check]:
    case = ",".join(map(str, alpha))
    n = len(alpha)
    top = top_component(lascoux(alpha))
    sky = skyline(alpha)
    sw = _weight_n(snow(sky), n)
    lead = leading_exponent(top, "revlex")
    out: list[Check] = [(case, "leading term ~ x^wt(snow)", lead == sw, sw, lead)]
    try:
        gamma = find_snowy_equivalent(alpha)
        ratio = scalar_ratio(top, top_component(lascoux(gamma)))
        out.append((case, "top lascoux ~ snowy twin", ratio is not None, f"gamma={gamma}", ratio))
    except AssertionError as exc:
        out.append((case, "unique snowy twin", False, "exactly one", str(exc)))
    c = is_scalar_multiple_of_chi(top, snow(sky).resized(n, max(1, snow(sky).n_cols)),
                                  cfg.weyl_size_bound)
    out.append((case, "top lascoux ~ chi(snow)", c is not None, "scalar", c))
    return out


def _case_fireworks_top(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    want = frozenset({_weight_n(upward_closure(rothe(w)), w.n)})
    got = support(castelnuovo_mumford(w))
    return [(w_str, "supp(top)={wt(closure)}", got == want, want, got)]


def _case_fireworks_sbd(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    supp = support(grothendieck(w))
    got = sbd_weights(rothe(w), build_A(w, "southmost"), cfg.sbd_state_bound)
    hom = support(homogenized_grothendieck(w))
    return [(w_str, "sbd-weights[southmost]=supp", got == supp, supp, got),
            (w_str, "supp(homogenized) M-convex", is_m_convex(hom), True, False)]


def _case_symmetry(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    m = 0
    while m < w.n and w(m + 1) == m + 1:
        m += 1
    g = grothendieck(w)
    return [(w_str, f"symmetric in x{k},x{k + 1}", is_symmetric_in(g, k), True, False)
            for k in range(1, min(m, w.n - 1) + 1)]


def _case_layering(job: tuple[str, str], cfg: Config) -> list[Check]:
    left, right = (Permutation.parse(s) for s in job)
    k, n = left.n, right.n
    joined = Permutation(left.images + right.images[k:])
    lhs = grothendieck(joined)
    rhs = grothendieck(left).extend(n) * grothendieck(right)
    return [(f"{left}*{right}", "G(layered)=G(w)G(w')", lhs == rhs, rhs, lhs)]


def _case_block_shift(job: tuple[str, str], cfg: Config) -> list[Check]:
    low, high = (Permutation.parse(s) for s in job)  # low in S_n, high in S_k
    n, k = low.n, high.n
    joined = Permutation(tuple(v + n for v in high.images) + low.images)
    total = n + k
    lhs = grothendieck(joined)
    rhs = (grothendieck(low).substitute_shift(k, total)
           * grothendieck(high).extend(total)
           * MultiPolynomial.monomial([n] * k + [0] * n))
    return [(str(joined), "G(shifted)=G(w)(x_k+..)G(w')x^n", lhs == rhs, rhs, lhs)]


def _case_almost_vex_pattern(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    a, b = is_almost_vexillary_by_patterns(w), is_almost_vexillary_structural(w)
    return [(w_str, "pattern=structural", a == b, a, b)]


def almost_vexillary_witness(w) -> Diagram:
    """snow of the stripped skyline, with D(w)'s packed columns appended."""
    w = as_permutation(w)
    d = rothe(w)
    alpha = is_column_perm_of_skyline(strip_packed(d))
    if alpha is None:
        raise ValueError(f"{w} is not almost vexillary")
    base = snow(skyline(_padded(alpha, w.n)))
    heights = sorted(len(col) for col in d.columns() if col and is_packed_column(col))
    return append_packed_columns(base.resized(w.n, base.n_cols), heights)


def _case_almost_vex_top(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    wd = almost_vexillary_witness(w)
    top = castelnuovo_mumford(w)
    c = is_scalar_multiple_of_chi(top, wd, cfg.weyl_size_bound)
    lattice = frozenset(_padded(p, w.n) for p in schubitope_lattice_points(wd))
    return [(w_str, f"top=c*chi(witness) c={c}", c is not None, "integer c", c),
            (w_str, "supp(top)=schubitope points", lattice == support(top), support(top), lattice)]


def _case_chain(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    witness = chain_decomposition(w)
    a = build_A_chain(w, witness)
    supp = support(grothendieck(w))
    got = sbd_weights(rothe(w), a, cfg.sbd_state_bound)
    hom = support(homogenized_grothendieck(w))
    dt = d_top(rothe(w), a)
    lattice = frozenset(_padded(p, w.n) for p in schubitope_lattice_points(dt))
    top = support(castelnuovo_mumford(w))
    return [(w_str, "sbd-weights[chain A]=supp", got == supp, supp, got),
            (w_str, "supp(homogenized) M-convex", is_m_convex(hom), True, False),
            (w_str, "supp(top)=schubitope points of dtop", lattice == top, top, lattice)]


def _case_sbd_mconvex(w_str: str, cfg: Config) -> list[Check]:
    w = Permutation.parse(w_str)
    pts = weights_with_excess(enumerate_sbd(rothe(w), build_A(w, "left"), cfg.sbd_state_bound))
    return [(w_str, "lifted sbd weights M-convex", is_m_convex(pts), True, False)]


def _case_explore_mconvex(w_str: str, cfg: Config) -> dict:
    w = Permutation.parse(w_str)
    pts = support(homogenized_grothendieck(w))
    return {"case": w_str, "claim": "supp(homogenized) M-convex", "outcome": is_m_convex(pts)}


def search_A(w, bound: int = 200_000, state_bound: int = DEFAULT_STATE_BOUND) -> frozenset | None:
    """First A (|A| descending, then lexicographic) whose SBD weights give supp(G_w)."""
    w = as_permutation(w)
    d = rothe(w)
    supp = support(grothendieck(w))
    cols = [sorted((i, j) for i in rows) for j, rows in enumerate(d.columns(), start=1) if rows]
    total = 1
    for c in cols:
        total *= len(c) + 1
    if total > bound:
        raise RuntimeError(f"{total} candidate sets exceed the search bound {bound}")
    candidates = []
    for choice in itertools.product(*[[None] + c for c in cols]):
        a = tuple(sorted(x for x in choice if x is not None))
        candidates.append(a)
    candidates.sort(key=lambda a: (-len(a), a))
    for a in candidates:
        if sbd_weights(d, a, state_bound) == supp:
            return frozenset(a)
    return None


def _case_explore_search(w_str: str, cfg: Config) -> dict:
    a = search_A(w_str, cfg.search_bound, cfg.sbd_state_bound)
    return {"case": w_str, "claim": "search A",
            "outcome": None if a is None else [list(c) for c in sorted(a)]}


# -- suites ----------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_n: int
    run: Callable[["VerificationReport", int, Config], None]
    report_only: bool = False


def _perms(n: int, pred: Callable[[Permutation], bool] | None = None) -> list[str]:
    return [str(w) for w in all_permutations(n) if pred is None or pred(w)]


def _run_cases(report: VerificationReport, worker, items: Sequence, cfg: Config) -> None:
    for checks in _pmap(partial(worker, cfg=cfg), list(items), cfg.threads):
        for check in checks:
            report.add(check)


def _suite_engines(report, n, cfg):
    _run_cases(report, _case_engines, _perms(n), cfg)


def _suite_lascoux(report, n, cfg):
    max_len = report.params.setdefault("max_len", 4)
    shuffles = report.params.setdefault("shuffles", 200)
    alphas = compositions(max_len, n)
    _run_cases(report, _case_lascoux, alphas, cfg)
    rng = random.Random(cfg.seed)
    jobs = []
    for _ in range(shuffles):
        alpha = rng.choice(alphas)
        width = max(alpha)
        order = list(range(1, width + 1))
        rng.shuffle(order)
        jobs.append((alpha, tuple(order)))
    _run_cases(report, _case_shuffle, jobs, cfg)


def _suite_vexillary_sbd(report, n, cfg):
    _run_cases(report, _case_vexillary_sbd, _perms(n, is_vexillary), cfg)


def _suite_vexillary_top(report, n, cfg):
    items = _perms(n, is_vexillary)
    for checks in _pmap(partial(_case_vexillary_top, cfg=cfg), items, cfg.threads):
        for check in checks:
            report.add(check)
            report.records.append({"case": check[0], "claim": "multiplier", "c": check[4]})


def _suite_vexillary_top_support(report, n, cfg):
    _run_cases(report, _case_vexillary_top_support, _perms(n, is_vexillary), cfg)


def _suite_snow(report, n, cfg):
    max_len = report.params.setdefault("max_len", 4)
    _run_cases(report, _case_snow, compositions(max_len, n), cfg)


def _suite_fireworks_top(report, n, cfg):
    _run_cases(report, _case_fireworks_top, _perms(n, is_fireworks), cfg)


def _suite_fireworks_sbd(report, n, cfg):
    _run_cases(report, _case_fireworks_sbd, _perms(n, is_fireworks), cfg)


def _suite_layering(report, n, cfg):
    samples = report.params.setdefault("samples", 50)
    rng = random.Random(cfg.seed)
    jobs = []
    for _ in range(samples):
        k = rng.randint(1, n - 1)
        left = list(range(1, k + 1))
        rng.shuffle(left)
        tail = list(range(k + 1, n + 1))
        rng.shuffle(tail)
        right = list(range(1, k + 1)) + tail
        jobs.append(("".join(map(str, left)) if n < 10 else ",".join(map(str, left)),
                     ",".join(map(str, right))))
    _run_cases(report, _case_layering, jobs, cfg)


def _suite_block_shift(report, n, cfg):
    jobs = [("1324", "2143")]
    samples = report.params.setdefault("samples", 20)
    rng = random.Random(cfg.seed)
    for _ in range(samples):
        k = rng.randint(1, n - 1)
        low = list(range(1, n - k + 1))
        high = list(range(1, k + 1))
        rng.shuffle(low)
        rng.shuffle(high)
        jobs.append((",".join(map(str, low)), ",".join(map(str, high))))
    _run_cases(report, _case_block_shift, jobs, cfg)


def _suite_symmetry(report, n, cfg):
    _run_cases(report, _case_symmetry, _perms(n, lambda w: w(1) == 1), cfg)


def _suite_almost_vex_patterns(report, n, cfg):
    _run_cases(report, _case_almost_vex_pattern, _perms(n), cfg)


def _suite_almost_vex_top(report, n, cfg):
    items = _perms(n, is_almost_vexillary_by_patterns)
    for checks in _pmap(partial(_case_almost_vex_top, cfg=cfg), items, cfg.threads):
        for check in checks:
            report.add(check)
        report.records.append({"case": checks[0][0], "claim": "multiplier", "c": checks[0][4]})


def _suite_chains(report, n, cfg):
    _run_cases(report, _case_chain, _perms(n, lambda w: chain_decomposition(w) is not None), cfg)


def _suite_sbd_mconvex(report, n, cfg):
    _run_cases(report, _case_sbd_mconvex, _perms(n, is_vexillary), cfg)


def random_point_sets(rng: random.Random, count: int, max_dim: int = 4, max_sum: int = 3):
    """Random subsets of a simplex slice; about half are dense enough to be M-convex."""
    out = []
    for _ in range(count):
        dim = rng.randint(2, max_dim)
        s = rng.randint(1, max_sum)
        slice_pts = [p for p in itertools.product(range(s + 1), repeat=dim) if sum(p) == s]
        k = rng.randint(2, len(slice_pts))
        out.append(sorted(rng.sample(slice_pts, k)))
    return out


def _suite_mconvex_oracle(report, n, cfg):
    count = report.params.setdefault("sets", 500)
    rng = random.Random(cfg.seed)
    positives = 0
    for pts in random_point_sets(rng, count):
        fast, slow = is_m_convex(pts), m_convex_by_submodularity(pts)
        positives += fast
        report.add((repr(pts), "is_m_convex=oracle", fast == slow, slow, fast))
    report.records.append({"case": "summary", "claim": "m-convex fraction", "positives": positives})


def _suite_hull_oracle(report, n, cfg):
    count = report.params.setdefault("sets", 150)
    rng = random.Random(cfg.seed)
    for _ in range(count):
        dim = rng.randint(1, min(3, n))
        pts = [tuple(rng.randint(-2, 3) for _ in range(dim)) for _ in range(rng.randint(1, 5))]
        fast, slow = hull_lattice_points(pts), hull_lattice_points_bruteforce(pts)
        report.add((repr(pts), "hull points=oracle", fast == slow, slow, fast))


def _suite_explore_mconvex(report, n, cfg):
    for rec in _pmap(partial(_case_explore_mconvex, cfg=cfg), _perms(n), cfg.threads):
        report.records.append(rec)
        report.add((rec["case"], "explored", True, None, None))


def _suite_explore_search(report, n, cfg):
    items = _perms(n, is_almost_vexillary_by_patterns)
    for rec in _pmap(partial(_case_explore_search, cfg=cfg), items, cfg.threads):
        report.records.append(rec)
        report.add((rec["case"], "explored", True, None, None))


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("engines", "grothendieck = orthodontia (= BPD sum when n is small) on all of S_n", 5, _suite_engines),
    Suite("lascoux", "orthodontia on skylines = Lascoux; column shuffles (n = max |alpha|)", 6, _suite_lascoux),
    Suite("vexillary-sbd", "SBD supports for A_L, A_R, A_new; dtop identities", 6, _suite_vexillary_sbd),
    Suite("vexillary-top", "top component = c * chi(dtop) for vexillary w", 5, _suite_vexillary_top),
    Suite("vexillary-top-support", "supp(top component) = supp(chi(dtop))", 6, _suite_vexillary_top_support),
    Suite("snow", "top Lascoux vs snow diagrams (n = max |alpha|)", 6, _suite_snow),
    Suite("fireworks-top", "fireworks top support is one point", 6, _suite_fireworks_top),
    Suite("fireworks-sbd", "fireworks SBD support with southmost A; M-convexity", 5, _suite_fireworks_sbd),
    Suite("layering", "G(w w') = G(w) G(w') on sampled pairs", 7, _suite_layering),
    Suite("block-shift", "block-shift product formula", 7, _suite_block_shift),
    Suite("symmetry", "G_w symmetric in x_1..x_{m+1} when w fixes 1..m", 6, _suite_symmetry),
    Suite("almost-vex-patterns", "pattern and diagram characterizations agree", 7, _suite_almost_vex_patterns),
    Suite("almost-vex-top", "top component ~ chi(witness); schubitope support", 5, _suite_almost_vex_top),
    Suite("chains", "dominant fireworks-vexillary chains", 6, _suite_chains),
    Suite("sbd-mconvex", "lifted SBD weights are M-convex", 5, _suite_sbd_mconvex),
    Suite("mconvex-oracle", "is_m_convex vs submodular base-polyhedron oracle", 4, _suite_mconvex_oracle),
    Suite("hull-oracle", "hull lattice points vs Caratheodory search", 3, _suite_hull_oracle),
    Suite("explore-mconvex", "M-convexity of supp(homogenized G) for all w (report only)", 5,
          _suite_explore_mconvex, report_only=True),
    Suite("explore-search-a", "A-set search for almost vexillary w (report only)", 5,
          _suite_explore_search, report_only=True),
]}

ALIASES = {"thm-1.1": "vexillary-top"}


def run_suite(name: str, n: int | None = None, config: Config | None = None,
              params: dict | None = None) -> VerificationReport:
    cfg = config or Config()
    suite = SUITES[ALIASES.get(name, name)]
    n = suite.default_n if n is None else n
    if n < 1:
        raise ValueError("n must be positive")
    report = VerificationReport(suite.name, n, dict(params or {}), report_only=suite.report_only)
    start = time.perf_counter()
    suite.run(report, n, cfg)
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    report.finish()
    log.info(report.summary())
    return report
