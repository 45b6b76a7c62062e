"""Acceptance criteria 1-11, each at full scale with its wall-time limit.

Every criterion prints one ``criterion k: PASS|FAIL`` line; the lines are
also collected into the pytest terminal summary.
"""
from __future__ import annotations

import time

import pytest

from conftest import ACCEPTANCE_LINES
from schubkit import bpd, permutation, polynomial, weyl
from schubkit.bpd import grothendieck_via_bpd
from schubkit.diagram import rothe
from schubkit.orthodontia import eval_orthodontia
from schubkit.permutation import Permutation, all_permutations
from schubkit.polynomial import MultiPolynomial, grothendieck
from schubkit.verify import Config, run_suite

pytestmark = pytest.mark.acceptance

CFG = Config(threads=1, seed=0)
MIN = 60.0


@pytest.fixture(autouse=True)
def cold_caches():
    """Each criterion is timed from empty memo tables."""
    polynomial.clear_caches()
    bpd._ALL_CACHE.clear()
    weyl.dominated_columns.cache_clear()
    weyl.minor.cache_clear()
    permutation._contains.cache_clear()


def _record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def _criterion(k: int, limit_s: float | None, runs, extra=None):
    """Run suites (name, n, params); check all pass and the time limit holds."""
    start = time.perf_counter()
    reports = [run_suite(name, n, CFG, params) for name, n, params in runs]
    extra_ok, extra_msg = extra() if extra else (True, "")
    elapsed = time.perf_counter() - start
    bad = [r for r in reports if not r.ok]
    timely = limit_s is None or elapsed < limit_s
    ok = not bad and extra_ok and timely
    parts = [f"{r.suite}(n={r.n}) {r.cases_passed}/{r.cases_run}" for r in reports]
    if extra_msg:
        parts.append(extra_msg)
    limit = "no limit" if limit_s is None else f"limit {limit_s:.0f}s"
    _record(k, ok, f"[{elapsed:.1f}s, {limit}] " + "; ".join(parts))
    for r in bad:
        for f in r.failures[:5]:
            print(f"  {r.suite}: {f.case}: {f.claim}: expected {f.expected}, got {f.actual}")
    assert not bad, [r.summary() for r in bad]
    assert extra_ok, extra_msg
    assert timely, f"{elapsed:.1f}s exceeds {limit_s}s"
    return reports


def test_criterion_01_engine_triangulation():
    def direct_s5():
        # the three engines compared directly, outside the suite harness
        ok = all(grothendieck(w) == eval_orthodontia(rothe(w)) == grothendieck_via_bpd(w)
                 for w in all_permutations(5))
        return ok, f"direct S_5 three-way {'ok' if ok else 'mismatch'}"

    # S_5 (three engines) within 5 minutes, S_6 (two engines) within 10 more
    reps = _criterion(1, 15 * MIN, [("engines", 5, None), ("engines", 6, None)], direct_s5)
    assert reps[0].wall_time_ms < 5 * MIN * 1000
    assert reps[1].wall_time_ms < 10 * MIN * 1000


def test_criterion_02_lascoux():
    reps = _criterion(2, None, [("lascoux", 6, {"max_len": 4, "shuffles": 200})])
    assert reps[0].params["shuffles"] == 200


def test_criterion_03_vexillary_supports():
    _criterion(3, 15 * MIN, [("vexillary-sbd", 6, None)])


def test_criterion_04_top_component_multiplicities():
    reps = _criterion(4, 10 * MIN, [("vexillary-top", 5, None), ("vexillary-top-support", 6, None)])
    multipliers = [r["c"] for r in reps[0].records if r.get("claim") == "multiplier"]
    assert multipliers and all(isinstance(c, int) and c != 0 for c in multipliers)


def test_criterion_05_snow_lascoux():
    _criterion(5, 10 * MIN, [("snow", 6, {"max_len": 4})])


def test_criterion_06_fireworks():
    _criterion(6, 10 * MIN, [("fireworks-top", 6, None), ("fireworks-sbd", 5, None)])


def test_criterion_07_composition_theorems():
    def figure_instance():
        n = 8
        g = grothendieck(Permutation.parse("65871324"))
        low = grothendieck("1324").substitute_shift(4, n)
        high = grothendieck("2143").extend(n)
        rhs = low * high * MultiPolynomial.monomial((4, 4, 4, 4, 0, 0, 0, 0))
        return g == rhs, f"65871324 identity {'holds' if g == rhs else 'fails'}"

    _criterion(7, 10 * MIN, [("layering", 7, {"samples": 50}), ("block-shift", 7, None),
                             ("symmetry", 6, None)], figure_instance)


def test_criterion_08_almost_vexillary():
    reps = _criterion(8, 15 * MIN, [("almost-vex-patterns", 7, None), ("almost-vex-top", 5, None)])
    assert reps[0].cases_run == 5040


def test_criterion_09_chains():
    _criterion(9, 20 * MIN, [("chains", 6, None)])


def test_criterion_10_m_convexity_machinery():
    reps = _criterion(10, None, [("sbd-mconvex", 5, None), ("mconvex-oracle", 5, {"sets": 500}),
                                 ("hull-oracle", 3, {"sets": 150})])
    assert reps[1].cases_run == 500


def test_criterion_11_exploration_reports():
    reps = _criterion(11, None, [("explore-mconvex", 5, None), ("explore-search-a", 5, None)])
    assert all(r.report_only and r.records for r in reps)
    assert len(reps[0].records) == 120
