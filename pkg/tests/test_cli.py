from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from schubkit import verify
from schubkit.cli import main, resolve_globals, build_parser
from schubkit.verify import SUITES, Suite

FIG1 = """\
· · · · · · · ·
· □ □ □ □ □ □ ·
· · · · · · · ·
· · □ □ □ □ · ·
· · · · · · · ·
· · · □ · · · ·
· · · □ · · · ·
· · · · · · · ·"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in list(__import__("os").environ):
        if var.startswith("SCHUBKIT_"):
            monkeypatch.delenv(var)


class TestCompute:
    @pytest.mark.parametrize("argv, expected", [
        (("compute", "grothendieck", "132"), "x1 + x2 - x1*x2"),
        (("compute", "top", "132"), "-x1*x2"),
        (("compute", "lascoux", "2,1"), "x1^2*x2"),
        (("compute", "schubert", "132"), "x1 + x2"),
        (("compute", "homogenized", "132"), "x1*x2 + x1*z + x2*z"),
        (("compute", "chi", "sky:0,1"), "x1 + x2"),
        (("compute", "top-lascoux", "0,1"), "-x1*x2"),
    ])
    def test_examples(self, capsys, argv, expected):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out.strip() == expected

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "compute", "grothendieck", "132", "--format", "json")
        blob = json.loads(out)
        assert code == 0 and blob["text"] == "x1 + x2 - x1*x2" and blob["polynomial"]["num_vars"] == 3

    def test_cache_transparent(self, capsys, tmp_path):
        plain = run(capsys, "compute", "grothendieck", "1432")
        cold = run(capsys, "--cache-dir", str(tmp_path), "compute", "grothendieck", "1432")
        warm = run(capsys, "compute", "grothendieck", "1432", "--cache-dir", str(tmp_path))
        assert plain == cold == warm
        assert len(list(tmp_path.glob("*.json"))) == 1

    @pytest.mark.parametrize("argv", [
        ("compute", "grothendieck", "1x3"),
        ("compute", "grothendieck", "113"),
        ("compute", "lascoux", "1,-1"),
        ("compute", "nonsense", "12"),
        ("compute", "grothendieck", "1234567890", "--max-n", "5"),
        ("compute", "chi", "1624735", "--weyl-size-bound", "2"),
        ("verify", "no-such-suite"),
        ("classify", "21", "--threads", "0"),
    ])
    def test_operational_errors_exit_2(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 2


class TestOtherCommands:
    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "13542", "--format", "json")
        blob = json.loads(out)
        assert code == 0 and blob["vexillary"] and blob["almost_vexillary"] and blob["code"] == [0, 1, 2, 1, 0]

    def test_diagram_kinds(self, capsys):
        code, out, _ = run(capsys, "diagram", "rothe", "18273564")
        assert code == 0 and out.rstrip("\n") == FIG1
        code, out, _ = run(capsys, "diagram", "dark-cloud", "sky:0,6,0,4,0,1,1,0", "--format", "json")
        assert sorted(map(tuple, json.loads(out)["diagram"]["cells"])) == [(2, 6), (4, 4), (7, 1)]
        code, out, _ = run(capsys, "diagram", "dtop", "1624735", "--format", "json")
        assert json.loads(out)["weight"][:5] == [3, 4, 2, 2, 2]
        code, out, _ = run(capsys, "diagram", "upward", "1624735", "--format", "json")
        assert json.loads(out)["weight"][:5] == [4, 4, 2, 2, 2]

    def test_ortho(self, capsys):
        code, out, _ = run(capsys, "ortho", "132")
        assert code == 0 and "i = [1]" in out and out.strip().endswith("x1 + x2 - x1*x2")

    def test_sbd(self, capsys):
        code, out, _ = run(capsys, "sbd", "1624735", "--variant", "new", "--format", "json")
        blob = json.loads(out)
        assert code == 0 and blob["equals_support"] and blob["lifted_m_convex"]
        assert sorted(map(tuple, blob["A"])) == [(2, 4), (4, 3), (5, 5)]
        code, out, _ = run(capsys, "sbd", "132", "--list")
        assert "◆" in out

    def test_bpd(self, capsys):
        code, out, _ = run(capsys, "bpd", "132", "--format", "json")
        blob = json.loads(out)
        assert code == 0 and blob["count"] == 2 and blob["closure_matches"] and blob["text"] == "x1 + x2 - x1*x2"
        assert run(capsys, "bpd", "123456", "--bpd-max-n", "5")[0] == 2

    def test_chi(self, capsys):
        code, out, _ = run(capsys, "chi", "1624735", "--lattice", "--format", "json")
        assert code == 0 and json.loads(out)["saturated"]

    def test_search_a(self, capsys):
        code, out, _ = run(capsys, "search-a", "13542", "--format", "json")
        assert code == 0 and json.loads(out)["found"]
        code, out, _ = run(capsys, "search-a", "31542")
        assert code == 0 and out.strip()
        assert run(capsys, "search-a", "31542", "--bound", "1")[0] == 2

    def test_render(self, capsys, tmp_path):
        code, out, _ = run(capsys, "render", "diagram", "18273564")
        assert code == 0 and out.rstrip("\n") == FIG1
        code, out, _ = run(capsys, "render", "bpd", "rothe", "21")
        assert code == 0 and out.strip() == "·┌\n┌┼"
        png = tmp_path / "s.png"
        code, out, _ = run(capsys, "render", "sbd-state", "1624735", "--png", str(png))
        assert code == 0 and "◆" in out and png.stat().st_size > 0
        png2 = tmp_path / "b.png"
        assert run(capsys, "render", "bpd", "2143", "--png", str(png2))[0] == 0 and png2.exists()
        assert run(capsys, "render", "diagram", "1", "2")[0] == 2


class TestVerify:
    @pytest.mark.parametrize("suite, n", [("engines", 4), ("thm-1.1", 4), ("fireworks-top", 5)])
    def test_examples_pass(self, capsys, suite, n):
        code, out, _ = run(capsys, "verify", suite, "--n", str(n))
        assert code == 0 and out.startswith("PASS")

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "verify", "engines", "--n", "3", "--format", "json")
        blob = json.loads(out)
        assert {"suite", "n", "cases_run", "cases_passed", "failures", "wall_time_ms"} <= set(blob)
        assert blob["cases_run"] == blob["cases_passed"] > 0

    def test_report_dir(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "engines", "--n", "3", "--report-dir", str(tmp_path))
        assert code == 0
        for ext in ("json", "csv", "png"):
            assert (tmp_path / f"verify.{ext}").stat().st_size > 0
        assert json.loads((tmp_path / "verify.json").read_text())[0]["suite"] == "engines"
        assert "engines" in (tmp_path / "verify.csv").read_text()

    def test_injected_claim_failure_exits_1(self, capsys, monkeypatch):
        real = verify.grothendieck
        monkeypatch.setattr(verify, "grothendieck", lambda w: real(w) + 1 if str(w) == "132" else real(w))
        code, out, _ = run(capsys, "verify", "engines", "--n", "3")
        assert code == 1 and out.startswith("FAIL") and "132" in out

    @settings(max_examples=25)
    @given(st.lists(st.booleans(), max_size=8), st.booleans())
    def test_exit_code_contract(self, outcomes, raise_error):
        def run_fake(report, n, cfg):
            for k, ok in enumerate(outcomes):
                report.add((str(k), "fake", ok, 1, 1 if ok else 0))
            if raise_error:
                raise ValueError("injected operational error")

        saved = SUITES["engines"]
        SUITES["engines"] = Suite("engines", "fake", 3, run_fake)
        try:
            code = main(["verify", "engines", "--format", "json"])
        finally:
            SUITES["engines"] = saved
        expected = 2 if raise_error else (0 if all(outcomes) else 1)
        assert code == expected


class TestGlobals:
    def test_env_vars(self, capsys, monkeypatch):
        monkeypatch.setenv("SCHUBKIT_FORMAT", "json")
        code, out, _ = run(capsys, "compute", "grothendieck", "132")
        assert json.loads(out)["text"] == "x1 + x2 - x1*x2"
        monkeypatch.setenv("SCHUBKIT_MAX_N", "2")
        assert run(capsys, "compute", "grothendieck", "132")[0] == 2
        # a flag beats the environment
        assert run(capsys, "compute", "grothendieck", "132", "--max-n", "3")[0] == 0

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("SCHUBKIT_THREADS", "many")
        assert run(capsys, "classify", "21")[0] == 2

    def test_resolution_order(self):
        args = build_parser().parse_args(["--seed", "3", "classify", "21"])
        resolve_globals(args, {"SCHUBKIT_SEED": "7", "SCHUBKIT_N": "4"})
        assert args.seed == 3 and args.n == 4 and args.threads == 1 and args.max_n == 9

    def test_env_cache_dir(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("SCHUBKIT_CACHE_DIR", str(tmp_path))
        assert run(capsys, "compute", "schubert", "1432")[0] == 0
        assert len(list(tmp_path.glob("*.json"))) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubkit", "compute", "grothendieck", "132"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "x1 + x2 - x1*x2"
    proc = subprocess.run([sys.executable, "-m", "schubkit", "compute", "grothendieck", "bad"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "error" in proc.stderr
