"""Command-line interface.

Exit codes: 0 success (all claims hold), 1 a mathematical claim failed,
2 operational error (bad input, bound exceeded, I/O).
Every global flag can also be set through a ``SCHUBKIT_`` environment variable.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .bpd import droop_closure, enumerate_bpds, grothendieck_via_bpd, is_reduced, rothe_bpd
from .bubbling import DeadSquareDiagram, build_A, enumerate_sbd, weights_with_excess
from .cache import PolynomialCache
from .convexity import is_m_convex
from .diagram import (
    Diagram,
    d_top,
    dark_cloud,
    is_column_perm_of_skyline,
    rothe,
    skyline,
    snow,
    strip_packed,
    upward_closure,
    weight,
)
from .orthodontia import eval_orthodontia, orthodontic_sequence
from .permutation import (
    Permutation,
    chain_decomposition,
    is_almost_vexillary,
    is_dominant,
    is_fireworks,
    is_vexillary,
    lehmer_code,
)
from .polynomial import (
    MultiPolynomial,
    castelnuovo_mumford,
    grothendieck,
    homogenized_grothendieck,
    lascoux,
    schubert,
    support,
    to_text,
    top_component,
)
from .verify import ALIASES, SUITES, Config, run_suite, search_A
from .weyl import SizeBoundExceeded, dual_character, schubitope_lattice_points

log = logging.getLogger("schubkit")

EXIT_OK, EXIT_CLAIM, EXIT_ERROR = 0, 1, 2

# flag -> (env var, type, default)
GLOBALS: dict[str, tuple[str, Callable, object]] = {
    "n": ("SCHUBKIT_N", int, None),
    "format": ("SCHUBKIT_FORMAT", str, "text"),
    "cache_dir": ("SCHUBKIT_CACHE_DIR", str, None),
    "threads": ("SCHUBKIT_THREADS", int, 1),
    "seed": ("SCHUBKIT_SEED", int, 0),
    "max_n": ("SCHUBKIT_MAX_N", int, 9),
    "sbd_state_bound": ("SCHUBKIT_SBD_STATE_BOUND", int, 2_000_000),
    "weyl_size_bound": ("SCHUBKIT_WEYL_SIZE_BOUND", int, 50_000),
    "log_level": ("SCHUBKIT_LOG_LEVEL", str, "WARNING"),
}


class UsageError(ValueError):
    pass


# -- input parsing ---------------------------------------------------------------

def parse_perm(text: str, max_n: int) -> Permutation:
    w = Permutation.parse(text)
    if w.n > max_n:
        raise UsageError(f"permutation size {w.n} exceeds --max-n {max_n}")
    return w


def parse_composition(text: str) -> tuple[int, ...]:
    try:
        alpha = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}") from exc
    if not alpha or any(a < 0 for a in alpha):
        raise UsageError(f"bad composition {text!r}")
    return alpha


def parse_diagram(text: str, max_n: int) -> Diagram:
    """``sky:0,2,1`` (skyline), a JSON cell list ``[[1,1],[2,1]]``, or a permutation (Rothe)."""
    text = text.strip()
    if text.startswith("sky:"):
        return skyline(parse_composition(text[4:]))
    if text.startswith("["):
        try:
            cells = [tuple(int(v) for v in c) for c in json.loads(text)]
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad cell list {text!r}") from exc
        if any(len(c) != 2 or min(c) < 1 for c in cells):
            raise UsageError("cells must be [row, col] pairs with entries >= 1")
        return Diagram.from_cells(cells)
    return rothe(parse_perm(text, max_n))


# -- output ----------------------------------------------------------------------

def _names(num_vars: int, homogenized: bool = False) -> list[str]:
    names = [f"x{i}" for i in range(1, num_vars + 1)]
    if homogenized and names:
        names[-1] = "z"
    return names


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _poly_payload(kind: str, text: str, f: MultiPolynomial, homogenized: bool = False) -> dict:
    return {"kind": kind, "input": text, "polynomial": f.to_json(),
            "text": to_text(f, _names(f.num_vars, homogenized))}


# -- commands --------------------------------------------------------------------

COMPUTE_KINDS = ("grothendieck", "schubert", "lascoux", "top", "homogenized", "chi", "top-lascoux")


def _compute(kind: str, text: str, args) -> dict:
    if kind == "lascoux":
        return _poly_payload(kind, text, lascoux(parse_composition(text)))
    if kind == "top-lascoux":
        return _poly_payload(kind, text, top_component(lascoux(parse_composition(text))))
    if kind == "chi":
        return _poly_payload(kind, text, dual_character(parse_diagram(text, args.max_n),
                                                        args.weyl_size_bound))
    w = parse_perm(text, args.max_n)
    fn = {"grothendieck": grothendieck, "schubert": schubert, "top": castelnuovo_mumford,
          "homogenized": homogenized_grothendieck}[kind]
    return _poly_payload(kind, text, fn(w), homogenized=kind == "homogenized")


def cmd_compute(args) -> int:
    cache = PolynomialCache(args.cache_dir)
    payload = cache.get_or_compute(args.kind, args.input, lambda: _compute(args.kind, args.input, args))
    emit(args, payload, payload["text"])
    return EXIT_OK


def cmd_classify(args) -> int:
    w = parse_perm(args.perm, args.max_n)
    chain = chain_decomposition(w)
    payload = {
        "perm": str(w), "length": w.length(), "code": list(lehmer_code(w)),
        "dominant": is_dominant(w), "vexillary": is_vexillary(w), "fireworks": is_fireworks(w),
        "almost_vexillary": is_almost_vexillary(w),
        "chain": None if chain is None else chain.to_json(),
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _diagram_of(kind: str, text: str, args) -> Diagram:
    base = parse_diagram(text, args.max_n)
    if kind in ("rothe", "plain"):
        return base
    if kind == "snow":
        return snow(base)
    if kind == "dark-cloud":
        return dark_cloud(base)
    if kind == "upward":
        return upward_closure(base)
    if kind == "stripped":
        return strip_packed(base)
    if kind == "dtop":
        w = parse_perm(text, args.max_n)
        return d_top(base, build_A(w, args.variant))
    raise UsageError(f"unknown diagram kind {kind!r}")


def cmd_diagram(args) -> int:
    d = _diagram_of(args.kind, args.input, args)
    payload = {"kind": args.kind, "input": args.input, "diagram": d.to_json(),
               "weight": list(weight(d)), "skyline_shape": is_column_perm_of_skyline(d)}
    emit(args, payload, d.ascii())
    return EXIT_OK


def cmd_ortho(args) -> int:
    d = parse_diagram(args.input, args.max_n)
    seq = orthodontic_sequence(d)
    f = eval_orthodontia(d)
    payload = {"input": args.input, "sequence": seq.to_json(), "polynomial": f.to_json(), "text": to_text(f)}
    text = f"i = {list(seq.i_seq)}\nk = {list(seq.k_vec)}\nm = {list(seq.m_seq)}\n{to_text(f)}"
    emit(args, payload, text)
    return EXIT_OK


def cmd_sbd(args) -> int:
    w = parse_perm(args.perm, args.max_n)
    a = build_A(w, args.variant)
    states = enumerate_sbd(rothe(w), a, args.sbd_state_bound)
    weights = sorted({s.weight() for s in states})
    lifted = weights_with_excess(states)
    supp = support(grothendieck(w))
    payload = {"perm": str(w), "variant": args.variant, "A": [list(c) for c in sorted(a)],
               "states": len(states), "weights": [list(x) for x in weights],
               "equals_support": frozenset(weights) == supp,
               "lifted_m_convex": is_m_convex(lifted)}
    if args.list:
        payload["diagrams"] = [s.to_json() for s in sorted(states, key=DeadSquareDiagram.key)]
    text = [f"A = {sorted(a)}", f"states: {len(states)}", f"distinct weights: {len(weights)}",
            f"weights = supp(G_w): {payload['equals_support']}",
            f"lifted weights M-convex: {payload['lifted_m_convex']}"]
    if args.list:
        for s in sorted(states, key=DeadSquareDiagram.key):
            text.extend(["", s.ascii()])
    emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_bpd(args) -> int:
    w = parse_perm(args.perm, args.max_n)
    bpds = sorted(enumerate_bpds(w, args.bpd_max_n), key=lambda p: p.canonical())
    closure = droop_closure(w, args.bpd_max_n)
    g = grothendieck_via_bpd(w, args.bpd_max_n)
    payload = {"perm": str(w), "count": len(bpds), "reduced": sum(map(is_reduced, bpds)),
               "closure_matches": closure == frozenset(bpds), "polynomial": g.to_json(),
               "text": to_text(g)}
    if args.list:
        payload["bpds"] = [p.to_json() for p in bpds]
    text = [f"BPDs: {len(bpds)} ({payload['reduced']} reduced)",
            f"droop closure agrees: {payload['closure_matches']}", f"G_w = {to_text(g)}"]
    if args.list:
        for p in bpds:
            text.extend(["", p.ascii()])
    emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_chi(args) -> int:
    d = parse_diagram(args.input, args.max_n)
    chi = dual_character(d, args.weyl_size_bound)
    payload = {"input": args.input, "polynomial": chi.to_json(), "text": to_text(chi)}
    text = [to_text(chi)]
    if args.lattice:
        pts = sorted(schubitope_lattice_points(d))
        payload["schubitope_points"] = [list(p) for p in pts]
        payload["saturated"] = frozenset(pts) == support(chi)
        text.append(f"schubitope lattice points: {len(pts)}; support saturated: {payload['saturated']}")
    emit(args, payload, "\n".join(text))
    return EXIT_OK


def _config(args) -> Config:
    return Config(max_n=args.max_n, sbd_state_bound=args.sbd_state_bound,
                  weyl_size_bound=args.weyl_size_bound, threads=args.threads, seed=args.seed)


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES and name not in ALIASES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = _config(args)
    reports = [run_suite(name, args.n, cfg) for name in names]
    blobs = [r.to_json() for r in reports]
    if args.format == "json":
        print(json.dumps(blobs[0] if len(blobs) == 1 else blobs, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:args.show_failures]:
                print(f"  {f.case}: {f.claim}: expected {f.expected}, got {f.actual}")
    if args.report_dir:
        from .plotting import write_reports
        paths = write_reports(blobs, args.report_dir)
        log.info("wrote %s", ", ".join(str(p) for p in paths.values()))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CLAIM


def cmd_search_a(args) -> int:
    w = parse_perm(args.perm, args.max_n)
    a = search_A(w, args.bound, args.sbd_state_bound)
    payload = {"perm": str(w), "found": a is not None,
               "A": None if a is None else [list(c) for c in sorted(a)]}
    emit(args, payload, "no witness" if a is None else f"A = {sorted(a)}")
    return EXIT_OK


def cmd_render(args) -> int:
    from . import plotting
    obj, rest = args.object, list(args.args)
    if obj == "diagram":
        if len(rest) != 1:
            raise UsageError("render diagram INPUT")
        d = parse_diagram(rest[0], args.max_n)
        text = d.ascii()
        if args.png:
            plotting.draw_diagram(d, args.png, title=rest[0])
    elif obj == "bpd":
        if rest and rest[0] == "rothe":
            rest = rest[1:]
        if len(rest) != 1:
            raise UsageError("render bpd [rothe] PERM")
        p = rothe_bpd(parse_perm(rest[0], args.max_n))
        text = p.ascii()
        if args.png:
            plotting.draw_bpd(p, args.png, title=rest[0])
    elif obj in ("sbd", "sbd-state"):
        if len(rest) != 1:
            raise UsageError("render sbd PERM [--variant V]")
        w = parse_perm(rest[0], args.max_n)
        state = DeadSquareDiagram.start(rothe(w), build_A(w, args.variant))
        text = state.ascii()
        if args.png:
            plotting.draw_diagram(state.diagram(), args.png, title=f"{w} ({args.variant})",
                                  dead=state.dead, distinguished=state.distinguished)
    else:
        raise UsageError(f"unknown render object {obj!r}")
    emit(args, {"object": obj, "args": list(args.args), "ascii": text,
                "png": str(args.png) if args.png else None}, text)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def _global_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    sup = argparse.SUPPRESS
    p.add_argument("--n", type=int, default=sup, help="problem size (S_n, or max |alpha|)")
    p.add_argument("--format", choices=["json", "text"], default=sup)
    p.add_argument("--cache-dir", default=sup)
    p.add_argument("--threads", type=int, default=sup)
    p.add_argument("--seed", type=int, default=sup)
    p.add_argument("--max-n", type=int, default=sup)
    p.add_argument("--sbd-state-bound", type=int, default=sup)
    p.add_argument("--weyl-size-bound", type=int, default=sup)
    p.add_argument("--log-level", default=sup)
    return p


def build_parser() -> argparse.ArgumentParser:
    parent = _global_parent()
    parser = argparse.ArgumentParser(prog="schubkit", parents=[parent],
                                     description="Grothendieck polynomial toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[parent], help="compute a polynomial")
    p.add_argument("kind", choices=COMPUTE_KINDS)
    p.add_argument("input")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=[parent], help="permutation classes")
    p.add_argument("perm")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("diagram", parents=[parent], help="diagram constructions")
    p.add_argument("kind", choices=["rothe", "plain", "snow", "dark-cloud", "upward", "stripped", "dtop"])
    p.add_argument("input")
    p.add_argument("--variant", default="left", choices=["left", "right", "new", "right_prime", "southmost"])
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("ortho", parents=[parent], help="orthodontic sequence and polynomial")
    p.add_argument("input")
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("sbd", parents=[parent], help="streamlined bubbling diagrams")
    p.add_argument("perm")
    p.add_argument("--variant", default="left", choices=["left", "right", "new", "right_prime", "southmost"])
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_sbd)

    p = sub.add_parser("bpd", parents=[parent], help="bumpless pipe dreams")
    p.add_argument("perm")
    p.add_argument("--list", action="store_true")
    p.add_argument("--bpd-max-n", type=int, default=5)
    p.set_defaults(func=cmd_bpd)

    p = sub.add_parser("chi", parents=[parent], help="dual character of a flagged Weyl module")
    p.add_argument("input")
    p.add_argument("--lattice", action="store_true", help="also list schubitope lattice points")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", parents=[parent], help="run a verification suite")
    p.add_argument("suite", help="suite name or 'all': " + ", ".join(SUITES))
    p.add_argument("--report-dir", help="write JSON, CSV and PNG reports here")
    p.add_argument("--show-failures", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-a", parents=[parent], help="search for an A-set witness")
    p.add_argument("perm")
    p.add_argument("--bound", type=int, default=200_000)
    p.set_defaults(func=cmd_search_a)

    p = sub.add_parser("render", parents=[parent], help="ASCII (and optional PNG) rendering")
    p.add_argument("object", choices=["diagram", "bpd", "sbd", "sbd-state"])
    p.add_argument("args", nargs="+")
    p.add_argument("--variant", default="left", choices=["left", "right", "new", "right_prime", "southmost"])
    p.add_argument("--png", type=Path)
    p.set_defaults(func=cmd_render)
    return parser


def resolve_globals(args: argparse.Namespace, env: dict | None = None) -> argparse.Namespace:
    """Flag, else SCHUBKIT_ environment variable, else default."""
    env = os.environ if env is None else env
    for name, (var, typ, default) in GLOBALS.items():
        if hasattr(args, name):
            continue
        if var in env:
            try:
                setattr(args, name, typ(env[var]))
            except ValueError as exc:
                raise UsageError(f"bad value for {var}: {env[var]!r}") from exc
        else:
            setattr(args, name, default)
    if args.format not in ("json", "text"):
        raise UsageError(f"unknown format {args.format!r}")
    for name in ("threads", "max_n", "sbd_state_bound", "weyl_size_bound"):
        if getattr(args, name) <= 0:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if not hasattr(args, "bpd_max_n"):
        args.bpd_max_n = 5
    return args


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with exit status 2
        return int(exc.code) if isinstance(exc.code, int) else EXIT_ERROR
    try:
        resolve_globals(args)
        logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except (ValueError, KeyError, RuntimeError, OSError, SizeBoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
