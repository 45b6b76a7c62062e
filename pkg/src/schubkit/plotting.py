"""Report files and figures: JSON, CSV and PNG written side by side."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .bpd import Bpd, TILE_EDGES  # noqa: E402
from .diagram import Cell, Diagram  # noqa: E402

LIVE = "#7fbf7f"
DEAD = "#555555"
DISTINGUISHED = "#d4a017"

CSV_FIELDS = ["suite", "n", "cases_run", "cases_passed", "failures", "wall_time_ms", "status"]


def _status(rep: dict) -> str:
    if rep.get("report_only"):
        return "report"
    return "pass" if not rep["failures"] else "fail"


def write_reports(reports: Sequence[dict], out_dir: str | Path, stem: str = "verify") -> dict[str, Path]:
    """Write ``stem.json``, ``stem.csv`` and ``stem.png``; return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"json": out / f"{stem}.json", "csv": out / f"{stem}.csv", "png": out / f"{stem}.png"}
    paths["json"].write_text(json.dumps(list(reports), indent=2, sort_keys=True) + "\n")
    with paths["csv"].open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for rep in reports:
            writer.writerow({
                "suite": rep["suite"], "n": rep["n"], "cases_run": rep["cases_run"],
                "cases_passed": rep["cases_passed"], "failures": len(rep["failures"]),
                "wall_time_ms": rep["wall_time_ms"], "status": _status(rep),
            })
    plot_summary(reports, paths["png"])
    return paths


def plot_summary(reports: Sequence[dict], path: str | Path) -> None:
    """Horizontal bars: passed fraction per suite, annotated with counts and time."""
    reports = list(reports)
    fig, ax = plt.subplots(figsize=(8, 0.45 * max(len(reports), 1) + 1.2))
    labels = [f"{r['suite']} (n={r['n']})" for r in reports]
    fracs = [r["cases_passed"] / r["cases_run"] if r["cases_run"] else 1.0 for r in reports]
    colors = {"pass": LIVE, "fail": "#d9534f", "report": "#8da0cb"}
    ys = range(len(reports))
    ax.barh(list(ys), fracs, color=[colors[_status(r)] for r in reports])
    for y, r in zip(ys, reports):
        ax.text(1.01, y, f"{r['cases_passed']}/{r['cases_run']}  {r['wall_time_ms'] / 1000:.1f}s",
                va="center", fontsize=8)
    ax.set_yticks(list(ys))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlim(0, 1.35)
    ax.set_xlabel("fraction of cases passed")
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def draw_diagram(d: Diagram, path: str | Path, title: str | None = None,
                 dead: Iterable[Cell] = (), distinguished: Iterable[Cell] = ()) -> None:
    """Cells drawn in matrix coordinates: row 1 on top."""
    dead, distinguished = set(dead), set(distinguished)
    fig, ax = plt.subplots(figsize=(0.4 * d.n_cols + 1, 0.4 * d.n_rows + 1))
    for i in range(1, d.n_rows + 1):
        for j in range(1, d.n_cols + 1):
            cell = (i, j)
            color = "white"
            if cell in distinguished:
                color = DISTINGUISHED
            elif cell in dead:
                color = DEAD
            elif cell in d.cells:
                color = LIVE
            ax.add_patch(Rectangle((j - 1, d.n_rows - i), 1, 1, facecolor=color,
                                   edgecolor="#999999", linewidth=0.6))
    _finish_grid(ax, d.n_rows, d.n_cols, title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def draw_bpd(p: Bpd, path: str | Path, title: str | None = None) -> None:
    n = p.n
    fig, ax = plt.subplots(figsize=(0.5 * n + 1, 0.5 * n + 1))
    mid = {"N": (0.5, 1.0), "S": (0.5, 0.0), "E": (1.0, 0.5), "W": (0.0, 0.5)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x0, y0 = j - 1, n - i
            t = p.tile(i, j)
            ax.add_patch(Rectangle((x0, y0), 1, 1, facecolor="#e8f4e8" if t == "B" else "white",
                                   edgecolor="#bbbbbb", linewidth=0.5))
            edges = TILE_EDGES[t]
            if t == "X":
                segs = [("N", "S"), ("E", "W")]
            elif len(edges) == 2:
                segs = [tuple(sorted(edges))]
            else:
                segs = []
            for a, b in segs:
                (xa, ya), (xb, yb) = mid[a], mid[b]
                if {a, b} in ({"N", "S"}, {"E", "W"}):
                    ax.plot([x0 + xa, x0 + xb], [y0 + ya, y0 + yb], color="black", lw=1.5)
                else:  # elbow through the tile centre
                    ax.plot([x0 + xa, x0 + 0.5, x0 + xb], [y0 + ya, y0 + 0.5, y0 + yb],
                            color="black", lw=1.5)
    _finish_grid(ax, n, n, title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def _finish_grid(ax, n_rows: int, n_cols: int, title: str | None) -> None:
    ax.set_xlim(0, max(n_cols, 1))
    ax.set_ylim(0, max(n_rows, 1))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
