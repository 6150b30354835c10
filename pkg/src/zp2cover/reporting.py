"""Rendering of audit results: aligned text table, CSV, and figures.

Figures and the CSV land next to each other when the CLI gets an output
directory; the table and JSON document go to stdout or into the same
directory.  Only wall-clock data stays out of these bodies, so repeated runs
of one config produce identical files (PNGs aside).
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .codes import WeightDistribution
from .harness import SuiteResult, TheoremReport

_COLUMNS = ("theorem_id", "parameters", "claimed", "computed", "verdict")


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


def render_table(reports: list[TheoremReport]) -> str:
    rows = [[_cell(getattr(r, c)) for c in _COLUMNS] for r in reports]
    header = [c.upper() for c in _COLUMNS]
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
              for i in range(len(header))]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(header, widths)),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render_summary(result: SuiteResult) -> str:
    totals = result.totals
    parts = [f"{k}={v}" for k, v in totals.items() if v]
    status = "CONTRADICTIONS FOUND" if result.any_contradicted else "no contradictions"
    return f"audits={len(result.reports)} {' '.join(parts)} [{status}]\n"


def write_csv(reports: list[TheoremReport], path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(_COLUMNS + ("counterexample",))
        for r in reports:
            writer.writerow(
                [
                    r.theorem_id,
                    _cell(r.parameters),
                    _cell(r.claimed),
                    _cell(r.computed),
                    r.verdict,
                    _cell(r.counterexample),
                ]
            )


_VERDICT_COLORS = {
    "confirmed": "#2a7e43",
    "within_bounds": "#4a90d9",
    "contradicted": "#c0392b",
    "unsatisfiable": "#e67e22",
    "skipped_resource": "#7f8c8d",
}


def plot_verdict_summary(result: SuiteResult, path: Path) -> None:
    totals = {k: v for k, v in result.totals.items() if v}
    fig, ax = plt.subplots(figsize=(6, 3.2))
    names = list(totals)
    values = [totals[k] for k in names]
    ax.bar(names, values, color=[_VERDICT_COLORS.get(k, "#555") for k in names])
    ax.set_ylabel("reports")
    ax.set_title("audit verdicts")
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_bound_audits(result: SuiteResult, path: Path) -> bool:
    """Computed radius against claimed (lower, upper) intervals; False if none apply."""
    entries = []
    for r in result.reports:
        if isinstance(r.claimed, (list, tuple)) and len(r.claimed) == 2 and isinstance(r.computed, int):
            label = f"{r.theorem_id} {','.join(f'{k}={v}' for k, v in sorted(r.parameters.items()) if k in ('p', 'n', 'm'))}"
            entries.append((label, r.claimed[0], r.claimed[1], r.computed, r.verdict))
    if not entries:
        return False
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(entries)), 4))
    xs = range(len(entries))
    for x, (label, lo, hi, got, verdict) in zip(xs, entries):
        ax.vlines(x, lo, hi, color="#888", linewidth=6, alpha=0.5)
        ax.plot([x], [got], "o", color=_VERDICT_COLORS.get(verdict, "#555"), markersize=7)
    ax.set_xticks(list(xs))
    ax.set_xticklabels([e[0] for e in entries], rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("Lee covering radius")
    ax.set_title("claimed bound intervals (bars) vs exact radii (dots)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def plot_weight_distribution(wd: WeightDistribution, path: Path, title: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.2))
    weights = sorted(wd.counts)
    ax.bar([str(w) for w in weights], [wd.counts[w] for w in weights], color="#4a90d9")
    ax.set_xlabel(f"{wd.metric} weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_suite_outputs(result: SuiteResult, doc: dict, out_dir: Path) -> list[Path]:
    """Write report.json, report.csv, report.txt and figures; returns paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    json_path = out_dir / "report.json"
    json_path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    written.append(json_path)
    csv_path = out_dir / "report.csv"
    write_csv(result.reports, csv_path)
    written.append(csv_path)
    txt_path = out_dir / "report.txt"
    txt_path.write_text(render_table(result.reports) + render_summary(result), encoding="utf-8")
    written.append(txt_path)
    fig_dir = out_dir / "figures"
    fig_dir.mkdir(exist_ok=True)
    verdicts_png = fig_dir / "verdicts.png"
    plot_verdict_summary(result, verdicts_png)
    written.append(verdicts_png)
    bounds_png = fig_dir / "bounds.png"
    if plot_bound_audits(result, bounds_png):
        written.append(bounds_png)
    return written
