"""Report rendering: JSON, delimited summary table, and figures.

``corpus run --out DIR/report.json`` writes the JSON report, a CSV
summary next to it, and two PNG figures into the same directory.
"""

from __future__ import annotations

import csv
import os
from typing import List

from .corpus import report_json

RING_COLUMNS = ["kind", "spec", "order", "balanced", "tfr_iso", "tfr_order",
                "n_local_factors", "depth_zero_all", "hom_criterion",
                "self_injective", "failures"]


def write_json(report: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report_json(report))


def write_csv(report: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(RING_COLUMNS)
        for rec in report["rings"]:
            w.writerow([
                rec["kind"], rec["spec"], rec["order"], rec["balanced"],
                rec["tfr_iso"], rec["tfr_order"], len(rec["local_factors"]),
                rec["depth_zero_all"], rec["hom_criterion"],
                rec.get("self_injective"),
                ";".join(rec["failures"]),
            ])


def summary_table(report: dict) -> str:
    """Human-readable fixed-width summary of the corpus run."""
    s = report["summary"]
    lines = [
        f"{'rings':<22}{s['n_rings']}",
        f"{'groups':<22}{s['n_groups']}",
        f"{'balanced rings':<22}{s['n_balanced']}",
        f"{'self-injective':<22}{s['n_self_injective']}",
        f"{'not self-injective':<22}{s['n_not_self_injective']}",
        f"{'failures':<22}{s['n_failures']}",
    ]
    if report["failures"]:
        lines.append("failing checks:")
        lines.extend(f"  {f}" for f in report["failures"][:50])
    return "\n".join(lines)


def render_figures(report: dict, out_dir: str) -> List[str]:
    """Write the corpus figures; returns the file paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []

    fig, ax = plt.subplots(figsize=(8, 4.5))
    kinds = sorted({r["kind"] for r in report["rings"]})
    data = [[r["order"] for r in report["rings"] if r["kind"] == k]
            for k in kinds]
    ax.hist(data, bins=24, stacked=True, label=kinds)
    ax.set_xlabel("ring order")
    ax.set_ylabel("count")
    ax.set_title("corpus rings by order and construction")
    ax.legend()
    fig.tight_layout()
    p = os.path.join(out_dir, "fig_ring_orders.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    xs = [g["order"] for g in report["groups"]]
    ys = [g["n_subgroups"] for g in report["groups"]]
    ax.scatter(xs, ys, s=14, alpha=0.7)
    ax.set_yscale("log")
    ax.set_xlabel("group order")
    ax.set_ylabel("subgroups (log scale)")
    ax.set_title("subgroup counts across the abelian group corpus")
    fig.tight_layout()
    p = os.path.join(out_dir, "fig_group_subgroups.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    return paths
