"""Figure rendering for the classification and attribution reports.

Figures are written next to the delimited reports with matching names so a
run directory is self-describing.  The Agg backend keeps rendering
headless and deterministic.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np

from .mlkit.harness import AttributionReport


def render_confusion(confusion: np.ndarray, class_names: list[str],
                     path: str | Path) -> Path:
    path = Path(path)
    k = len(class_names)
    fig, ax = plt.subplots(figsize=(1.2 * k + 2.5, 1.2 * k + 2))
    ax.imshow(confusion, cmap="Blues")
    for i in range(k):
        for j in range(k):
            ax.text(j, i, str(int(confusion[i, j])), ha="center", va="center",
                    color="black")
    ax.set_xticks(range(k), class_names, rotation=45, ha="right")
    ax.set_yticks(range(k), class_names)
    ax.set_xlabel("predicted")
    ax.set_ylabel("gold")
    ax.set_title("Confusion matrix (test split)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_attribution(report: AttributionReport, out_dir: str | Path,
                       top_k: int = 15, stem: str = "attribution") -> list[Path]:
    """One horizontal bar chart per class: strongest |Shapley| metrics."""
    out_dir = Path(out_dir)
    paths: list[Path] = []
    for c, name in enumerate(report.class_names):
        row = report.shapley[c]
        order = np.argsort(-np.abs(row))[:top_k][::-1]
        labels = [report.metric_ids[i] for i in order]
        values = row[order]
        colors = ["#2166ac" if v >= 0 else "#b2182b" for v in values]
        fig, ax = plt.subplots(figsize=(8, 0.35 * len(order) + 1.5))
        ax.barh(range(len(order)), values, color=colors)
        ax.set_yticks(range(len(order)), labels, fontsize=8)
        ax.axvline(0.0, color="black", linewidth=0.8)
        ax.set_xlabel("mean Shapley contribution")
        ax.set_title(f"Class {name}: feature attribution")
        fig.tight_layout()
        path = out_dir / f"{stem}_{_safe(name)}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "_.-" else "_" for ch in name)
