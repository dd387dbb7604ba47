"""Benchmark report figures.

Renders scatter plots of total runtime against the graph statistics that
drive it (junction, terminal, and segmentation-endpoint counts), one PNG
per statistic. The data is reported as-is; no trend is fitted.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["render_runtime_figures"]

_SCATTERS = (
    ("junctions", "Junction nodes", "runtime_vs_junctions.png"),
    ("terminals", "Terminal nodes", "runtime_vs_terminals.png"),
    ("endpoints", "Path segmentation endpoints", "runtime_vs_endpoints.png"),
)


def render_runtime_figures(
    rows: Sequence[Mapping[str, object]], out_dir: str | Path
) -> list[Path]:
    """Write runtime scatter figures for a batch of per-image metric rows.

    Each row needs ``junctions``, ``terminals``, ``endpoints`` and
    ``runtime_ms`` keys (the bench CSV columns). Returns written paths.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    runtimes = [float(r["runtime_ms"]) for r in rows]
    written: list[Path] = []
    for key, label, filename in _SCATTERS:
        xs = [float(r[key]) for r in rows]
        fig, ax = plt.subplots(figsize=(4.8, 3.6))
        ax.scatter(xs, runtimes, s=24, color="#20639b", alpha=0.85, edgecolors="none")
        ax.set_xlabel(label)
        ax.set_ylabel("Total runtime (ms)")
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        fig.tight_layout()
        target = out / filename
        fig.savefig(target, dpi=120)
        plt.close(fig)
        written.append(target)
    return written
