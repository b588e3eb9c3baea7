"""Figures for 2-dimensional dual balls.

Draws the ball, the exceptional carriers and the Xi lattice points.  SVG
output is made byte-stable by pinning the hash salt and dropping the date
metadata.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .exceptional import ExceptionalSet  # noqa: E402
from .norms import DualBall  # noqa: E402


def _ordered_boundary(ball: DualBall) -> list[tuple[float, float]]:
    pts = [(float(x), float(y)) for x, y in ball.vertices]
    if len(pts) <= 2:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def plot_dual_ball(ball: DualBall, exc: ExceptionalSet, xi: list, path: str | Path, title: str = "") -> Path:
    if ball.dim != 2:
        raise ValueError("figures are drawn only for b1 = 2")
    path = Path(path)
    with plt.rc_context({"svg.hashsalt": "thurstonlab", "svg.fonttype": "none", "font.size": 10}):
        fig, ax = plt.subplots(figsize=(5, 5))
        ring = _ordered_boundary(ball)
        if len(ring) >= 3:
            xs, ys = zip(*(ring + ring[:1]))
            ax.fill(xs, ys, color="#dde6f0", zorder=0)
            ax.plot(xs, ys, color="#1f3b73", lw=1.5, zorder=1, label="dual ball")
        elif len(ring) == 2:
            (x0, y0), (x1, y1) = ring
            ax.plot([x0, x1], [y0, y1], color="#1f3b73", lw=1.5, zorder=1, label="dual ball")
        vx = [p[0] for p in ring]
        vy = [p[1] for p in ring]
        ax.scatter(vx, vy, color="#1f3b73", s=18, zorder=3)
        for i, c in enumerate(exc.carriers):
            (x0, y0), (x1, y1) = c.segment.start, c.segment.end
            ax.plot([float(x0), float(x1)], [float(y0), float(y1)], color="#c0504d", lw=1.0, alpha=0.7,
                    zorder=2, label="carriers" if i == 0 else None)
        if xi:
            ax.scatter([w[0] for w in xi], [w[1] for w in xi], marker="x", color="black", s=30, zorder=4,
                       label="Xi")
        ax.axhline(0, color="0.7", lw=0.5, zorder=0)
        ax.axvline(0, color="0.7", lw=0.5, zorder=0)
        ax.set_aspect("equal")
        if title:
            ax.set_title(title)
        ax.legend(loc="upper right", fontsize=8, frameon=False)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
