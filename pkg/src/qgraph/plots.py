"""Figure rendering for sweep reports.

Produces one log-log figure per sweep: median charged queries per grid size,
the fitted power law, and a dashed guide with the predicted slope anchored at
the first median.  Rendering is headless; figures are written next to the
CSV so a report directory is self-contained.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bench import SweepResult


def render_sweep_figure(result: SweepResult, path) -> None:
    sizes = [n for n, _ in result.medians]
    costs = [float(c) for _, c in result.medians]
    fit = result.fit

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.loglog(sizes, costs, "o", color="#1f6fb2", label="median charged queries")

    fitted = [math.exp(fit.intercept) * n ** fit.slope for n in sizes]
    ax.loglog(
        sizes,
        fitted,
        "-",
        color="#1f6fb2",
        alpha=0.7,
        label=f"fit slope {fit.slope:.3f}",
    )
    anchor = costs[0]
    guide = [anchor * (n / sizes[0]) ** fit.predicted for n in sizes]
    ax.loglog(
        sizes,
        guide,
        "--",
        color="#888888",
        label=f"predicted slope {fit.predicted:.3f}",
    )

    spec = result.spec
    ax.set_title(
        f"{spec.algorithm} / {spec.model.value} / {spec.density.key()} "
        f"(amp={spec.amplification.value})"
    )
    ax.set_xlabel("n")
    ax.set_ylabel("charged queries")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
