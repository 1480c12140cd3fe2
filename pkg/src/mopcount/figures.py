"""Matplotlib rendering of report records, written next to delimited output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import ExperimentRecord


def figure_path_for(out_path: str | Path) -> Path:
    return Path(out_path).with_suffix(".png")


def render_scan_figure(records: Sequence[ExperimentRecord], path: str | Path) -> Path:
    """Ratio-to-target curves per suite, with the 10% acceptance band."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    by_suite: dict[str, list[ExperimentRecord]] = {}
    for r in records:
        if r.suite.endswith("-coeff"):
            continue
        if isinstance(r.observed, (int, float)) and isinstance(r.expected, (int, float)):
            by_suite.setdefault(r.suite, []).append(r)
    for suite, rows in sorted(by_suite.items()):
        xs = [r.n for r in rows]
        ys = [r.observed / r.expected for r in rows]
        ax.plot(xs, ys, marker="o", label=suite)
    ax.axhline(1.0, color="black", linewidth=0.8)
    ax.axhspan(0.9, 1.1, color="tab:green", alpha=0.12, label="10% band")
    ax.set_xlabel("n")
    ax.set_ylabel("count / target")
    ax.legend(loc="best", fontsize=8)
    ax.set_title("ratio to target quadratic")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def render_suite_figure(records: Sequence[ExperimentRecord], path: str | Path) -> Path:
    """Observed-vs-expected scatter by n, colored by pass/fail.

    Records without a numeric observed/expected pair still show up as
    pass/fail markers at y=1.
    """
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for r in records:
        x = r.n if r.n is not None else 0
        numeric = isinstance(r.observed, (int, float)) and isinstance(
            r.expected, (int, float)
        ) and r.expected
        y = (r.observed / r.expected) if numeric else 1.0
        ax.scatter(
            [x],
            [y],
            color="tab:green" if r.passed else "tab:red",
            marker="o" if numeric else "s",
            s=28,
        )
    ax.axhline(1.0, color="black", linewidth=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel("observed / expected")
    suites = ", ".join(sorted({r.suite.split("-")[0] for r in records})) or "suite"
    ax.set_title(f"{suites}: green = pass, red = fail")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def render_records_figure(
    records: Sequence[ExperimentRecord], path: str | Path
) -> Path:
    if any(r.suite.startswith("scan-") for r in records):
        return render_scan_figure(records, path)
    return render_suite_figure(records, path)
