"""Figures written next to a report: returns panels, RSD bars, entropy bars."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

# keeps repeated runs byte-stable for png output
_METADATA = {"Software": None}


def _save(fig, path):
    path = Path(path)
    meta = _METADATA if path.suffix.lower() == ".png" else None
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata=meta)
    return path


def plot_returns(results, path):
    n = len(results)
    fig = Figure(figsize=(8, 1.6 * n + 0.6))
    axes = fig.subplots(n, 1, sharex=False, squeeze=False)[:, 0]
    for ax, res in zip(axes, results):
        ax.plot(res.returns.returns, lw=0.4, color="k")
        ax.set_ylabel(res.label, rotation=0, ha="right", va="center", fontsize=8)
        ax.tick_params(labelsize=7)
        ax.axhline(0, color="0.6", lw=0.5)
    axes[-1].set_xlabel("observation")
    fig.suptitle("Daily log returns")
    return _save(fig, path)


def plot_rsd(results, path):
    labels = [r.label for r in results]
    vals = [np.nan if r.dispersion.rsd is None else r.dispersion.rsd for r in results]
    fig = Figure(figsize=(7, 3.5))
    ax = fig.subplots()
    ax.bar(labels, vals, color="0.45")
    ax.set_ylabel("RSD (%)")
    ax.set_title("Relative standard deviation of returns")
    ax.tick_params(axis="x", labelrotation=30, labelsize=8)
    return _save(fig, path)


def plot_entropies(results, q_values, path):
    labels = [r.label for r in results]
    series = [("Shannon", [r.entropy.shannon for r in results])]
    series += [(f"Tsallis q={q:g}", [r.entropy.tsallis[q] for r in results]) for q in q_values]
    x = np.arange(len(labels))
    width = 0.8 / len(series)
    fig = Figure(figsize=(8, 3.8))
    ax = fig.subplots()
    for i, (name, vals) in enumerate(series):
        ax.bar(x + (i - (len(series) - 1) / 2) * width, vals, width, label=name)
    ax.set_xticks(x, labels, rotation=30, fontsize=8)
    ax.set_ylabel("entropy (nats)")
    ax.set_title("Shannon and Tsallis entropies")
    ax.legend(fontsize=7, frameon=False, loc="upper left", bbox_to_anchor=(1.0, 1.0))
    return _save(fig, path)


def write_figures(report, outdir, fmt="png") -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    res = report.results
    if not res:
        return []
    return [
        plot_returns(res, outdir / f"returns.{fmt}"),
        plot_rsd(res, outdir / f"rsd.{fmt}"),
        plot_entropies(res, report.q_values, outdir / f"entropy.{fmt}"),
    ]
