"""Chart rendering for the report outputs. Import is deferred to the CLI's
--figure paths so data-only runs never pay the matplotlib startup cost."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cracker import TradeoffPoint
from .entropy import EntropyPoint
from .shapes import CorpusStats

_SERIES = (
    ("user_linear", "user-chosen linear"),
    ("user_spartan", "user-chosen grid"),
    ("random_linear", "random linear"),
    ("random_spartan", "random grid"),
)


def render_entropy_curve(points: Sequence[EntropyPoint], path: str | Path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    lengths = [p.length for p in points]
    for attr, label in _SERIES:
        ax.plot(lengths, [getattr(p, attr) for p in points], label=label)
    ax.set_xlabel("password length (characters)")
    ax.set_ylabel("estimated entropy (bits)")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_heatmap(stats: CorpusStats, path: str | Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 5))
    image = ax.imshow([list(row) for row in stats.heatmap], cmap="viridis")
    fig.colorbar(image, ax=ax, label="times occupied")
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_tradeoff(points: Sequence[TradeoffPoint], path: str | Path) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    sizes = [p.dictionary_size for p in points]
    fractions = [p.recovery_fraction for p in points]
    ax.plot(sizes, fractions, marker="o")
    for p in points:
        ax.annotate(
            p.strategy,
            (p.dictionary_size, p.recovery_fraction),
            textcoords="offset points",
            xytext=(5, 5),
            fontsize=8,
        )
    ax.set_xscale("log")
    ax.set_xlabel("expanded dictionary size (candidates)")
    ax.set_ylabel("fraction of passwords recovered")
    ax.set_ylim(-0.05, 1.05)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
