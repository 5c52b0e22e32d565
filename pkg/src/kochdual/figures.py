"""Report figures: pentagon growth and face-size histograms, written as PNGs."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .arrangement import expected_euclidean_pentagons
from .projective import expected_projective_pentagons
from .verify import IterationResult


def write_report_figures(results: list[IterationResult], outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [
        _pentagon_figure(results, outdir / "pentagon_counts.png"),
        _face_size_figure(results, outdir / "face_sizes.png"),
    ]
    return written


def _pentagon_figure(results: list[IterationResult], path: Path) -> Path:
    ss = [r.s for r in results]
    euclid = [r.euclidean.bounded.get(5, 0) for r in results]
    proj = [r.projective.histogram.get(5, 0) for r in results]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ss, [expected_euclidean_pentagons(s) for s in ss], "-", color="#c0c8e0",
            label=r"$3 \cdot 2^{s-1} - 2s - 1$")
    ax.plot(ss, [expected_projective_pentagons(s) for s in ss], "-", color="#e0c8c0",
            label=r"$3 \cdot 2^{s-1} - 3$")
    ax.plot(ss, euclid, "o", color="#1f3b73", label="bounded pentagons")
    ax.plot(ss, proj, "s", color="#a0392e", label="projective pentagons")
    if 2 in ss:
        ax.annotate("s=2 merge anomaly", (2, proj[ss.index(2)]),
                    textcoords="offset points", xytext=(8, -12), fontsize=8, color="#a0392e")
    ax.set_xlabel("iteration s")
    ax.set_ylabel("pentagon count")
    ax.set_yscale("symlog")
    ax.set_xticks(ss)
    ax.legend(fontsize=8)
    ax.set_title("Pentagon counts vs. closed forms")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _face_size_figure(results: list[IterationResult], path: Path) -> Path:
    fig, axes = plt.subplots(1, 2, figsize=(9.6, 4.2), sharey=True)
    width = 0.8 / max(len(results), 1)
    for idx, r in enumerate(results):
        offset = (idx - (len(results) - 1) / 2) * width
        for ax, hist in ((axes[0], r.euclidean.bounded), (axes[1], r.projective.histogram)):
            sizes = sorted(hist)
            ax.bar([k + offset for k in sizes], [hist[k] for k in sizes],
                   width=width, label=f"s={r.s}")
    axes[0].set_title("bounded Euclidean faces")
    axes[1].set_title("projective faces")
    for ax in axes:
        ax.set_xlabel("edges per face")
        ax.set_xticks([2, 3, 4, 5])
        ax.set_yscale("log")
    axes[0].set_ylabel("count")
    axes[0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
