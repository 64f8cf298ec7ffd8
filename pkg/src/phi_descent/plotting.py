"""Figure for scan reports: which criterion settles each (p, c), one panel per l."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402

from .criteria import Verdict  # noqa: E402

# cell codes: 0 no triple, 1..3 criterion I..III, 4 inconclusive
LABELS = ("", "I", "II", "III", "Inconclusive")
COLORS = ("#ffffff", "#4c72b0", "#55a868", "#c44e52", "#bbbbbb")
_CODE = {"I": 1, "II": 2, "III": 3, "None": 4}


def criterion_grid(verdicts: list[Verdict], l: int) -> tuple[list[int], list[int], np.ndarray]:
    rows = [v for v in verdicts if v.triple.l == l]
    ps = sorted({v.triple.p for v in rows})
    cs = sorted({v.triple.c for v in rows})
    grid = np.zeros((len(cs), len(ps)), dtype=int)
    for v in rows:
        grid[cs.index(v.triple.c), ps.index(v.triple.p)] = _CODE[v.criterion.value]
    return ps, cs, grid


def scan_figure(verdicts: list[Verdict], path: str) -> None:
    ls = sorted({v.triple.l for v in verdicts})
    if not ls:
        raise ValueError("nothing to plot: the scan produced no triples")
    width = 4.2 * len(ls) + 1.5
    fig, axes = plt.subplots(1, len(ls), figsize=(width, 4.0), squeeze=False)
    cmap = ListedColormap(COLORS)
    for ax, l in zip(axes[0], ls):
        ps, cs, grid = criterion_grid(verdicts, l)
        ax.imshow(grid, cmap=cmap, vmin=0, vmax=len(COLORS) - 1, origin="lower", aspect="auto",
                  interpolation="nearest")
        step_p = max(1, len(ps) // 12)
        step_c = max(1, len(cs) // 12)
        ax.set_xticks(range(0, len(ps), step_p), [str(p) for p in ps[::step_p]], fontsize=7)
        ax.set_yticks(range(0, len(cs), step_c), [str(c) for c in cs[::step_c]], fontsize=7)
        ax.set_xlabel("p")
        ax.set_ylabel("c")
        ax.set_title(f"l = {l}")
    handles = [Patch(facecolor=COLORS[k], edgecolor="k", label=LABELS[k]) for k in range(1, len(LABELS))]
    fig.legend(handles=handles, loc="center right", fontsize=8, frameon=False)
    fig.subplots_adjust(right=1 - 1.5 / width, wspace=0.35)
    fig.savefig(path, dpi=150, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
