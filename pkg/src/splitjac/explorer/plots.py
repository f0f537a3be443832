"""Figures for the CLI report path (Agg backend, PNG files)."""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.6),
    "figure.dpi": 120,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 9,
    "legend.fontsize": 8,
    "legend.frameon": False,
}


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def weil_figure(example: str, orders: dict, genus: int, N: int | None, out_dir) -> Path:
    """#J(F_p) against the Weil interval, with the multiples of N marked."""
    primes = sorted(int(p) for p in orders)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        lo = [(math.sqrt(p) - 1) ** (2 * genus) for p in primes]
        hi = [(math.sqrt(p) + 1) ** (2 * genus) for p in primes]
        ax.vlines(primes, lo, hi, color="0.85", lw=8, label="Weil interval")
        ax.plot(primes, [orders[p] for p in primes], "o", color="C0", label="#J(F_p)")
        if N:
            for p, a, b in zip(primes, lo, hi):
                ks = range(max(1, math.ceil(a / N)), math.floor(b / N) + 1)
                ax.plot([p] * len(ks), [k * N for k in ks], "_", color="C3", ms=12)
            ax.plot([], [], "_", color="C3", label=f"multiples of {N}")
        ax.set_yscale("log")
        ax.set_xticks(primes)
        ax.set_xlabel("p")
        ax.set_ylabel("order")
        ax.set_title(example)
        ax.legend(loc="upper left")
        return _save(fig, Path(out_dir) / f"{example}_weil.png")


def search_figure(name: str, points, out_dir) -> Path:
    """Scatter of solutions: (t, u) pairs, or t against the witness for one-parameter searches."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        xs = [float(p[0]) for p in points]
        ys = [float(p[1]) for p in points]
        ax.plot(xs, ys, ".", color="C0")
        ax.set_xscale("symlog", linthresh=1)
        ax.set_yscale("symlog", linthresh=1)
        ax.set_title(f"{name}: {len(points)} solutions")
        return _save(fig, Path(out_dir) / f"{name}.png")


def pass_figure(rows, out_dir, name="verify_summary") -> Path:
    """Passed and failed fact counts per example."""
    names = [r[0] for r in rows]
    good = [r[1] for r in rows]
    bad = [r[2] for r in rows]
    with plt.rc_context(STYLE | {"figure.figsize": (6.0, 0.25 * len(rows) + 1.2)}):
        fig, ax = plt.subplots()
        ax.barh(names, good, color="C2", label="pass")
        ax.barh(names, bad, left=good, color="C3", label="fail")
        ax.invert_yaxis()
        ax.set_xlabel("facts")
        ax.legend(loc="lower right")
        return _save(fig, Path(out_dir) / f"{name}.png")
