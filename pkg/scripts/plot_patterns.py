#!/usr/bin/env python3
"""Render PNG figures from a completed run directory.

Reads the CSVs `beamkit run` (or `reproduce-paper`) wrote and produces:
pattern cuts per plane, beamwidth versus spacing, area versus spacing, and
separation versus range. The CLI itself emits data only; plotting lives
here.
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def read_csv(path: Path):
    rows = [
        line.split(",")
        for line in path.read_text(encoding="utf-8").splitlines()
        if line and not line.startswith("#")
    ]
    return rows[0], rows[1:]


def plot_cuts(run_dir: Path, plane: str, out: Path):
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for path in sorted(run_dir.glob(f"pattern_*_{plane}.csv")):
        name = path.stem.removeprefix("pattern_").removesuffix(f"_{plane}")
        _, rows = read_csv(path)
        angles = np.array([float(r[0]) for r in rows])
        power = np.array([float(r[1]) for r in rows])
        ax.plot(angles, power, lw=0.8, label=name)
    ax.axhline(-3.0, color="gray", ls=":", lw=0.8)
    ax.set_xlabel("theta (deg)" if plane == "elevation" else "phi (deg)")
    ax.set_ylabel("normalized power (dB)")
    ax.set_ylim(-60, 2)
    ax.set_title(f"{plane} cuts")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    print(f"wrote {out}")


def plot_two_column(path: Path, xlabel: str, ylabel: str, out: Path, logy=False):
    header, rows = read_csv(path)
    x = np.array([float(r[0]) for r in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    for col in range(1, len(header)):
        y = np.array([float(r[col]) for r in rows])
        ax.plot(x, y, marker="o", label=header[col])
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    print(f"wrote {out}")


def plot_separation(run_dir: Path, out: Path):
    _, rows = read_csv(run_dir / "separation_vs_range.csv")
    arrays = sorted({r[1] for r in rows})
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for name in arrays:
        mine = [r for r in rows if r[1] == name]
        ranges = [float(r[0]) for r in mine]
        axes[0].plot(ranges, [float(r[2]) for r in mine], marker="o", label=name)
        axes[1].plot(ranges, [float(r[3]) for r in mine], marker="o", label=name)
    for ax, title in zip(axes, ("azimuthal separation", "elevation separation")):
        ax.set_xlabel("range (m)")
        ax.set_ylabel("separation (m)")
        ax.set_title(title)
        ax.grid(alpha=0.3)
        ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    print(f"wrote {out}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("run_dir", help="directory a run wrote its CSVs into")
    parser.add_argument("--out", default=None, help="directory for PNGs (default: run_dir)")
    args = parser.parse_args()

    run_dir = Path(args.run_dir)
    out_dir = Path(args.out) if args.out else run_dir
    out_dir.mkdir(parents=True, exist_ok=True)

    for plane in ("elevation", "azimuth"):
        if list(run_dir.glob(f"pattern_*_{plane}.csv")):
            plot_cuts(run_dir, plane, out_dir / f"patterns_{plane}.png")
    if (run_dir / "hpbw_sweep.csv").exists():
        plot_two_column(
            run_dir / "hpbw_sweep.csv", "element spacing (wavelengths)", "HPBW (deg)",
            out_dir / "hpbw_vs_spacing.png",
        )
    if (run_dir / "area_vs_spacing.csv").exists():
        plot_two_column(
            run_dir / "area_vs_spacing.csv", "element spacing (wavelengths)", "area (m^2)",
            out_dir / "area_vs_spacing.png",
        )
    if (run_dir / "separation_vs_range.csv").exists():
        plot_separation(run_dir, out_dir / "separation_vs_range.png")


if __name__ == "__main__":
    main()
