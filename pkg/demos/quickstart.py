"""Ten-minute tour: train a short L-room run with and without the setter, then plot.

    python3 demos/quickstart.py [--steps 300000] [--root runs/quickstart]

Writes ``curves.png`` (windowed valid-goal success of both runs) and
``heatmap.png`` (where the setter puts its goals over training) into the root.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from setter_solver.analysis import compare, format_table, plot_curves, plot_goal_heatmaps
from setter_solver.config import ExperimentConfig
from setter_solver.experiment import run


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--steps", type=int, default=300_000)
    parser.add_argument("--root", type=Path, default=Path("runs/quickstart"))
    args = parser.parse_args(argv)

    common = dict(env="lroom", steps=args.steps, lroom_start=[0.9, 0.1], episode_limit=40,
                  setter_batch=16, goal_log_every=max(args.steps // 8, 1000))
    dirs = {}
    for mode in ("full", "random"):
        cfg = ExperimentConfig(name=f"quickstart_{mode}", setter_mode=mode, **common)
        dirs[mode] = run(cfg, root=args.root)
        print(f"{mode}: {dirs[mode]}")

    print(format_table(compare(list(dirs.values()), "valid_success"), "valid_success"))
    plot_curves(list(dirs.values()), args.root / "curves.png", metric="valid_success")
    plot_goal_heatmaps(dirs["full"], args.root / "heatmap.png")
    print(f"plots in {args.root}")


if __name__ == "__main__":
    main()
