"""Train every acceptance condition and print one line per criterion.

Finished runs are reused and interrupted ones resume from their last
checkpoint, so the script can be stopped and restarted at any time.

    python3 demos/run_acceptance.py                 # everything (several CPU hours)
    python3 demos/run_acceptance.py --only lroom    # the L-room conditions only
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from setter_solver import acceptance as acc

DEFAULT_ROOT = Path(__file__).resolve().parents[1] / "runs" / "acceptance"

GROUPS = {
    "lroom": list(acc.LROOM_CONDITIONS),
    "alchemy": list(acc.ALCHEMY_CONDITIONS) + list(acc.TARGETING_CONDITIONS),
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--root", type=Path, default=DEFAULT_ROOT)
    parser.add_argument("--only", choices=sorted(GROUPS), default=None)
    parser.add_argument("--no-report", action="store_true", help="train only, skip the criterion evaluation")
    args = parser.parse_args(argv)

    names = GROUPS[args.only] if args.only else GROUPS["lroom"] + GROUPS["alchemy"]
    for name in names:
        for seed in acc.SEEDS:
            t = time.time()
            run_dir = acc.run(acc.condition_config(name, seed), root=args.root)
            print(f"{name} seed {seed}: {run_dir} ({time.time() - t:.0f}s)", flush=True)

    if args.no_report:
        return
    checks = [acc.criterion_gradients, acc.criterion_flow, acc.criterion_losses, acc.criterion_judge]
    checks += [lambda c=c: c(args.root) for c in acc.TRAINING_CRITERIA]
    checks.append(acc.criterion_determinism)
    for check in checks:
        print(check().line(), flush=True)


if __name__ == "__main__":
    main()
