#!/usr/bin/env python3
"""Run the built-in reproduction study and print where the summary landed.

Equivalent to `beamkit reproduce-paper`; kept as a script so the study can
be launched without installing the console entry point.
"""

import argparse

from beamkit.runner import DEFAULT_STUDY_SEED, reproduce_paper


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reproduction", help="output directory")
    parser.add_argument("--seed", type=int, default=DEFAULT_STUDY_SEED, help="experiment seed")
    args = parser.parse_args()

    report, summary = reproduce_paper(args.out, args.seed)
    print(f"summary: {summary}")
    for row in report.link_stats:
        print(
            f"{row['plane']:>9}  {row['array']:<9} "
            f"mean SINR {row['mean_sinr_db']:6.2f} dB   mean SE {row['mean_se']:.3f} bps/Hz"
        )


if __name__ == "__main__":
    main()
