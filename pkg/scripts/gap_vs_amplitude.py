#!/usr/bin/env python3
"""Print the folded quasienergy gap along a drive-amplitude cut.

Example:
    python scripts/gap_vs_amplitude.py --eps0 1.05 --delta 0.37 --amps 0:6:25
"""
import argparse

from floquet_probe import QubitParams, quasienergy_gap, solve_qubit
from floquet_probe.sweep import AxisSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps0", type=float, default=1.05)
    ap.add_argument("--delta", type=float, default=0.37)
    ap.add_argument("--amps", default="0:6:25", help="min:max:count")
    args = ap.parse_args()

    axis = AxisSpec.parse(args.amps, "amps")
    print("A_over_hw,gap_over_hw")
    for amp in axis.points():
        gap = quasienergy_gap(solve_qubit(QubitParams(args.eps0, args.delta,
                                                      amp)))
        print(f"{amp:.6f},{gap:.9f}")


if __name__ == "__main__":
    main()
