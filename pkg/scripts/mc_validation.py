"""Monte Carlo stroke means against the closed form over many seeds."""

import argparse

from gravotto import CycleParams, ReissnerNordstrom, run_cycle, simulate_cycles
from gravotto.montecarlo import z_scores


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10**6)
    ap.add_argument("--seeds", type=int, default=20)
    args = ap.parse_args()

    # chi = 2: f(10)/f(2.5) = 4 with r_s = 2
    params = CycleParams(ReissnerNordstrom(2.0, 0.0), 10.0, 2.5, t_cold=1.0, t_hot=1.5, gap_a=1.0)
    report = run_cycle(params)
    analytic = (report.w1, report.q2, report.w3, report.q4)
    print("analytic  " + "  ".join(f"{x:+.6f}" for x in analytic))
    within = 0
    for seed in range(args.seeds):
        ledger = simulate_cycles(params, args.samples, seed)
        z = z_scores(ledger, analytic)
        within += max(z) <= 4
        print(f"seed {seed:3d} " + "  ".join(f"{m:+.6f}" for m in ledger.means) + f"   max z {max(z):.2f}")
    print(f"{within}/{args.seeds} seeds within 4 SE on every stroke")


if __name__ == "__main__":
    main()
