"""Reissner-Nordstrom bound curves (one CSV per charge) in units of r_s."""

import argparse
from pathlib import Path

from gravotto.sweep import DEFAULT_POINTS, DEFAULT_RN_CHARGES, DEFAULT_RN_OFFSETS, log_grid, rn_bound_curves


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    ap.add_argument("--points", type=int, default=DEFAULT_POINTS)
    ap.add_argument("--max-separation", type=float, default=100.0, help="in units of r_s")
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    r_s = 1.0
    seps = log_grid(1e-2, args.max_separation, args.points)
    for charge in DEFAULT_RN_CHARGES:
        table = rn_bound_curves(r_s, charge * r_s, [d * r_s for d in DEFAULT_RN_OFFSETS], seps)
        path = args.outdir / f"fig2_rn_rq{charge:g}.csv"
        path.write_text(table.to_csv())
        print(f"wrote {path}  (r+ = {table.metadata['r_plus']})")


if __name__ == "__main__":
    main()
