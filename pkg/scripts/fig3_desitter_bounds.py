"""De Sitter bound curves, one CSV per Alice radius so each reaches the horizon."""

import argparse
from pathlib import Path

from gravotto.sweep import DEFAULT_DS_RADII, DEFAULT_POINTS, desitter_bound_curves, log_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    ap.add_argument("--points", type=int, default=DEFAULT_POINTS)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    a = 1.0
    for r_a in DEFAULT_DS_RADII:
        room = a - r_a
        table = desitter_bound_curves(a, [r_a], log_grid(1e-3 * room, room * (1 - 1e-6), args.points))
        path = args.outdir / f"fig3_desitter_ra{r_a:g}.csv"
        path.write_text(table.to_csv())
        print(f"wrote {path}  (min bound {min(table.values[0]):.3g})")


if __name__ == "__main__":
    main()
