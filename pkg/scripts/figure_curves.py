"""Write the f / g / h / x^k curve CSVs for the plotted (k, r) pairs."""

import argparse
import pathlib

from hypersample.curves import curve_rows, curves_csv, parse_grid

PAIRS = [(3, 1), (3, 9), (4, 27), (4, 64)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figure_data")
    ap.add_argument("--grid", default="0:1:201")
    ap.add_argument("--digits", type=int, default=6)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    grid = parse_grid(args.grid)
    for k, r in PAIRS:
        # g needs an integer walk degree; (3, 1) only has f, h and x^k
        which = ("f", "h", "xk") if (k, r) == (3, 1) else ("f", "g", "h", "xk")
        path = out / f"curves_k{k}_r{r}.csv"
        path.write_text(curves_csv(curve_rows(k, r, grid, which), which, args.digits))
        print(path)


if __name__ == "__main__":
    main()
