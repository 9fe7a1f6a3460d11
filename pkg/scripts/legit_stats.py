"""Rejection-sampling and gap statistics for legit strings across m."""
import argparse
import statistics

from brc.legit import gap_stats, sample_legit
from brc.params import derive_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--log-m", type=int, nargs="+", default=[8, 10, 12, 14, 16])
    args = ap.parse_args()

    print(f"{'m':>7} {'L':>3} {'W':>5} {'mean att':>9} {'max att':>8} {'max gap':>8} {'mean gap':>9}")
    for k in args.log_m:
        params = derive_params(2**k, args.t, args.c)
        attempts, worst, gaps = [], 0, []
        for seed in range(args.seeds):
            z, tries = sample_legit(params, seed)
            attempts.append(tries)
            top, hist = gap_stats(z, params)
            worst = max(worst, top)
            gaps.extend(hist.elements())
        print(f"{params.m:>7} {params.L:>3} {params.W:>5} {statistics.mean(attempts):>9.3f} "
              f"{max(attempts):>8} {worst:>8} {statistics.mean(gaps):>9.1f}")


if __name__ == "__main__":
    main()
