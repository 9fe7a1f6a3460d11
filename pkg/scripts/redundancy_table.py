"""Measured redundancy n - m against the lower bound and the t log n loglog n scale."""
import argparse

from brc.oracle import redundancy_lower_bound
from brc.params import growth_scale, derive_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--t", type=int, nargs="+", default=[1, 2, 4, 8])
    ap.add_argument("--log-m", type=int, nargs="+", default=[8, 10, 12, 14, 16, 20])
    args = ap.parse_args()

    print(f"{'m':>8} {'t':>3} {'L':>3} {'levels':>6} {'n':>9} {'n-m':>8} {'bound':>9} {'ratio':>7}")
    for k in args.log_m:
        for t in args.t:
            p = derive_params(2**k, t, args.c)
            print(f"{p.m:>8} {t:>3} {p.L:>3} {p.num_levels:>6} {p.n:>9} {p.n - p.m:>8} "
                  f"{redundancy_lower_bound(p.n, t):>9.2f} {(p.n - p.m) / growth_scale(p):>7.2f}")


if __name__ == "__main__":
    main()
