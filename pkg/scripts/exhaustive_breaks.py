"""Decode every pattern of at most one cut, plus sampled pairs, for a few seeds."""
import argparse
import itertools
import random
import time

from brc.channel import break_at
from brc.decoder import DecodeFailure, decode
from brc.encoder import encode
from brc.legit import sample_legit
from brc.params import derive_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=256)
    ap.add_argument("--t", type=int, default=1)
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=1)
    ap.add_argument("--pairs", type=int, default=0, help="random 2-cut patterns per seed (needs t >= 2)")
    args = ap.parse_args()

    params = derive_params(args.m, args.t, args.c)
    for seed in range(args.seeds):
        z, _ = sample_legit(params, seed)
        cw = encode(z, params)
        patterns = [()] + [(p,) for p in range(1, params.n)]
        if args.pairs and args.t >= 2:
            rng = random.Random(seed)
            patterns += [tuple(sorted(rng.sample(range(1, params.n), 2))) for _ in range(args.pairs)]
        t0 = time.perf_counter()
        failures = []
        for cuts in patterns:
            try:
                if decode(break_at(cw, cuts), params) != z:
                    failures.append(cuts)
            except DecodeFailure:
                failures.append(cuts)
        dt = time.perf_counter() - t0
        print(f"seed {seed}: n={params.n} {len(patterns) - len(failures)}/{len(patterns)} ok "
              f"({1000 * dt / len(patterns):.2f} ms/pattern)")
        for cuts in itertools.islice(failures, 10):
            print(f"  failed: {list(cuts)}")


if __name__ == "__main__":
    main()
