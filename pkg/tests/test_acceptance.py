"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the terminal summary of any pytest run that
includes this file, and directly when it is executed as a script.
"""
import itertools
import math
import random
import time

import conftest
from brc.channel import attack, break_at, drop_short
from brc.decoder import DecodeFailure, decode
from brc.encoder import encode
from brc.legit import sample_legit
from brc.mu import mu_code, mu_size
from brc.oracle import (
    confusable,
    histogram_class_count,
    histogram_decode,
    histogram_encode,
    redundancy_lower_bound,
)
from brc.params import growth_scale, derive_params
from brc.rs import SparseMessage, rs_code
from rs_harness import corrupt

POINTS = [(256, 1, 3), (256, 2, 3), (1024, 2, 3), (1024, 4, 3)]
STRATEGIES = ["uniform", "signature-target", "marker-target", "boundary-target"]


def record(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    conftest.CRITERIA.append(line)
    print(line)
    assert ok, line


def _round_trips(trials, threshold=None):
    """Seeded encode/break/decode over every parameter point; returns per-point success."""
    results = {}
    for m, t, c in POINTS:
        params = derive_params(m, t, c)
        ok = 0
        for trial in range(trials):
            seed = 7919 * trial + m + t
            z, _ = sample_legit(params, seed)
            cw = encode(z, params)
            cuts = attack(STRATEGIES[trial % 4], cw, params, seed)
            frags = break_at(cw, cuts)
            if threshold is not None:
                frags = drop_short(frags, threshold(params), params.L)
            random.Random(seed).shuffle(frags)
            try:
                ok += decode(frags, params) == z
            except DecodeFailure:
                pass
        results[(m, t, c)] = ok
    return results


def test_criterion_1_round_trip():
    t0 = time.time()
    res = _round_trips(1000)
    detail = ", ".join(f"(m={m},t={t},c={c}) {k}/1000" for (m, t, c), k in res.items())
    record(1, all(k == 1000 for k in res.values()), f"{detail} [{time.time() - t0:.0f}s]")


def test_criterion_2_exhaustive_small():
    t0 = time.time()
    p1 = derive_params(256, 1, 3)
    single_fail = 0
    patterns1 = 0
    for seed in range(3):
        z, _ = sample_legit(p1, seed)
        cw = encode(z, p1)
        for cuts in itertools.chain([()], ((p,) for p in range(1, p1.n))):
            patterns1 += 1
            try:
                single_fail += decode(break_at(cw, cuts), p1) != z
            except DecodeFailure:
                single_fail += 1
    p2 = derive_params(256, 2, 3)
    rng = random.Random(2024)
    pair_fail = 0
    patterns2 = 0
    for seed in range(10):
        z, _ = sample_legit(p2, seed)
        cw = encode(z, p2)
        total = math.comb(p2.n - 1, 2)
        for index in rng.sample(range(total), 10_000):
            # unrank a 2-subset of [1, n-1] in colex order
            b = math.isqrt(2 * index) + 1
            while math.comb(b, 2) > index:
                b -= 1
            a = index - math.comb(b, 2)
            cuts = (a + 1, b + 1)
            patterns2 += 1
            try:
                pair_fail += decode(break_at(cw, cuts), p2) != z
            except DecodeFailure:
                pair_fail += 1
    ok = single_fail == 0 and pair_fail == 0 and patterns1 == 3 * (p1.n - 1 + 1)
    record(
        2,
        ok,
        f"t=1 n={p1.n}: {patterns1 - single_fail}/{patterns1} (all patterns, 3 strings); "
        f"t=2 n={p2.n}: {patterns2 - pair_fail}/{patterns2} sampled pairs [{time.time() - t0:.0f}s]",
    )


def test_criterion_3_loss_tolerance():
    t0 = time.time()
    res = _round_trips(1000, threshold=lambda p: p.L)
    detail = ", ".join(f"(m={m},t={t},c={c}) {k}/1000" for (m, t, c), k in res.items())
    record(3, all(k == 1000 for k in res.values()), f"drop < L: {detail} [{time.time() - t0:.0f}s]")


def test_criterion_4_legit_sampling():
    params = derive_params(2**16, 2, 3)
    attempts = [sample_legit(params, seed)[1] for seed in range(100)]
    mean = sum(attempts) / len(attempts)
    rate = len(attempts) / sum(attempts)
    record(4, mean <= 1.2 and rate >= 0.9, f"m=2^16: mean attempts {mean:.3f} (<= 1.2), legit rate per draw {rate:.3f} (>= 0.9)")


def test_criterion_5_redundancy():
    points = POINTS + [(2**12, 2, 3), (2**12, 8, 3), (2**14, 4, 3), (2**16, 2, 3), (2**16, 8, 3)]
    rows = []
    ok = True
    for m, t, c in points:
        params = derive_params(m, t, c)
        z, _ = sample_legit(params, 1)
        n = len(encode(z, params))
        exact = n - m - params.L == 3 * t * params.u_len and n == params.n
        bound = redundancy_lower_bound(n, t)
        ok &= exact and n - m >= bound
        rows.append((m, t, n, n - m, bound, (n - m) / growth_scale(params)))
    print("\n     m   t       n   n-m   lower-bound   (n-m)/(t log n loglog n)")
    for m, t, n, red, bound, ratio in rows:
        print(f"{m:>6} {t:>3} {n:>7} {red:>5} {bound:>13.3f}   {ratio:.2f}")
    record(5, ok, f"n - m - L = 3 t uLen and n - m >= lower bound at {len(points)} points; ratio range "
                  f"{min(r[-1] for r in rows):.1f}..{max(r[-1] for r in rows):.1f} (reported only)")


def test_criterion_6_close_words_confusable():
    rng = random.Random(6)
    checked = hits = 0
    for n in (8, 10):
        for t in (2, 3, 4):
            dmax = math.ceil((t + 1) / 2) - 1
            for _ in range(500):
                x = [rng.choice("01") for _ in range(n)]
                y = list(x)
                # equal weight forces an even distance: swap d/2 one-zero pairs
                swaps = rng.randint(0, dmax // 2)
                ones = [i for i in range(n) if x[i] == "1"]
                zeros = [i for i in range(n) if x[i] == "0"]
                swaps = min(swaps, len(ones), len(zeros))
                for i, j in zip(rng.sample(ones, swaps), rng.sample(zeros, swaps)):
                    y[i], y[j] = "0", "1"
                xs, ys = "".join(x), "".join(y)
                assert xs.count("1") == ys.count("1")
                assert sum(a != b for a, b in zip(xs, ys)) <= dmax
                checked += 1
                hits += confusable(xs, ys, t)
    record(6, hits == checked, f"{hits}/{checked} equal-weight pairs within distance ceil((t+1)/2)-1 are t-confusable")


def test_criterion_7_reed_solomon():
    msg_len, p = 16, 8
    lines = []
    ok = True
    for w in (8, 24, 48):
        code = rs_code(w, msg_len, p)
        rng = random.Random(w)
        good = 0
        for _ in range(10_000):
            msg = SparseMessage.from_dense([rng.getrandbits(w) for _ in range(msg_len)])
            f = rng.randint(0, p)
            e = rng.randint(0, (p - f) // 2)
            good += code.decode(corrupt(code, msg.to_dict(), code.encode(msg), rng, e, f)) == msg
        erasure_good = 0
        for _ in range(1000):
            msg = SparseMessage.from_dense([rng.getrandbits(w) for _ in range(msg_len)])
            erasure_good += code.decode(corrupt(code, msg.to_dict(), code.encode(msg), rng, 0, p)) == msg
        ok &= good == 10_000 and erasure_good == 1000
        lines.append(f"w={w} {good}/10000, f=p {erasure_good}/1000")
    record(7, ok, "; ".join(lines))


def test_criterion_8_mu_code():
    violations = 0
    for L in (8, 12):
        words = [mu_code(L).unrank(i) for i in range(mu_size(L))]
        for a in words:
            for b in words:
                violations += sum(a[:ell] == b[L - ell :] for ell in range(1, L))
    bound_ok = all(mu_size(L) * 32 * L >= 2**L for L in range(8, 129, 2))
    ok = violations == 0 and mu_size(8) == 4 and mu_size(12) == 31 and bound_ok
    record(8, ok, f"{violations} prefix/suffix violations at L in {{8, 12}}; mu_size(8)={mu_size(8)}, "
                  f"mu_size(12)={mu_size(12)}; size >= 2^L/(32L) for even L in [8, 128]: {bound_ok}")


def test_criterion_9_histogram_code():
    q, n = 4, 5
    direct = sum(1 for h in itertools.product(range(n + 1), repeat=q) if sum(h) == n)
    count = histogram_class_count(q, n)
    good = total = 0
    for index in range(count):
        word = histogram_encode(index, q, n)
        for k in range(n):
            for cuts in itertools.combinations(range(1, n), k):
                total += 1
                good += histogram_decode(break_at(word, cuts), q, n) == index
    ok = count == direct == 56 and good == total == 56 * 16
    record(9, ok, f"class count {count} = enumeration {direct}; {good}/{total} (56 classes x 16 break patterns) decoded")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
