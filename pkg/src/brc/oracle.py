"""Brute-force and closed-form companions: confusability, the redundancy
lower bound, and the break-immune histogram code for large alphabets."""
from __future__ import annotations

import itertools
import math
import string
from collections import Counter
from functools import lru_cache

__all__ = [
    "CONFUSABLE_MAX_LEN",
    "confusable",
    "fragment_multisets",
    "histogram_class_count",
    "histogram_decode",
    "histogram_encode",
    "histogram_rank",
    "histogram_unrank",
    "redundancy_lower_bound",
]

CONFUSABLE_MAX_LEN = 16


@lru_cache(maxsize=4096)
def fragment_multisets(x: str, t: int) -> frozenset[tuple[str, ...]]:
    """Every sorted fragment multiset reachable from x with at most t cuts."""
    n = len(x)
    out = set()
    for k in range(min(t, n - 1) + 1):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0, *cuts, n)
            out.add(tuple(sorted(x[a:b] for a, b in zip(bounds, bounds[1:]))))
    return frozenset(out)


def confusable(x: str, y: str, t: int) -> bool:
    """True iff some <= t cuts of x and some <= t cuts of y give the same multiset."""
    if len(x) != len(y):
        raise ValueError("words must have equal length")
    if len(x) > CONFUSABLE_MAX_LEN:
        raise ValueError(f"length {len(x)} exceeds the exhaustive cap {CONFUSABLE_MAX_LEN}")
    if t < 0:
        raise ValueError("t must be non-negative")
    a, b = fragment_multisets(x, t), fragment_multisets(y, t)
    if len(a) > len(b):
        a, b = b, a
    return any(s in b for s in a)


def redundancy_lower_bound(n: int, t: int) -> float:
    """log2 C(n, t') - log2 n with t' = floor((ceil((t+1)/2) - 1) / 2), floored at 0."""
    if not 1 <= t < n:
        raise ValueError(f"need 1 <= t < n, got t={t}, n={n}")
    tp = (-(-(t + 1) // 2) - 1) // 2
    return max(0.0, math.log2(math.comb(n, tp)) - math.log2(n))


def histogram_class_count(q: int, n: int) -> int:
    return math.comb(q + n - 1, n)


def _alphabet(q: int, alphabet: str | None) -> str:
    if alphabet is None:
        if q > len(string.ascii_lowercase):
            raise ValueError(f"q={q}: pass an explicit alphabet")
        alphabet = string.ascii_lowercase[:q]
    if len(alphabet) != q or len(set(alphabet)) != q:
        raise ValueError(f"alphabet must have {q} distinct symbols")
    return alphabet


def histogram_rank(counts, n: int) -> int:
    """Colex rank of a count vector among all vectors of the same length summing to n."""
    if sum(counts) != n or min(counts) < 0:
        raise ValueError(f"counts {counts} do not form a histogram of {n} symbols")
    symbols = [s for s, h in enumerate(counts) for _ in range(h)]
    # stars and bars: the sorted symbols s_i map to the n-subset {s_i + i}
    return sum(math.comb(s + i, i + 1) for i, s in enumerate(symbols))


def histogram_unrank(index: int, q: int, n: int) -> list[int]:
    total = histogram_class_count(q, n)
    if not 0 <= index < total:
        raise ValueError(f"class index {index} out of range [0, {total})")
    comb = []
    r = index
    for i in range(n, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= r:
            c += 1
        r -= math.comb(c, i)
        comb.append(c)
    counts = [0] * q
    for i, c in enumerate(reversed(comb)):
        counts[c - i] += 1
    return counts


def histogram_encode(index: int, q: int, n: int, alphabet: str | None = None) -> str:
    sym = _alphabet(q, alphabet)
    counts = histogram_unrank(index, q, n)
    return "".join(s * h for s, h in zip(sym, counts))


def histogram_decode(frags, q: int, n: int, alphabet: str | None = None) -> int:
    sym = _alphabet(q, alphabet)
    tally = Counter()
    for f in frags:
        tally.update(f)
    extra = set(tally) - set(sym)
    if extra:
        raise ValueError(f"symbols {sorted(extra)} are outside the alphabet")
    if sum(tally.values()) != n:
        raise ValueError(f"fragments hold {sum(tally.values())} symbols, expected {n}")
    return histogram_rank([tally[s] for s in sym], n)
