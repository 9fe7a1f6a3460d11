"""Adversarial break channel.

A cut "after bit p" (1 <= p <= n-1) separates c[:p] from c[p:].  Fragment
multisets are returned as sorted lists; the decoder never sees their order.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable

from brc.mu import mu_code
from brc.params import Params

__all__ = ["STRATEGIES", "attack", "break_at", "drop_short", "pieces_in_order"]

STRATEGIES = ("uniform", "signature-target", "marker-target", "boundary-target", "exhaustive-worst")


def _validate(n: int, cuts) -> list[int]:
    cuts = list(cuts)
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"cuts must be strictly ascending without duplicates: {cuts}")
    if cuts and not (1 <= cuts[0] and cuts[-1] <= n - 1):
        raise ValueError(f"cuts must lie in [1, {n - 1}]: {cuts}")
    return cuts


def pieces_in_order(c: str, cuts) -> list[str]:
    """Fragments in their true left-to-right order (harness use only)."""
    cuts = _validate(len(c), cuts)
    bounds = [0] + cuts + [len(c)]
    return [c[a:b] for a, b in zip(bounds, bounds[1:])]


def break_at(c: str, cuts) -> list[str]:
    return sorted(pieces_in_order(c, cuts))


def drop_short(frags, threshold: int, L: int | None = None) -> list[str]:
    """Remove fragments shorter than `threshold` (which may not exceed L)."""
    if L is not None and threshold > L:
        raise ValueError(f"threshold {threshold} exceeds L={L}, outside the loss guarantee")
    return [f for f in frags if len(f) >= threshold]


def _uniform(n: int, k: int, rng: random.Random) -> list[int]:
    return sorted(rng.sample(range(1, n), min(k, n - 1)))


def _fill(cuts: set[int], n: int, t: int, rng: random.Random) -> list[int]:
    free = [p for p in range(1, n) if p not in cuts]
    extra = rng.sample(free, min(t - len(cuts), len(free)))
    return sorted(cuts | set(extra))


def attack(strategy: str, c: str, params: Params, seed: int, decoder: Callable | None = None) -> list[int] | None:
    """A break pattern of at most t cuts chosen by the named strategy.

    exhaustive-worst enumerates every pattern of <= t cuts (n <= 24 only) and
    returns the first one on which `decoder(fragments)` fails, or None when
    the decoder survives them all.
    """
    n, t, L = len(c), params.t, params.L
    rng = random.Random(seed)
    if strategy == "uniform":
        return _uniform(n, t, rng)
    if strategy == "signature-target":
        start = params.info_start
        spans = [start + p for p in mu_code(L).positions(c[start:])]
        chosen = rng.sample(spans, min(t, len(spans)))
        cuts = {s + rng.randrange(1, L) for s in chosen}
        return _fill(cuts, n, t, rng)
    if strategy == "marker-target":
        size = params.inst_len
        chosen = rng.sample(range(params.t), min(t, params.t))
        return _fill({i * size + rng.randrange(1, size) for i in chosen}, n, t, rng)
    if strategy == "boundary-target":
        lo = max(1, params.info_start - 2 * L)
        hi = min(n - 1, params.info_start + 3 * L)
        window = range(lo, hi + 1)
        return sorted(rng.sample(window, min(t, len(window))))
    if strategy == "exhaustive-worst":
        if n > 24:
            raise ValueError(f"exhaustive-worst needs n <= 24, got {n}")
        if decoder is None:
            raise ValueError("exhaustive-worst needs a decoder callback")
        for k in range(t + 1):
            for cuts in itertools.combinations(range(1, n), k):
                try:
                    ok = decoder(break_at(c, cuts))
                except Exception:
                    ok = False
                if not ok:
                    return list(cuts)
        return None
    raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
