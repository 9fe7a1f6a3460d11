"""Legit information strings: sampling by rejection and checking.

A string z of length m is legit when
  (I)   every length-W window contains a full level-0 signature,
  (II)  any two non-overlapping length-L substrings differ, and
  (III) none of the markers m_0..m_t occurs in it.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from brc.mu import mu_code
from brc.params import Params

__all__ = [
    "DuplicateWindow",
    "LegitReport",
    "MarkerPresent",
    "NotLegitError",
    "SamplingError",
    "WindowNoSignature",
    "check_legit",
    "gap_stats",
    "sample_legit",
]


class NotLegitError(ValueError):
    def __init__(self, report: "LegitReport"):
        super().__init__(f"string is not legit: {report.violation}")
        self.report = report


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class WindowNoSignature:
    position: int

    def __str__(self):
        return f"WindowNoSignature(position={self.position})"


@dataclass(frozen=True)
class DuplicateWindow:
    pos1: int
    pos2: int

    def __str__(self):
        return f"DuplicateWindow(pos1={self.pos1}, pos2={self.pos2})"


@dataclass(frozen=True)
class MarkerPresent:
    position: int
    marker_index: int

    def __str__(self):
        return f"MarkerPresent(position={self.position}, marker_index={self.marker_index})"


@dataclass(frozen=True)
class LegitReport:
    ok: bool
    violation: WindowNoSignature | DuplicateWindow | MarkerPresent | None = None


def _first_uncovered_window(positions: list[int], m: int, W: int, L: int) -> int | None:
    """Start of the first length-W window without a full signature inside."""
    if W > m:
        return None
    # window [s, s+W) is covered iff some signature p has s <= p <= s + W - L
    s = 0
    for p in positions:
        if p > s + W - L:
            return s
        s = p + 1
        if s > m - W:
            return None
    return s if s <= m - W else None


def _first_duplicate(z: str, L: int) -> tuple[int, int] | None:
    first: dict[str, int] = {}
    for q in range(len(z) - L + 1):
        w = z[q : q + L]
        p = first.setdefault(w, q)
        if q - p >= L:
            return p, q
    return None


def check_legit(z: str, params: Params) -> LegitReport:
    if len(z) != params.m:
        raise ValueError(f"expected {params.m} bits, got {len(z)}")
    code = mu_code(params.L)
    found = code.scan(z)
    gap = _first_uncovered_window([p for p, _ in found], params.m, params.W, params.L)
    if gap is not None:
        return LegitReport(False, WindowNoSignature(gap))
    dup = _first_duplicate(z, params.L)
    if dup is not None:
        return LegitReport(False, DuplicateWindow(*dup))
    for pos, idx in found:
        if idx <= params.t:
            return LegitReport(False, MarkerPresent(pos, idx))
    return LegitReport(True)


def sample_legit(params: Params, seed: int, max_attempts: int = 1000) -> tuple[str, int]:
    """Draw uniform m-bit strings until one is legit.  Returns (z, attempts)."""
    rng = random.Random(seed)
    m = params.m
    for attempt in range(1, max_attempts + 1):
        z = format(rng.getrandbits(m), f"0{m}b")
        if check_legit(z, params).ok:
            return z, attempt
    raise SamplingError(
        f"no legit string after {max_attempts} draws (m={m}, t={params.t}, c={params.c}); "
        "parameters are probably too small for rejection sampling"
    )


def gap_stats(z: str, params: Params) -> tuple[int, Counter]:
    """Largest run of bits not covered by a level-0 signature, and the histogram of runs.

    Runs include the stretch before the first and after the last signature.
    """
    L = params.L
    starts = mu_code(L).positions(z)
    gaps = []
    prev_end = 0
    for p in starts:
        gaps.append(p - prev_end)
        prev_end = p + L
    gaps.append(len(z) - prev_end)
    return max(gaps), Counter(gaps)
