"""Decoder: reassemble z from an unordered multiset of oriented fragments.

Pipeline: split off m_0 and classify fragments, read the surviving redundancy
strings, repair the level-0 adjacency with Reed-Solomon, walk it from m_0 to
place every level-0 signature, affix fragments on known signatures, then
repair each signature level and finally the residuals by erasure decoding.
"""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field as dc_field

from brc.encoder import (
    adjacency_code,
    decompress_row,
    compress_row,
    depad,
    level_keys,
    residual_code,
    residual_spans,
    signature_code,
)
from brc.gf import field
from brc.mu import mu_code
from brc.params import Params
from brc.rs import ReceivedWord, RSDecodeError

__all__ = [
    "Classification",
    "DecodeConflict",
    "DecodeFailure",
    "PartialString",
    "decode",
    "extract_approx_adjacency",
    "extract_redundancy_strings",
    "repair_adjacency",
    "split_and_classify",
]

UNKNOWN = ord("*")
_ONES = bytes.maketrans(b"01*", b"010")
_ZEROS = bytes.maketrans(b"01*", b"100")


class DecodeFailure(Exception):
    """Raised when the fragments cannot be decoded (break budget exceeded)."""


class DecodeConflict(DecodeFailure):
    """Fragments contradict each other; the input lies outside the channel model."""


@dataclass
class Classification:
    r: list[str]
    z: list[str]
    discarded: list[str]
    # level-0 scans of the z fragments, parallel to `z`
    z_scans: list[list[tuple[int, int]]] = dc_field(default_factory=list)


def split_and_classify(frags, params: Params) -> Classification:
    L, t = params.L, params.t
    code = mu_code(L)
    m0 = code.unrank(0)
    pieces = []
    for f in frags:
        i = f.find(m0)
        if i > 0:
            pieces += [f[:i], f[i:]]
        else:
            pieces.append(f)
    out = Classification([], [], [])
    for f in pieces:
        found = code.scan(f)
        if any(1 <= idx <= t for _, idx in found):
            out.r.append(f)
        elif found or len(f) >= 3 * L:
            out.z.append(f)
            out.z_scans.append(found)
        else:
            out.discarded.append(f)
    return out


def extract_approx_adjacency(cls: Classification, params: Params) -> dict[int, tuple[int, int]]:
    rows: dict[int, tuple[int, int]] = {}
    for found in cls.z_scans:
        for (p, a), (q, b) in zip(found, found[1:]):
            row = (b, q - p)
            old = rows.setdefault(a, row)
            if old != row:
                raise DecodeConflict(f"row {a} read as both {old} and {row}")
    return rows


def extract_redundancy_strings(r_frags, params: Params) -> dict[int, str]:
    L, t = params.L, params.t
    half = L // 2
    step = L + half
    K = params.chunks_per_string
    code = mu_code(L)
    out: dict[int, str] = {}
    for f in r_frags:
        by_marker: dict[int, list[int]] = {}
        for p, idx in code.scan(f):
            if 1 <= idx <= t:
                by_marker.setdefault(idx, []).append(p)
        for l, pos in by_marker.items():
            if len(pos) != K or pos[-1] + step > len(f):
                continue
            if any(b - a != step for a, b in zip(pos, pos[1:])):
                continue
            out[l] = "".join(f[p + L : p + step] for p in pos)
    return out


def _parities(strings: dict[int, str], params: Params, per_string: int, width: int, offset) -> list[int | None]:
    parity: list[int | None] = []
    for l in range(1, params.t + 1):
        u = strings.get(l)
        for j in range(per_string):
            if u is None:
                parity.append(None)
            else:
                start = offset(j)
                assert 0 <= start and start + width <= params.u_len
                parity.append(int(u[start : start + width], 2))
    return parity


def repair_adjacency(approx: dict[int, tuple[int, int]], strings: dict[int, str], params: Params):
    L = params.L
    code = adjacency_code(params)
    message = {a: compress_row(r, L) for a, r in approx.items()}
    parity = _parities(strings, params, 4, 2 * L, params.adj_offset)
    try:
        msg = code.decode(ReceivedWord(params.mu_size, message, parity))
        return {a: decompress_row(e, L) for a, e in msg.entries}
    except (RSDecodeError, ValueError) as exc:
        raise DecodeFailure(f"break budget exceeded: adjacency repair failed ({exc})") from exc


class PartialString:
    """y' = m_0 . z with unknown cells, plus the optional ground truth for harness checks."""

    def __init__(self, params: Params, truth: str | None = None):
        self.L = params.L
        self.size = params.y_len
        self.cells = bytearray(b"*" * self.size)
        self.truth = None
        m0 = mu_code(params.L).unrank(0)
        if truth is not None:
            self.truth = (m0 + truth).encode()
        self.write(0, m0.encode())

    def read(self, start: int, length: int) -> bytes:
        return bytes(self.cells[start : start + length])

    def consistent(self, start: int, bits: bytes) -> bool:
        if start < 0 or start + len(bits) > self.size:
            return False
        seg = self.cells[start : start + len(bits)]
        ones = int(seg.translate(_ONES), 2)
        zeros = int(seg.translate(_ZEROS), 2)
        value = int(bits, 2)
        return not (ones & ~value or zeros & value)

    def write(self, start: int, bits: bytes) -> None:
        if not self.consistent(start, bits):
            raise DecodeConflict(f"write of {len(bits)} bits at {start} contradicts known cells")
        if self.truth is not None:
            assert self.truth[start : start + len(bits)] == bits, f"wrong write at {start}"
        self.cells[start : start + len(bits)] = bits

    def complete(self) -> bool:
        return UNKNOWN not in self.cells


def _known_windows(state: PartialString, keys: list[int]) -> dict[bytes, int]:
    L = state.L
    out: dict[bytes, int] = {}
    for k in keys:
        w = state.read(k, L)
        if UNKNOWN in w:
            continue
        if out.setdefault(w, k) != k:
            raise DecodeConflict(f"signature value repeated at {out[w]} and {k}")
    return out


def _affix(state: PartialString, frags: list[str], keys: list[int]) -> list[str]:
    """Place every fragment whose known-signature anchors agree on one offset."""
    L = state.L
    pending = list(frags)
    progress = True
    while progress and pending:
        progress = False
        known = _known_windows(state, keys)
        if not known:
            break
        rest = []
        for f in pending:
            fb = f.encode()
            offsets = set()
            for q in range(len(fb) - L + 1):
                k = known.get(fb[q : q + L])
                if k is not None:
                    offsets.add(k - q)
            fits = [o for o in offsets if state.consistent(o, fb)]
            if len(fits) == 1:
                state.write(fits[0], fb)
                progress = True
            else:
                rest.append(f)
        pending = rest
    return pending


def _repair_symbols(code, values: list[int | None], parity, what: str) -> list[int]:
    if all(v is not None for v in values):
        return values
    erased = frozenset(i for i, v in enumerate(values) if v is None)
    word = ReceivedWord(code.msg_len, {i: v for i, v in enumerate(values) if v}, parity, erased)
    try:
        msg = code.decode(word).to_dict()
    except RSDecodeError as exc:
        raise DecodeFailure(f"break budget exceeded: {what} repair failed ({exc})") from exc
    out = [msg.get(i, 0) for i in range(len(values))]
    if any(v is not None and v != out[i] for i, v in enumerate(values)):
        raise DecodeFailure(f"break budget exceeded: {what} repair changed a known symbol")
    return out


@contextmanager
def _timed(stats: dict | None, name: str):
    t0 = time.perf_counter()
    yield
    if stats is not None:
        stats[name] = stats.get(name, 0.0) + time.perf_counter() - t0


def decode(frags, params: Params, truth: str | None = None, stats: dict | None = None) -> str:
    """Recover z from fragments.

    `truth` enables per-write assertions (harness only).  `stats`, if given,
    collects per-stage seconds, per-level erasure counts and the number of
    fragments never placed by anchoring.
    """
    L = params.L
    end = params.y_len
    code = mu_code(L)

    with _timed(stats, "classify"):
        cls = split_and_classify(frags, params)
        strings = extract_redundancy_strings(cls.r, params)
        approx = extract_approx_adjacency(cls, params)
    with _timed(stats, "adjacency"):
        adjacency = repair_adjacency(approx, strings, params)

    with _timed(stats, "place"):
        state = PartialString(params, truth)
        keys = [0]
        a, pos = 0, 0
        seen = {0}
        while a in adjacency:
            b, w = adjacency[a]
            pos += w
            if b in seen or w < L or pos + L > end or b >= code.size:
                raise DecodeFailure("break budget exceeded: adjacency walk left the string")
            seen.add(b)
            state.write(pos, code.unrank(b).encode())
            keys.append(pos)
            a = b
        if len(seen) != len(adjacency) + 1:
            raise DecodeFailure("break budget exceeded: adjacency is not a single path")
        pending = _affix(state, cls.z, keys)

    with _timed(stats, "levels"):
        sig = signature_code(params)
        F1 = field(params.field_sig)
        for level in range(1, params.num_levels + 1):
            keys = level_keys(keys, end, L)
            values = []
            for k in keys:
                w = state.read(k, L)
                values.append(None if UNKNOWN in w else int(w, 2))
            if stats is not None:
                stats.setdefault("level_erasures", []).append(values.count(None))
            if None in values:
                parity = _parities(strings, params, 2, L, lambda j: params.level_offset(level, j))
                fixed = _repair_symbols(sig, values, parity, f"level {level}")
                for k, v, old in zip(keys, fixed, values):
                    if old is None:
                        state.write(k, F1.to_bits(v).encode())
            if pending:
                pending = _affix(state, pending, keys)

    if stats is not None:
        stats["unplaced"] = len(pending)

    with _timed(stats, "residuals"):
        try:
            spans = residual_spans(keys, end, L)
        except AssertionError as exc:
            raise DecodeFailure(f"break budget exceeded: {exc}") from exc
        values = []
        for start, length in spans:
            w = state.read(start, length)
            values.append(None if UNKNOWN in w else int(w.decode() + "1" + "0" * (L - length - 1), 2))
        if None in values:
            parity = _parities(strings, params, 3, L, params.residual_offset)
            fixed = _repair_symbols(residual_code(params), values, parity, "residual")
            for (start, length), v, old in zip(spans, fixed, values):
                if old is None:
                    try:
                        bits = depad(F1.to_bits(v))
                    except ValueError as exc:
                        raise DecodeFailure(f"break budget exceeded: residual at {start}: {exc}") from exc
                    if len(bits) != length:
                        raise DecodeFailure(f"break budget exceeded: residual at {start} has {len(bits)} bits, expected {length}")
                    state.write(start, bits.encode())

    if not state.complete():
        raise DecodeFailure("break budget exceeded: unknown cells remain")
    return state.cells[L:].decode()
