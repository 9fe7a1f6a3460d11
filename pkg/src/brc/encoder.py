"""Encoder: signatures, adjacency, levels, residuals and redundancy strings.

Positions are 0-based indices into y = m_0 . z (so m_0 sits at 0 and z at L).
The right end of y, len(y) = m + L, acts as a sentinel signature start when
growing levels, so the stretch after the last signature is covered too.
"""
from __future__ import annotations

from dataclasses import dataclass

from brc.gf import field
from brc.legit import NotLegitError, check_legit
from brc.mu import mu_code
from brc.params import Params
from brc.rs import SparseMessage, rs_code

__all__ = [
    "Encoding",
    "adjacency_code",
    "build_adjacency",
    "compress_row",
    "decompress_row",
    "depad",
    "encode",
    "grow_levels",
    "instrument",
    "level_keys",
    "pad",
    "residual_code",
    "residual_spans",
    "signature_code",
]


def compress_row(row: tuple[int, int] | None, L: int) -> int:
    """Pack an adjacency row (b, weight) into one GF(2^2L) symbol."""
    if row is None:
        return 0
    b, weight = row
    if weight <= 0:
        raise ValueError(f"malformed row {row}: weight must be positive")
    if not (0 <= b < 1 << L and weight < 1 << L):
        raise ValueError(f"row {row} does not fit {L}-bit fields")
    return b << L | weight


def decompress_row(e: int, L: int) -> tuple[int, int] | None:
    if e == 0:
        return None
    b, weight = e >> L, e & ((1 << L) - 1)
    if weight == 0:
        raise ValueError(f"malformed symbol {e:#x}: zero weight")
    return b, weight


def pad(s: str, L: int) -> str:
    if len(s) >= L:
        raise ValueError(f"residual of {len(s)} bits does not fit {L} - 1")
    return (s + "1").ljust(L, "0")


def depad(p: str) -> str:
    stripped = p.rstrip("0")
    if not stripped:
        raise ValueError("cannot depad an all-zero word")
    return stripped[:-1]


def build_adjacency(sigs: dict[int, str], L: int) -> dict[int, tuple[int, int]]:
    """Row rank(a) -> (rank(b), start distance) for consecutive signatures a, b."""
    code = mu_code(L)
    keys = sorted(sigs)
    ranks = [code.rank(sigs[k]) for k in keys]
    if len(set(ranks)) != len(ranks):
        raise ValueError("duplicate level-0 signature values")
    return {ranks[i]: (ranks[i + 1], keys[i + 1] - keys[i]) for i in range(len(keys) - 1)}


def level_keys(keys: list[int], end: int, L: int) -> list[int]:
    """One growth step: add the midpoint of every gap of start distance >= 2L."""
    out = []
    bounds = keys + [end]
    for k, k_next in zip(keys, bounds[1:]):
        out.append(k)
        if k_next - k >= 2 * L:
            out.append((k + k_next) // 2)
    return out


def residual_spans(keys: list[int], end: int, L: int) -> list[tuple[int, int]]:
    """(start, length) of every residual: gaps with L < start distance < 2L."""
    bounds = keys + [end]
    spans = []
    for k, k_next in zip(keys, bounds[1:]):
        d = k_next - k
        if d >= 2 * L:
            raise AssertionError(f"gap {d} at {k} still needs a signature")
        if d > L:
            spans.append((k + L, d - L))
    return spans


def grow_levels(level0: list[int], y: str, params: Params):
    """Key lists after each level and the residual store.

    Returns (snapshots, residuals) where snapshots[l-1] is the sorted key list
    after level l and residuals maps key -> padded residual.
    """
    L, end = params.L, len(y)
    keys = sorted(level0)
    snapshots = []
    for _ in range(params.num_levels):
        keys = level_keys(keys, end, L)
        snapshots.append(keys)
    residuals = {start: pad(y[start : start + length], L) for start, length in residual_spans(keys, end, L)}
    return snapshots, residuals


def adjacency_code(params: Params):
    return rs_code(params.field_adj, params.mu_size, 4 * params.t)


def signature_code(params: Params):
    return rs_code(params.field_sig, params.sig_msg_len, 2 * params.t)


def residual_code(params: Params):
    return rs_code(params.field_sig, params.sig_msg_len, 3 * params.t)


def instrument(u: str, marker: str, L: int) -> str:
    half = L // 2
    return "".join(marker + u[i : i + half] for i in range(0, len(u), half))


@dataclass
class Encoding:
    codeword: str
    y: str
    level0: dict[int, str]
    adjacency: dict[int, tuple[int, int]]
    snapshots: list[list[int]]
    residuals: dict[int, str]
    strings: list[str]


def encode_full(z: str, params: Params, check: bool = True) -> Encoding:
    """Encode z and keep every intermediate structure (for tests and tooling)."""
    if check:
        report = check_legit(z, params)
        if not report.ok:
            raise NotLegitError(report)
    elif len(z) != params.m:
        raise ValueError(f"expected {params.m} bits, got {len(z)}")
    L, t = params.L, params.t
    code = mu_code(L)
    markers = code.markers(t)
    y = markers[0] + z
    level0 = {p: y[p : p + L] for p in code.positions(y)}
    adjacency = build_adjacency(level0, L)
    snapshots, residuals = grow_levels(list(level0), y, params)

    F2 = field(params.field_adj)
    F1 = field(params.field_sig)
    adj_msg = SparseMessage.from_dict(params.mu_size, {a: compress_row(r, L) for a, r in adjacency.items()})
    adj_par = adjacency_code(params).encode(adj_msg)
    sig = signature_code(params)
    level_par = []
    for keys in snapshots:
        msg = {i: int(y[k : k + L], 2) for i, k in enumerate(keys)}
        level_par.append(sig.encode(msg))
    res_msg = {i: int(residuals[k], 2) for i, k in enumerate(sorted(residuals))}
    res_par = residual_code(params).encode(res_msg)

    strings = []
    for l in range(1, t + 1):
        parts = [F2.to_bits(adj_par[4 * (l - 1) + j]) for j in range(4)]
        for par in level_par:
            parts += [F1.to_bits(par[2 * (l - 1) + j]) for j in range(2)]
        parts += [F1.to_bits(res_par[3 * (l - 1) + j]) for j in range(3)]
        u = "".join(parts)
        assert len(u) == params.u_len
        strings.append(u)
    codeword = "".join(instrument(strings[l - 1], markers[l], L) for l in range(t, 0, -1)) + y
    assert len(codeword) == params.n
    return Encoding(codeword, y, level0, adjacency, snapshots, residuals, strings)


def encode(z: str, params: Params, check: bool = True) -> str:
    return encode_full(z, params, check).codeword
