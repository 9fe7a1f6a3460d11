"""Code parameters and the bit-exact codeword layout.

Codeword layout (left to right)::

    inst(u_t) | ... | inst(u_1) | m_0 | z

where inst(u_l) interleaves marker m_l before every L/2-bit chunk of the
redundancy string u_l.  Each u_l is laid out as::

    [ 4 adjacency parities x 2L | per level: 2 parities x L | 3 residual parities x L ]
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

BETA = 32

__all__ = ["BETA", "Params", "ParamsError", "derive_params"]


class ParamsError(ValueError):
    pass


@dataclass(frozen=True)
class Params:
    m: int
    t: int
    c: int
    beta: int
    L: int
    W: int
    num_levels: int
    u_len: int
    n: int
    field_adj: int
    field_sig: int
    mu_size: int = field(repr=False)

    @property
    def log_m(self) -> int:
        return self.m.bit_length() - 1

    @property
    def chunk(self) -> int:
        return self.L // 2

    @property
    def chunks_per_string(self) -> int:
        return 2 * self.u_len // self.L

    @property
    def inst_len(self) -> int:
        """Length of one instrumented redundancy string."""
        return self.chunks_per_string * (self.L + self.chunk)

    @property
    def info_start(self) -> int:
        """Codeword index where m_0 begins."""
        return self.t * self.inst_len

    @property
    def y_len(self) -> int:
        return self.m + self.L

    @property
    def sig_msg_len(self) -> int:
        """Upper bound on the number of signatures (or residuals) in y."""
        return self.y_len // self.L

    def adj_offset(self, j: int) -> int:
        """Bit offset of adjacency parity j (0..3) inside a redundancy string."""
        return 2 * self.L * j

    def level_offset(self, level: int, j: int) -> int:
        """Bit offset of parity j (0..1) of signature level `level` (1-based)."""
        return 8 * self.L + 2 * self.L * (level - 1) + self.L * j

    def residual_offset(self, j: int) -> int:
        return 8 * self.L + 2 * self.L * self.num_levels + self.L * j

    def header(self) -> str:
        return f"BRC1 m={self.m} t={self.t} c={self.c}"


def derive_params(m: int, t: int, c: int) -> Params:
    from brc.mu import mu_size

    if m < 2 or m & (m - 1):
        raise ParamsError(f"m={m}: m must be a power of two")
    if c < 3:
        raise ParamsError(f"c={c}: c must be an integer >= 3")
    if t < 1:
        raise ParamsError(f"t={t}: t >= 1 required")
    if t >= m:
        raise ParamsError(f"t={t}: need m > t")
    log_m = m.bit_length() - 1
    L = c * log_m
    if L % 2:
        raise ParamsError(f"L = c*log2(m) = {L} must be even")
    if L < 8:
        raise ParamsError(f"L = {L} too short for the marker code (need >= 8)")
    # smallest k with 2^k >= 2*beta*log2(m)
    num_levels = (2 * BETA * log_m - 1).bit_length()
    W = 2 * BETA * c * log_m**2 + L - 1
    u_len = (11 + 2 * num_levels) * L
    n = m + L + 3 * t * u_len
    size = mu_size(L)
    if size < t + 2:
        raise ParamsError(f"t={t}: marker code has only {size} codewords, need t + 2")
    if size + 4 * t > (1 << (2 * L)) - 1:
        raise ParamsError(f"t={t}: adjacency code does not fit GF(2^{2 * L})")
    max_symbols = (m + L) // L
    if max_symbols + 3 * t > (1 << L) - 1:
        raise ParamsError(f"t={t}: signature/residual codes do not fit GF(2^{L})")
    if 2 * L > 128:
        raise ParamsError(f"2L = {2 * L} exceeds the largest supported field degree 128")
    return Params(
        m=m, t=t, c=c, beta=BETA, L=L, W=W, num_levels=num_levels, u_len=u_len, n=n,
        field_adj=2 * L, field_sig=L, mu_size=size,
    )


def growth_scale(p: Params) -> float:
    """t * log2(n) * log2(log2(n)), the asymptotic growth term of the redundancy."""
    ln = math.log2(p.n)
    return p.t * ln * math.log2(ln)
