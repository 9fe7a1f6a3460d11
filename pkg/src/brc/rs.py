"""Systematic Reed-Solomon codes over GF(2^w) with sparse messages.

Coefficient convention: parity symbol j sits at x^j (0 <= j < p) and message
symbol i at x^(p+i).  Codewords are multiples of g(x) = prod_{k=1..p} (x - a^k)
for the canonical primitive element a of the field.

Encoding never touches zero message symbols: the parity polynomial is the
interpolant through the message's evaluations at a^1..a^p, so its cost is
O(nonzeros * p + p^2) regardless of msg_len.  Decoding (errors and erasures)
runs Berlekamp-Massey on Forney-modified syndromes and locates error roots with
the Berlekamp trace algorithm, again independent of msg_len except for a
baby-step/giant-step discrete log over the code length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from brc.gf import Field, field

__all__ = [
    "RSCode",
    "RSDecodeError",
    "ReceivedWord",
    "SparseMessage",
    "rs_code",
]


class RSDecodeError(Exception):
    """The received word is not within decoding radius of any codeword."""


@dataclass(frozen=True)
class SparseMessage:
    msg_len: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = -1
        for pos, value in self.entries:
            if not last < pos < self.msg_len:
                raise ValueError(f"position {pos} out of order or out of range [0, {self.msg_len})")
            if value == 0:
                raise ValueError(f"explicit zero at position {pos}")
            last = pos

    @classmethod
    def from_dict(cls, msg_len: int, values: dict[int, int]) -> "SparseMessage":
        return cls(msg_len, tuple(sorted((p, v) for p, v in values.items() if v)))

    @classmethod
    def from_dense(cls, symbols: list[int]) -> "SparseMessage":
        return cls(len(symbols), tuple((i, v) for i, v in enumerate(symbols) if v))

    def to_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def to_dense(self) -> list[int]:
        out = [0] * self.msg_len
        for pos, value in self.entries:
            out[pos] = value
        return out


@dataclass
class ReceivedWord:
    """A possibly corrupted codeword.

    `message` holds the known systematic symbols (zeros may be omitted),
    `erased` the systematic positions whose value is unknown, and `parity` the
    parity symbols with None marking an erasure.
    """

    msg_len: int
    message: dict[int, int]
    parity: list[int | None]
    erased: frozenset[int] = dc_field(default_factory=frozenset)

    @classmethod
    def from_dense(cls, symbols: list[int | None], parity_count: int) -> "ReceivedWord":
        msg_len = len(symbols) - parity_count
        msg = symbols[:msg_len]
        return cls(
            msg_len,
            {i: v for i, v in enumerate(msg) if v},
            list(symbols[msg_len:]),
            frozenset(i for i, v in enumerate(msg) if v is None),
        )

    @property
    def erasure_count(self) -> int:
        return len(self.erased) + sum(v is None for v in self.parity)


# polynomial helpers, coefficient lists low -> high

def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _deg(a: list[int]) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _pmul(F: Field, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    mul = F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= mul(x, y)
    return out


def _peval(F: Field, a: list[int], x: int) -> int:
    r = 0
    mul = F.mul
    for c in reversed(a):
        r = mul(r, x) ^ c
    return r


def _pmod_monic(F: Field, a: list[int], f: list[int]) -> list[int]:
    """a mod f for monic f."""
    a = list(a)
    d = len(f) - 1
    mul = F.mul
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            base = i - d
            for j in range(d):
                if f[j]:
                    a[base + j] ^= mul(c, f[j])
            a[i] = 0
    return _trim(a[:d] if d else [0])


def _monic(F: Field, a: list[int]) -> list[int]:
    a = _trim(list(a))
    lead = a[-1]
    if lead == 1:
        return a
    inv = F.inv(lead)
    return [F.mul(c, inv) for c in a]


def _pdivmod(F: Field, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    db = len(b) - 1
    inv = F.inv(b[-1])
    q = [0] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = F.mul(c, inv)
            q[i - db] = c
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] ^= F.mul(c, b[j])
    return _trim(q), _trim(a[:db] if db else [0])


def _pgcd(F: Field, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while _deg(b) >= 0:
        _, r = _pdivmod(F, a, b)
        a, b = b, r
    return _monic(F, a)


def _psq_mod(F: Field, a: list[int], f: list[int]) -> list[int]:
    sq = F.sq
    out = [0] * (2 * len(a) - 1)
    for i, c in enumerate(a):
        if c:
            out[2 * i] = sq(c)
    return _pmod_monic(F, out, f)


def _find_roots(F: Field, f: list[int]) -> list[int] | None:
    """Roots of monic f if it splits into distinct linear factors, else None."""
    d = _deg(f)
    if d <= 0:
        return []
    if d == 1:
        return [f[0]]
    # frob[i] = x^(2^i) mod f; f | x^(2^w) - x  <=>  all roots in the field and distinct
    frob = [_pmod_monic(F, [0, 1], f)]
    for _ in range(F.w):
        frob.append(_psq_mod(F, frob[-1], f))
    if frob[-1] != frob[0]:
        return None
    return _split(F, f, frob[:-1])


def _split(F: Field, f: list[int], frob: list[list[int]]) -> list[int] | None:
    """Berlekamp trace splitting; gcd(f, Tr(beta x)) for beta = 1, a, a^2, ..."""
    d = _deg(f)
    if d == 1:
        return [f[0]]
    mul, sq = F.mul, F.sq
    beta = 1
    for _ in range(F.w):
        # Tr(beta x) = sum_i beta^(2^i) x^(2^i), linear in the precomputed residues
        acc = [0] * d
        b = beta
        for r in frob:
            for j, c in enumerate(r):
                if c:
                    acc[j] ^= mul(b, c)
            b = sq(b)
        g = _pgcd(F, f, _trim(acc))
        dg = _deg(g)
        if 0 < dg < d:
            h = _monic(F, _pdivmod(F, f, g)[0])
            left = _split(F, g, [_pmod_monic(F, r, g) for r in frob])
            right = _split(F, h, [_pmod_monic(F, r, h) for r in frob])
            if left is None or right is None:
                return None
            return left + right
        beta = mul(beta, F.alpha)
    return None


def _berlekamp_massey(F: Field, s: list[int]) -> tuple[list[int], int]:
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    mul = F.mul
    for n, sn in enumerate(s):
        d = sn
        for i in range(1, L + 1):
            if i < len(C) and C[i]:
                d ^= mul(C[i], s[n - i])
        if d == 0:
            m += 1
            continue
        coef = F.div(d, b)
        shifted = [0] * m + [mul(coef, x) for x in B]
        T = list(C)
        if len(shifted) > len(C):
            C = C + [0] * (len(shifted) - len(C))
        for i, x in enumerate(shifted):
            C[i] ^= x
        if 2 * L <= n:
            L = n + 1 - L
            B, b, m = T, d, 1
        else:
            m += 1
    return _trim(C), L


class RSCode:
    def __init__(self, fld: Field, msg_len: int, parity_count: int):
        if msg_len < 0 or parity_count < 1:
            raise ValueError("need msg_len >= 0 and parity_count >= 1")
        if msg_len + parity_count > fld.order:
            raise ValueError(
                f"code length {msg_len + parity_count} exceeds 2^{fld.w} - 1"
            )
        self.field = fld
        self.msg_len = msg_len
        self.parity_count = parity_count
        self.length = msg_len + parity_count
        F = fld
        p = parity_count
        # a^(2^j), for exponentiation of a by popcount multiplications
        self._alpha_2k = [F.alpha]
        for _ in range(F.w - 1):
            self._alpha_2k.append(F.sq(self._alpha_2k[-1]))
        self.roots = [F.pow(F.alpha, k) for k in range(1, p + 1)]
        g = [1]
        for r in self.roots:
            g = _pmul(F, g, [r, 1])
        self.generator = g
        self._vinv = None
        self._baby = None

    def __repr__(self) -> str:
        return f"RSCode(w={self.field.w}, msg_len={self.msg_len}, parity_count={self.parity_count})"

    def alpha_pow(self, e: int) -> int:
        F = self.field
        e %= F.order
        r, j = 1, 0
        table = self._alpha_2k
        mul = F.mul
        while e:
            if e & 1:
                r = mul(r, table[j])
            e >>= 1
            j += 1
        return r

    def _evaluations(self, symbols) -> list[int]:
        """sum over (index, value) of value * X^k for k = 1..p, X = a^index."""
        F = self.field
        mul = F.mul
        p = self.parity_count
        out = [0] * p
        for idx, v in symbols:
            if not v:
                continue
            X = self.alpha_pow(idx)
            x = mul(v, X)
            out[0] ^= x
            for k in range(1, p):
                x = mul(x, X)
                out[k] ^= x
        return out

    def _vandermonde_inverse(self) -> list[list[int]]:
        if self._vinv is None:
            F = self.field
            p = self.parity_count
            # rows k = 1..p, columns j = 0..p-1: a^(k*j)
            M = [[F.pow(self.roots[k], j) for j in range(p)] + [int(i == k) for i in range(p)] for k in range(p)]
            for col in range(p):
                piv = next(r for r in range(col, p) if M[r][col])
                M[col], M[piv] = M[piv], M[col]
                inv = F.inv(M[col][col])
                M[col] = [F.mul(x, inv) for x in M[col]]
                for r in range(p):
                    if r != col and M[r][col]:
                        c = M[r][col]
                        M[r] = [x ^ F.mul(c, y) for x, y in zip(M[r], M[col])]
            self._vinv = [row[p:] for row in M]
        return self._vinv

    def _interpolate(self, evals: list[int]) -> list[int]:
        F = self.field
        mul = F.mul
        out = []
        for row in self._vandermonde_inverse():
            acc = 0
            for a, b in zip(row, evals):
                if a and b:
                    acc ^= mul(a, b)
            out.append(acc)
        return out

    def encode(self, msg: SparseMessage | dict[int, int]) -> list[int]:
        """Parity symbols (length parity_count) for a sparse message."""
        if isinstance(msg, SparseMessage):
            if msg.msg_len != self.msg_len:
                raise ValueError(f"message length {msg.msg_len} != code msg_len {self.msg_len}")
            items = msg.entries
        else:
            items = msg.items()
        p = self.parity_count
        shifted = []
        for pos, v in items:
            if not 0 <= pos < self.msg_len:
                raise ValueError(f"message position {pos} out of range [0, {self.msg_len})")
            shifted.append((p + pos, v))
        return self._interpolate(self._evaluations(shifted))

    def encode_dense(self, msg: list[int]) -> list[int]:
        """Reference encoder: (M(x) * x^p) mod g(x) by long division."""
        if len(msg) != self.msg_len:
            raise ValueError("wrong message length")
        F = self.field
        p = self.parity_count
        g = self.generator
        rem = [0] * p + list(msg)
        for i in range(len(rem) - 1, p - 1, -1):
            c = rem[i]
            if c:
                for j in range(p + 1):
                    if g[j]:
                        rem[i - p + j] ^= F.mul(c, g[j])
        return rem[:p]

    def syndromes(self, word: ReceivedWord) -> list[int]:
        """S_1..S_p with erased symbols read as zero."""
        p = self.parity_count
        symbols = [(j, v) for j, v in enumerate(word.parity) if v]
        symbols += [(p + i, v) for i, v in word.message.items() if v and i not in word.erased]
        return self._evaluations(symbols)

    def _dlog(self, X: int) -> int | None:
        """Exponent e in [0, length) with a^e = X, or None."""
        N = self.length
        B = math.isqrt(N) + 1
        if self._baby is None:
            F = self.field
            baby = {}
            y = 1
            for j in range(B):
                baby.setdefault(y, j)
                y = F.mul(y, F.alpha)
            self._baby = (baby, F.inv(y))
        baby, giant = self._baby
        mul = self.field.mul
        y = X
        for i in range(N // B + 1):
            j = baby.get(y)
            if j is not None:
                e = i * B + j
                return e if e < N else None
            y = mul(y, giant)
        return None

    def decode(self, word: ReceivedWord) -> SparseMessage:
        F = self.field
        p = self.parity_count
        if word.msg_len != self.msg_len or len(word.parity) != p:
            raise ValueError("received word does not match the code dimensions")
        erasures = [j for j, v in enumerate(word.parity) if v is None]
        erasures += [p + i for i in sorted(word.erased)]
        f = len(erasures)
        if f > p:
            raise RSDecodeError(f"{f} erasures exceed the {p} parity symbols")
        S = self.syndromes(word)
        message = {i: v for i, v in word.message.items() if v and i not in word.erased}
        if not any(S):
            return SparseMessage.from_dict(self.msg_len, message)

        mul = F.mul
        gamma = [1]
        for idx in erasures:
            gamma = _pmul(F, gamma, [1, self.alpha_pow(idx)])
        T = _pmul(F, gamma, S)[:p]
        lam, e = _berlekamp_massey(F, T[f:])
        if 2 * e > p - f or _deg(lam) != e:
            raise RSDecodeError(f"error locator of degree {e} exceeds capacity ({p - f} free parities)")
        locations = list(erasures)
        if e:
            # reversed locator has the error locators X_j themselves as roots
            rev = list(reversed(lam + [0] * (e + 1 - len(lam))))
            roots = _find_roots(F, _monic(F, rev))
            if roots is None or len(roots) != e:
                raise RSDecodeError("error locator does not split over the field")
            erased_set = set(erasures)
            for X in roots:
                idx = self._dlog(X)
                if idx is None or idx in erased_set:
                    raise RSDecodeError("error located outside the code")
                locations.append(idx)
        psi = _pmul(F, lam, gamma)
        omega = _pmul(F, S, psi)[:p]
        dpsi = [psi[i] if i % 2 == 1 else 0 for i in range(1, len(psi))] or [0]
        fixes = {}
        check = list(S)
        for idx in locations:
            X = self.alpha_pow(idx)
            xinv = F.inv(X)
            den = _peval(F, dpsi, xinv)
            if den == 0:
                raise RSDecodeError("degenerate errata locator")
            Y = F.div(_peval(F, omega, xinv), den)
            fixes[idx] = Y
            x = mul(Y, X)
            for k in range(p):
                check[k] ^= x
                x = mul(x, X)
        if any(check):
            raise RSDecodeError("corrected word is not a codeword")
        for idx, Y in fixes.items():
            if idx >= p:
                i = idx - p
                message[i] = message.get(i, 0) ^ Y
        return SparseMessage.from_dict(self.msg_len, message)


@lru_cache(maxsize=64)
def rs_code(w: int, msg_len: int, parity_count: int) -> RSCode:
    return RSCode(field(w), msg_len, parity_count)
