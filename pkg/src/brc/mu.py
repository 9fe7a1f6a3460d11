"""Indexed mutually uncorrelated (cross-bifix-free) code.

Codewords of length L have the shape ``0^k 1 x 1`` with k = ceil(log2 L) + 1
and x a word of length L - k - 2 containing no run of k zeros.  The only run
of k zeros in a codeword is its prefix, so no proper prefix of a codeword can
equal a proper suffix of another.  Codewords are indexed by the lexicographic
rank of x.
"""
from __future__ import annotations

import re
from functools import lru_cache

__all__ = ["MuCode", "mu_code", "mu_size"]


def _zero_prefix_len(L: int) -> int:
    return (L - 1).bit_length() + 1


@lru_cache(maxsize=None)
def _run_free_counts(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """counts[j][z]: completions of length j given a trailing zero run z < k."""
    counts = [[1] * k]
    for j in range(1, n + 1):
        prev = counts[-1]
        counts.append([prev[0] + (prev[z + 1] if z + 1 < k else 0) for z in range(k)])
    return tuple(tuple(row) for row in counts)


def mu_size(L: int) -> int:
    if L < 8:
        raise ValueError(f"L={L}: codeword length must be at least 8")
    k = _zero_prefix_len(L)
    return _run_free_counts(L - k - 2, k)[L - k - 2][0]


class MuCode:
    def __init__(self, L: int):
        if L < 8:
            raise ValueError(f"L={L}: codeword length must be at least 8")
        self.L = L
        self.k = _zero_prefix_len(L)
        self.free = L - self.k - 2
        self._counts = _run_free_counts(self.free, self.k)
        self.size = self._counts[self.free][0]
        self._head = "0" * self.k + "1"
        self._zeros = "0" * self.k
        self._start = re.compile(f"(?={self._head})")

    def __repr__(self) -> str:
        return f"MuCode(L={self.L}, k={self.k}, size={self.size})"

    def unrank(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise IndexError(f"index {i} out of range [0, {self.size})")
        k, counts = self.k, self._counts
        out, z = [], 0
        for remaining in range(self.free, 0, -1):
            # '0' first: only allowed if the zero run stays below k
            n0 = counts[remaining - 1][z + 1] if z + 1 < k else 0
            if i < n0:
                out.append("0")
                z += 1
            else:
                i -= n0
                out.append("1")
                z = 0
        return self._head + "".join(out) + "1"

    def rank(self, w: str) -> int:
        if not self.is_codeword(w):
            raise ValueError(f"{w!r} is not a codeword")
        k, counts = self.k, self._counts
        i, z = 0, 0
        middle = w[self.k + 1 : -1]
        for pos, bit in enumerate(middle):
            remaining = self.free - pos
            if bit == "0":
                z += 1
            else:
                i += counts[remaining - 1][z + 1] if z + 1 < k else 0
                z = 0
        return i

    def is_codeword(self, w: str) -> bool:
        if len(w) != self.L:
            raise ValueError(f"expected a word of length {self.L}, got {len(w)}")
        return (
            w.startswith(self._head)
            and w[-1] == "1"
            and self._zeros not in w[self.k + 1 : -1]
        )

    def markers(self, t: int) -> list[str]:
        if t + 1 > self.size:
            raise ValueError(f"need {t + 1} markers but the code has {self.size} codewords")
        return [self.unrank(i) for i in range(t + 1)]

    def scan(self, bits: str) -> list[tuple[int, int]]:
        """All (position, index) of codeword occurrences, ascending."""
        L, k, zeros = self.L, self.k, self._zeros
        out = []
        for match in self._start.finditer(bits):
            p = match.start()
            end = p + L
            if end > len(bits) or bits[end - 1] != "1":
                continue
            if zeros in bits[p + k + 1 : end - 1]:
                continue
            out.append((p, self.rank(bits[p:end])))
        return out

    def positions(self, bits: str) -> list[int]:
        """Like scan, without ranking."""
        L, k, zeros = self.L, self.k, self._zeros
        out = []
        for match in self._start.finditer(bits):
            p = match.start()
            end = p + L
            if end <= len(bits) and bits[end - 1] == "1" and zeros not in bits[p + k + 1 : end - 1]:
                out.append(p)
        return out


@lru_cache(maxsize=None)
def mu_code(L: int) -> MuCode:
    return MuCode(L)
