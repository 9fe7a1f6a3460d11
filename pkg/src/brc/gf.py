"""Binary extension fields GF(2^w) in polynomial basis.

Elements are plain Python ints holding the coefficient vector (bit i is the
coefficient of x^i).  Hot code paths (Reed-Solomon) call the `Field` methods
on ints directly; `FieldElement` is a thin operator-overloading wrapper for
interactive use and tests.
"""
from __future__ import annotations

from functools import lru_cache

from brc._fieldtable import FIELD_TABLE

__all__ = [
    "Field",
    "FieldElement",
    "FieldError",
    "field",
    "is_irreducible",
    "poly_mod",
    "poly_mulmod",
]


class FieldError(ValueError):
    pass


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    dm = m.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> dm:
            a ^= m
    return r


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test for a polynomial over GF(2) given as a bit mask."""
    n = f.bit_length() - 1
    if n < 1:
        return False

    def x_pow_2k(k: int) -> int:
        r = 2
        for _ in range(k):
            r = poly_mulmod(r, r, f)
        return r

    if x_pow_2k(n) != 2:
        return False
    return all(_poly_gcd(f, x_pow_2k(n // p) ^ 2) == 1 for p in _prime_factors(n))


class Field:
    """GF(2^w) with a fixed reduction polynomial and canonical primitive element."""

    def __init__(self, w: int, modulus: int, alpha: int):
        if modulus.bit_length() - 1 != w:
            raise FieldError(f"reduction polynomial {modulus:#x} is not of degree {w}")
        self.w = w
        self.modulus = modulus
        self.alpha = alpha
        self.order = (1 << w) - 1
        self.mask = self.order
        tail = modulus ^ (1 << w)
        self._tail_shifts = [i for i in range(tail.bit_length()) if tail >> i & 1]
        self._exp = self._log = None
        if w == 8:
            self._build_tables()

    def __repr__(self) -> str:
        return f"Field(w={self.w}, modulus={self.modulus:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.w, self.modulus) == (other.w, other.modulus)

    def __hash__(self) -> int:
        return hash((self.w, self.modulus))

    def _build_tables(self) -> None:
        exp = [0] * (2 * self.order)
        log = [0] * (self.order + 1)
        x = 1
        for i in range(self.order):
            exp[i] = x
            log[x] = i
            x = self.mul_slow(x, self.alpha)
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self._exp, self._log = exp, log

    def _reduce(self, r: int) -> int:
        w, mask, shifts = self.w, self.mask, self._tail_shifts
        while r >> w:
            hi = r >> w
            r &= mask
            for s in shifts:
                r ^= hi << s
        return r

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul_slow(self, a: int, b: int) -> int:
        """Shift-and-reduce multiplication; never uses the lookup tables."""
        r = 0
        while b:
            low = b & -b
            r ^= a * low
            b ^= low
        return self._reduce(r)

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        if a < b:
            a, b = b, a
        r = 0
        while b:
            low = b & -b
            r ^= a * low
            b ^= low
        return self._reduce(r)

    def sq(self, a: int) -> int:
        # squaring is linear in characteristic 2: spread the bits apart
        r = int(bin(a)[2:], 4) if a else 0
        return self._reduce(r)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise FieldError("negative exponent")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.sq(a)
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^w)")
        if self._exp is not None:
            return self._exp[self.order - self._log[a]]
        # extended Euclid in GF(2)[x]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1 != 1:
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
            if r0.bit_length() < r1.bit_length():
                r0, r1, s0, s1 = r1, r0, s1, s0
        return self._reduce(s1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def to_bits(self, a: int) -> str:
        """Most-significant coefficient first, exactly w characters."""
        return format(a, f"0{self.w}b")

    def from_bits(self, bits: str) -> int:
        if len(bits) != self.w:
            raise FieldError(f"expected {self.w} bits, got {len(bits)}")
        return int(bits, 2)


@lru_cache(maxsize=None)
def field(w: int) -> Field:
    """The canonical field of degree w from the built-in table."""
    try:
        modulus, alpha = FIELD_TABLE[w]
    except KeyError:
        raise FieldError(f"no built-in field of degree {w} (even w in [8, 128] only)") from None
    return Field(w, modulus, alpha)


class FieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, fld: Field):
        if not 0 <= value <= fld.mask:
            raise FieldError(f"{value} is not an element of GF(2^{fld.w})")
        self.value = value
        self.field = fld

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.value ^ other.value, self.field)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field.div(self.value, other.value), self.field)

    def __pow__(self, e: int):
        return FieldElement(self.field.pow(self.value, e), self.field)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldElement) and self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value:#x}, w={self.field.w})"
