"""Arithmetic in GF(2^m) through exponential/logarithm tables.

Elements are plain ints: bit ``i`` of an element is the coefficient of
``x^i`` in the polynomial basis over the field's defining polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

# Pinned primitive polynomials (bit i = coefficient of x^i).
PRIMITIVE_POLYS = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10001001,  # x^7 + x^3 + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,  # x^9 + x^4 + 1
    10: 0b10000001001,  # x^10 + x^3 + 1
    11: 0b100000000101,  # x^11 + x^2 + 1
    12: 0b1000001010011,  # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,  # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,  # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011,  # x^16 + x^12 + x^3 + x + 1
}


class GF2m:
    """The field GF(2^m), 2 <= m <= 16, with a fixed primitive element alpha.

    ``exp[i]`` is ``alpha^i`` and ``log[a]`` its inverse on nonzero ``a``.
    The exponential table is stored twice over so that a product of two
    logarithms can be looked up without a modular reduction.

    Args:
        m: extension degree.

    Raises:
        ValueError: if ``m`` is outside ``[2, 16]``.
    """

    def __init__(self, m: int):
        if m not in PRIMITIVE_POLYS:
            raise ValueError(f"unsupported field degree {m}; need 2 <= m <= 16")
        self.m = m
        self.poly = PRIMITIVE_POLYS[m]
        self.size = 1 << m
        self.order = self.size - 1

        exp = np.zeros(2 * self.order, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        a = 1
        for i in range(self.order):
            if log[a] != -1:
                raise ValueError(f"polynomial {self.poly:#b} is not primitive")
            exp[i] = a
            log[a] = i
            a <<= 1
            if a & self.size:
                a ^= self.poly
        if a != 1:
            raise ValueError(f"polynomial {self.poly:#b} is not primitive")
        exp[self.order:] = exp[: self.order]
        exp.flags.writeable = False
        log.flags.writeable = False
        self.exp = exp
        self.log = log

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, poly={self.poly:#b})"

    def _check(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise ValueError(f"{a} is not an element of GF(2^{self.m})")

    @property
    def alpha(self) -> int:
        return 2

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def pow(self, a: int, e: int) -> int:
        """Return ``a**e``; ``0**0`` is 1 and negative exponents are rejected."""
        if e < 0:
            raise ValueError("negative exponent; use inv() or pow(a, 2^m - 2)")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(int(self.log[a]) * e) % self.order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp[(self.order - self.log[a]) % self.order])

    def power_of_alpha(self, i: int) -> int:
        return int(self.exp[i % self.order])

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        e = int(self.log[a])
        return self.order // gcd(e, self.order)

    def in_subfield(self, x: int, s: int) -> bool:
        """True iff ``x`` lies in the subfield GF(2^s), i.e. ``x^(2^s) == x``."""
        if self.m % s:
            raise ValueError(f"{s} does not divide {self.m}")
        y = x
        for _ in range(s):
            y = self.mul(y, y)
        return y == x

    def trace(self, x: int, s: int | None = None) -> int:
        """Absolute trace ``x + x^2 + ... + x^(2^(s-1))`` from GF(2^s) to GF(2).

        With ``s`` omitted the trace is taken over the whole field. For a
        proper subfield ``x`` must already lie in GF(2^s); this is verified.
        """
        self._check(x)
        if s is None:
            s = self.m
        if s < 1 or self.m % s:
            raise ValueError(f"{s} does not divide {self.m}")
        if s < self.m and not self.in_subfield(x, s):
            raise ValueError(f"{x} is not in the subfield GF(2^{s})")
        total, y = 0, x
        for _ in range(s):
            total ^= y
            y = self.mul(y, y)
        return total

    def relative_trace(self, x: int, s: int) -> int:
        """Trace from GF(2^m) down to GF(2^s): ``sum_{i < m/s} x^(2^(s*i))``."""
        self._check(x)
        if s < 1 or self.m % s:
            raise ValueError(f"{s} does not divide {self.m}")
        total, y = 0, x
        for _ in range(self.m // s):
            total ^= y
            for _ in range(s):
                y = self.mul(y, y)
        return total

    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, indexed by element mask."""
        out = np.zeros(self.size, dtype=np.uint8)
        for x in range(self.size):
            out[x] = self.trace(x)
        return out


@lru_cache(maxsize=None)
def field(m: int) -> GF2m:
    """Shared, cached field table for degree ``m``."""
    return GF2m(m)
