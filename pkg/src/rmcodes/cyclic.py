"""Cyclotomic cosets, primitive idempotents and cyclic codes of length 2^m - 1."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .binlinalg import pack_bits, rank, unpack_bits
from .codes import LinearCode
from .gf2m import GF2m


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: int) -> bool:
        return s in self.members


def cyclotomic_coset(s: int, n: int) -> CyclotomicCoset:
    """Orbit of ``s`` under doubling modulo ``n`` (``n`` odd)."""
    if not 0 <= s < n:
        raise ValueError(f"{s} is not a residue mod {n}")
    orbit = [s]
    x = (2 * s) % n
    while x != s:
        orbit.append(x)
        x = (2 * x) % n
    members = tuple(sorted(orbit))
    return CyclotomicCoset(members[0], members)


def cyclotomic_cosets(n: int) -> list[CyclotomicCoset]:
    """The partition of ``{0, ..., n-1}`` into cosets, by representative."""
    seen = bytearray(n)
    out = []
    for s in range(n):
        if not seen[s]:
            c = cyclotomic_coset(s, n)
            for x in c.members:
                seen[x] = 1
            out.append(c)
    return out


def gcd_power_formula(m: int, i: int) -> int:
    """Closed form for ``gcd(2^m - 1, 2^i + 1)``."""
    if m < 1 or i < 1:
        raise ValueError("m and i must be positive")
    g = gcd(m, i)
    if gcd(m, 2 * i) == g:
        return 1
    return (1 << g) + 1


def coset_size_formula(m: int, i: int) -> int:
    """Size of the coset of ``1 + 2^i`` mod ``2^m - 1``, i in the family's range."""
    if m % 2:
        t = (m - 1) // 2
        if not 1 <= i <= t:
            raise ValueError(f"i = {i} outside 1..{t} for odd m = {m}")
        return m
    t = (m - 2) // 2
    if not 1 <= i <= t + 1:
        raise ValueError(f"i = {i} outside 1..{t + 1} for even m = {m}")
    return m if i <= t else m // 2


@dataclass(frozen=True)
class RingPolynomial:
    """Element of ``GF(2)[x] / (x^n - 1)``; bit ``i`` of ``coeffs`` is the ``x^i`` coefficient."""

    n: int
    coeffs: int = 0

    def __post_init__(self):
        if self.coeffs < 0 or self.coeffs >> self.n:
            raise ValueError("coefficients beyond x^(n-1)")

    def __add__(self, other: "RingPolynomial") -> "RingPolynomial":
        self._same_ring(other)
        return RingPolynomial(self.n, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "RingPolynomial") -> "RingPolynomial":
        self._same_ring(other)
        acc, a, i = 0, self.coeffs, 0
        while a:
            if a & 1:
                acc ^= self._rotate(other.coeffs, i)
            a >>= 1
            i += 1
        return RingPolynomial(self.n, acc)

    def shift(self, i: int) -> "RingPolynomial":
        """Multiply by ``x^i``."""
        return RingPolynomial(self.n, self._rotate(self.coeffs, i % self.n))

    def is_idempotent(self) -> bool:
        return self * self == self

    def positions(self) -> np.ndarray:
        return np.flatnonzero(unpack_bits(self.coeffs, self.n))

    def evaluate(self, field: GF2m, j: int) -> int:
        """``c(alpha^j)``."""
        self._check_field(field)
        exps = (self.positions() * j) % field.order
        return int(np.bitwise_xor.reduce(field.exp[exps])) if exps.size else 0

    def spectrum(self, field: GF2m) -> np.ndarray:
        """``c(alpha^j)`` for every ``j`` in ``0 .. n-1``."""
        self._check_field(field)
        pos = self.positions()
        out = np.zeros(self.n, dtype=np.int64)
        if pos.size:
            for j in range(self.n):
                out[j] = np.bitwise_xor.reduce(field.exp[(pos * j) % field.order])
        return out

    def spectrum_support(self, field: GF2m) -> list[int]:
        """``{j : e(alpha^j) = 1}`` for an idempotent ``e``."""
        spec = self.spectrum(field)
        if np.any(spec > 1):
            raise ValueError("evaluation outside GF(2); not an idempotent")
        return np.flatnonzero(spec).tolist()

    def _check_field(self, field: GF2m) -> None:
        if field.order != self.n:
            raise ValueError(f"ring length {self.n} needs a field with 2^m - 1 = {self.n}")

    def _rotate(self, c: int, i: int) -> int:
        if not i:
            return c
        mask = (1 << self.n) - 1
        return ((c << i) | (c >> (self.n - i))) & mask

    def _same_ring(self, other: "RingPolynomial") -> None:
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")


def primitive_idempotent_star(s: int, field: GF2m) -> RingPolynomial:
    """The idempotent whose spectral polynomial is ``sum_{j in C_s} z^j``.

    Its coefficients are recovered as ``c_i = sum_{j in C_s} alpha^(i j)``,
    each of which lies in GF(2); it takes the value 1 at ``alpha^j`` exactly
    for ``j`` in the coset of ``-s``.
    """
    n = field.order
    coset = cyclotomic_coset(s % n, n)
    i = np.arange(n, dtype=np.int64)
    c = np.zeros(n, dtype=np.int64)
    for j in coset.members:
        c ^= field.exp[(i * j) % n]
    if np.any(c > 1):
        raise ArithmeticError(f"idempotent coefficients for s = {s} left GF(2)")
    return RingPolynomial(n, pack_bits(c))


def primitive_idempotent(s: int, field: GF2m) -> RingPolynomial:
    """The idempotent equal to 1 at ``alpha^j`` exactly for ``j`` in the coset of ``s``."""
    n = field.order
    return primitive_idempotent_star((-s) % n, field)


def idempotent_sum(reps, field: GF2m) -> RingPolynomial:
    """Sum of starred primitive idempotents over distinct coset representatives."""
    n = field.order
    seen = set()
    total = RingPolynomial(n)
    for s in reps:
        rep = cyclotomic_coset(s % n, n).representative
        if rep in seen:
            raise ValueError(f"coset of {s} listed twice")
        seen.add(rep)
        total = total + primitive_idempotent_star(rep, field)
    return total


def cyclic_code_from_idempotent(e: RingPolynomial, field: GF2m | None = None) -> LinearCode:
    """Cyclic code spanned by the shifts ``x^i e(x)``.

    For an idempotent generating a ``k``-dimensional ideal the first ``k``
    shifts are already independent, so those are used as the basis; the
    rank is checked against ``k``.
    """
    if not e.is_idempotent():
        raise ValueError("polynomial is not idempotent")
    shifts = [e.shift(i).coeffs for i in range(e.n)]
    if field is not None:
        k = len(e.spectrum_support(field))
    else:
        k = rank(shifts)
    basis = shifts[:k]
    if rank(basis) != k:
        basis = shifts
    return LinearCode.from_rows(basis, e.n)
