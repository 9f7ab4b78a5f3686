"""Boolean functions on V^m as packed truth tables.

The point ``u = (u_1, ..., u_m)`` has index ``sum u_i 2^(i-1)`` (``u_1`` is
the least significant bit), and ``f(u)`` is bit ``index`` of the table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .binlinalg import BitMatrix, BitVector, pack_bits, rank, unpack_bits
from .codes import WeightDistribution

_POLARIZE_TRIALS = 32


@dataclass(frozen=True)
class BooleanFunction:
    m: int
    table: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("negative variable count")
        if self.table < 0 or self.table >> (1 << self.m):
            raise ValueError("truth table longer than 2^m")

    @property
    def n(self) -> int:
        return 1 << self.m

    def __call__(self, u: int) -> int:
        return (self.table >> u) & 1

    def __add__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.m != other.m:
            raise ValueError("variable count mismatch")
        return BooleanFunction(self.m, self.table ^ other.table)

    @property
    def weight(self) -> int:
        return self.table.bit_count()

    def as_vector(self) -> BitVector:
        return BitVector(self.n, self.table)

    def values(self) -> np.ndarray:
        return unpack_bits(self.table, self.n)

    @classmethod
    def from_callable(cls, m: int, fn: Callable[[int], int]) -> "BooleanFunction":
        return cls(m, pack_bits([fn(u) & 1 for u in range(1 << m)]))

    @classmethod
    def from_values(cls, m: int, values) -> "BooleanFunction":
        values = np.asarray(values)
        if values.shape != (1 << m,):
            raise ValueError(f"expected {1 << m} values")
        return cls(m, pack_bits(values))

    @classmethod
    def variable(cls, m: int, i: int) -> "BooleanFunction":
        """The coordinate function ``v_i``, 1-based as in ``v_1 .. v_m``."""
        if not 1 <= i <= m:
            raise ValueError(f"variable index {i} out of range")
        return cls.from_monomials(m, [(i,)])

    @classmethod
    def from_monomials(cls, m: int, monomials: Iterable[Iterable[int]]) -> "BooleanFunction":
        """Sum of monomials, each a collection of 1-based variable indices (empty = 1)."""
        n = 1 << m
        idx = np.arange(n)
        acc = np.zeros(n, dtype=np.uint8)
        for mono in monomials:
            term = np.ones(n, dtype=np.uint8)
            for i in mono:
                if not 1 <= i <= m:
                    raise ValueError(f"variable index {i} out of range")
                term &= ((idx >> (i - 1)) & 1).astype(np.uint8)
            acc ^= term
        return cls(m, pack_bits(acc))

    @classmethod
    def linear(cls, m: int, u: int, constant: int = 0) -> "BooleanFunction":
        """``u . v + constant``."""
        idx = np.arange(1 << m)
        dots = np.bitwise_count(idx & u) & 1
        return cls(m, pack_bits(dots ^ (constant & 1)))

    @classmethod
    def random_quadratic(cls, m: int, rng: random.Random) -> "BooleanFunction":
        """Uniform element of R(2, m): random quadratic, linear and constant parts."""
        monos = [()] if rng.getrandbits(1) else []
        monos += [(i,) for i in range(1, m + 1) if rng.getrandbits(1)]
        monos += [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if rng.getrandbits(1)]
        return cls.from_monomials(m, monos)


def hadamard_transform(f: BooleanFunction) -> np.ndarray:
    """Walsh-Hadamard spectrum ``F^(u) = sum_v (-1)^(u.v + f(v))``.

    Butterfly over the ``m`` index bits, ``O(m 2^m)`` integer additions.
    Entry ``u`` equals ``2^m - 2 dist(f, u.v)``.
    """
    a = 1 - 2 * f.values().astype(np.int64)
    h = 1
    n = f.n
    while h < n:
        a = a.reshape(-1, 2, h)
        x, y = a[:, 0, :], a[:, 1, :]
        a = np.stack((x + y, x - y), axis=1).reshape(n)
        h *= 2
    return a


def is_bent(f: BooleanFunction) -> bool:
    if f.m % 2:
        raise ValueError("bent functions need an even number of variables")
    return bool(np.all(np.abs(hadamard_transform(f)) == 1 << (f.m // 2)))


def _polar(f: BooleanFunction, u: int, v: int) -> int:
    return f(u ^ v) ^ f(u) ^ f(v) ^ f(0)


def polarize(f: BooleanFunction, seed: int = 0) -> BitMatrix:
    """Symplectic matrix ``B[i][j] = f(e_i + e_j) + f(e_i) + f(e_j) + f(0)``.

    Bilinearity of the polarized form is spot-checked on random triples; a
    failure proves ``f`` has degree above 2.

    Raises:
        ValueError: if ``f`` is detectably not quadratic.
    """
    m = f.m
    rng = random.Random(seed ^ f.table ^ (m << 40))
    n = f.n
    for _ in range(_POLARIZE_TRIALS):
        u, v, w = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if _polar(f, u ^ w, v) != _polar(f, u, v) ^ _polar(f, w, v):
            raise ValueError("function is not quadratic: polarization is not bilinear")
    rows = []
    for i in range(m):
        r = 0
        for j in range(m):
            if i != j and _polar(f, 1 << i, 1 << j):
                r |= 1 << j
        rows.append(r)
    return BitMatrix(m, tuple(rows))


def rank_weight_table(m: int, h: int) -> WeightDistribution:
    """Weights of a coset of R(1, m) whose symplectic matrix has rank ``2h``."""
    if not 0 <= 2 * h <= m:
        raise ValueError(f"rank {2 * h} impossible for m = {m}")
    half, off = 1 << (m - 1), 1 << (m - h - 1)
    return WeightDistribution(
        {
            half - off: 1 << (2 * h),
            half: (1 << (m + 1)) - (1 << (2 * h + 1)),
            half + off: 1 << (2 * h),
        }
    )


def coset_weight_distribution_by_rank(B: BitMatrix, m: int) -> WeightDistribution:
    if B.shape != (m, m) or not B.is_symplectic():
        raise ValueError("expected an m x m symmetric zero-diagonal matrix")
    r = rank(B)
    return rank_weight_table(m, r // 2)


def coset_weight_distribution(f: BooleanFunction) -> WeightDistribution:
    """Weights of ``f + R(1, m)`` by XORing every affine function in turn."""
    counts: dict[int, int] = {}
    ones = (1 << f.n) - 1
    for u in range(f.n):
        g = f.table ^ BooleanFunction.linear(f.m, u).table
        for word in (g, g ^ ones):
            w = word.bit_count()
            counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(counts)
