"""Bit-packed vectors and matrices over GF(2).

A vector is stored as a Python int (bit ``j`` is coordinate ``j``) plus its
length; a matrix is a tuple of such row ints sharing one column count.
Python ints are arbitrary-width limb arrays, so XOR and ``bit_count`` give
word-parallel row operations without any manual limb handling. Batched
kernels that need raw throughput convert to numpy ``uint64`` limbs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        """Parse a 0/1 string; character ``j`` is coordinate ``j``."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {s!r}")
        return cls(len(s), int(s[::-1], 2) if s else 0)

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "BitVector":
        values = list(values)
        bits = 0
        for j, v in enumerate(values):
            if v & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")[::-1] if self.length else ""

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_array(self) -> np.ndarray:
        return unpack_bits(self.bits, self.length)


@dataclass(frozen=True)
class BitMatrix:
    """Binary matrix; ``rows[i]`` is an int whose bit ``j`` is entry ``(i, j)``."""

    cols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits beyond the column count")

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        vecs = [BitVector.from_str(s) for s in lines]
        if not vecs:
            return cls(0, ())
        cols = vecs[0].length
        if any(v.length != cols for v in vecs):
            raise ValueError("ragged rows")
        return cls(cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_array(cls, a) -> "BitMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls(a.shape[1], tuple(pack_bits(row) for row in a))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vectors:
                raise ValueError("column count needed for an empty matrix")
            cols = vectors[0].length
        if any(v.length != cols for v in vectors):
            raise ValueError("ragged rows")
        return cls(cols, tuple(v.bits for v in vectors))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(ncols, (0,) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int, bit ``i`` = entry ``(i, j)``."""
        c = 0
        for i, r in enumerate(self.rows):
            c |= ((r >> j) & 1) << i
        return c

    def to_array(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.cols), dtype=np.uint8)
        return np.stack([unpack_bits(r, self.cols) for r in self.rows])

    def to_strings(self) -> list[str]:
        return [str(BitVector(self.cols, r)) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.nrows, tuple(self.column(j) for j in range(self.cols)))

    def permute_columns(self, perm: Sequence[int]) -> "BitMatrix":
        """Column ``i`` of the result is column ``perm[i]`` of ``self``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.cols)):
            raise ValueError("not a permutation of the columns")
        out = []
        for r in self.rows:
            v = 0
            for i, src in enumerate(perm):
                v |= ((r >> src) & 1) << i
            out.append(v)
        return BitMatrix(self.cols, tuple(out))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            i = 0
            while r:
                if r & 1:
                    acc ^= other.rows[i]
                r >>= 1
                i += 1
            out.append(acc)
        return BitMatrix(other.cols, tuple(out))

    def is_symmetric(self) -> bool:
        return self.nrows == self.cols and self == self.transpose()

    def is_symplectic(self) -> bool:
        """Symmetric with zero diagonal."""
        return self.is_symmetric() and all(not (r >> i) & 1 for i, r in enumerate(self.rows))


def pack_bits(values) -> int:
    """Pack a 0/1 sequence into an int, element ``j`` to bit ``j``."""
    arr = np.asarray(values, dtype=np.uint8) & 1
    if arr.size == 0:
        return 0
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def unpack_bits(bits: int, length: int) -> np.ndarray:
    nbytes = (length + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].copy()


def to_limbs(rows: Sequence[int], length: int) -> np.ndarray:
    """Rows as a ``(len(rows), ceil(length/64))`` array of little-endian uint64 limbs."""
    nwords = max(1, (length + 63) // 64)
    out = np.zeros((len(rows), nwords), dtype=np.uint64)
    for i, r in enumerate(rows):
        out[i] = np.frombuffer(r.to_bytes(8 * nwords, "little"), dtype="<u8")
    return out


def _as_rows(M) -> tuple[list[int], int]:
    if isinstance(M, BitMatrix):
        return list(M.rows), M.cols
    rows = list(M)
    return rows, max((r.bit_length() for r in rows), default=0)


def row_reduce(M: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Pivots take the lowest-index available column, so the output is
    deterministic.

    Returns:
        (rows, pivots): the nonzero reduced rows and their pivot columns, in
        increasing pivot order.
    """
    rows, ncols = _as_rows(M)
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        for i in range(top, len(rows)):
            if rows[i] & bit:
                break
        else:
            continue
        rows[top], rows[i] = rows[i], rows[top]
        p = rows[top]
        for j in range(len(rows)):
            if j != top and rows[j] & bit:
                rows[j] ^= p
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(M) -> int:
    """GF(2) rank of a ``BitMatrix`` or an iterable of row ints."""
    rows = list(M.rows) if isinstance(M, BitMatrix) else list(M)
    basis: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            b = basis.get(lead)
            if b is None:
                basis[lead] = r
                break
            r ^= b
    return len(basis)


class _Eliminator:
    """Incremental XOR basis keyed by leading bit, with optional provenance.

    ``provenance`` tracks, as a bitmask over inserted vectors, which inputs
    sum to each stored basis vector; it is what lets ``express`` return a
    combination of the original rows.
    """

    def __init__(self):
        self.basis: dict[int, tuple[int, int]] = {}
        self.count = 0

    def reduce(self, v: int) -> tuple[int, int]:
        combo = 0
        while v:
            lead = v.bit_length() - 1
            entry = self.basis.get(lead)
            if entry is None:
                break
            v ^= entry[0]
            combo ^= entry[1]
        return v, combo

    def insert(self, v: int) -> bool:
        idx = 1 << self.count
        self.count += 1
        r, combo = self.reduce(v)
        if not r:
            return False
        self.basis[r.bit_length() - 1] = (r, combo ^ idx)
        return True

    def __len__(self) -> int:
        return len(self.basis)


def express(G: BitMatrix, v: int) -> int | None:
    """Coefficients ``c`` (bit ``i`` for row ``i``) with ``sum c_i G_i == v``, or None."""
    e = _Eliminator()
    for r in G.rows:
        e.insert(r)
    rest, combo = e.reduce(v)
    return None if rest else combo


def row_space_contains(G: BitMatrix, v) -> bool:
    bits = v.bits if isinstance(v, BitVector) else int(v)
    if isinstance(v, BitVector) and v.length != G.cols:
        raise ValueError("length mismatch")
    e = _Eliminator()
    for r in G.rows:
        e.insert(r)
    return e.reduce(bits)[0] == 0


def row_space_subset(G1: BitMatrix, G2: BitMatrix) -> bool:
    """True iff every row of ``G1`` lies in the row space of ``G2``."""
    if G1.cols != G2.cols:
        raise ValueError("length mismatch")
    e = _Eliminator()
    for r in G2.rows:
        e.insert(r)
    return all(e.reduce(r)[0] == 0 for r in G1.rows)


def systematic_form(G: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Bring a full-row-rank generator to ``[I | A]``.

    Returns:
        The systematic matrix and the column permutation ``perm`` used, with
        the convention that output column ``i`` is input column ``perm[i]``.

    Raises:
        ValueError: if ``G`` is rank deficient.
    """
    rows, pivots = row_reduce(G)
    if len(pivots) != G.nrows:
        raise ValueError(f"generator has rank {len(pivots)} < {G.nrows} rows")
    pivot_set = set(pivots)
    perm = pivots + [j for j in range(G.cols) if j not in pivot_set]
    return BitMatrix(G.cols, tuple(rows)).permute_columns(perm), perm


def kernel(M: BitMatrix) -> BitMatrix:
    """Basis of ``{x : M x^T = 0}`` as rows of length ``M.cols``."""
    rows, pivots = row_reduce(M)
    pivot_set = set(pivots)
    out = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in zip(rows, pivots):
            if (r >> free) & 1:
                v |= 1 << p
        out.append(v)
    return BitMatrix(M.cols, tuple(out))


def batch_rank(rows: np.ndarray, ncols: int) -> np.ndarray:
    """Ranks of many small matrices at once.

    Args:
        rows: integer array of shape ``(N, r)``; ``rows[t, i]`` is row ``i`` of
            matrix ``t`` packed into the low ``ncols`` bits.
        ncols: column count, at most 63.

    Returns:
        int array of ``N`` ranks.
    """
    rows = np.asarray(rows, dtype=np.uint64)
    if rows.ndim != 2:
        raise ValueError("expected shape (N, r)")
    n_mat, n_rows = rows.shape
    basis = np.zeros((n_mat, ncols), dtype=np.uint64)
    ranks = np.zeros(n_mat, dtype=np.int64)
    zero = np.uint64(0)
    for i in range(n_rows):
        x = rows[:, i].copy()
        for b in range(ncols - 1, -1, -1):
            has = (x >> np.uint64(b)) & np.uint64(1) == 1
            if not has.any():
                continue
            piv = basis[:, b]
            empty = piv == zero
            new = has & empty
            basis[:, b] = np.where(new, x, piv)
            ranks += new
            x = np.where(new, zero, np.where(has, x ^ piv, x))
    return ranks
