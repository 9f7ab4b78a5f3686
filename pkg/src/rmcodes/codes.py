"""Binary linear codes: weight enumeration, derived codes and RM(1, m) recognition."""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .binlinalg import (
    BitMatrix,
    BitVector,
    _Eliminator,
    express,
    kernel,
    rank,
    row_reduce,
    row_space_contains,
    to_limbs,
)

DEFAULT_BUDGET_BITS = 30
_INNER_BITS = 16


class BudgetExceeded(ValueError):
    """Raised when exhaustive enumeration would exceed the bit budget."""


@dataclass(frozen=True)
class WeightDistribution:
    """Map weight -> number of codewords. Zero counts are dropped."""

    counts: Mapping[int, int]

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_array(cls, hist) -> "WeightDistribution":
        return cls({w: int(c) for w, c in enumerate(hist) if c})

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __iter__(self):
        return iter(self.counts.items())

    def __add__(self, other: "WeightDistribution") -> "WeightDistribution":
        out = dict(self.counts)
        for w, c in other.counts.items():
            out[w] = out.get(w, 0) + c
        return WeightDistribution(out)

    def scaled(self, factor: int) -> "WeightDistribution":
        return WeightDistribution({w: c * factor for w, c in self.counts.items()})

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def weights(self) -> list[int]:
        return list(self.counts)

    def min_nonzero(self) -> int:
        nz = [w for w in self.counts if w]
        if not nz:
            raise ValueError("distribution has no nonzero weight")
        return min(nz)

    def to_csv(self) -> str:
        return "".join(f"{w},{c}\n" for w, c in self.counts.items())

    def __str__(self) -> str:
        return " + ".join(f"{c}*t^{w}" for w, c in self.counts.items())


class LinearCode:
    """Binary linear ``[n, k]`` code given by a full-rank generator matrix.

    Use :meth:`from_rows` for a spanning set that may be dependent; the
    constructor itself insists on ``rank == number of rows``.
    """

    def __init__(self, generator: BitMatrix, name: str = ""):
        if rank(generator) != generator.nrows:
            raise ValueError("generator rows are linearly dependent")
        self.generator = generator
        self.name = name
        self._weights: WeightDistribution | None = None

    @classmethod
    def from_rows(cls, rows: Sequence[int], n: int, name: str = "") -> "LinearCode":
        """Code spanned by ``rows``, keeping the first independent ones in order."""
        e = _Eliminator()
        keep = [r for r in rows if e.insert(r)]
        return cls(BitMatrix(n, tuple(keep)), name=name)

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.nrows

    @property
    def rows(self) -> tuple[int, ...]:
        return self.generator.rows

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LinearCode{label} [{self.n}, {self.k}]>"

    def encode(self, message: int) -> int:
        word, i = 0, 0
        while message:
            if message & 1:
                word ^= self.rows[i]
            message >>= 1
            i += 1
        return word

    def __contains__(self, word) -> bool:
        return row_space_contains(self.generator, word)

    def same_code(self, other: "LinearCode") -> bool:
        """Equal as sets of codewords."""
        return (
            self.n == other.n
            and self.k == other.k
            and row_reduce(self.generator)[0] == row_reduce(other.generator)[0]
        )

    def permute_columns(self, perm: Sequence[int]) -> "LinearCode":
        return LinearCode(self.generator.permute_columns(perm), name=self.name)

    def weight_distribution(self, budget_bits: int = DEFAULT_BUDGET_BITS, threads: int = 1) -> WeightDistribution:
        if self._weights is None:
            self._weights = weight_distribution(self, budget_bits=budget_bits, threads=threads)
        return self._weights


def _subcube_hist(inner: np.ndarray, outer: np.ndarray, start: np.ndarray, n: int) -> np.ndarray:
    """Histogram of ``inner ^ (start ^ span-combination of outer)`` over a Gray walk."""
    hist = np.zeros(n + 1, dtype=np.int64)
    acc = start.copy()
    buf = np.empty_like(inner)
    for step in range(1 << len(outer)):
        if step:
            acc ^= outer[(step & -step).bit_length() - 1]
        np.bitwise_xor(inner, acc, out=buf)
        w = np.bitwise_count(buf).sum(axis=1, dtype=np.int64)
        hist += np.bincount(w, minlength=n + 1)
    return hist


def weight_distribution(code: LinearCode, budget_bits: int = DEFAULT_BUDGET_BITS, threads: int = 1) -> WeightDistribution:
    """Exact weight distribution by exhaustive enumeration of all ``2^k`` codewords.

    The first ``min(k, 16)`` generator rows are expanded into a table of all
    their combinations (each entry one row-XOR away from an earlier one); the
    remaining rows are walked in binary-reflected Gray order, so consecutive
    offsets differ by one row, and every offset is XORed against the whole
    table at once. With ``threads > 1`` the Gray walk is split on its top
    message bits into independent subcubes whose histograms are summed.

    Raises:
        BudgetExceeded: if ``k > budget_bits``.
    """
    k, n = code.k, code.n
    if k > budget_bits:
        raise BudgetExceeded(f"k = {k} exceeds the enumeration budget of {budget_bits} bits")
    limbs = to_limbs(code.rows, n)
    nwords = limbs.shape[1]
    n_inner = min(k, _INNER_BITS)
    inner = np.zeros((1 << n_inner, nwords), dtype=np.uint64)
    for i in range(n_inner):
        half = 1 << i
        inner[half : 2 * half] = inner[:half] ^ limbs[i]
    outer = limbs[n_inner:]

    split = 0
    if threads > 1 and len(outer):
        split = min(len(outer), max(1, (threads - 1).bit_length()))
    walk, top = outer[: len(outer) - split], outer[len(outer) - split :]
    starts = []
    for combo in range(1 << split):
        s = np.zeros(nwords, dtype=np.uint64)
        for b in range(split):
            if combo >> b & 1:
                s ^= top[b]
        starts.append(s)

    if len(starts) == 1:
        hist = _subcube_hist(inner, walk, starts[0], n)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _subcube_hist(inner, walk, s, n), starts))
        hist = np.sum(parts, axis=0)
    return WeightDistribution.from_array(hist)


def naive_weight_distribution(code: LinearCode) -> WeightDistribution:
    """Reference enumeration: re-encode every message from scratch."""
    counts: dict[int, int] = {}
    for msg in range(1 << code.k):
        w = code.encode(msg).bit_count()
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(counts)


def minimum_distance(code: LinearCode, budget_bits: int = DEFAULT_BUDGET_BITS, threads: int = 1) -> int:
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    return code.weight_distribution(budget_bits=budget_bits, threads=threads).min_nonzero()


def extend_parity(code: LinearCode) -> LinearCode:
    """Append an overall parity bit at index ``n``."""
    n = code.n
    rows = tuple(r | ((r.bit_count() & 1) << n) for r in code.rows)
    return LinearCode(BitMatrix(n + 1, rows), name=code.name)


def puncture(code: LinearCode, position: int) -> LinearCode:
    """Delete coordinate ``position``; the dimension drops if a codeword collapses."""
    if not 0 <= position < code.n:
        raise IndexError(position)
    low = (1 << position) - 1
    rows = [(r & low) | ((r >> (position + 1)) << position) for r in code.rows]
    return LinearCode.from_rows(rows, code.n - 1, name=code.name)


def contains_all_one(code: LinearCode) -> bool:
    if code.k == 0:
        return False
    return ((1 << code.n) - 1) in code


is_self_complementary = contains_all_one


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(kernel(code.generator))


# --- first-order Reed-Muller recognition ---------------------------------


class RejectReason(str, enum.Enum):
    WRONG_PARAMETERS = "wrong parameters"
    THEOREM_VIOLATION = "theorem violation: all-one word absent"
    COLUMNS_NOT_ALL_POINTS = "columns of the linear part do not enumerate every m-bit value"
    MAPPING_MISMATCH = "mapped generator differs from the canonical one"


@dataclass
class EquivalenceCertificate:
    """Outcome of :func:`verify_first_order_rm`.

    On acceptance ``basis_change @ candidate.generator``, with its columns
    reordered by ``column_permutation`` (new column ``i`` = old column
    ``column_permutation[i]``), equals the canonical RM(1, m) generator.
    """

    accepted: bool
    reason: RejectReason | None = None
    detail: str = ""
    m: int | None = None
    column_permutation: list[int] = field(default_factory=list)
    basis_change: BitMatrix | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": "accept" if self.accepted else "reject",
            "reason": self.reason.value if self.reason else None,
            "detail": self.detail,
            "m": self.m,
            "column_permutation": list(self.column_permutation),
            "basis_change": self.basis_change.to_strings() if self.basis_change else None,
        }


def canonical_rm1_generator(m: int) -> BitMatrix:
    """Rows: all-one, then the coordinate functions v_1 .. v_m over points 0 .. 2^m - 1."""
    n = 1 << m
    rows = [(1 << n) - 1]
    for i in range(m):
        rows.append(sum(1 << p for p in range(n) if p >> i & 1))
    return BitMatrix(n, tuple(rows))


def _select_linear_part(gen: BitMatrix, ones: int, m: int) -> list[int] | None:
    """Indices of ``m`` generator rows completing the all-one word to a basis."""
    e = _Eliminator()
    e.insert(ones)
    chosen = []
    for i, r in enumerate(gen.rows):
        if e.insert(r):
            chosen.append(i)
            if len(chosen) == m:
                return chosen
    return None


def _column_values(rows: Sequence[int], n: int) -> list[int]:
    """Column ``j`` of the stacked ``rows`` as an int, row ``i`` -> bit ``i``."""
    vals = [0] * n
    for i, r in enumerate(rows):
        for j in range(n):
            if r >> j & 1:
                vals[j] |= 1 << i
    return vals


def _columns_enumerate_points(values: Sequence[int], m: int) -> bool:
    return sorted(values) == list(range(1 << m))


def verify_first_order_rm(code: LinearCode, budget_bits: int = DEFAULT_BUDGET_BITS) -> EquivalenceCertificate:
    """Decide whether ``code`` is equivalent to RM(1, m) and build a certificate.

    Checks, in order: the parameters are ``[2^m, m + 1, 2^(m-1)]``; the
    all-one word is a codeword; some ``m`` generator rows completing the
    all-one word to a basis have columns running through every m-bit value
    exactly once. Sorting those columns gives the permutation, and the row
    selection plus the expression of the all-one word gives the basis change.
    """
    n, k = code.n, code.k
    m = n.bit_length() - 1
    if n < 2 or n != 1 << m or k != m + 1:
        return EquivalenceCertificate(False, RejectReason.WRONG_PARAMETERS, f"[{n}, {k}] is not [2^m, m+1]")
    d = minimum_distance(code, budget_bits=budget_bits)
    if d != 1 << (m - 1):
        return EquivalenceCertificate(
            False, RejectReason.WRONG_PARAMETERS, f"minimum distance {d} != {1 << (m - 1)}", m=m
        )

    gen = code.generator
    ones = (1 << n) - 1
    ones_combo = express(gen, ones)
    if ones_combo is None:
        return EquivalenceCertificate(
            False, RejectReason.THEOREM_VIOLATION, "parameters match but the all-one word is missing", m=m
        )
    chosen = _select_linear_part(gen, ones, m)
    if chosen is None:
        return EquivalenceCertificate(False, RejectReason.WRONG_PARAMETERS, "generator is rank deficient", m=m)
    values = _column_values([gen.rows[i] for i in chosen], n)
    if not _columns_enumerate_points(values, m):
        return EquivalenceCertificate(False, RejectReason.COLUMNS_NOT_ALL_POINTS, m=m)

    perm = [0] * n
    for j, v in enumerate(values):
        perm[v] = j
    basis_change = BitMatrix(k, (ones_combo, *(1 << i for i in chosen)))
    mapped = (basis_change @ gen).permute_columns(perm)
    if mapped != canonical_rm1_generator(m):
        return EquivalenceCertificate(False, RejectReason.MAPPING_MISMATCH, m=m)
    return EquivalenceCertificate(True, None, "", m, perm, basis_change)


# --- text formats ---------------------------------------------------------


def format_code(code: LinearCode) -> str:
    lines = [f"{code.n} {code.k}"] + code.generator.to_strings()
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    """Parse the ``n k`` header plus ``k`` rows of ``n`` binary characters."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    try:
        n, k = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'n k'") from exc
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"header promises {k} rows, found {len(body)}")
    if any(len(row) != n for row in body):
        raise ValueError(f"every row must have {n} characters")
    return LinearCode(BitMatrix.from_strings(body) if body else BitMatrix(n, ()))


def read_code(path) -> LinearCode:
    return parse_code(Path(path).read_text())


def write_code(code: LinearCode, path) -> None:
    Path(path).write_text(format_code(code))


__all__ = [
    "BitVector",
    "BudgetExceeded",
    "EquivalenceCertificate",
    "LinearCode",
    "RejectReason",
    "WeightDistribution",
    "canonical_rm1_generator",
    "contains_all_one",
    "dual",
    "extend_parity",
    "format_code",
    "is_self_complementary",
    "minimum_distance",
    "naive_weight_distribution",
    "parse_code",
    "puncture",
    "read_code",
    "verify_first_order_rm",
    "weight_distribution",
    "write_code",
]
