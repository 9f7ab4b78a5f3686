"""Reed-Muller codes of order 1 and 2 and the idempotent sub-code families.

Coordinates are points of V^m in index order (see :mod:`rmcodes.boolfn`).
Cyclic constructions live on positions ``alpha^0 .. alpha^(n-1)`` plus an
appended parity coordinate; the field element with polynomial-basis mask
``b`` is identified with point ``b`` and the parity coordinate with point 0,
which turns every extended cyclic codeword into a truth table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .binlinalg import BitMatrix, _Eliminator, batch_rank, rank, row_space_subset
from .boolfn import BooleanFunction, is_bent, polarize, rank_weight_table
from .codes import BudgetExceeded, LinearCode, WeightDistribution, canonical_rm1_generator, extend_parity
from .cyclic import cyclic_code_from_idempotent, idempotent_sum
from .gf2m import GF2m, field as field_table

Family = Literal["even", "odd-first", "odd-second"]
FAMILIES: tuple[str, ...] = ("even", "odd-first", "odd-second")

# Enumerating more cosets than this in one batch is split into chunks.
_CHUNK_BITS = 20


def _check_m(m: int, lo: int, hi: int) -> None:
    if not lo <= m <= hi:
        raise ValueError(f"m = {m} outside {lo}..{hi}")


def orthogonal(m: int) -> LinearCode:
    _check_m(m, 1, 16)
    return LinearCode(BitMatrix(1 << m, canonical_rm1_generator(m).rows[1:]), name=f"O_{m}")


def rm1(m: int) -> LinearCode:
    _check_m(m, 1, 16)
    return LinearCode(canonical_rm1_generator(m), name=f"RM(1,{m})")


def rm2(m: int) -> LinearCode:
    _check_m(m, 2, 8)
    base = canonical_rm1_generator(m).rows
    v = base[1:]
    quad = [v[i] & v[j] for i in range(m) for j in range(i + 1, m)]
    return LinearCode(BitMatrix(1 << m, base + tuple(quad)), name=f"RM(2,{m})")


def simplex(m: int) -> LinearCode:
    """The orthogonal code with the zero point deleted."""
    _check_m(m, 1, 16)
    rows = tuple(r >> 1 for r in orthogonal(m).rows)
    return LinearCode(BitMatrix((1 << m) - 1, rows), name=f"S_{m}")


@dataclass(frozen=True)
class SubcodeSpec:
    """One member of a nested sub-code family of R(2, m).

    ``even`` needs even ``m >= 4`` and ``1 <= d <= m/2``; the odd families
    need odd ``m >= 3`` and ``1 <= d <= (m-1)/2``.
    """

    m: int
    d: int
    family: Family = "even"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "even":
            if self.m % 2 or self.m < 4:
                raise ValueError("the even family needs even m >= 4")
        elif self.m % 2 == 0 or self.m < 3:
            raise ValueError("the odd families need odd m >= 3")
        if not 1 <= self.d <= self.max_d:
            raise ValueError(f"d = {self.d} outside 1..{self.max_d} for m = {self.m}")

    @property
    def t(self) -> int:
        return (self.m - 2) // 2 if self.family == "even" else (self.m - 1) // 2

    @property
    def max_d(self) -> int:
        return self.m // 2 if self.family == "even" else (self.m - 1) // 2

    @property
    def coset_exponents(self) -> list[int]:
        """``i`` values whose cosets of ``1 + 2^i`` join the idempotent."""
        t, d = self.t, self.d
        if self.family == "even":
            return list(range(d, t + 2))
        if self.family == "odd-first":
            return list(range(d, t + 1))
        return list(range(1, t - d + 2))

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def dimension(self) -> int:
        m, t, d = self.m, self.t, self.d
        if self.family == "even":
            return m * (t - d + 2) + m // 2 + 1
        return m * (t - d + 2) + 1

    @property
    def min_distance(self) -> int:
        return (1 << (self.m - 1)) - (1 << (self.m - self.d - 1))

    @property
    def rank_range(self) -> range:
        """Half-ranks ``h`` that a nonzero coset may have."""
        top = self.t + 1 if self.family == "even" else self.t
        return range(self.d, top + 1)

    def weight_set(self) -> set[int]:
        """Weights the construction claims, including 0 and ``2^m``."""
        m = self.m
        half = 1 << (m - 1)
        out = {0, half, 1 << m}
        for h in self.rank_range:
            out |= {half - (1 << (m - h - 1)), half + (1 << (m - h - 1))}
        return out

    @property
    def label(self) -> str:
        return f"{self.family}(m={self.m}, d={self.d})"


def boolean_order(field: GF2m) -> list[int]:
    """Column permutation from ``(alpha^0 .. alpha^(n-1), parity)`` to point order."""
    n = field.order
    return [n if p == 0 else int(field.log[p]) for p in range(field.size)]


def subcode_idempotent(spec: SubcodeSpec, field: GF2m | None = None):
    field = field or field_table(spec.m)
    reps = [0, 1] + [1 + (1 << i) for i in spec.coset_exponents]
    return idempotent_sum(reps, field)


def subcode(spec: SubcodeSpec, field: GF2m | None = None) -> LinearCode:
    """Extended cyclic sub-code of R(2, m) in point coordinates."""
    field = field or field_table(spec.m)
    if field.m != spec.m:
        raise ValueError("field degree does not match the sub-code parameters")
    e = subcode_idempotent(spec, field)
    code = extend_parity(cyclic_code_from_idempotent(e, field))
    out = code.permute_columns(boolean_order(field))
    out.name = spec.label
    return out


# --- coset structure over R(1, m) -----------------------------------------


def quotient_basis(code: LinearCode, m: int) -> list[int]:
    """Generator rows of ``code`` completing a basis of R(1, m) to one of ``code``.

    Rows are taken greedily in generator order, so the choice is
    deterministic.

    Raises:
        ValueError: if ``code`` does not contain R(1, m).
    """
    if code.n != 1 << m:
        raise ValueError(f"code length {code.n} is not 2^{m}")
    base = rm1(m).generator
    if not row_space_subset(base, code.generator):
        raise ValueError("code does not contain RM(1, m)")
    e = _Eliminator()
    for r in base.rows:
        e.insert(r)
    return [r for r in code.rows if e.insert(r)]


def _packed_polarization(rows: list[int], m: int) -> np.ndarray:
    """Symplectic matrices of the given truth tables, shape ``(len(rows), m)``."""
    out = np.zeros((len(rows), m), dtype=np.uint64)
    for t, r in enumerate(rows):
        out[t] = polarize(BooleanFunction(m, r)).rows
    return out


def _span_chunks(gens: np.ndarray, chunk_bits: int = _CHUNK_BITS):
    """Yield every XOR combination of ``gens`` rows in blocks, index order.

    ``gens`` has shape ``(r, w)``; block ``b`` holds combinations
    ``b * 2^c .. (b+1) * 2^c - 1`` where bit ``i`` of the index selects row ``i``.
    """
    r, w = gens.shape
    c = min(r, chunk_bits)
    low = np.zeros((1 << c, w), dtype=gens.dtype)
    for i in range(c):
        half = 1 << i
        low[half : 2 * half] = low[:half] ^ gens[i]
    high = gens[c:]
    for b in range(1 << (r - c)):
        offset = np.zeros(w, dtype=gens.dtype)
        for i in range(r - c):
            if b >> i & 1:
                offset ^= high[i]
        yield low ^ offset


def coset_rank_histogram(code: LinearCode, m: int) -> np.ndarray:
    """``hist[2h]`` = number of cosets of R(1, m) in ``code`` with symplectic rank ``2h``.

    Polarization is linear, so only the quotient basis is polarized; the
    matrices of all cosets are XOR combinations of those.
    """
    basis = quotient_basis(code, m)
    hist = np.zeros(m + 1, dtype=np.int64)
    if not basis:
        hist[0] = 1
        return hist
    mats = _packed_polarization(basis, m)
    for block in _span_chunks(mats):
        hist += np.bincount(batch_rank(block, m), minlength=m + 1)
    return hist


def weight_distribution_by_cosets(code: LinearCode, m: int) -> WeightDistribution:
    """Weight distribution summed coset by coset from symplectic ranks."""
    total = WeightDistribution({})
    for r, count in enumerate(coset_rank_histogram(code, m)):
        if count:
            if r % 2:
                raise ArithmeticError(f"odd symplectic rank {r}")
            total = total + rank_weight_table(m, r // 2).scaled(int(count))
    return total


def minimum_distance_by_cosets(code: LinearCode, m: int) -> int:
    """Smallest nonzero weight from the minimal symplectic rank over all cosets.

    Stops early once a rank-2 coset shows up, since nothing lighter exists.
    """
    basis = quotient_basis(code, m)
    min_rank = 0
    if basis:
        seen = np.zeros(m + 1, dtype=bool)
        for block in _span_chunks(_packed_polarization(basis, m)):
            seen |= np.bincount(batch_rank(block, m), minlength=m + 1) > 0
            if seen[2]:
                break
        nonzero = np.flatnonzero(seen[1:])
        if nonzero.size:
            min_rank = int(nonzero[0]) + 1
    if min_rank == 0:
        return 1 << (m - 1)
    return (1 << (m - 1)) - (1 << (m - min_rank // 2 - 1))


def check_nesting(m: int, family: str | None = None) -> bool:
    """Each family member for ``d + 1`` lies inside the member for ``d``."""
    if family is None:
        families = ["even"] if m % 2 == 0 else ["odd-first", "odd-second"]
    else:
        families = [family]
    f = field_table(m)
    for fam in families:
        top = SubcodeSpec(m, 1, fam).max_d
        chain = [subcode(SubcodeSpec(m, d, fam), f) for d in range(top, 0, -1)]
        for small, big in zip(chain, chain[1:]):
            if not row_space_subset(small.generator, big.generator):
                return False
    return True


@dataclass(frozen=True)
class SymplecticGroup:
    m: int
    elements: tuple[BitMatrix, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def ranks(self) -> list[int]:
        return [rank(b) for b in self.elements]

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(
            BitMatrix(self.m, tuple(x ^ y for x, y in zip(a.rows, b.rows))) in members
            for a in self.elements
            for b in self.elements
        )


def symplectic_group(m: int, field: GF2m | None = None) -> SymplecticGroup:
    """Symplectic matrices of the cosets of R(1, m) in the ``d = m/2`` even sub-code.

    For ``m = 2`` there is no sub-code; the group is then the zero matrix
    and the single nonzero 2 x 2 symplectic matrix.
    """
    if m % 2:
        raise ValueError("m must be even")
    _check_m(m, 2, 12)
    if m == 2:
        return SymplecticGroup(2, (BitMatrix(2, (0, 0)), BitMatrix(2, (0b10, 0b01))))
    code = subcode(SubcodeSpec(m, m // 2, "even"), field)
    mats = _packed_polarization(quotient_basis(code, m), m)
    combos = next(_span_chunks(mats, chunk_bits=mats.shape[0]))
    return SymplecticGroup(m, tuple(BitMatrix(m, tuple(int(x) for x in row)) for row in combos))


def rank_lower_bound_check(spec: SubcodeSpec, field: GF2m | None = None, budget_bits: int = 22) -> bool:
    """Every nontrivial coset has symplectic rank ``>= 2d``; at ``d = m/2`` all are bent.

    Cosets are enumerated exhaustively while there are at most
    ``2^budget_bits`` of them. Beyond that only ``d = 1`` is decidable here:
    rank ``>= 2`` means no nontrivial coset polarizes to zero, i.e.
    polarization is injective on the quotient basis.

    Raises:
        BudgetExceeded: when ``d > 1`` and the coset count exceeds the budget.
    """
    if spec.family != "even":
        raise ValueError("the rank bound is stated for the even family")
    m, d = spec.m, spec.d
    code = subcode(spec, field)
    basis = quotient_basis(code, m)
    mats = _packed_polarization(basis, m)
    if len(basis) > budget_bits:
        if d != 1:
            raise BudgetExceeded(f"{len(basis)} quotient bits exceed the budget of {budget_bits}")
        flat = [sum(int(x) << (m * i) for i, x in enumerate(row)) for row in mats]
        return rank(flat) == len(basis)
    hist = np.zeros(m + 1, dtype=np.int64)
    for block in _span_chunks(mats):
        hist += np.bincount(batch_rank(block, m), minlength=m + 1)
    if hist[0] != 1 or hist[1 : 2 * d].any():
        return False
    if d == m // 2:
        if hist[m] != (1 << len(basis)) - 1:
            return False
        for combo in range(1, 1 << len(basis)):
            table = 0
            for i, r in enumerate(basis):
                if combo >> i & 1:
                    table ^= r
            if not is_bent(BooleanFunction(m, table)):
                return False
    return True
