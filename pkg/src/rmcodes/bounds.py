"""Plotkin, Hamming and Grey-Rankin bounds in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    n: int
    d: int
    k: int | None
    max_cardinality: int | None  # None: bound does not apply
    feasible: bool | None = None
    tight: bool = False

    @property
    def applicable(self) -> bool:
        return self.max_cardinality is not None

    def describe(self) -> str:
        if not self.applicable:
            return f"{self.bound_name}: not applicable"
        if self.feasible is None:
            return f"{self.bound_name}: at most {self.max_cardinality} codewords"
        if not self.feasible:
            return f"{self.bound_name}: violated (2^{self.k} > {self.max_cardinality})"
        if self.tight:
            return f"{self.bound_name}: tight" + (" (perfect)" if self.bound_name == "Hamming" else "")
        return f"{self.bound_name}: feasible (2^{self.k} <= {self.max_cardinality})"

    def to_dict(self) -> dict:
        return {
            "bound": self.bound_name,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "applicable": self.applicable,
            "max_cardinality": self.max_cardinality,
            "feasible": self.feasible,
            "tight": self.tight,
        }


def plotkin_max(n: int, d: int) -> int | None:
    """``2 floor(d / (2d - n))`` when ``2d > n``, else None (bound not applicable)."""
    if d < 1:
        raise ValueError("d must be positive")
    if 2 * d <= n:
        return None
    return 2 * (d // (2 * d - n))


def sphere_volume(n: int, radius: int) -> int:
    return sum(comb(n, i) for i in range(radius + 1))


def hamming_bound(n: int, k: int, d: int) -> BoundReport:
    vol = sphere_volume(n, (d - 1) // 2)
    lhs, rhs = vol << k, 1 << n
    return BoundReport("Hamming", n, d, k, rhs // vol, lhs <= rhs, lhs == rhs)


def hamming_feasible(n: int, k: int, d: int) -> bool:
    return hamming_bound(n, k, d).feasible


def is_perfect(n: int, k: int, d: int) -> bool:
    return hamming_bound(n, k, d).tight


def plotkin_bound(n: int, k: int | None, d: int) -> BoundReport:
    cap = plotkin_max(n, d)
    if cap is None or k is None:
        return BoundReport("Plotkin", n, d, k, cap)
    return BoundReport("Plotkin", n, d, k, cap, (1 << k) <= cap, (1 << k) == cap)


def grey_rankin_fraction(n: int, d: int) -> Fraction:
    """``8 d (n - d) / (n - (n - 2d)^2)`` as an exact rational."""
    den = n - (n - 2 * d) ** 2
    if den <= 0:
        raise ValueError(f"Grey-Rankin bound undefined at n = {n}, d = {d}")
    return Fraction(8 * d * (n - d), den)


def grey_rankin_max(n: int, d: int) -> int:
    """Largest size of a self-complementary code of length ``n``, distance ``d``."""
    f = grey_rankin_fraction(n, d)
    return f.numerator // f.denominator


def grey_rankin_bound(n: int, k: int | None, d: int) -> BoundReport:
    try:
        cap = grey_rankin_max(n, d)
    except ValueError:
        return BoundReport("Grey-Rankin", n, d, k, None)
    if k is None:
        return BoundReport("Grey-Rankin", n, d, k, cap)
    return BoundReport("Grey-Rankin", n, d, k, cap, (1 << k) <= cap, (1 << k) == cap)


def self_complementary_optimality(m: int) -> bool:
    """No self-complementary linear ``[2^m, 1 + 3m/2]`` code beats ``d = 2^(m-1) - 2^(m/2-1)``.

    For each ``0 < delta < 2^(m/2-1)`` with ``d = 2^(m-1) - 2^(m/2-1) + delta``
    this checks, exactly:

    * the Grey-Rankin ratio equals ``2 + 2^(m-1)(2^m - 1) / (delta (2^(m/2) - delta))``,
    * ``delta (2^(m/2) - delta) >= 2^(m/2) - 1``,
    * the ratio is at most ``2^(3m/2-1) + 2^(m-1) + 2``, and
    * ``grey_rankin_max`` is below ``2^(1 + 3m/2)``.
    """
    if m % 2 or m < 2:
        raise ValueError("m must be even and >= 2")
    n = 1 << m
    half = m // 2
    base = (1 << (m - 1)) - (1 << (half - 1))
    target = 1 << (1 + 3 * half)
    ceiling = (1 << (3 * half - 1)) + (1 << (m - 1)) + 2
    for delta in range(1, 1 << (half - 1)):
        d = base + delta
        ratio = grey_rankin_fraction(n, d)
        prod = delta * ((1 << half) - delta)
        if ratio != 2 + Fraction((1 << (m - 1)) * (n - 1), prod):
            return False
        if prod < (1 << half) - 1 or ratio > ceiling:
            return False
        if grey_rankin_max(n, d) >= target:
            return False
    return True
