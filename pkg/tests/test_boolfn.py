import random

import numpy as np
import pytest

from rmcodes.binlinalg import BitMatrix, rank
from rmcodes.boolfn import (
    BooleanFunction,
    coset_weight_distribution,
    coset_weight_distribution_by_rank,
    hadamard_transform,
    is_bent,
    polarize,
    rank_weight_table,
)
from rmcodes.codes import WeightDistribution


def direct_spectrum(f):
    """O(4^m) summation straight from the definition."""
    n = f.n
    out = []
    for u in range(n):
        out.append(sum((-1) ** (((u & v).bit_count() + f(v)) & 1) for v in range(n)))
    return np.array(out)


def random_function(m, r):
    return BooleanFunction(m, r.getrandbits(1 << m))


def test_spectrum_constant_zero():
    spec = hadamard_transform(BooleanFunction(3, 0))
    assert spec[0] == 8 and not spec[1:].any()


def test_spectrum_single_variable():
    assert hadamard_transform(BooleanFunction.variable(2, 1)).tolist() == [0, 4, 0, 0]


def test_spectrum_product_is_bent():
    f = BooleanFunction.from_monomials(2, [(1, 2)])
    spec = hadamard_transform(f)
    assert sorted(spec.tolist()) == [-2, 2, 2, 2]
    assert is_bent(f)


@pytest.mark.parametrize("m", range(1, 7))
def test_butterfly_matches_definition(m, rng):
    for _ in range(5):
        f = random_function(m, rng)
        assert (hadamard_transform(f) == direct_spectrum(f)).all()


@pytest.mark.parametrize("m", range(1, 7))
def test_spectrum_distance_link(m, rng):
    f = random_function(m, rng)
    spec = hadamard_transform(f)
    for u in range(f.n):
        dist = (f.table ^ BooleanFunction.linear(m, u).table).bit_count()
        assert spec[u] == (1 << m) - 2 * dist


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10])
def test_parseval(m, rng):
    for _ in range(50):
        spec = hadamard_transform(random_function(m, rng))
        assert int((spec * spec).sum()) == 1 << (2 * m)
        assert np.all(spec % 2 == (1 << m) % 2)


@pytest.mark.parametrize("m", range(1, 7))
def test_autocorrelation_of_spectrum(m, rng):
    f = random_function(m, rng)
    spec = hadamard_transform(f)
    idx = np.arange(f.n)
    for v in range(1, f.n):
        assert int(spec @ spec[idx ^ v]) == 0


def test_is_bent_examples():
    assert is_bent(BooleanFunction.from_monomials(4, [(1, 2), (3, 4)]))
    assert not is_bent(BooleanFunction(4, 0))
    assert not is_bent(BooleanFunction.from_monomials(4, [(1, 2)]))
    with pytest.raises(ValueError):
        is_bent(BooleanFunction(3, 0))


def test_polarize_examples():
    assert polarize(BooleanFunction.linear(4, 0b1011, 1)) == BitMatrix.zeros(4, 4)
    assert polarize(BooleanFunction.from_monomials(2, [(1, 2)])).to_strings() == ["01", "10"]
    B = polarize(BooleanFunction.from_monomials(4, [(1, 2), (3, 4)]))
    assert B.to_strings() == ["0100", "1000", "0001", "0010"]
    assert rank(B) == 4


def test_polarize_rejects_cubic():
    with pytest.raises(ValueError):
        polarize(BooleanFunction.from_monomials(5, [(1, 2, 3), (2, 4, 5), (1, 4, 5)]))


@pytest.mark.parametrize("m", range(2, 8))
def test_polarize_shape(m, rng):
    for _ in range(20):
        B = polarize(BooleanFunction.random_quadratic(m, rng))
        assert B.is_symplectic()
        assert rank(B) % 2 == 0


def test_rank_table_examples():
    assert coset_weight_distribution_by_rank(BitMatrix.zeros(4, 4), 4) == WeightDistribution({0: 1, 8: 30, 16: 1})
    B4 = polarize(BooleanFunction.from_monomials(4, [(1, 2), (3, 4)]))
    assert coset_weight_distribution_by_rank(B4, 4) == WeightDistribution({6: 16, 8: 0, 10: 16})
    B2 = polarize(BooleanFunction.from_monomials(4, [(1, 2)]))
    assert coset_weight_distribution_by_rank(B2, 4) == WeightDistribution({4: 4, 8: 24, 12: 4})


def test_rank_table_rejects_non_symplectic():
    with pytest.raises(ValueError):
        coset_weight_distribution_by_rank(BitMatrix.identity(4), 4)
    with pytest.raises(ValueError):
        rank_weight_table(4, 3)


@pytest.mark.parametrize("m", range(2, 7))
def test_rank_table_matches_brute_force(m, rng):
    for _ in range(40):
        f = BooleanFunction.random_quadratic(m, rng)
        assert coset_weight_distribution(f) == coset_weight_distribution_by_rank(polarize(f), m)
        assert coset_weight_distribution(f).total == 1 << (m + 1)


def test_truth_table_convention():
    f = BooleanFunction.variable(3, 2)
    assert [f(u) for u in range(8)] == [0, 0, 1, 1, 0, 0, 1, 1]
