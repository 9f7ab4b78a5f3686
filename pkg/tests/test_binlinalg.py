import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rmcodes.binlinalg import (
    BitMatrix,
    BitVector,
    batch_rank,
    express,
    kernel,
    rank,
    row_space_contains,
    row_space_subset,
    systematic_form,
    to_limbs,
)
from rmcodes.rm import rm1, simplex


def dense_rank(a):
    """Textbook elimination on a 0/1 numpy array."""
    a = np.array(a, dtype=np.uint8) % 2
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


matrices = st.integers(1, 64).flatmap(
    lambda cols: st.lists(st.integers(0, (1 << cols) - 1), min_size=0, max_size=64).map(
        lambda rows: BitMatrix(cols, tuple(rows))
    )
)


def test_bitvector_roundtrip():
    v = BitVector.from_str("0110100")
    assert str(v) == "0110100"
    assert v.weight == 3
    assert v[1] == 1 and v[0] == 0
    assert (v ^ v).weight == 0
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)


def test_rank_examples():
    assert rank(BitMatrix.zeros(5, 7)) == 0
    assert rank(BitMatrix.identity(9)) == 9
    B = BitMatrix.from_array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert rank(B) == 4


@given(matrices)
def test_rank_matches_dense_and_transpose(M):
    r = rank(M)
    assert r == dense_rank(M.to_array()) if M.nrows else r == 0
    assert r == rank(M.transpose())
    assert r <= min(M.nrows, M.cols)


@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_row_operations(M, r):
    rows = list(M.rows)
    before = rank(M)
    for _ in range(20):
        if len(rows) < 2:
            break
        i, j = r.sample(range(len(rows)), 2)
        if r.random() < 0.5:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] ^= rows[j]
    assert rank(rows) == before


def test_systematic_identity_input():
    G = BitMatrix.from_strings(["1001", "0101", "0011"])
    S, perm = systematic_form(G)
    assert S == G and perm == [0, 1, 2, 3]


def test_systematic_hand_examples():
    S, perm = systematic_form(BitMatrix.from_strings(["011", "101"]))
    assert S.to_strings() == ["101", "011"] and perm == [0, 1, 2]
    S, perm = systematic_form(BitMatrix.from_strings(["110", "001"]))
    assert perm == [0, 2, 1]
    assert S.to_strings() == ["101", "010"]


def test_systematic_rm12():
    S, perm = systematic_form(rm1(2).generator)
    assert S.to_strings() == ["1001", "0101", "0011"]
    assert perm == [0, 1, 2, 3]


def test_systematic_rejects_rank_deficient():
    with pytest.raises(ValueError):
        systematic_form(BitMatrix.from_strings(["110", "110"]))


@pytest.mark.parametrize("seed", range(10))
def test_systematic_preserves_weights(seed):
    from rmcodes.codes import LinearCode, weight_distribution

    r = random.Random(seed)
    code = LinearCode.from_rows([r.getrandbits(14) for _ in range(6)], 14)
    S, perm = systematic_form(code.generator)
    assert S.rows[: code.k] and all(S[i, j] == (i == j) for i in range(code.k) for j in range(code.k))
    assert weight_distribution(LinearCode(S)) == weight_distribution(code)
    assert row_space_subset(S, code.generator.permute_columns(perm))


def test_row_space_contains_examples():
    G = BitMatrix.from_strings(["1100", "0011"])
    assert row_space_contains(G, BitVector(4, 0))
    assert row_space_contains(BitMatrix.identity(5), BitVector(5, 0b10110))
    S3 = simplex(3).generator
    ones = BitVector.ones(7)
    assert not row_space_contains(S3, ones)  # every nonzero word has weight 4
    assert row_space_contains(kernel(S3), ones)  # the Hamming code does contain it


def test_express_recovers_combination():
    G = BitMatrix.from_strings(["1100", "0110", "0011"])
    combo = express(G, 0b1001)
    assert combo is not None
    acc = 0
    for i, r in enumerate(G.rows):
        if combo >> i & 1:
            acc ^= r
    assert acc == 0b1001
    assert express(G, 0b0001) is None


def test_kernel_is_orthogonal():
    G = simplex(4).generator
    H = kernel(G)
    assert H.nrows == 15 - 4
    for h in H.rows:
        for g in G.rows:
            assert (h & g).bit_count() % 2 == 0


def test_batch_rank_matches_scalar():
    r = random.Random(3)
    mats = np.array([[r.getrandbits(8) for _ in range(8)] for _ in range(500)], dtype=np.uint64)
    got = batch_rank(mats, 8)
    assert got.tolist() == [rank(int(x) for x in row) for row in mats]


def test_to_limbs():
    limbs = to_limbs([(1 << 64) | 5], 70)
    assert limbs.shape == (1, 2)
    assert limbs[0, 0] == 5 and limbs[0, 1] == 1
