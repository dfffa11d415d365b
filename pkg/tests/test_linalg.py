import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from graphcomplex.linalg import SparseRationalMatrix, apply, kernel, rank
from oracles import dense_rank


def test_rank_examples():
    assert rank(SparseRationalMatrix(3, 4)) == 0
    for k in range(1, 6):
        assert rank(SparseRationalMatrix(k, k, {(i, i): 1 for i in range(k)})) == k


def _random_matrix(rng, rows, cols, density=0.4, bound=4):
    dense = [
        [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) if rng.random() < density else Fraction(0) for _ in range(cols)]
        for _ in range(rows)
    ]
    return dense


def test_rank_matches_dense_oracle():
    rng = random.Random(0)
    for _ in range(200):
        rows, cols = rng.randint(1, 9), rng.randint(1, 9)
        dense = _random_matrix(rng, rows, cols, density=rng.random())
        assert rank(SparseRationalMatrix.from_dense(dense)) == dense_rank(dense)


def test_rank_of_low_rank_products():
    rng = random.Random(1)
    for _ in range(50):
        k = rng.randint(0, 4)
        a = SparseRationalMatrix.from_dense(_random_matrix(rng, 8, k, 0.9)) if k else SparseRationalMatrix(8, 0)
        b = SparseRationalMatrix.from_dense(_random_matrix(rng, k, 7, 0.9)) if k else SparseRationalMatrix(0, 7)
        prod = a @ b
        assert rank(prod) == dense_rank(prod.to_dense()) <= k


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_kernel_vectors_are_annihilated(rows):
    m = SparseRationalMatrix.from_dense(rows)
    ker = kernel(m)
    assert len(ker) == m.cols - rank(m)
    for vec in ker:
        assert not apply(m, vec)
    # kernel vectors are independent
    if ker:
        stacked = SparseRationalMatrix(len(ker), m.cols, {(i, j): c for i, v in enumerate(ker) for j, c in v.items()})
        assert rank(stacked) == len(ker)


def test_rank_invariant_under_permutation():
    rng = random.Random(2)
    for _ in range(50):
        dense = _random_matrix(rng, 6, 7)
        m = SparseRationalMatrix.from_dense(dense)
        rp, cp = list(range(6)), list(range(7))
        rng.shuffle(rp)
        rng.shuffle(cp)
        assert rank(m.permuted(rp, cp)) == rank(m)


def test_matmul_matches_dense():
    rng = random.Random(3)
    a = _random_matrix(rng, 3, 4)
    b = _random_matrix(rng, 4, 2)
    prod = SparseRationalMatrix.from_dense(a) @ SparseRationalMatrix.from_dense(b)
    ref = [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(2)] for i in range(3)]
    assert prod.to_dense() == ref
