import random
from fractions import Fraction

import pytest

from grassharm.determinants import (block_factorial_matrix, block_invertible,
                                    cauchy_det, cauchy_matrix, exact_det,
                                    factorial_det_formula, factorial_matrix)
from grassharm.linalg_exact import det_bareiss, rank_dense, rank_sparse


def test_factorial_matrix_entries():
    m = factorial_matrix(0, 1)
    assert m == [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1, 2)]]
    assert factorial_matrix(1, 0) == [[Fraction(1)]]
    m3 = factorial_matrix(2, 2)
    assert m3[0][0] == Fraction(1, 2)
    assert len(m3) == 3 and all(len(r) == 3 for r in m3)


def test_factorial_det_examples():
    assert factorial_det_formula(0, 1) == Fraction(-1, 2)
    assert exact_det(factorial_matrix(0, 1)) == Fraction(-1, 2)
    assert factorial_det_formula(0, 0) == 1
    assert factorial_det_formula(3, 2) == exact_det(factorial_matrix(3, 2))


def test_factorial_identity_full_range():
    for k in range(9):
        for n in range(9):
            d = exact_det(factorial_matrix(k, n))
            assert d == factorial_det_formula(k, n)
            assert d != 0


def test_exact_det_basics():
    eye = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert exact_det(eye) == 1
    repeated = [[Fraction(1), Fraction(2)], [Fraction(1), Fraction(2)]]
    assert exact_det(repeated) == 0
    assert exact_det([]) == 1


def test_det_multiplicative_on_random_matrices():
    rng = random.Random(11)
    for _ in range(10):
        a = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
             for _ in range(4)]
        b = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
             for _ in range(4)]
        ab = [[sum(a[i][t] * b[t][j] for t in range(4)) for j in range(4)]
              for i in range(4)]
        assert exact_det(ab) == exact_det(a) * exact_det(b)


def test_cauchy_1x1():
    assert cauchy_det([Fraction(0)], [Fraction(-1)]) == 1


def test_cauchy_2x2():
    got = cauchy_det([Fraction(0), Fraction(1)], [Fraction(-1), Fraction(-2)])
    assert got == Fraction(1, 12)
    assert got == exact_det(cauchy_matrix([Fraction(0), Fraction(1)],
                                          [Fraction(-1), Fraction(-2)]))


def test_cauchy_random_instances():
    rng = random.Random(2024)
    for _ in range(200):
        size = rng.randint(1, 6)
        vals = rng.sample(range(-60, 60), 2 * size)
        x = [Fraction(v, 1) for v in vals[:size]]
        y = [Fraction(v, 1) + Fraction(1, 2) for v in vals[size:]]
        assert cauchy_det(x, y) == exact_det(cauchy_matrix(x, y))


def test_cauchy_paper_specialization():
    # x_i = k+i-1, y_j = -j gives prod_i (i!)^2 (k+i)! / (k+n+i)!
    for k in range(5):
        for n in range(1, 5):
            x = [Fraction(k + i - 1) for i in range(1, n + 1)]
            y = [Fraction(-j) for j in range(1, n + 1)]
            want = Fraction(1)
            import math
            for i in range(n):
                want *= Fraction(math.factorial(i) ** 2 * math.factorial(k + i),
                                 math.factorial(k + n + i))
            assert cauchy_det(x, y) == want
            assert exact_det(cauchy_matrix(x, y)) == want


def test_cauchy_precondition_errors():
    with pytest.raises(ValueError, match="repeated x"):
        cauchy_det([Fraction(1), Fraction(1)], [Fraction(0), Fraction(2)])
    with pytest.raises(ValueError, match=r"x\[0\] == y\[1\]"):
        cauchy_det([Fraction(1), Fraction(3)], [Fraction(0), Fraction(1)])
    with pytest.raises(ValueError, match="size mismatch"):
        cauchy_det([Fraction(1)], [])


def test_block_invertibility_corollary():
    # every N x N block starting at 2jN - N is invertible
    for N in range(1, 6):
        j = 1
        while 2 * j * N - N <= 20:
            assert block_invertible(N, 2 * j * N - N)
            j += 1


def test_block_matrix_validation():
    with pytest.raises(ValueError):
        block_factorial_matrix(3, 1)


def test_rank_helpers():
    rows = [{0: Fraction(1), 1: Fraction(2)},
            {0: Fraction(2), 1: Fraction(4)},
            {2: Fraction(1)}]
    assert rank_sparse(rows) == 2
    dense = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]]
    assert rank_dense(dense) == 1


def test_det_bareiss_rational_entries():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert det_bareiss(m) == Fraction(1, 2) * Fraction(1, 5) - Fraction(1, 3) * Fraction(1, 4)
