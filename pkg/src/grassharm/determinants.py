"""Exact determinant identities for factorial and Cauchy matrices.

The (n+1) x (n+1) matrix with entries 1/(k+i+j-2)! has the closed-form
determinant (-1)^(n(n+1)/2) * prod_{i=0}^n i!/(k+n+i)!, hence is invertible
for every integer k >= 0.  The Cauchy matrix (1/(x_i - y_j)) has the
classical product formula.  Everything here is exact rational arithmetic,
cross-checkable against generic elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .linalg_exact import det_bareiss

ExactMatrix = list[list[Fraction]]


def exact_det(matrix: ExactMatrix) -> Fraction:
    """Exact determinant by fraction-free elimination (the generic oracle)."""
    return det_bareiss(matrix)


def factorial_matrix(k: int, n: int) -> ExactMatrix:
    """The (n+1) x (n+1) matrix with entry (i, j) = 1/(k+i+j-2)!, 1-based."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    return [[Fraction(1, factorial(k + i + j)) for j in range(n + 1)]
            for i in range(n + 1)]


def factorial_det_formula(k: int, n: int) -> Fraction:
    """Closed form for det(factorial_matrix(k, n)); always nonzero."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    value = Fraction(1)
    for i in range(n + 1):
        value *= Fraction(factorial(i), factorial(k + n + i))
    return sign * value


def cauchy_matrix(x: list[Fraction], y: list[Fraction]) -> ExactMatrix:
    """The matrix with entries 1/(x_i - y_j)."""
    _validate_cauchy(x, y)
    return [[Fraction(1) / (xi - yj) for yj in y] for xi in x]


def cauchy_det(x: list[Fraction], y: list[Fraction]) -> Fraction:
    """Closed-form Cauchy determinant
    prod_{i<j} (x_i-x_j)(y_j-y_i) / prod_{i,j} (x_i-y_j)."""
    _validate_cauchy(x, y)
    num = Fraction(1)
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            num *= (x[i] - x[j]) * (y[j] - y[i])
    den = Fraction(1)
    for xi in x:
        for yj in y:
            den *= xi - yj
    return num / den


def _validate_cauchy(x, y) -> None:
    if len(x) != len(y):
        raise ValueError(f"size mismatch: {len(x)} vs {len(y)}")
    for i, a in enumerate(x):
        for j, b in enumerate(x):
            if i < j and a == b:
                raise ValueError(f"repeated x value at positions {i}, {j}: {a}")
    for i, a in enumerate(y):
        for j, b in enumerate(y):
            if i < j and a == b:
                raise ValueError(f"repeated y value at positions {i}, {j}: {a}")
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            if a == b:
                raise ValueError(f"x[{i}] == y[{j}] == {a}")


def block_factorial_matrix(N: int, block_start: int) -> ExactMatrix:
    """The N x N matrix with entries 1/(z_i - nu)! where z_i ranges over
    [block_start, block_start + N - 1] and nu over [0, N-1].

    Requires block_start >= N - 1 so that no argument is negative.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if block_start < N - 1:
        raise ValueError(f"block_start must be >= N-1, got {block_start}")
    return [[Fraction(1, factorial(block_start + i - nu)) for nu in range(N)]
            for i in range(N)]


def block_invertible(N: int, block_start: int) -> bool:
    """Whether the block factorial matrix has nonzero exact determinant."""
    return exact_det(block_factorial_matrix(N, block_start)) != 0
