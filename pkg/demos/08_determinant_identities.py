"""Exact determinant identities behind the block-rank arguments.

The inverse-factorial matrix (1/(k+i+j)!) has a closed-form nonzero
determinant, a special case of the Cauchy determinant after row/column
scaling.  Its consequence: every square block of the infinite matrix
(1/(z - nu)!) along the diagonal ranges used in the kernel-density bound
is invertible.  Everything here is exact rational arithmetic.
"""

from fractions import Fraction

from grassharm.determinants import (block_invertible, cauchy_det,
                                    cauchy_matrix, exact_det,
                                    factorial_det_formula, factorial_matrix)

print("inverse-factorial determinants: closed form vs exact elimination")
for k, n in ((0, 1), (2, 2), (3, 4), (5, 5)):
    formula = factorial_det_formula(k, n)
    direct = exact_det(factorial_matrix(k, n))
    assert formula == direct != 0
    print(f"  k={k}, n={n}: {formula}")

x = [Fraction(0), Fraction(1), Fraction(2)]
y = [Fraction(-1), Fraction(-2), Fraction(-3)]
print(f"\nCauchy matrix with x = {[str(v) for v in x]}, "
      f"y = {[str(v) for v in y]}:")
for row in cauchy_matrix(x, y):
    print("  " + "  ".join(f"{str(v):>5s}" for v in row))
print(f"det = {cauchy_det(x, y)} (closed form) "
      f"= {exact_det(cauchy_matrix(x, y))} (elimination)")

print("\nblock invertibility along the diagonal (N x N blocks):")
for N in (2, 3, 4):
    starts = [2 * j * N - N for j in (1, 2, 3)]
    print(f"  N = {N}: blocks at {starts} all invertible: "
          f"{all(block_invertible(N, s) for s in starts)}")
