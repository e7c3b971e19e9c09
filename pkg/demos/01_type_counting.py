"""Counting orthogonal-group types and their sparsity densities.

The types appearing in L^2 of the grassmannian Gr_k(R^n) are indexed by
partitions with at most kappa = min(k, n-k) even parts.  This demo counts
them, checks the restricted-partition bracketing bounds, and shows the
sparse / co-sparse dichotomy that drives the support theorems.
"""

from fractions import Fraction

from grassharm.partitions import (count_types, count_weight_class, density,
                                  enumerate_types, part_ge, part_le,
                                  weight_class_bounds)

print("Types of Gr_2 with weight <= 8, in graded order:")
for lam in enumerate_types(2, 8):
    print(f"  {list(lam.parts)}  (weight {lam.weight})")

print("\nPer-weight counts for kappa = 3, with bracketing bounds:")
for half in (5, 10, 20, 40):
    cnt = count_weight_class(3, 2 * half)
    lo, hi = weight_class_bounds(3, half)
    print(f"  weight {2 * half:3d}: count {cnt:5d} in "
          f"[{float(lo):9.1f}, {float(hi):9.1f}]")

print("\nCumulative counts, kappa = 2 vs 4:")
for w in (20, 40, 80):
    print(f"  weight <= {w}: kappa=2 -> {count_types(2, w):5d}, "
          f"kappa=4 -> {count_types(4, w):7d}")

print("\nSparsity: the set {lam2 <= 2} thins out (sparse), its")
print("complement {lam2 >= 4} fills up (co-sparse):")
for w in (20, 60, 100, 200):
    sparse = density(part_le(2, 2), 2, w)
    cosparse = density(part_ge(2, 4), 2, w)
    print(f"  weight <= {w:3d}: {str(sparse):>9s} vs {str(cosparse):>9s}")
assert density(part_le(2, 2), 2, 200) < Fraction(15, 100)
