"""Exact kernels of polynomial-coefficient differential operators.

For a nonzero operator sum c x^beta d^alpha acting on polynomials of
degree <= m in k variables, the kernel dimension grows like O(m^(k-1)) --
one degree less than the full space.  The computation is exact (rational
sparse elimination), cross-checked through the mu-matrix of the reduced
operator, and bounded by the block-rank density estimate.
"""

import numpy as np

from grassharm.exactpoly import dim_P
from grassharm.pdekernel import (DiffOp, density_bound_check, growth_fit,
                                 kernel_dim, mu_kernel_dim, random_operator,
                                 reduce_operator)

# the rotation operator x2 d/dx1 - x1 d/dx2: kernel = radial polynomials
rot = DiffOp(2, [((1, 0), (0, 1), 1), ((0, 1), (1, 0), -1)])
print("kernel of the rotation operator x2 d1 - x1 d2:")
for m in range(0, 11, 2):
    print(f"  m = {m:2d}: dim P = {dim_P(m, 2):3d}, "
          f"dim Ker = {kernel_dim(rot, m)}")

rep = growth_fit(rot, [4, 8, 12, 16, 20])
print(f"log-log slope {rep.slope:.3f} <= limit {rep.slope_limit} "
      f"(k - 1 + 0.25)")

# reduction and the mu-matrix: multiplication by x becomes x d/dx + 1
mult = DiffOp(1, [((0,), (1,), 1)])
red = reduce_operator(mult)
print(f"\nreduction of multiplication-by-x: {red!r}")
for m in (3, 6):
    print(f"  m = {m}: mu-matrix kernel {mu_kernel_dim(red, m)} "
          f"= direct kernel {kernel_dim(red, m)}")

# random operators respect the density bound 1 - 1/(2N)^k
rng = np.random.default_rng(7)
D = random_operator(2, rng)
print(f"\nrandom operator: {D!r}")
dens = density_bound_check(D, [1, 2, 3])
print(f"order parameter N = {dens.N}, bound = {dens.bound}")
for m, dp, ker, frac, ok in dens.rows:
    print(f"  m = {m:2d}: kernel density {frac} <= {dens.bound}: {ok}")
