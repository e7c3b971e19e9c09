"""Exact symmetric polynomials and the sigma -> y substitution.

Symmetric functions of the squared principal cosines y_1, ..., y_kappa can
be written in the elementary symmetric coordinates sigma_j.  The
substitution map is an exact ring homomorphism over the rationals, and the
monomial symmetric polynomials with even-partition exponents form a basis
whose size matches the type count.
"""

from fractions import Fraction

from grassharm.exactpoly import (MultiPoly, dim_P, dim_Ps, is_symmetric,
                                 monomial_symmetric, sigma_to_y)
from grassharm.partitions import Partition, count_types

# a polynomial in the sigma-coordinates: sigma_1^2 - 3 sigma_2
p_sigma = MultiPoly(2, {(2, 0): Fraction(1), (0, 1): Fraction(-3)})
p_y = sigma_to_y(p_sigma)
print("sigma_1^2 - 3 sigma_2 in y-coordinates:")
for e, c in p_y.sorted_terms():
    print(f"  y^{list(e)}: {c}")
assert is_symmetric(p_y)

# the substitution is a ring homomorphism: check on a product
q_sigma = MultiPoly(2, {(1, 0): Fraction(1), (0, 0): Fraction(2)})
assert sigma_to_y(p_sigma * q_sigma) == sigma_to_y(p_sigma) * sigma_to_y(q_sigma)
print("\nring homomorphism property verified exactly")

print("\nMonomial symmetric polynomials for types of weight 4, kappa = 2:")
for lam in (Partition((4, 0)), Partition((2, 2))):
    m = monomial_symmetric(lam, 2)
    print(f"  m_{list(lam.parts)} = "
          + " + ".join(f"{c}*y^{list(e)}" for e, c in m.sorted_terms()))

print("\nDimension bookkeeping (k = 3):")
for m in (2, 4, 6):
    print(f"  deg <= {m}: dim P = {dim_P(m, 3):3d}, "
          f"symmetric even-type subspace = {dim_Ps(m, 3):2d} "
          f"= count_types(3, {2 * m}) = {count_types(3, 2 * m)}")
