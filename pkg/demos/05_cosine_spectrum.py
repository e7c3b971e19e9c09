"""Spectral multipliers of the cosine transform.

On the projective circle the multipliers are classical Fourier
coefficients of |cos|, giving an exact oracle.  On Gr_2(R^4) the
transform annihilates every type with second part >= 4 -- the image
supports only a sparse set of types, which is the computational face of
the non-injectivity results.
"""

import numpy as np

from grassharm.partitions import Partition
from grassharm.transforms import multiplier_table, support_density_demo
from grassharm.zonal import MomentOracle, build_family

# projective circle: compare with the Fourier oracle
fam = build_family(2, 1, 12, MomentOracle.quadrature_kappa1(2, 1))
table = multiplier_table(2, 1, 1.0, fam, 12, 200_000, seed=1)
print("cosine multipliers on Gr_1(R^2) vs Fourier coefficients of |cos|:")
for m in range(7):
    est = table.estimates[Partition((2 * m,))]
    exact = 2 / np.pi if m == 0 else \
        2 * (-1) ** (m + 1) / (np.pi * (4 * m * m - 1))
    print(f"  m={m}: {est.mean:+.5f} +- {est.stderr:.5f}   exact {exact:+.5f}")

# Gr_2(R^4): the vanishing pattern lam2 >= 4
fam4 = build_family(4, 2, 8,
                    MomentOracle.monte_carlo(4, 2, 400_000, seed=2))
table4 = multiplier_table(4, 2, 1.0, fam4, 8, 800_000, seed=3)
print("\ncosine multipliers on Gr_2(R^4):")
for lam, est in sorted(table4.estimates.items(),
                       key=lambda kv: (kv[0].weight, kv[0].parts)):
    print(f"  {str(list(lam.parts)):8s} {est.mean:+.5f} +- {est.stderr:.5f}"
          f"  -> {est.classify()}")

report = support_density_demo(table4)
print(f"\nsurviving types: {[list(l.parts) for l in report.surviving]}")
print(f"exact density of the surviving set (weight <= 8): "
      f"{report.surviving_density}")
