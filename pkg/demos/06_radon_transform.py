"""The Radon transform between grassmannians and its kernel pattern.

The Radon transform from Gr_2(R^4) to lines averages over the lines
inside a plane.  Its adjoint kills exactly the types whose partition has
a nonzero second part; the surviving types are those of the smaller
grassmannian.  The squared adjoint norm per type is estimated by nested
Monte Carlo with an unbiased split-sample square.
"""

from grassharm.transforms import radon_table
from grassharm.zonal import MomentOracle, build_family

fam = build_family(4, 2, 8, MomentOracle.monte_carlo(4, 2, 400_000, seed=10))
table = radon_table(4, 2, 1, fam, 8, samples_outer=2_000,
                    samples_inner=128, seed=11)

print("squared adjoint norms of the Radon transform Gr_1 -> Gr_2(R^4):")
for lam, est in sorted(table.estimates.items(),
                       key=lambda kv: (kv[0].weight, kv[0].parts)):
    marker = "lam2 = 0" if lam.part(2) == 0 else "lam2 > 0"
    print(f"  {str(list(lam.parts)):8s} {est.mean:+.5f} +- {est.stderr:.5f}"
          f"  -> {est.classify():12s} ({marker})")

print("\nthe surviving types are exactly those with lam2 = 0: the image of")
print("the transform only sees the types of the smaller grassmannian")
