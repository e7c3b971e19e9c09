"""Haar sampling, principal angles, and the rescaling flow.

Subspaces are represented by orthonormal frames; squared principal cosines
come from singular values of the cross Gram matrix.  The rescaling flow
contracts the grassmannian onto a base point and its jacobian factor
converges to the inverse cosine, the mechanism behind the localization of
equivariant distributions.
"""

import numpy as np

from grassharm.grassmann import (abs_cosine, base_point, graph_coordinate,
                                 haar_sample, jacobian_factor,
                                 principal_cosines, rescaling_flow,
                                 sample_cosine_data)

rng = np.random.default_rng(0)
E0 = base_point(5, 2)
E = haar_sample(5, 2, rng)

y = principal_cosines(E, E0)
print(f"squared principal cosines of a Haar sample: {y}")
print(f"|cos(E, E0)| = {abs_cosine(E, E0):.6f} "
      f"= sqrt(prod y) = {np.sqrt(np.prod(y)):.6f}")

# the single-angle law on Gr_1(R^4) is Beta(1/2, 3/2) with mean 1/4
ys, _ = sample_cosine_data(4, 1, 200_000, rng)
print(f"\nmean squared cosine on Gr_1(R^4): {ys.mean():.4f} (exact: 0.25)")

print("\nrescaling flow g_eps towards E0:")
for eps in (1.0, 0.5, 0.1, 0.01):
    g = rescaling_flow(E0, eps, E)
    print(f"  eps = {eps:5.2f}: cosines to E0 = "
          f"{np.round(principal_cosines(g, E0), 6)}")

s, t = 0.6, 0.35
lhs = rescaling_flow(E0, s, rescaling_flow(E0, t, E))
rhs = rescaling_flow(E0, s * t, E)
gap = np.max(np.abs(principal_cosines(lhs, E0) - principal_cosines(rhs, E0)))
print(f"\nsemigroup law g_s g_t = g_st: gap {gap:.2e}")

eta = jacobian_factor(E0, 1e-5, E)
print(f"jacobian factor at eps = 1e-5: {eta:.6f} "
      f"vs 1/|cos| = {1 / abs_cosine(E, E0):.6f}")

A = graph_coordinate(E0, E)
As = graph_coordinate(E0, rescaling_flow(E0, 0.5, E))
print(f"graph coordinate scales linearly: max |A(g_s E) - s A(E)| = "
      f"{np.max(np.abs(As - 0.5 * A)):.2e}")
