"""Zonal harmonics on the Grassmannian via orthogonal symmetric polynomials.

The zonal harmonic attached to an even partition lambda is a symmetric
polynomial of degree |lambda|/2 in the squared principal cosines relative to
a base point.  The family is constructed by Gram-Schmidt of the monomial
symmetric basis against the L^2 inner product of the Haar measure, realized
either by Monte Carlo sampling or, for a single principal angle, by
Gauss-Jacobi quadrature against the exact one-angle Beta(1/2, (n-1)/2) law.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.special import roots_jacobi

from .exactpoly import MultiPoly, monomial_symmetric
from .grassmann import (Subspace, base_point, cosines_from_cross, haar_frames,
                        principal_cosines, sample_cosine_data)
from .partitions import Partition, enumerate_types

PIVOT_GUARD_SIGMAS = 5.0


class PivotGuardError(RuntimeError):
    """Raised when a Gram pivot is statistically indistinguishable from 0."""


def beta_quadrature(n: int, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi nodes/weights for the single-angle squared-cosine law.

    For a line against a fixed line in R^n, y = cos^2(theta) follows
    Beta(1/2, (n-1)/2); the matching Jacobi weight on [-1, 1] has
    parameters alpha = (n-3)/2, beta = -1/2.  Weights are normalized to a
    probability measure.
    """
    x, w = roots_jacobi(nodes, (n - 3) / 2.0, -0.5)
    y = (x + 1.0) / 2.0
    return y, w / w.sum()


@dataclass
class MomentOracle:
    """Inner products of symmetric polynomials in the squared cosines.

    method is "monte_carlo" (any kappa) or "quadrature" (kappa = 1 only).
    Points and weights are fixed at construction, so every inner product is
    reproducible from (n, k, method, samples, seed).
    """

    n: int
    k: int
    method: str
    samples: int = 0
    seed: int | None = None
    nodes: int = 0
    points: np.ndarray = field(default=None, repr=False)
    weights: np.ndarray | None = field(default=None, repr=False)

    @property
    def kappa(self) -> int:
        return min(self.k, self.n - self.k)

    @classmethod
    def monte_carlo(cls, n: int, k: int, samples: int, seed: int) -> "MomentOracle":
        rng = np.random.default_rng(seed)
        y, _ = sample_cosine_data(n, k, samples, rng)
        return cls(n, k, "monte_carlo", samples=samples, seed=seed, points=y)

    @classmethod
    def quadrature_kappa1(cls, n: int, k: int, nodes: int = 64) -> "MomentOracle":
        if min(k, n - k) != 1:
            raise ValueError("quadrature oracle requires kappa = 1")
        y, w = beta_quadrature(n, nodes)
        return cls(n, k, "quadrature", nodes=nodes,
                   points=y[:, None], weights=w)

    def evaluate_basis(self, polys: list[MultiPoly]) -> np.ndarray:
        """Evaluation matrix of the given polynomials at the oracle points."""
        return np.column_stack([p.evaluate_array(self.points) for p in polys])

    def mean_and_stderr(self, values: np.ndarray) -> tuple[float, float]:
        """Weighted mean of pointwise values, with Monte Carlo standard error
        (zero for quadrature)."""
        if self.method == "quadrature":
            return float(self.weights @ values), 0.0
        m = float(values.mean())
        se = float(values.std(ddof=1) / np.sqrt(len(values)))
        return m, se

    def inner_product(self, p: MultiPoly, q: MultiPoly) -> tuple[float, float]:
        vals = p.evaluate_array(self.points) * q.evaluate_array(self.points)
        return self.mean_and_stderr(vals)


@dataclass
class JacobiFamily:
    """Orthogonal family of symmetric polynomials indexed by even partitions.

    Each member is monic in its leading monomial symmetric term and stored as
    a coefficient vector over the monomial symmetric basis (graded order).
    The Gram matrix and its standard errors come from an independent
    validation sample, never from the construction sample.
    """

    n: int
    k: int
    max_weight: int
    index: list[Partition]
    basis: list[MultiPoly]          # monomial symmetric polynomials, in order
    coeffs: np.ndarray              # coeffs[i] = P_i over the basis, lower triangular
    gram: np.ndarray
    gram_stderr: np.ndarray
    provenance: dict

    @property
    def kappa(self) -> int:
        return min(self.k, self.n - self.k)

    def position(self, lam: Partition) -> int:
        try:
            return self.index.index(lam)
        except ValueError:
            raise KeyError(f"{lam} is not in the family (max_weight="
                           f"{self.max_weight})") from None

    def coefficients(self, lam: Partition) -> np.ndarray:
        """Coefficients of the family member over the monomial symmetric basis."""
        return self.coeffs[self.position(lam)]

    def evaluate(self, lam: Partition, y: np.ndarray) -> np.ndarray:
        """Evaluate the member at squared-cosine arrays of shape (..., kappa)."""
        c = self.coefficients(lam)
        vals = np.stack([b.evaluate_array(y) for b in self.basis], axis=-1)
        return vals @ c

    def value_at_ones(self, lam: Partition) -> float:
        ones = np.ones(self.kappa)
        return float(self.evaluate(lam, ones))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "max_weight": self.max_weight,
            "index": [list(lam.parts) for lam in self.index],
            "basis": [b.to_json_dict() for b in self.basis],
            "coeffs": self.coeffs.tolist(),
            "gram": self.gram.tolist(),
            "gram_stderr": self.gram_stderr.tolist(),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "JacobiFamily":
        return cls(
            n=d["n"], k=d["k"], max_weight=d["max_weight"],
            index=[Partition(tuple(p)) for p in d["index"]],
            basis=[MultiPoly.from_json_dict(b) for b in d["basis"]],
            coeffs=np.array(d["coeffs"]),
            gram=np.array(d["gram"]),
            gram_stderr=np.array(d["gram_stderr"]),
            provenance=d["provenance"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "JacobiFamily":
        return cls.from_json_dict(json.loads(s))


def build_family(n: int, k: int, max_weight: int, oracle: MomentOracle,
                 validation_seed: int | None = None) -> JacobiFamily:
    """Gram-Schmidt of the monomial symmetric basis under the oracle.

    Members are produced in graded order and kept monic in their leading
    monomial symmetric term.  A pivot smaller than 5 of its standard errors
    aborts the build (insufficient samples).  The reported Gram matrix is
    estimated on an independent sample so orthogonality can be judged
    against honest standard errors.
    """
    if max_weight % 2 != 0 or max_weight < 0:
        raise ValueError("max_weight must be even and non-negative")
    if oracle.n != n or oracle.k != k:
        raise ValueError("oracle was built for different (n, k)")
    kappa = min(k, n - k)
    index = enumerate_types(kappa, max_weight)
    basis = [monomial_symmetric(lam, kappa) for lam in index]
    B = len(basis)

    X = oracle.evaluate_basis(basis)          # (points, B)
    coeffs = np.eye(B)
    ortho_vals = np.empty_like(X)             # evaluations of the family members
    norms = np.empty(B)
    for i in range(B):
        v = X[:, i].copy()
        for j in range(i):
            proj, _ = oracle.mean_and_stderr(v * ortho_vals[:, j])
            coeffs[i] -= (proj / norms[j]) * coeffs[j]
            v -= (proj / norms[j]) * ortho_vals[:, j]
        ortho_vals[:, i] = v
        d, d_se = oracle.mean_and_stderr(v * v)
        if oracle.method == "monte_carlo" and d < PIVOT_GUARD_SIGMAS * d_se:
            raise PivotGuardError(
                f"Gram pivot for {index[i]} is {d:.3g} with stderr {d_se:.3g}; "
                "increase the sample count")
        if d <= 0:
            raise PivotGuardError(f"non-positive Gram pivot for {index[i]}")
        norms[i] = d

    gram, gram_se = _validation_gram(n, k, oracle, basis, coeffs, validation_seed)
    provenance = {
        "method": oracle.method,
        "samples": oracle.samples,
        "seed": oracle.seed,
        "nodes": oracle.nodes,
        "validation_seed": validation_seed,
    }
    return JacobiFamily(n, k, max_weight, index, basis, coeffs,
                        gram, gram_se, provenance)


def _validation_gram(n, k, oracle, basis, coeffs, validation_seed):
    """Pairwise inner products of the constructed family on fresh points."""
    if oracle.method == "quadrature":
        X = oracle.evaluate_basis(basis)
        V = X @ coeffs.T
        gram = (V * oracle.weights[:, None]).T @ V
        return gram, np.zeros_like(gram)
    seed = validation_seed if validation_seed is not None else \
        (0 if oracle.seed is None else oracle.seed) + 10_000_019
    rng = np.random.default_rng(seed)
    y, _ = sample_cosine_data(n, k, max(oracle.samples, 1), rng)
    X = np.column_stack([b.evaluate_array(y) for b in basis])
    V = X @ coeffs.T
    num = V.shape[0]
    gram = V.T @ V / num
    sq = np.einsum("pi,pj->ij", V * V, V * V) / num
    gram_se = np.sqrt(np.maximum(sq - gram ** 2, 0.0) / num)
    return gram, gram_se


def evaluate_zonal(family: JacobiFamily, lam: Partition, E: Subspace) -> float:
    """Value of the zonal harmonic at a subspace, relative to the canonical
    base point."""
    E0 = base_point(family.n, family.k)
    y = principal_cosines(E, E0)
    return float(family.evaluate(lam, y))


def spectral_component(f, lam: Partition, family: JacobiFamily,
                       samples: int, seed: int) -> tuple[float, float]:
    """Monte Carlo estimate of the inner product of f with the zonal
    harmonic, with standard error.  f must be evaluable on Haar samples."""
    rng = np.random.default_rng(seed)
    frames = haar_frames(family.n, family.k, samples, rng)
    cross = frames[:, :family.k, :]
    y = cosines_from_cross(cross, family.n)
    z = family.evaluate(lam, y)
    vals = np.array([f(Subspace(fr)) for fr in frames]) * z
    return float(vals.mean()), float(vals.std(ddof=1) / np.sqrt(samples))
