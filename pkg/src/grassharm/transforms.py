"""Spectral multipliers of the cosine, alpha-cosine and Radon transforms.

Every O(n)-equivariant operator acts on each irreducible type by a scalar.
For the (alpha-)cosine transform that scalar is estimated as the Haar
average of |cos|^alpha times the zonal harmonic, normalized by the zonal
value at the base point.  For the Radon transform between grassmannians of
different dimension the squared adjoint norm on one type is estimated by
nested Monte Carlo with an unbiased split-sample product for the inner
square.  Vanishing/surviving classification feeds back into exact type
densities to exhibit the sparse / co-sparse patterns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .grassmann import cosines_from_cross, haar_frames, sample_cosine_data
from .partitions import Partition, TypePredicate, density, enumerate_types
from .zonal import JacobiFamily

VANISH_SIGMAS = 3.0
SURVIVE_SIGMAS = 5.0


class MultiplierGuardError(RuntimeError):
    """Raised when the zonal normalization is statistically unreliable."""


@dataclass(frozen=True)
class MultiplierEstimate:
    lam: Partition
    mean: float
    stderr: float
    samples: int
    operator: str

    def classify(self, vanish_sigmas: float = VANISH_SIGMAS,
                 survive_sigmas: float = SURVIVE_SIGMAS) -> str:
        if abs(self.mean) <= vanish_sigmas * self.stderr:
            return "vanishing"
        if abs(self.mean) >= survive_sigmas * self.stderr:
            return "surviving"
        return "inconclusive"


@dataclass
class MultiplierTable:
    n: int
    k: int
    operator: str
    max_weight: int
    seed: int
    estimates: dict[Partition, MultiplierEstimate] = field(default_factory=dict)

    @property
    def kappa(self) -> int:
        return min(self.k, self.n - self.k)

    def covers_declared_range(self) -> bool:
        expected = set(enumerate_types(self.kappa, self.max_weight))
        return set(self.estimates) == expected

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "operator": self.operator,
            "max_weight": self.max_weight, "seed": self.seed,
            "estimates": [
                {"lam": list(e.lam.parts), "mean": e.mean, "stderr": e.stderr,
                 "samples": e.samples, "operator": e.operator}
                for e in (self.estimates[lam]
                          for lam in sorted(self.estimates,
                                            key=lambda p: (p.weight, p.parts)))
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "MultiplierTable":
        table = cls(d["n"], d["k"], d["operator"], d["max_weight"], d["seed"])
        for e in d["estimates"]:
            lam = Partition(tuple(e["lam"]))
            table.estimates[lam] = MultiplierEstimate(
                lam, e["mean"], e["stderr"], e["samples"], e["operator"])
        return table

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "MultiplierTable":
        return cls.from_json_dict(json.loads(s))


def _zonal_value_at_base(family: JacobiFamily, lam: Partition) -> float:
    v = family.value_at_ones(lam)
    if abs(v) < 1e-9:
        raise MultiplierGuardError(
            f"zonal value at the base point for {lam} is {v:.3g}; "
            "normalization unreliable")
    return v


def alpha_cosine_multiplier(n: int, k: int, alpha: float, lam: Partition,
                            family: JacobiFamily, samples: int,
                            seed: int) -> MultiplierEstimate:
    """Eigenvalue of the |cos|^alpha transform on one type, estimated as
    mean(|cos|^alpha * Z_lam) / Z_lam(base point) over Haar samples.

    Requires alpha > -1 (direct-integral regime)."""
    if alpha <= -1:
        raise ValueError("alpha must exceed -1 in the direct-integral regime")
    if lam.weight > family.max_weight:
        raise ValueError(f"{lam} exceeds the family range")
    z1 = _zonal_value_at_base(family, lam)
    rng = np.random.default_rng(seed)
    y, abscos = sample_cosine_data(n, k, samples, rng)
    weight = np.ones_like(abscos) if alpha == 0 else abscos ** alpha
    vals = weight * family.evaluate(lam, y) / z1
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / np.sqrt(samples))
    tag = "cos" if alpha == 1 else f"alpha_cos({alpha})"
    return MultiplierEstimate(lam, mean, stderr, samples, tag)


def cosine_multiplier(n: int, k: int, lam: Partition, family: JacobiFamily,
                      samples: int, seed: int) -> MultiplierEstimate:
    """Eigenvalue of the cosine transform on one type."""
    return alpha_cosine_multiplier(n, k, 1.0, lam, family, samples, seed)


def multiplier_table(n: int, k: int, alpha: float, family: JacobiFamily,
                     max_weight: int, samples: int, seed: int) -> MultiplierTable:
    """Multipliers for every type up to max_weight; each type owns a seed
    derived from (seed, type index)."""
    kappa = min(k, n - k)
    tag = "cos" if alpha == 1 else f"alpha_cos({alpha})"
    table = MultiplierTable(n, k, tag, max_weight, seed)
    for i, lam in enumerate(enumerate_types(kappa, max_weight)):
        lam_seed = int(np.random.default_rng([seed, i]).integers(2**31))
        table.estimates[lam] = alpha_cosine_multiplier(
            n, k, alpha, lam, family, samples, lam_seed)
    return table


def radon_adjoint_norm(n: int, k: int, p: int, lam: Partition,
                       family_k: JacobiFamily, samples_outer: int,
                       samples_inner: int, seed: int) -> MultiplierEstimate:
    """Squared norm of the Radon average of one zonal harmonic.

    For E Haar on Gr_p, the inner average of Z_lam over k-subspaces
    containing E is estimated twice from independent samples; the product of
    the two halves is an unbiased estimator of the square, so the outer mean
    is an unbiased estimate of the squared norm.
    """
    if not 1 <= p < k <= n - 1:
        raise ValueError(f"need 1 <= p < k <= n-1, got n={n}, k={k}, p={p}")
    if lam.weight > family_k.max_weight:
        raise ValueError(f"{lam} exceeds the family range")
    rng = np.random.default_rng(seed)
    products = np.empty(samples_outer)
    chunk = max(1, 200_000 // max(samples_inner, 1))
    done = 0
    while done < samples_outer:
        c = min(chunk, samples_outer - done)
        products[done:done + c] = _radon_inner_products(
            n, k, p, lam, family_k, c, samples_inner, rng)
        done += c
    mean = float(products.mean())
    stderr = float(products.std(ddof=1) / np.sqrt(samples_outer))
    return MultiplierEstimate(lam, mean, stderr,
                              samples_outer * samples_inner,
                              f"radon_adjoint({k}->{p})")


def _radon_inner_products(n, k, p, lam, family_k, n_outer, n_inner, rng):
    """Split-sample product estimates for a batch of outer subspaces."""
    E = haar_frames(n, p, n_outer, rng)                   # (O, n, p)
    # orthonormal bases of the complements via full QR
    q, _ = np.linalg.qr(E, mode="complete")               # (O, n, n)
    comp = q[:, :, p:]                                    # (O, n, n-p)
    # inner samples: (k - p)-frames inside each complement
    g = rng.standard_normal((n_outer, n_inner, n - p, k - p))
    w, r = np.linalg.qr(g)
    w = w * np.sign(np.einsum("...ii->...i", r))[..., None, :]
    # ambient frames of F = E + W, columns orthonormal by construction
    Wa = np.einsum("oca,oiaj->oicj", comp, w)             # (O, I, n, k-p)
    Ea = np.broadcast_to(E[:, None], (n_outer, n_inner, n, p))
    F = np.concatenate([Ea, Wa], axis=-1)                 # (O, I, n, k)
    y = cosines_from_cross(F[..., :k, :], n)              # (O, I, kappa)
    z = family_k.evaluate(lam, y)                         # (O, I)
    half = n_inner // 2
    return z[:, :half].mean(axis=1) * z[:, half:].mean(axis=1)


def radon_table(n: int, k: int, p: int, family_k: JacobiFamily,
                max_weight: int, samples_outer: int, samples_inner: int,
                seed: int) -> MultiplierTable:
    kappa = min(k, n - k)
    table = MultiplierTable(n, k, f"radon_adjoint({k}->{p})", max_weight, seed)
    for i, lam in enumerate(enumerate_types(kappa, max_weight)):
        table.estimates[lam] = radon_adjoint_norm(
            n, k, p, lam, family_k, samples_outer, samples_inner,
            int(np.random.default_rng([seed, i]).integers(2**31)))
    return table


@dataclass
class SupportDensityReport:
    vanishing: list[Partition]
    surviving: list[Partition]
    inconclusive: list[Partition]
    surviving_density: Fraction
    vanish_sigmas: float
    survive_sigmas: float


def support_density_demo(table: MultiplierTable,
                         vanish_sigmas: float = VANISH_SIGMAS,
                         survive_sigmas: float = SURVIVE_SIGMAS
                         ) -> SupportDensityReport:
    """Classify each type of the table and compute the exact density of the
    surviving set within the declared weight range."""
    if not table.covers_declared_range():
        raise ValueError("table does not cover its declared type range")
    groups = {"vanishing": [], "surviving": [], "inconclusive": []}
    for lam, est in table.estimates.items():
        groups[est.classify(vanish_sigmas, survive_sigmas)].append(lam)
    for g in groups.values():
        g.sort(key=lambda p: (p.weight, p.parts))
    surviving_set = set(groups["surviving"])
    pred = TypePredicate("surviving", lambda lam: lam in surviving_set)
    dens = density(pred, table.kappa, table.max_weight)
    return SupportDensityReport(groups["vanishing"], groups["surviving"],
                                groups["inconclusive"], dens,
                                vanish_sigmas, survive_sigmas)
