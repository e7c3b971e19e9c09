"""Euclidean geometry of the real Grassmannian Gr_k(R^n).

Subspaces are represented by orthonormal frames.  Haar sampling goes through
QR factorization of Gaussian matrices, principal angles through singular
values of the cross-product of frames, and the rescaling flow contracts the
open cell transversal to a fixed complement onto the base point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FRAME_TOL = 1e-10
CLAMP_TOL = 1e-12
TRANSVERSALITY_TOL = 1e-8


class DegenerateFlowError(ValueError):
    """Raised when a subspace meets the fixed complement non-trivially."""


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of R^n given by an orthonormal n x k frame."""

    frame: np.ndarray

    def __post_init__(self):
        frame = np.asarray(self.frame, dtype=float)
        object.__setattr__(self, "frame", frame)
        if frame.ndim != 2:
            raise ValueError("frame must be a 2-d array")
        n, k = frame.shape
        if not 1 <= k <= n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
        gram = frame.T @ frame
        if np.max(np.abs(gram - np.eye(k))) > FRAME_TOL:
            raise ValueError("frame columns are not orthonormal")

    @property
    def n(self) -> int:
        return self.frame.shape[0]

    @property
    def k(self) -> int:
        return self.frame.shape[1]

    @property
    def kappa(self) -> int:
        return min(self.k, self.n - self.k)

    @classmethod
    def from_span(cls, vectors: np.ndarray) -> "Subspace":
        """Subspace spanned by the columns of a full-rank matrix."""
        q, r = np.linalg.qr(np.asarray(vectors, dtype=float))
        if np.min(np.abs(np.diag(r))) < 1e-12:
            raise ValueError("vectors are numerically dependent")
        return cls(q)

    def orthogonal_complement(self) -> "Subspace":
        q, _ = np.linalg.qr(self.frame, mode="complete")
        return Subspace(q[:, self.k:])


def base_point(n: int, k: int) -> Subspace:
    """The canonical base subspace spanned by the first k coordinate axes."""
    return Subspace(np.eye(n, k))


def haar_sample(n: int, k: int, rng: np.random.Generator) -> Subspace:
    """One Haar-distributed subspace (QR of an n x k Gaussian matrix)."""
    g = rng.standard_normal((n, k))
    q, r = np.linalg.qr(g)
    return Subspace(q * np.sign(np.diag(r)))


def haar_frames(n: int, k: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """A batch of Haar frames with shape (count, n, k)."""
    g = rng.standard_normal((count, n, k))
    q, r = np.linalg.qr(g)
    return q * np.sign(np.einsum("...ii->...i", r))[:, None, :]


def principal_cosines(E: Subspace, Eprime: Subspace) -> np.ndarray:
    """Squared cosines of the kappa non-trivial principal angles, clamped to
    [0, 1] and sorted non-increasing."""
    if E.n != Eprime.n:
        raise ValueError(f"ambient mismatch: {E.n} vs {Eprime.n}")
    if E.k != Eprime.k:
        raise ValueError(f"dimension mismatch: {E.k} vs {Eprime.k}")
    return cosines_from_cross(E.frame.T @ Eprime.frame, E.n)


def cosines_from_cross(cross: np.ndarray, n: int) -> np.ndarray:
    """Squared non-trivial principal cosines from the k x k cross matrix
    of two frames; works on batches (..., k, k)."""
    k = cross.shape[-1]
    kappa = min(k, n - k)
    s = np.linalg.svd(cross, compute_uv=False)
    s = np.clip(s, 0.0, 1.0 + CLAMP_TOL)
    s = np.minimum(s, 1.0)
    # when k > n - k the first k - kappa angles are identically zero
    return (s[..., k - kappa:]) ** 2


def abs_cosine(E: Subspace, Eprime: Subspace) -> float:
    """|cos(E, E')| = product of the principal cosines."""
    y = principal_cosines(E, Eprime)
    return float(np.prod(np.sqrt(y)))


def sigma_of_subspace(E: Subspace, E0: Subspace, j: int) -> float:
    """The j-th elementary symmetric value of the squared principal cosines."""
    y = principal_cosines(E, E0)
    if not 1 <= j <= len(y):
        raise ValueError(f"need 1 <= j <= {len(y)}, got {j}")
    return float(elementary_symmetric_values(y[None, :], j)[0])


def elementary_symmetric_values(y: np.ndarray, j: int) -> np.ndarray:
    """Elementary symmetric polynomial e_j along the last axis (batched)."""
    kappa = y.shape[-1]
    # coefficients of prod (t + y_i) via iterated convolution
    e = np.zeros(y.shape[:-1] + (kappa + 1,))
    e[..., 0] = 1.0
    for i in range(kappa):
        e[..., 1:i + 2] = e[..., 1:i + 2] + y[..., i, None] * e[..., 0:i + 1]
    return e[..., j]


def _projector(E: Subspace) -> np.ndarray:
    return E.frame @ E.frame.T


def flow_matrix(E0: Subspace, eps: float) -> np.ndarray:
    """The endomorphism acting as identity on E0 and eps on its complement."""
    P0 = _projector(E0)
    return P0 + eps * (np.eye(E0.n) - P0)


def rescaling_flow(E0: Subspace, eps: float, E: Subspace,
                   F: Subspace | None = None) -> Subspace:
    """Image of E under the flow fixing E0 and scaling its complement by eps.

    F, when given, must be the orthogonal complement of E0.  E must be
    transversal to the complement; degeneracy is signalled explicitly.
    """
    _check_flow_args(E0, E, F)
    a = flow_matrix(E0, eps) @ E.frame
    if np.linalg.svd(a, compute_uv=False)[-1] < TRANSVERSALITY_TOL * max(abs(eps), 1.0):
        raise DegenerateFlowError("subspace is (numerically) degenerate under the flow")
    return Subspace.from_span(a)


def jacobian_factor(E0: Subspace, eps: float, E: Subspace,
                    F: Subspace | None = None) -> float:
    """Inverse Jacobian of the flow restricted to E, i.e.
    1 / Jac(g_eps : E -> g_eps E)."""
    _check_flow_args(E0, E, F)
    a = flow_matrix(E0, eps) @ E.frame
    jac_sq = np.linalg.det(a.T @ a)
    if jac_sq <= 0:
        raise DegenerateFlowError("flow degenerates on this subspace")
    return float(1.0 / np.sqrt(jac_sq))


def _check_flow_args(E0: Subspace, E: Subspace, F: Subspace | None) -> None:
    if E0.n != E.n:
        raise ValueError("ambient mismatch")
    if F is not None:
        if F.n != E0.n or F.k != E0.n - E0.k:
            raise ValueError("F must have complementary dimension")
        if np.max(np.abs(F.frame.T @ E0.frame)) > FRAME_TOL:
            raise ValueError("F must be the orthogonal complement of the base point")


def graph_coordinate(E0: Subspace, E: Subspace) -> np.ndarray:
    """Coordinate of E in the graph chart over E0: the (n-k) x k matrix A
    such that E is spanned by the columns of frame(E0) + complement(E0) A.

    Scales linearly under the rescaling flow.  Fails on subspaces meeting
    the complement of E0.
    """
    comp = E0.orthogonal_complement()
    top = E0.frame.T @ E.frame
    bottom = comp.frame.T @ E.frame
    if abs(np.linalg.det(top)) < TRANSVERSALITY_TOL ** 2:
        raise DegenerateFlowError("subspace is outside the graph chart")
    return bottom @ np.linalg.inv(top)


def grassmann_dim(n: int, k: int) -> int:
    return k * (n - k)


def sample_cosine_data(n: int, k: int, count: int, rng: np.random.Generator,
                       chunk: int = 200_000) -> tuple[np.ndarray, np.ndarray]:
    """Squared principal cosines (count, kappa) and |cos| (count,) between
    Haar samples and the canonical base point, computed in batches."""
    kappa = min(k, n - k)
    y = np.empty((count, kappa))
    abscos = np.empty(count)
    done = 0
    while done < count:
        c = min(chunk, count - done)
        frames = haar_frames(n, k, c, rng)
        cross = frames[:, :k, :]
        y[done:done + c] = cosines_from_cross(cross, n)
        abscos[done:done + c] = np.abs(np.linalg.det(cross))
        done += c
    return y, abscos
