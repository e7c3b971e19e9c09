import numpy as np
import pytest
from scipy import stats

from grassharm.grassmann import (DegenerateFlowError, Subspace, abs_cosine,
                                 base_point, graph_coordinate, haar_frames,
                                 haar_sample, jacobian_factor,
                                 principal_cosines, rescaling_flow,
                                 sample_cosine_data, sigma_of_subspace)


def test_subspace_validation():
    with pytest.raises(ValueError):
        Subspace(np.ones((3, 2)))        # not orthonormal
    with pytest.raises(ValueError):
        Subspace(np.eye(3))              # k = n not allowed
    E = base_point(4, 2)
    assert E.n == 4 and E.k == 2 and E.kappa == 2


def test_haar_frames_orthonormal():
    rng = np.random.default_rng(0)
    frames = haar_frames(5, 2, 100, rng)
    gram = np.einsum("bij,bik->bjk", frames, frames)
    assert np.max(np.abs(gram - np.eye(2))) < 1e-10
    for fr in frames[:5]:
        Subspace(fr)


def test_haar_line_angle_uniform():
    # a Haar line in R^2 has uniform angle on the projective circle
    rng = np.random.default_rng(1)
    frames = haar_frames(2, 1, 100_000, rng)
    theta = np.mod(np.arctan2(frames[:, 1, 0], frames[:, 0, 0]), np.pi)
    stat = stats.kstest(theta / np.pi, "uniform")
    assert stat.pvalue > 0.01


def test_haar_mean_cosine():
    rng = np.random.default_rng(2)
    y, _ = sample_cosine_data(4, 1, 1_000_000, rng)
    mean = y.mean()
    se = y.std(ddof=1) / np.sqrt(len(y))
    assert abs(mean - 0.25) < 3 * se


def test_principal_cosines_examples():
    E0 = base_point(4, 2)
    assert np.allclose(principal_cosines(E0, E0), [1, 1])
    E1 = Subspace(np.eye(4)[:, [0, 2]])
    assert np.allclose(principal_cosines(E0, E1), [1, 0], atol=1e-12)
    t = 0.7
    L0 = Subspace(np.array([[1.0], [0.0]]))
    Lt = Subspace(np.array([[np.cos(t)], [np.sin(t)]]))
    assert np.allclose(principal_cosines(L0, Lt), [np.cos(t) ** 2])


def test_principal_cosines_ambient_mismatch():
    with pytest.raises(ValueError):
        principal_cosines(base_point(4, 2), base_point(5, 2))


def test_principal_cosines_symmetry_and_invariance():
    rng = np.random.default_rng(3)
    for _ in range(5):
        E = haar_sample(5, 2, rng)
        Ep = haar_sample(5, 2, rng)
        y1 = principal_cosines(E, Ep)
        y2 = principal_cosines(Ep, E)
        assert np.max(np.abs(y1 - y2)) < 1e-9
        Q, _ = np.linalg.qr(rng.standard_normal((5, 5)))
        y3 = principal_cosines(Subspace(Q @ E.frame), Subspace(Q @ Ep.frame))
        assert np.max(np.abs(np.sort(y1) - np.sort(y3))) < 1e-9


def test_complement_duality():
    rng = np.random.default_rng(4)
    for _ in range(5):
        E = haar_sample(5, 2, rng)
        Ep = haar_sample(5, 2, rng)
        y = principal_cosines(E, Ep)
        yc = principal_cosines(E.orthogonal_complement(),
                               Ep.orthogonal_complement())
        assert np.max(np.abs(np.sort(y) - np.sort(yc))) < 1e-9


def test_nontrivial_cosines_when_k_exceeds_half():
    # two 3-subspaces of R^4 share at least 2 directions; kappa = 1
    rng = np.random.default_rng(5)
    E = haar_sample(4, 3, rng)
    Ep = haar_sample(4, 3, rng)
    y = principal_cosines(E, Ep)
    assert y.shape == (1,)
    yc = principal_cosines(E.orthogonal_complement(), Ep.orthogonal_complement())
    assert abs(y[0] - yc[0]) < 1e-9


def test_abs_cosine():
    E0 = base_point(4, 2)
    assert abs_cosine(E0, E0) == pytest.approx(1.0)
    E1 = Subspace(np.eye(4)[:, [0, 2]])
    assert abs_cosine(E0, E1) == pytest.approx(0.0, abs=1e-12)
    t = 0.4
    L0 = Subspace(np.array([[1.0], [0.0]]))
    Lt = Subspace(np.array([[np.cos(t)], [np.sin(t)]]))
    assert abs_cosine(L0, Lt) == pytest.approx(abs(np.cos(t)))
    # product of singular values equals sqrt(det) of the cross Gram matrix
    rng = np.random.default_rng(6)
    E = haar_sample(5, 2, rng)
    Ep = haar_sample(5, 2, rng)
    cross = E.frame.T @ Ep.frame
    assert abs_cosine(E, Ep) == pytest.approx(
        np.sqrt(abs(np.linalg.det(cross.T @ cross))), abs=1e-9)


def test_sigma_of_subspace():
    E0 = base_point(5, 2)
    from math import comb
    for j in (1, 2):
        assert sigma_of_subspace(E0, E0, j) == pytest.approx(comb(2, j))
    Eperp = Subspace(np.eye(5)[:, [2, 3]])
    assert sigma_of_subspace(Eperp, E0, 1) == pytest.approx(0.0, abs=1e-12)
    rng = np.random.default_rng(7)
    E = haar_sample(5, 2, rng)
    assert sigma_of_subspace(E, E0, 2) == pytest.approx(abs_cosine(E, E0) ** 2)
    with pytest.raises(ValueError):
        sigma_of_subspace(E, E0, 3)


def test_flow_identity_at_eps_one():
    rng = np.random.default_rng(8)
    E0 = base_point(4, 2)
    E = haar_sample(4, 2, rng)
    g1 = rescaling_flow(E0, 1.0, E)
    assert np.max(np.abs(principal_cosines(g1, E) - 1)) < 1e-9


def test_flow_semigroup_law():
    rng = np.random.default_rng(9)
    E0 = base_point(5, 2)
    for _ in range(5):
        E = haar_sample(5, 2, rng)
        s, t = 0.6, 0.35
        lhs = rescaling_flow(E0, s, rescaling_flow(E0, t, E))
        rhs = rescaling_flow(E0, s * t, E)
        assert np.max(np.abs(principal_cosines(lhs, E0) -
                             principal_cosines(rhs, E0))) < 1e-9


def test_flow_contracts_to_base():
    rng = np.random.default_rng(10)
    E0 = base_point(4, 2)
    E = haar_sample(4, 2, rng)
    g = rescaling_flow(E0, 1e-8, E)
    assert np.max(np.abs(principal_cosines(g, E0) - 1)) < 1e-6


def test_flow_degenerate_input():
    E0 = base_point(4, 2)
    F = E0.orthogonal_complement()
    with pytest.raises(DegenerateFlowError):
        rescaling_flow(E0, 0.0, F)


def test_flow_complement_argument_checked():
    E0 = base_point(4, 2)
    E = base_point(4, 2)
    F = E0.orthogonal_complement()
    rescaling_flow(E0, 0.5, E, F=F)
    with pytest.raises(ValueError):
        rescaling_flow(E0, 0.5, E, F=base_point(4, 2))


def test_jacobian_factor_values():
    rng = np.random.default_rng(11)
    E0 = base_point(4, 2)
    E = haar_sample(4, 2, rng)
    assert jacobian_factor(E0, 1.0, E) == pytest.approx(1.0, abs=1e-12)
    assert jacobian_factor(E0, 0.3, E0) == pytest.approx(1.0, abs=1e-12)
    # eta converges to the inverse cosine as eps -> 0
    got = jacobian_factor(E0, 1e-5, E)
    want = 1.0 / abs_cosine(E, E0)
    assert abs(got - want) < 1e-4


def test_graph_coordinate_scaling():
    rng = np.random.default_rng(12)
    E0 = base_point(5, 2)
    for _ in range(5):
        E = haar_sample(5, 2, rng)
        A = graph_coordinate(E0, E)
        for s in (0.1, 0.5, 1.0):
            As = graph_coordinate(E0, rescaling_flow(E0, s, E))
            assert np.max(np.abs(As - s * A)) < 1e-8


def test_graph_coordinate_outside_chart():
    E0 = base_point(4, 2)
    with pytest.raises(DegenerateFlowError):
        graph_coordinate(E0, E0.orthogonal_complement())
