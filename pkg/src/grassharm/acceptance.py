"""Acceptance suite: twelve end-to-end criteria, one pass/fail line each.

Each criterion is an independent function returning a CriterionResult; the
suite runner executes a subset ("exact" for the exact-arithmetic criteria,
"all" for everything) and prints one line per criterion.  All stochastic
criteria use fixed seeds, so the suite is deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .determinants import (block_invertible, cauchy_det, cauchy_matrix,
                           exact_det, factorial_det_formula, factorial_matrix)
from .exactpoly import monomial_symmetric
from .grassmann import (abs_cosine, base_point, graph_coordinate, haar_sample,
                        jacobian_factor, principal_cosines, rescaling_flow)
from .linalg_exact import rank_sparse
from .partitions import (Partition, count_types, count_weight_class, density,
                         enumerate_types, part_ge, part_le,
                         weight_class_bounds)
from .pdekernel import (density_bound_check, growth_fit, kernel_dim,
                        mu_kernel_dim, random_operator, reduce_operator)
from .transforms import (MultiplierEstimate, MultiplierTable,
                         multiplier_table, radon_table, support_density_demo)
from .zonal import MomentOracle, build_family


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} criterion {self.number:2d} [{self.name}] "
                f"({self.elapsed:.1f}s): {self.detail}")


def _result(number, name, start, failures, ok_detail):
    if failures:
        return CriterionResult(number, name, False,
                               "; ".join(failures), time.time() - start)
    return CriterionResult(number, name, True, ok_detail, time.time() - start)


# --------------------------------------------------------------------------
# 1. exact counting vs basis rank, with per-weight bracketing bounds

def criterion_01() -> CriterionResult:
    start = time.time()
    failures = []
    for k in (1, 2, 3, 4):
        lams = enumerate_types(k, 80)
        colid: dict = {}
        rows = []
        for lam in lams:
            poly = monomial_symmetric(lam, k)
            rows.append({colid.setdefault(e, len(colid)): c
                         for e, c in poly.terms.items()})
        rank = rank_sparse(rows)
        if rank != count_types(k, 80):
            failures.append(f"k={k}: rank {rank} != count {count_types(k, 80)}")
        for half in range(41):
            cnt = count_weight_class(k, 2 * half)
            lo, hi = weight_class_bounds(k, half)
            if not lo <= cnt <= hi:
                failures.append(f"k={k}, 2m={2 * half}: count {cnt} "
                                f"outside [{lo}, {hi}]")
    return _result(1, "counting", start, failures,
                   "count = basis rank and bracketing bounds hold "
                   "for k <= 4, 2m <= 80")


# --------------------------------------------------------------------------
# 2. exact sparsity densities

def criterion_02() -> CriterionResult:
    start = time.time()
    failures = []
    sparse = [density(part_le(2, 2), 2, 2 * m) for m in range(10, 101)]
    if not all(a > b for a, b in zip(sparse, sparse[1:])):
        failures.append("density of {lam2 <= 2} not strictly decreasing")
    if not sparse[-1] < Fraction(15, 100):
        failures.append(f"density of {{lam2 <= 2}} at m=100 is {sparse[-1]}")
    cosparse = density(part_ge(2, 4), 2, 200)
    if not cosparse > Fraction(85, 100):
        failures.append(f"density of {{lam2 >= 4}} at m=100 is {cosparse}")
    return _result(2, "densities", start, failures,
                   f"{{lam2<=2}} falls to {sparse[-1]} and {{lam2>=4}} "
                   f"rises to {cosparse} by m=100")


# --------------------------------------------------------------------------
# 3. kappa = 1 zonal family vs the classical one-variable family

def classical_monic_jacobi(degree: int, n: int) -> np.ndarray:
    """Monic orthogonal polynomial of the Beta(1/2, (n-1)/2) weight on
    [0, 1], from the classical Jacobi recurrence (independent oracle)."""
    from scipy.special import jacobi
    p = jacobi(degree, (n - 3) / 2.0, -0.5)
    c = np.polynomial.Polynomial([0.0])
    xpoly = np.polynomial.Polynomial([-1.0, 2.0])
    for i, a in enumerate(p.coefficients[::-1]):
        c = c + a * xpoly ** i
    coeffs = c.coef
    return coeffs / coeffs[-1]


def criterion_03() -> CriterionResult:
    start = time.time()
    failures = []
    n, max_weight = 4, 10
    quad = build_family(n, 1, max_weight,
                        MomentOracle.quadrature_kappa1(n, 1, nodes=64))
    targets = {}
    for i, lam in enumerate(quad.index):
        deg = lam.weight // 2
        want = classical_monic_jacobi(deg, n)
        targets[i] = want
        err = np.max(np.abs(quad.coeffs[i][:deg + 1] - want))
        if err > 1e-6:
            failures.append(f"quadrature vs classical at {lam}: {err:.2e}")

    # Monte Carlo run at 1e6 samples; per-coefficient standard errors come
    # from ten independent 1e5-sample rebuilds (spread / sqrt(10))
    mc = build_family(n, 1, max_weight,
                      MomentOracle.monte_carlo(n, 1, 1_000_000, seed=300))
    chunks = np.stack([
        build_family(n, 1, max_weight,
                     MomentOracle.monte_carlo(n, 1, 100_000, seed=310 + j)).coeffs
        for j in range(10)])
    coeff_se = chunks.std(axis=0, ddof=1) / np.sqrt(10)
    for i, lam in enumerate(mc.index):
        deg = lam.weight // 2
        diff = np.abs(mc.coeffs[i][:deg + 1] - targets[i])
        tol = 3 * coeff_se[i][:deg + 1] + 1e-9
        if np.any(diff > tol):
            failures.append(f"MC vs classical at {lam}: "
                            f"max excess {np.max(diff - tol):.2e}")
    p2 = mc.coefficients(Partition((2,)))
    if abs(p2[0] + 0.25) > 1e-2 or abs(p2[1] - 1.0) > 1e-12:
        failures.append(f"P_(2) coefficients {p2[:2]} not y - 1/4 within 1e-2")
    return _result(3, "zonal kappa=1", start, failures,
                   "quadrature family matches the classical one within 1e-6, "
                   "Monte Carlo within 3 sigma at 1e6 samples")


# --------------------------------------------------------------------------
# 4. kappa = 2 orthogonality at 1e6 samples

def criterion_04() -> CriterionResult:
    start = time.time()
    failures = []
    oracle = MomentOracle.monte_carlo(5, 2, 1_000_000, seed=400)
    fam = build_family(5, 2, 8, oracle)
    # each Gram entry carries two independent noise sources of the same
    # order: the validation sample and, through the coefficients, the
    # construction sample; combine both standard errors
    X = np.column_stack([b.evaluate_array(oracle.points) for b in fam.basis])
    V = X @ fam.coeffs.T
    num = V.shape[0]
    g_c = V.T @ V / num
    sq = np.einsum("pi,pj->ij", V * V, V * V) / num
    se_c = np.sqrt(np.maximum(sq - g_c ** 2, 0.0) / num)
    sigma = np.hypot(fam.gram_stderr, se_c)
    B = len(fam.index)
    worst = 0.0
    for i in range(B):
        for j in range(i):
            ratio = abs(fam.gram[i, j]) / sigma[i, j]
            worst = max(worst, ratio)
            if ratio > 3:
                failures.append(f"gram[{fam.index[i]},{fam.index[j]}] "
                                f"= {ratio:.2f} sigma")
    for i, lam in enumerate(fam.index):
        if fam.coeffs[i, i] != 1.0 or np.any(fam.coeffs[i, i + 1:] != 0.0):
            failures.append(f"triangularity violated at {lam}")
        if fam.basis[i].degree() != lam.weight // 2:
            failures.append(f"degree law violated at {lam}")
    return _result(4, "zonal kappa=2", start, failures,
                   f"all off-diagonal Gram entries within 3 sigma "
                   f"(worst {worst:.2f}) and structure exact")


# --------------------------------------------------------------------------
# 5. cosine multipliers on the projective circle vs the Fourier oracle

def fourier_multiplier(m: int) -> float:
    if m == 0:
        return 2 / np.pi
    return 2 * (-1) ** (m + 1) / (np.pi * (4 * m * m - 1))


def criterion_05() -> CriterionResult:
    start = time.time()
    failures = []
    fam = build_family(2, 1, 12, MomentOracle.quadrature_kappa1(2, 1, nodes=64))
    table = multiplier_table(2, 1, 1.0, fam, 12, 1_000_000, seed=500)
    for m in range(7):
        est = table.estimates[Partition((2 * m,))]
        want = fourier_multiplier(m)
        if abs(est.mean - want) > 3 * est.stderr:
            failures.append(f"m={m}: {est.mean:.5g} vs {want:.5g} "
                            f"(stderr {est.stderr:.2g})")
        if est.classify() != "surviving":
            failures.append(f"m={m} not detected nonzero: {est.classify()}")
    return _result(5, "circle spectrum", start, failures,
                   "multipliers match 2(-1)^(m+1)/(pi(4m^2-1)) within "
                   "3 sigma and all are nonzero for m <= 6")


# --------------------------------------------------------------------------
# 6. cosine image pattern on Gr_2(R^4) and Gr_2(R^5)

def _pattern_check(table: MultiplierTable, vanish_pred, failures, label):
    for lam, est in table.estimates.items():
        want = "vanishing" if vanish_pred(lam) else "surviving"
        got = est.classify()
        if got != want:
            failures.append(f"{label} {lam}: {got} (mean {est.mean:.3g}, "
                            f"stderr {est.stderr:.2g}), expected {want}")


def criterion_06(samples: int = 4_000_000) -> CriterionResult:
    start = time.time()
    failures = []
    for n, seed in ((4, 600), (5, 601)):
        fam = build_family(n, 2, 12,
                          MomentOracle.monte_carlo(n, 2, 2_000_000, seed=seed))
        table = multiplier_table(n, 2, 1.0, fam, 12, samples, seed=seed + 50)
        _pattern_check(table, lambda lam: lam.part(2) >= 4, failures,
                       f"Gr_2(R^{n})")
    return _result(6, "cosine pattern", start, failures,
                   "every type with lam2 >= 4 vanishes (<= 3 sigma) and "
                   "every type with lam2 <= 2 survives (>= 5 sigma), "
                   "|lam| <= 12")


# --------------------------------------------------------------------------
# 7. Radon pattern for (n, k, p) in {(4,2,1), (5,2,1)}

def criterion_07(samples_outer: int = 6_000,
                 samples_inner: int = 256) -> CriterionResult:
    start = time.time()
    failures = []
    for n, seed in ((4, 700), (5, 701)):
        fam = build_family(n, 2, 8,
                          MomentOracle.monte_carlo(n, 2, 1_000_000, seed=seed))
        table = radon_table(n, 2, 1, fam, 8, samples_outer, samples_inner,
                            seed=seed + 50)
        _pattern_check(table, lambda lam: lam.part(2) != 0, failures,
                       f"Gr_2(R^{n})->Gr_1")
    return _result(7, "radon pattern", start, failures,
                   "adjoint-norm classification matches lam2 = 0 exactly "
                   "for |lam| <= 8 on both grassmannians")


# --------------------------------------------------------------------------
# 8. support-density demo: vanishing on a sparse set leaves co-sparse support

def criterion_08() -> CriterionResult:
    start = time.time()
    failures = []
    densities = []
    for w in (40, 80, 120, 160, 200):
        table = MultiplierTable(4, 2, "synthetic", w, seed=0)
        for lam in enumerate_types(2, w):
            if lam.part(2) <= 2:
                est = MultiplierEstimate(lam, 0.0, 1.0, 1, "synthetic")
            else:
                est = MultiplierEstimate(lam, 1.0, 1e-3, 1, "synthetic")
            table.estimates[lam] = est
        rep = support_density_demo(table)
        densities.append(rep.surviving_density)
        if rep.inconclusive:
            failures.append(f"unexpected inconclusive types at 2m={w}")
    if not all(a < b for a, b in zip(densities, densities[1:])):
        failures.append(f"surviving densities not increasing: {densities}")
    if not densities[-1] > Fraction(85, 100):
        failures.append(f"surviving density at m=100 is {densities[-1]}")
    return _result(8, "density demo", start, failures,
                   f"surviving-set density rises to {densities[-1]} "
                   "by m=100 when the vanishing set is {lam2 <= 2}")


# --------------------------------------------------------------------------
# 9. kernel growth of random operators

def criterion_09() -> CriterionResult:
    start = time.time()
    failures = []
    jobs = [(2, [8, 12, 16, 20, 24], 10, 900),
            (3, [6, 8, 10, 12, 14], 3, 950)]
    slopes = []
    for k, m_list, count, seed0 in jobs:
        for j in range(count):
            D = random_operator(k, np.random.default_rng(seed0 + j))
            rep = growth_fit(D, m_list)
            if rep.slope is not None:
                slopes.append(rep.slope)
            if rep.violates_growth:
                failures.append(f"k={k} op#{j}: slope {rep.slope:.3f} "
                                f"> {k - 1 + 0.25}")
    return _result(9, "kernel growth", start, failures,
                   f"all 13 log-log slopes <= k - 1 + 0.25 "
                   f"(max fitted {max(slopes):.3f})")


# --------------------------------------------------------------------------
# 10. mu-matrix equivalence and the density bound

def criterion_10() -> CriterionResult:
    start = time.time()
    failures = []
    for j in range(10):
        D = reduce_operator(random_operator(2, np.random.default_rng(1000 + j)))
        for m in (4, 6, 8, 10):
            a, b = mu_kernel_dim(D, m), kernel_dim(D, m)
            if a != b:
                failures.append(f"op#{j}, m={m}: mu {a} != direct {b}")
        rep = density_bound_check(D, [1, 2, 3])
        if not rep.all_hold:
            failures.append(f"op#{j}: density bound {rep.bound} violated")
    return _result(10, "mu-matrix", start, failures,
                   "mu-matrix kernels equal direct kernels and the "
                   "1 - 1/(2N)^k bound holds at every m = 2Nm' tested")


# --------------------------------------------------------------------------
# 11. exact determinant identities

def criterion_11() -> CriterionResult:
    start = time.time()
    failures = []
    for k in range(9):
        for n in range(9):
            d = exact_det(factorial_matrix(k, n))
            if d != factorial_det_formula(k, n) or d == 0:
                failures.append(f"factorial identity fails at k={k}, n={n}")
    import random as _random
    rng = _random.Random(2024)
    for t in range(200):
        size = rng.randint(1, 6)
        vals = rng.sample(range(-60, 60), 2 * size)
        x = [Fraction(v) for v in vals[:size]]
        y = [Fraction(v) + Fraction(1, 2) for v in vals[size:]]
        if cauchy_det(x, y) != exact_det(cauchy_matrix(x, y)):
            failures.append(f"cauchy mismatch on instance {t}")
    for N in range(1, 6):
        j = 1
        while 2 * j * N - N <= 20:
            if not block_invertible(N, 2 * j * N - N):
                failures.append(f"block N={N}, start={2 * j * N - N} singular")
            j += 1
    return _result(11, "determinants", start, failures,
                   "factorial identity for k,n <= 8, 200 Cauchy instances, "
                   "and block invertibility N <= 5, all exact")


# --------------------------------------------------------------------------
# 12. rescaling flow: semigroup, jacobian limit, coordinate scaling

def criterion_12() -> CriterionResult:
    start = time.time()
    failures = []
    rng = np.random.default_rng(1200)
    for n, k in ((4, 2), (5, 2)):
        E0 = base_point(n, k)
        for t in range(5):
            E = haar_sample(n, k, rng)
            s, u = 0.6, 0.35
            lhs = rescaling_flow(E0, s, rescaling_flow(E0, u, E))
            rhs = rescaling_flow(E0, s * u, E)
            gap = np.max(np.abs(principal_cosines(lhs, E0) -
                                principal_cosines(rhs, E0)))
            if gap > 1e-9:
                failures.append(f"semigroup gap {gap:.2e} on Gr_{k}(R^{n})")
            eta = jacobian_factor(E0, 1e-5, E)
            want = 1.0 / abs_cosine(E, E0)
            # relative error: the limit is unbounded near degenerate pairs
            if abs(eta - want) / want > 1e-4:
                failures.append(
                    f"jacobian limit off by {abs(eta - want) / want:.2e} "
                    "(relative)")
            A = graph_coordinate(E0, E)
            for scale in (0.1, 0.5, 1.0):
                As = graph_coordinate(E0, rescaling_flow(E0, scale, E))
                if np.max(np.abs(As - scale * A)) > 1e-8:
                    failures.append(f"coordinate scaling fails at s={scale}")
    return _result(12, "rescaling flow", start, failures,
                   "semigroup within 1e-9, jacobian limit within 1e-4 at "
                   "eps=1e-5, coordinate scaling within 1e-8")


# --------------------------------------------------------------------------

CRITERIA = {
    1: criterion_01, 2: criterion_02, 3: criterion_03, 4: criterion_04,
    5: criterion_05, 6: criterion_06, 7: criterion_07, 8: criterion_08,
    9: criterion_09, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}

EXACT_CRITERIA = (1, 2, 8, 9, 10, 11)


def run_suite(suite: str = "all", echo=print) -> list[CriterionResult]:
    """Run the requested criteria in order, printing one line each."""
    if suite == "exact":
        numbers = EXACT_CRITERIA
    elif suite == "all":
        numbers = tuple(sorted(CRITERIA))
    else:
        raise ValueError(f"unknown suite {suite!r}; choose 'exact' or 'all'")
    results = []
    for num in numbers:
        res = CRITERIA[num]()
        results.append(res)
        echo(res.line())
    return results
