"""Exact kernel dimensions of polynomial-coefficient differential operators.

A DiffOp is a finite sum of terms c * x^beta * d^alpha with rational
coefficients.  On the space of polynomials of degree at most m it restricts
to a finite matrix whose exact nullity we compute by sparse rational
elimination.  The module also implements the reduction to operators with
alpha >= beta termwise, the associated mu-matrix on factorial-rescaled
monomial coordinates, a log-log growth fit of the kernel dimension, and the
1 - 1/(2N)^k density bound check.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactpoly import MultiPoly, dim_P, grevlex_key
from .linalg_exact import rank_sparse

MultiIndex = tuple[int, ...]


def _multi_factorial(a: MultiIndex) -> int:
    out = 1
    for x in a:
        out *= math.factorial(x)
    return out


def _falling(gamma: MultiIndex, alpha: MultiIndex) -> int:
    """gamma! / (gamma - alpha)!, or 0 if any component goes negative."""
    out = 1
    for g, a in zip(gamma, alpha):
        if g < a:
            return 0
        for j in range(g, g - a, -1):
            out *= j
    return out


class DiffOp:
    """Differential operator sum of c * x^beta * d^alpha over k variables."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms):
        if k < 1:
            raise ValueError("k must be positive")
        merged: dict[tuple[MultiIndex, MultiIndex], Fraction] = {}
        for alpha, beta, c in terms:
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != k or len(beta) != k:
                raise ValueError("multi-index length mismatch")
            if any(a < 0 for a in alpha) or any(b < 0 for b in beta):
                raise ValueError("negative multi-index")
            c = Fraction(c)
            if c != 0:
                key = (alpha, beta)
                merged[key] = merged.get(key, Fraction(0)) + c
        object.__setattr__(self, "k", k)
        object.__setattr__(
            self, "terms",
            tuple((a, b, c) for (a, b), c in sorted(merged.items()) if c != 0))

    def __setattr__(self, *a):
        raise AttributeError("DiffOp is immutable")

    @property
    def order_param(self) -> int:
        """N = 1 + max over terms of the sup-norm of the derivative index."""
        return 1 + max((max(a) for a, _, _ in self.terms), default=0)

    @property
    def degree_shift(self) -> int:
        """Smallest M >= 0 such that the operator maps P_m into P_{m+M}."""
        return max((sum(b) - sum(a) for a, b, _ in self.terms if sum(b) > sum(a)),
                   default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_reduced(self) -> bool:
        """Every term has alpha >= beta componentwise."""
        return all(all(x >= y for x, y in zip(a, b)) for a, b, _ in self.terms)

    def apply(self, p: MultiPoly) -> MultiPoly:
        if p.nvars != self.k:
            raise ValueError(f"variable count mismatch: {p.nvars} vs {self.k}")
        out: dict[MultiIndex, Fraction] = {}
        for gamma, a_gamma in p.terms.items():
            for alpha, beta, c in self.terms:
                f = _falling(gamma, alpha)
                if f == 0:
                    continue
                e = tuple(g - x + y for g, x, y in zip(gamma, alpha, beta))
                out[e] = out.get(e, Fraction(0)) + a_gamma * c * f
        return MultiPoly(self.k, out)

    def __eq__(self, other):
        return isinstance(other, DiffOp) and self.k == other.k and self.terms == other.terms

    def __repr__(self):
        bits = [f"{c}*x^{b}*d^{a}" for a, b, c in self.terms]
        return "DiffOp(" + " + ".join(bits) + ")" if bits else "DiffOp(0)"

    # -- JSON wire format -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"k": self.k,
                "terms": [{"dx": list(a), "x": list(b), "c": str(c)}
                          for a, b, c in self.terms]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "DiffOp":
        return cls(d["k"], [(tuple(t["dx"]), tuple(t["x"]), Fraction(t["c"]))
                            for t in d["terms"]])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "DiffOp":
        return cls.from_json_dict(json.loads(s))


def monomials_up_to(k: int, m: int) -> list[MultiIndex]:
    """All exponent vectors with |gamma| <= m, in graded reverse-lex order."""
    out = [e for e in itertools.product(range(m + 1), repeat=k) if sum(e) <= m]
    out.sort(key=grevlex_key)
    return out


def operator_matrix_rows(D: DiffOp, m: int) -> list[dict[int, Fraction]]:
    """Sparse rows (indexed by output monomials) of the operator restricted
    to polynomials of degree <= m, with columns indexed by monomials_up_to."""
    cols = monomials_up_to(D.k, m)
    rows: dict[MultiIndex, dict[int, Fraction]] = {}
    for j, gamma in enumerate(cols):
        for alpha, beta, c in D.terms:
            f = _falling(gamma, alpha)
            if f == 0:
                continue
            e = tuple(g - x + y for g, x, y in zip(gamma, alpha, beta))
            row = rows.setdefault(e, {})
            row[j] = row.get(j, Fraction(0)) + c * f
    return [row for row in rows.values() if any(v != 0 for v in row.values())]


def kernel_dim(D: DiffOp, m: int) -> int:
    """Exact dimension of Ker(D) intersected with degree <= m polynomials."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return dim_P(m, D.k) - rank_sparse(operator_matrix_rows(D, m))


def compose_partial(delta: MultiIndex, D: DiffOp) -> DiffOp:
    """The operator d^delta composed with D, expanded by the Leibniz rule."""
    terms = []
    for alpha, beta, c in D.terms:
        ranges = [range(min(d, b) + 1) for d, b in zip(delta, beta)]
        for gamma in itertools.product(*ranges):
            coef = c
            for d, b, g in zip(delta, beta, gamma):
                coef *= math.comb(d, g) * (math.factorial(b) // math.factorial(b - g))
            new_alpha = tuple(a + d - g for a, d, g in zip(alpha, delta, gamma))
            new_beta = tuple(b - g for b, g in zip(beta, gamma))
            terms.append((new_alpha, new_beta, coef))
    return DiffOp(D.k, terms)


def reduce_operator(D: DiffOp) -> DiffOp:
    """Compose with a partial derivative so every term has alpha >= beta.

    The kernel can only grow under this replacement.  A single composition
    with d^delta, delta the componentwise maximum defect max(beta - alpha, 0),
    removes all defects at once.
    """
    if D.is_zero():
        raise ValueError("cannot reduce the zero operator")
    while not D.is_reduced():
        delta = tuple(
            max(max(b - a, 0) for al, be, _ in D.terms for a, b in [(al[i], be[i])])
            for i in range(D.k))
        D = compose_partial(delta, D)
        if D.is_zero():
            raise RuntimeError("reduction annihilated the operator")
    return D


def mu_matrix(D: DiffOp, m: int) -> dict[tuple[MultiIndex, MultiIndex], Fraction]:
    """The matrix mu[sigma, gamma] = sum over terms with alpha - beta =
    gamma - sigma of c / (gamma - alpha)!, for |sigma|, |gamma| <= m.

    Acts on the factorial-rescaled coefficient vector (a_gamma * gamma!);
    requires a reduced operator, which makes the matrix block-triangular
    (nonzero only when sigma <= gamma componentwise).
    """
    if not D.is_reduced():
        raise ValueError("mu_matrix requires a reduced operator (alpha >= beta)")
    entries: dict[tuple[MultiIndex, MultiIndex], Fraction] = {}
    monos = monomials_up_to(D.k, m)
    mono_set = set(monos)
    for gamma in monos:
        for alpha, beta, c in D.terms:
            if any(g < a for g, a in zip(gamma, alpha)):
                continue
            sigma = tuple(g - a + b for g, a, b in zip(gamma, alpha, beta))
            if sigma not in mono_set:
                continue
            key = (sigma, gamma)
            entries[key] = entries.get(key, Fraction(0)) + \
                Fraction(c, _multi_factorial(tuple(g - a for g, a in zip(gamma, alpha))))
    return {k: v for k, v in entries.items() if v != 0}


def mu_kernel_dim(D: DiffOp, m: int) -> int:
    """Kernel dimension computed through the mu-matrix route."""
    monos = monomials_up_to(D.k, m)
    col_index = {g: j for j, g in enumerate(monos)}
    rows: dict[MultiIndex, dict[int, Fraction]] = {}
    for (sigma, gamma), v in mu_matrix(D, m).items():
        rows.setdefault(sigma, {})[col_index[gamma]] = v
    return len(monos) - rank_sparse(list(rows.values()))


@dataclass
class KernelReport:
    operator: DiffOp
    rows: list[tuple[int, int, int]]  # (m, dim P_m, dim Ker)
    slope: float | None
    slope_stderr: float | None
    slope_limit: float
    violates_growth: bool

    def densities(self) -> list[tuple[int, Fraction]]:
        return [(m, Fraction(ker, dp)) for m, dp, ker in self.rows]


def growth_fit(D: DiffOp, m_list: list[int]) -> KernelReport:
    """Exact kernel dimensions over m_list and the fitted log-log slope.

    The growth theorem gives dim(Ker D cap P_m) = O(m^(k-1)); the report
    flags a violation if the fitted slope exceeds k - 1 + 0.25.
    """
    if len(m_list) < 5 or any(a >= b for a, b in zip(m_list, m_list[1:])):
        raise ValueError("m_list must be increasing with at least 5 entries")
    rows = [(m, dim_P(m, D.k), kernel_dim(D, m)) for m in m_list]
    pts = [(m, ker) for m, _, ker in rows if ker >= 1]
    slope = stderr = None
    limit = D.k - 1 + 0.25
    violates = False
    if len(pts) >= 2:
        x = np.log([m for m, _ in pts])
        y = np.log([ker for _, ker in pts])
        (slope, _), cov = np.polyfit(x, y, 1, cov=True) if len(pts) > 2 else \
            (np.polyfit(x, y, 1), np.full((2, 2), np.nan))
        slope = float(slope)
        stderr = float(np.sqrt(cov[0, 0]))
        violates = slope > limit
    return KernelReport(D, rows, slope, stderr, limit, violates)


@dataclass
class DensityBoundReport:
    operator: DiffOp
    N: int
    bound: Fraction
    rows: list[tuple[int, int, int, Fraction, bool]] = field(default_factory=list)
    # rows: (m, dim P_m, dim Ker, density, bound holds)

    @property
    def all_hold(self) -> bool:
        return all(ok for *_, ok in self.rows)


def density_bound_check(D: DiffOp, mprime_list: list[int]) -> DensityBoundReport:
    """Check dim(Ker D cap P_m)/dim P_m <= 1 - 1/(2N)^k at m = 2*N*m'.

    The bound comes from the block-rank argument; it is checked exactly at
    each computed m and reported pass/fail per row.
    """
    if D.is_zero():
        raise ValueError("zero operator")
    Dred = reduce_operator(D)
    N = Dred.order_param
    k = D.k
    bound = 1 - Fraction(1, (2 * N) ** k)
    report = DensityBoundReport(D, N, bound)
    for mp in mprime_list:
        m = 2 * N * mp
        dp = dim_P(m, k)
        ker = kernel_dim(D, m)
        dens = Fraction(ker, dp)
        report.rows.append((m, dp, ker, dens, dens <= bound))
    return report


def random_operator(k: int, rng: np.random.Generator,
                    max_terms: int = 6, max_index: int = 2) -> DiffOp:
    """Seeded random operator with small integer coefficients, for property
    tests: term count <= max_terms, multi-index entries <= max_index,
    coefficients uniform in {-3..3} minus 0."""
    while True:
        nterms = int(rng.integers(1, max_terms + 1))
        terms = []
        for _ in range(nterms):
            alpha = tuple(int(x) for x in rng.integers(0, max_index + 1, size=k))
            beta = tuple(int(x) for x in rng.integers(0, max_index + 1, size=k))
            c = int(rng.choice([-3, -2, -1, 1, 2, 3]))
            terms.append((alpha, beta, Fraction(c)))
        D = DiffOp(k, terms)
        if not D.is_zero():
            return D
