"""Sparse multivariate polynomials over exact rationals.

Provides the ring operations, partial derivatives with exact falling-factorial
coefficients, monomial symmetric polynomials indexed by even partitions (with
halved exponents, so degree equals half the partition weight), the algebra map
sending elementary-symmetric generators to symmetric polynomials, and the
dimension formulas for the filtered polynomial spaces.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations
from math import comb

import numpy as np

from .partitions import Partition, count_types

Exponent = tuple[int, ...]


def grevlex_key(e: Exponent):
    """Graded reverse-lexicographic sort key for exponent vectors."""
    return (sum(e), tuple(-x for x in reversed(e)))


class MultiPoly:
    """Immutable sparse polynomial with Fraction coefficients.

    Terms map exponent tuples (length nvars) to nonzero rationals; zero
    coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exponent, Fraction] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length (nvars={nvars})")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = Fraction(c)
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The i-th variable (0-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, e: Exponent, c=1) -> "MultiPoly":
        return cls(len(e), {tuple(e): Fraction(c)})

    # -- ring operations --------------------------------------------------

    def _check_compat(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compat(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus and structure -------------------------------------------

    def differentiate(self, alpha: Exponent) -> "MultiPoly":
        """Apply the mixed partial derivative of multi-order alpha."""
        if len(alpha) != self.nvars or any(a < 0 for a in alpha):
            raise ValueError(f"bad derivative multi-index {alpha}")
        terms: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if any(x < a for x, a in zip(e, alpha)):
                continue
            coef = c
            for x, a in zip(e, alpha):
                for j in range(x, x - a, -1):
                    coef *= j
            ne = tuple(x - a for x, a in zip(e, alpha))
            terms[ne] = terms.get(ne, Fraction(0)) + coef
        return MultiPoly(self.nvars, terms)

    def substitute(self, values: list["MultiPoly"]) -> "MultiPoly":
        """Substitute each variable by the given polynomial (algebra map)."""
        if len(values) != self.nvars:
            raise ValueError("need one substitution per variable")
        nv = values[0].nvars
        out = MultiPoly.zero(nv)
        cache: dict[tuple[int, int], MultiPoly] = {}

        def var_pow(i: int, p: int) -> MultiPoly:
            if (i, p) not in cache:
                cache[(i, p)] = values[i] ** p
            return cache[(i, p)]

        for e, c in self.terms.items():
            term = MultiPoly.constant(nv, c)
            for i, p in enumerate(e):
                if p:
                    term = term * var_pow(i, p)
            out = out + term
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a point of rationals."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, p in zip(point, e):
                v *= Fraction(x) ** p
            total += v
        return total

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        """Float evaluation at an array of points with shape (..., nvars)."""
        points = np.asarray(points, dtype=float)
        out = np.zeros(points.shape[:-1])
        for e, c in self.terms.items():
            term = np.full(points.shape[:-1], float(c))
            for i, p in enumerate(e):
                if p:
                    term = term * points[..., i] ** p
            out += term
        return out

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{p}" for i, p in enumerate(e) if p) or "1"
            bits.append(f"{c}*{mono}")
        return "MultiPoly(" + " + ".join(bits) + ")"

    # -- JSON wire format -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "MultiPoly":
        terms = {tuple(t["e"]): Fraction(t["c"]) for t in d["terms"]}
        return cls(d["nvars"], terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "MultiPoly":
        return cls.from_json_dict(json.loads(s))


def is_symmetric(p: MultiPoly) -> bool:
    """Check invariance under all adjacent transpositions of variables."""
    for i in range(p.nvars - 1):
        for e, c in p.terms.items():
            swapped = list(e)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.terms.get(tuple(swapped), Fraction(0)) != c:
                return False
    return True


def monomial_symmetric(lam: Partition, k: int) -> MultiPoly:
    """The monomial symmetric polynomial indexed by an even partition.

    Exponents are the halved parts, so the degree equals half the weight.
    """
    parts = lam.parts
    if len(parts) > k:
        raise ValueError(f"partition {parts} has more than {k} parts")
    halved = tuple(p // 2 for p in parts) + (0,) * (k - len(parts))
    orbit = set(permutations(halved))
    return MultiPoly(k, {e: Fraction(1) for e in orbit})


def elementary_symmetric(j: int, k: int) -> MultiPoly:
    """The j-th elementary symmetric polynomial in k variables (e_0 = 1)."""
    if not 0 <= j <= k:
        raise ValueError(f"need 0 <= j <= k, got j={j}, k={k}")
    lam = Partition((2,) * j + (0,) * (k - j)) if j else Partition((0,) * k)
    return monomial_symmetric(lam, k)


def sigma_to_y(p: MultiPoly) -> MultiPoly:
    """Algebra map sending the i-th variable to the i-th elementary symmetric
    polynomial; lands in the symmetric polynomials in the same number of
    variables."""
    k = p.nvars
    return p.substitute([elementary_symmetric(j, k) for j in range(1, k + 1)])


def dim_P(m: int, k: int) -> int:
    """Dimension of polynomials of degree <= m in k variables."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return comb(m + k, k)


def dim_Ps(m: int, k: int) -> int:
    """Dimension of symmetric polynomials of degree <= m in k variables."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return count_types(k, 2 * m)
