"""O(n)-types on the Grassmannian as even partitions, and density computations.

The irreducible O(n)-components of L^2(Gr_k(R^n)) are indexed by partitions
with at most kappa = min(k, n-k) parts, all parts even.  This module
enumerates and counts those index sets, and computes exact rational densities
of subsets cut out by predicates (the sparse / co-sparse dichotomy).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A partition with even, non-increasing parts, padded to a fixed length.

    Trailing zeros are stored explicitly so that predicates addressing a
    fixed coordinate (e.g. "second part vanishes") are total.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(p % 2 != 0 for p in self.parts):
            raise ValueError(f"odd part in {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts not non-increasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part access; parts beyond the stored length are zero."""
        if i < 1:
            raise ValueError("part index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __repr__(self):
        return f"Partition{self.parts}"


@dataclass(frozen=True)
class TypePredicate:
    """A named, total boolean function of a Partition."""

    name: str
    fn: Callable[[Partition], bool]

    def __call__(self, lam: Partition) -> bool:
        return bool(self.fn(lam))


def part_le(i: int, bound: int) -> TypePredicate:
    """Predicate: the i-th part (1-based) is <= bound."""
    return TypePredicate(f"part{i}_le_{bound}", lambda lam: lam.part(i) <= bound)


def part_ge(i: int, bound: int) -> TypePredicate:
    return TypePredicate(f"part{i}_ge_{bound}", lambda lam: lam.part(i) >= bound)


def part_zero(i: int) -> TypePredicate:
    """Predicate: the i-th part (1-based) vanishes."""
    return TypePredicate(f"part{i}_zero", lambda lam: lam.part(i) == 0)


ALWAYS = TypePredicate("always", lambda lam: True)


def predicate_from_name(spec: str) -> TypePredicate:
    """Parse a predicate name of the form used by the CLI.

    Supported: ``always``, ``part<i>_le:<bound>``, ``part<i>_ge:<bound>``,
    ``part<i>_zero``.
    """
    if spec == "always":
        return ALWAYS
    head, _, param = spec.partition(":")
    if head.startswith("part") and head.endswith("_zero") and not param:
        return part_zero(int(head[4:-5]))
    if head.startswith("part") and head.endswith("_le"):
        return part_le(int(head[4:-3]), int(param))
    if head.startswith("part") and head.endswith("_ge"):
        return part_ge(int(head[4:-3]), int(param))
    raise ValueError(f"unknown predicate: {spec!r}")


def _check_args(k: int, max_weight: int) -> None:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if max_weight < 0 or max_weight % 2 != 0:
        raise ValueError(f"max_weight must be even and non-negative, got {max_weight}")


def _even_partitions(budget: int, length: int, cap: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing even tuples of the given length with sum <= budget,
    parts <= cap, in lexicographically increasing order."""
    if length == 0:
        yield ()
        return
    for first in range(0, min(budget, cap) + 1, 2):
        for rest in _even_partitions(budget - first, length - 1, first):
            yield (first,) + rest


def enumerate_types(k: int, max_weight: int) -> list[Partition]:
    """All partitions with <= k even parts and weight <= max_weight.

    Graded order: by weight, then reverse-lexicographically within each
    weight class (the order used for Gram-Schmidt triangularity).
    """
    _check_args(k, max_weight)
    out = [Partition(p) for p in _even_partitions(max_weight, k, max_weight)]
    out.sort(key=lambda lam: (lam.weight, lam.parts))
    return out


@lru_cache(maxsize=None)
def _count_at_most(m: int, k: int) -> int:
    """Number of partitions of m into at most k parts."""
    if m == 0:
        return 1
    if k == 0 or m < 0:
        return 0
    # at most k parts = (largest part exactly k', k' <= k); standard recurrence
    return _count_at_most(m - k, k) + _count_at_most(m, k - 1)


def count_weight_class(k: int, weight: int) -> int:
    """Number of even partitions with <= k parts and given weight."""
    if weight % 2 != 0 or weight < 0:
        return 0
    return _count_at_most(weight // 2, k)


def count_types(k: int, max_weight: int) -> int:
    _check_args(k, max_weight)
    return sum(count_weight_class(k, w) for w in range(0, max_weight + 1, 2))


def weight_class_bounds(k: int, half_weight: int) -> tuple[Fraction, Fraction]:
    """Bracketing bounds for the per-weight count of even partitions of
    weight 2*half_weight into <= k parts (restricted partition function)."""
    m = half_weight
    lo = Fraction(comb(m + k - 1, k - 1), factorial(k))
    hi = Fraction(comb(m + comb(k + 1, 2) - 1, k - 1), factorial(k))
    return lo, hi


def density(pred: TypePredicate, k: int, max_weight: int) -> Fraction:
    """Exact fraction of types with weight <= max_weight satisfying pred."""
    _check_args(k, max_weight)
    types = enumerate_types(k, max_weight)
    hits = sum(1 for lam in types if pred(lam))
    return Fraction(hits, len(types))


def density_sequence(pred: TypePredicate, k: int,
                     max_weights: list[int]) -> list[tuple[int, Fraction]]:
    """Exact densities along a sequence of weight cutoffs."""
    return [(w, density(pred, k, w)) for w in max_weights]
