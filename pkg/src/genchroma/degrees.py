"""Exact degree-sequence statistics and symmetric-polynomial identities.

Every comparison here is exact: means are Fractions, inequalities are
decided by cross-multiplied integer arithmetic.  The quadratic mean itself
is irrational in general, so it is only ever handled through its square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .graphs import Graph


@dataclass(frozen=True)
class DegreeStats:
    """Degree multiset of a graph plus its first two power sums."""

    degrees: tuple[int, ...]
    n: int
    sum_d: int
    sum_d2: int

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "DegreeStats":
        ds = tuple(int(d) for d in degrees)
        if any(d < 0 for d in ds):
            raise ValueError("degrees must be nonnegative")
        return cls(ds, len(ds), sum(ds), sum(d * d for d in ds))

    @classmethod
    def from_graph(cls, g: Graph) -> "DegreeStats":
        return cls.from_degrees(g.degrees())


def mean_degree(stats: DegreeStats) -> Fraction:
    """Arithmetic mean degree; equals 2e/n for graph-derived stats."""
    if stats.n == 0:
        raise ValueError("mean degree undefined for n = 0")
    return Fraction(stats.sum_d, stats.n)


def quadratic_mean_squared(stats: DegreeStats) -> Fraction:
    """Square of the quadratic mean degree, i.e. (sum of d_i^2) / n."""
    if stats.n == 0:
        raise ValueError("quadratic mean undefined for n = 0")
    return Fraction(stats.sum_d2, stats.n)


def elementary_symmetric(xs: Sequence, s: int):
    """Elementary symmetric polynomial of degree s over xs, exactly.

    One-pass polynomial update; works for ints and Fractions alike.
    """
    if not 1 <= s <= len(xs):
        raise ValueError(f"degree s={s} out of range for {len(xs)} values")
    coeff = [1] + [0] * s
    for x in xs:
        for j in range(min(s, len(coeff) - 1), 0, -1):
            coeff[j] += coeff[j - 1] * x
    return coeff[s]


def _sigma_or_zero(xs: Sequence, s: int):
    # vacuous-sum convention: sigma_s of fewer than s values is 0
    return elementary_symmetric(xs, s) if len(xs) >= s else 0


def power_sum_identity_check(xs: Sequence[int]) -> bool:
    """Executable identity test for the square and cube power sums.

    True iff sum x_i^2 = s1^2 - 2*s2 and sum x_i^3 = s1^3 - 3*s1*s2 + 3*s3
    (with s2, s3 taken as 0 for short inputs).  Must hold for every input.
    """
    if not xs:
        raise ValueError("need at least one value")
    s1 = sum(xs)
    s2 = _sigma_or_zero(xs, 2)
    s3 = _sigma_or_zero(xs, 3)
    ok2 = sum(x * x for x in xs) == s1 * s1 - 2 * s2
    ok3 = sum(x**3 for x in xs) == s1**3 - 3 * s1 * s2 + 3 * s3
    return ok2 and ok3


def maclaurin_check(xs: Sequence, s: int) -> tuple[bool, bool]:
    """Compare the degree-s symmetric mean against the arithmetic mean.

    Returns (holds, equality) for sigma_s / C(n,s) <= (sigma_1 / n)^s,
    decided in exact rational arithmetic (the s-th power form avoids any
    root extraction).  For s >= 2 equality is expected exactly when all
    values coincide; callers treat a counterexample as a falsification.
    """
    n = len(xs)
    if not 1 <= s <= n:
        raise ValueError(f"degree s={s} out of range for {n} values")
    vals = [Fraction(x) for x in xs]
    if any(v < 0 for v in vals):
        raise ValueError("values must be nonnegative")
    lhs = Fraction(elementary_symmetric(vals, s), comb(n, s))
    rhs = (Fraction(sum(vals), n)) ** s
    return lhs <= rhs, lhs == rhs
