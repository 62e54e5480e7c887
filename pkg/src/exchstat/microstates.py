"""Microstate counting at fixed particle number and total energy.

Single-particle levels are the positive integers 1, 2, 3, ...  A many-body
energy distribution is a partition of E into exactly N parts; its
occupation type records how many particles share each occupied level.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

from exchstat.audit import StatisticsSpec, both_sides
from exchstat.errors import DomainError
from exchstat.partitions import Partition, enumerate_partitions

EnergyDistribution = tuple[int, ...]


def enumerate_distributions(n: int, e: int) -> list[EnergyDistribution]:
    """Partitions of ``e`` into exactly ``n`` positive parts, canonical order."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if e < n:
        return []

    def rec(left: int, parts: int, cap: int):
        if parts == 0:
            if left == 0:
                yield ()
            return
        # each remaining part needs at least 1
        for first in range(min(cap, left - (parts - 1)), 0, -1):
            if first * parts < left:
                break
            for rest in rec(left - first, parts - 1, first):
                yield (first,) + rest

    return list(rec(e, n, e))


def occupation_type(d: Sequence[int]) -> Partition:
    return tuple(sorted(Counter(d).values(), reverse=True))


def count_microstates(spec: StatisticsSpec, n: int, e: int) -> Fraction:
    """Sum over distributions of Omega at the distribution's occupation type."""
    if spec.n != n:
        raise DomainError(f"spec is for n={spec.n}, asked for n={n}")
    _, omega = both_sides(spec)
    index = enumerate_partitions(n).index
    return sum((omega[index[occupation_type(d)] - 1] for d in enumerate_distributions(n, e)), Fraction(0))


def type_counts(n: int, e: int) -> dict[Partition, int]:
    """How many distributions at (n, e) have each occupation type."""
    return dict(Counter(occupation_type(d) for d in enumerate_distributions(n, e)))


def _monomial_series(nu: Partition, e_max: int) -> list[int]:
    """Coefficients of t^0..t^e_max in m_nu(t, t^2, t^3, ...).

    Level-by-level dynamic programme: each level takes at most one part of
    nu (as an exponent) or none.  Independent of the distribution enumerator.
    """
    start = tuple(sorted(Counter(nu).items()))
    # state: remaining multiset of parts as ((part, count), ...) -> series
    states: dict[tuple, list[int]] = {start: [1] + [0] * e_max}
    for level in range(1, e_max + 1):
        nxt: dict[tuple, list[int]] = {}
        for rem, series in states.items():
            acc = nxt.setdefault(rem, [0] * (e_max + 1))
            for k, c in enumerate(series):
                acc[k] += c
            for idx, (part, count) in enumerate(rem):
                shift = part * level
                if shift > e_max:
                    continue
                new = list(rem)
                if count == 1:
                    new.pop(idx)
                else:
                    new[idx] = (part, count - 1)
                tgt = nxt.setdefault(tuple(new), [0] * (e_max + 1))
                for k in range(e_max + 1 - shift):
                    if series[k]:
                        tgt[k + shift] += series[k]
        states = nxt
    return states.get((), [0] * (e_max + 1))


def microstates_from_series(spec: StatisticsSpec, n: int, e_max: int) -> list[Fraction]:
    """Counts for E = n..e_max read off the t-expansion of Z at x_i = t^i."""
    if spec.n != n:
        raise DomainError(f"spec is for n={spec.n}, asked for n={n}")
    _, omega = both_sides(spec)
    total = [Fraction(0)] * (e_max + 1)
    for nu, w in zip(enumerate_partitions(n).ordered, omega):
        if w:
            for k, c in enumerate(_monomial_series(nu, e_max)):
                total[k] += w * c
    return total[n:]


def boson_count_reference(n: int, e: int) -> int:
    """Partitions of e into exactly n parts, via p(e - n, parts <= n)."""
    target = e - n
    if target < 0:
        return 0
    ways = [1] + [0] * target
    for part in range(1, n + 1):
        for s in range(part, target + 1):
            ways[s] += ways[s - part]
    return ways[target]


class WeightFamily(str, enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"
    DISTINGUISHABLE = "distinguishable"


@dataclass(frozen=True)
class LevelOccupancy:
    level: int
    occupancy: int
    degeneracy: int

    def __post_init__(self):
        if self.occupancy < 0 or self.degeneracy < 1:
            raise DomainError("need occupancy >= 0 and degeneracy >= 1")


def degenerate_level_weight(family: WeightFamily | str, occupancies: Sequence[LevelOccupancy]) -> Fraction:
    """Number of many-body states for given occupancies of degenerate levels.

    The distinguishable weight carries the overall N! outside the product.
    """
    family = WeightFamily(family)
    if family is WeightFamily.BOSON:
        return Fraction(prod(comb(o.occupancy + o.degeneracy - 1, o.occupancy) for o in occupancies))
    if family is WeightFamily.FERMION:
        for o in occupancies:
            if o.occupancy > o.degeneracy:
                raise DomainError(f"level {o.level}: {o.occupancy} fermions in {o.degeneracy} states")
        return Fraction(prod(comb(o.degeneracy, o.occupancy) for o in occupancies))
    n = sum(o.occupancy for o in occupancies)
    return factorial(n) * prod(
        (Fraction(o.degeneracy**o.occupancy, factorial(o.occupancy)) for o in occupancies), start=Fraction(1)
    )
