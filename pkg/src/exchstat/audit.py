"""Consistency map between Schur (C) and monomial (Omega) coefficient vectors.

A statistics is quantum-mechanically consistent when every C is a
non-negative integer and statistically consistent when every Omega is 0 or
1.  All predicates here are exact; there are no tolerances.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from exchstat.errors import WeightMismatchError
from exchstat.partitions import Partition, enumerate_partitions
from exchstat.symfunc.kostka import inverse_kostka_apply, kostka_apply, kostka_matrix
from exchstat.symfunc.polys import Basis


class ViolationKind(str, enum.Enum):
    NEGATIVE_C = "NEGATIVE_C"
    NON_INTEGER_C = "NON_INTEGER_C"
    OMEGA_GT_ONE = "OMEGA_GT_ONE"
    FRACTIONAL_OMEGA = "FRACTIONAL_OMEGA"
    NEGATIVE_OMEGA = "NEGATIVE_OMEGA"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    partition: Partition
    value: Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


@dataclass(frozen=True)
class StatisticsSpec:
    """A candidate statistics for ``n`` particles given on one side of the Kostka map."""

    n: int
    side: Basis
    coeffs: tuple[Fraction, ...]
    label: str = ""
    allow_empty: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "side", Basis(self.side))
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))
        size = len(enumerate_partitions(self.n))
        if len(self.coeffs) != size:
            raise WeightMismatchError(f"{self.label or 'spec'}: need P({self.n})={size} coefficients, got {len(self.coeffs)}")
        if not self.allow_empty and not any(self.coeffs):
            raise ValueError(f"{self.label or 'spec'}: all coefficients are zero")

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return enumerate_partitions(self.n).ordered

    def with_label(self, label: str) -> "StatisticsSpec":
        return StatisticsSpec(self.n, self.side, self.coeffs, label, self.allow_empty)


def _fast_kostka_apply(n: int, c: Sequence[Fraction]) -> list[Fraction]:
    if all(x.denominator == 1 for x in c):
        ints = [x.numerator for x in c]
        k = kostka_matrix(n).entries
        return [Fraction(sum(row[i] * ints[i] for i in range(j + 1))) for j, row in enumerate(k)]
    return kostka_apply(n, list(c))


def omega_from_c(spec: StatisticsSpec) -> StatisticsSpec:
    if spec.side is not Basis.SCHUR:
        raise ValueError("omega_from_c needs a Schur-side spec")
    return StatisticsSpec(spec.n, Basis.MONOMIAL, tuple(_fast_kostka_apply(spec.n, spec.coeffs)), spec.label, spec.allow_empty)


def c_from_omega(spec: StatisticsSpec) -> StatisticsSpec:
    if spec.side is not Basis.MONOMIAL:
        raise ValueError("c_from_omega needs a monomial-side spec")
    return StatisticsSpec(spec.n, Basis.SCHUR, tuple(inverse_kostka_apply(spec.n, list(spec.coeffs))), spec.label, spec.allow_empty)


def both_sides(spec: StatisticsSpec) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """(C, Omega) for any spec."""
    if spec.side is Basis.SCHUR:
        return spec.coeffs, omega_from_c(spec).coeffs
    return c_from_omega(spec).coeffs, spec.coeffs


@dataclass(frozen=True)
class AuditVerdict:
    spec: StatisticsSpec
    c: tuple[Fraction, ...]
    omega: tuple[Fraction, ...]
    qm_ok: bool
    sm_ok: bool
    violations: tuple[Violation, ...]

    @property
    def qs_ok(self) -> bool:
        return self.qm_ok and self.sm_ok

    @property
    def label(self) -> str:
        return self.spec.label

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


def c_violations(c: Sequence[Fraction], parts: Sequence[Partition]) -> list[Violation]:
    out = []
    for lam, value in zip(parts, c):
        if value < 0:
            out.append(Violation(ViolationKind.NEGATIVE_C, lam, value))
        if value.denominator != 1:
            out.append(Violation(ViolationKind.NON_INTEGER_C, lam, value))
    return out


def omega_violations(omega: Sequence[Fraction], parts: Sequence[Partition]) -> list[Violation]:
    out = []
    for lam, value in zip(parts, omega):
        if value > 1:
            out.append(Violation(ViolationKind.OMEGA_GT_ONE, lam, value))
        if value.denominator != 1:
            out.append(Violation(ViolationKind.FRACTIONAL_OMEGA, lam, value))
        if value < 0:
            out.append(Violation(ViolationKind.NEGATIVE_OMEGA, lam, value))
    return out


def classify(spec: StatisticsSpec) -> AuditVerdict:
    c, omega = both_sides(spec)
    parts = spec.partitions
    cv = c_violations(c, parts)
    ov = omega_violations(omega, parts)
    return AuditVerdict(spec, c, omega, not cv, not ov, tuple(cv + ov))


def admissible_columns(n: int) -> set[int]:
    """1-based columns L whose nonzero region (rows J >= L) is entirely ones.

    These are exactly the single-sector choices C = e_L that give a 0/1 Omega.
    """
    k = kostka_matrix(n).entries
    size = len(k)
    return {i + 1 for i in range(size) if all(k[j][i] in (0, 1) for j in range(size))}


def binary_vectors(size: int) -> Iterator[tuple[int, ...]]:
    """All nonzero 0/1 vectors of the given length."""
    for bits in product((0, 1), repeat=size):
        if any(bits):
            yield bits


def multi_sector_scan(n: int) -> list[tuple[int, ...]]:
    """Every nonzero 0/1 C vector at weight n whose Omega is 0/1 as well."""
    size = len(enumerate_partitions(n))
    passing = []
    for bits in binary_vectors(size):
        spec = StatisticsSpec(n, Basis.SCHUR, bits)
        if classify(spec).qs_ok:
            passing.append(bits)
    return passing


def unit_vector(n: int, index: int) -> tuple[int, ...]:
    """e_index (1-based) of length P(n)."""
    size = len(enumerate_partitions(n))
    return tuple(int(i == index) for i in range(1, size + 1))
