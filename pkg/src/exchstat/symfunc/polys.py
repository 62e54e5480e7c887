"""Symmetric polynomials of fixed degree in the monomial and Schur bases."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Mapping, Sequence

from exchstat.errors import WeightMismatchError
from exchstat.partitions import Partition, enumerate_partitions
from exchstat.symfunc.characters import schur_power_sum_expansion
from exchstat.symfunc.kostka import inverse_kostka_apply, kostka_apply, kostka_number


class Basis(str, enum.Enum):
    MONOMIAL = "monomial"
    SCHUR = "schur"


@dataclass(frozen=True)
class SymPoly:
    """Degree-``degree`` symmetric polynomial; zero coefficients are never stored."""

    degree: int
    basis: Basis
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Partition, Fraction] = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) != self.degree:
                raise WeightMismatchError(f"{lam} has weight {sum(lam)}, expected {self.degree}")
            if c != 0:
                clean[lam] = c if not isinstance(c, int) else Fraction(c)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "basis", Basis(self.basis))

    @classmethod
    def from_vector(cls, degree: int, basis: Basis | str, vector: Sequence) -> "SymPoly":
        parts = enumerate_partitions(degree).ordered
        if len(vector) != len(parts):
            raise ValueError(f"expected {len(parts)} coefficients, got {len(vector)}")
        return cls(degree, Basis(basis), dict(zip(parts, vector)))

    def vector(self) -> list:
        return [self.coeffs.get(lam, Fraction(0)) for lam in enumerate_partitions(self.degree).ordered]

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        other = convert_basis(other, self.basis)
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, 0) + c
        return SymPoly(self.degree, self.basis, merged)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.degree, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, factor) -> "SymPoly":
        return SymPoly(self.degree, self.basis, {k: v * factor for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly) or other.degree != self.degree:
            return NotImplemented
        return convert_basis(other, self.basis).coeffs == self.coeffs

    def __hash__(self):
        return hash((self.degree, tuple(convert_basis(self, Basis.MONOMIAL).vector())))

    def __str__(self) -> str:
        sym = "m" if self.basis is Basis.MONOMIAL else "s"
        if not self.coeffs:
            return "0"
        terms = []
        for lam in enumerate_partitions(self.degree).ordered:
            if lam in self.coeffs:
                c = self.coeffs[lam]
                label = f"{sym}{lam}".replace(" ", "").replace(",)", ")")
                terms.append(label if c == 1 else f"({c}){label}")
        return " + ".join(terms)


def schur_in_monomials(lam: Partition) -> SymPoly:
    """s_lambda = sum_mu K(lambda, mu) m_mu."""
    lam = tuple(lam)
    n = sum(lam)
    return SymPoly(
        n, Basis.MONOMIAL, {mu: Fraction(kostka_number(lam, mu)) for mu in enumerate_partitions(n).ordered}
    )


def _count_assignments(mu: Partition, nu: Partition) -> int:
    """Coefficient of x^nu in p_mu: ways to drop the parts of mu into bins of sizes nu."""

    @cache
    def rec(k: int, remaining: tuple[int, ...]) -> int:
        if k == len(mu):
            return 1 if not any(remaining) else 0
        total = 0
        for i, room in enumerate(remaining):
            if room >= mu[k]:
                total += rec(k + 1, remaining[:i] + (room - mu[k],) + remaining[i + 1 :])
        return total

    return rec(0, tuple(nu))


@cache
def power_sum_in_monomials(mu: Partition) -> dict[Partition, int]:
    n = sum(mu)
    out = {}
    for nu in enumerate_partitions(n).ordered:
        c = _count_assignments(tuple(mu), nu)
        if c:
            out[nu] = c
    return out


def schur_via_characters(lam: Partition, m_vars: int | None = None) -> SymPoly:
    """Monomial expansion of s_lambda from its power-sum/character expansion.

    Monomials with more than ``m_vars`` parts vanish in ``m_vars`` variables
    and are dropped.
    """
    lam = tuple(lam)
    n = sum(lam)
    m_vars = n if m_vars is None else m_vars
    acc: dict[Partition, Fraction] = {}
    for mu, a in schur_power_sum_expansion(lam).items():
        for nu, c in power_sum_in_monomials(mu).items():
            if len(nu) <= m_vars:
                acc[nu] = acc.get(nu, Fraction(0)) + a * c
    return SymPoly(n, Basis.MONOMIAL, acc)


def convert_basis(p: SymPoly, target: Basis | str) -> SymPoly:
    target = Basis(target)
    if p.basis is target:
        return p
    if target is Basis.MONOMIAL:
        return SymPoly.from_vector(p.degree, target, kostka_apply(p.degree, p.vector()))
    return SymPoly.from_vector(p.degree, target, inverse_kostka_apply(p.degree, p.vector()))


def monomial_value(nu: Partition, point: Sequence):
    """m_nu at ``point``: sum over distinct placements of the parts of nu onto variables."""
    nu = tuple(nu)
    m = len(point)
    if len(nu) > m:
        return 0
    if not nu:
        return 1

    @cache
    def rec(i: int, remaining: tuple[int, ...]):
        if not remaining:
            return 1
        if m - i < len(remaining):
            return 0
        total = rec(i + 1, remaining)
        seen = set()
        for k, part in enumerate(remaining):
            if part in seen:
                continue
            seen.add(part)
            total = total + point[i] ** part * rec(i + 1, remaining[:k] + remaining[k + 1 :])
        return total

    return rec(0, nu)


def evaluate(p: SymPoly, point: Sequence):
    """Value of ``p`` at the point ``x_i = point[i]`` (exact when the point is exact)."""
    mono = convert_basis(p, Basis.MONOMIAL)
    total = 0
    for nu, c in mono.coeffs.items():
        total = total + c * monomial_value(nu, point)
    return total
