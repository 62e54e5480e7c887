"""Recover basis coefficients of an unknown symmetric polynomial from samples."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from exchstat.errors import InconsistentError, UnderdeterminedError
from exchstat.partitions import enumerate_partitions
from exchstat.symfunc.kostka import kostka_matrix
from exchstat.symfunc.linalg import solve_least_exact
from exchstat.symfunc.polys import Basis, SymPoly, monomial_value

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
EXTRA_SAMPLES = 3


@dataclass(frozen=True)
class FitResult:
    coeffs: tuple[Fraction, ...]
    basis: Basis
    rank: int
    unknowns: int
    full_rank: bool
    residual: Fraction
    samples: int

    def as_sympoly(self, degree: int) -> SymPoly:
        return SymPoly.from_vector(degree, self.basis, list(self.coeffs))


def normalize_locus(m_vars: int, locus: Sequence[Sequence[int]] | None) -> list[list[int]]:
    """Groups of 0-based variable indices forced equal; unlisted variables stay free."""
    groups: list[list[int]] = []
    seen: set[int] = set()
    for group in locus or ():
        group = sorted(set(int(i) for i in group))
        for i in group:
            if not 0 <= i < m_vars:
                raise ValueError(f"locus index {i} outside 0..{m_vars - 1}")
            if i in seen:
                raise ValueError(f"variable {i} appears in two locus groups")
        seen.update(group)
        if group:
            groups.append(group)
    groups.extend([i] for i in range(m_vars) if i not in seen)
    return groups


def sample_point(groups: list[list[int]], m_vars: int, k: int) -> list[int]:
    point = [0] * m_vars
    for g, group in enumerate(groups):
        value = PRIMES[g] ** k
        for i in group:
            point[i] = value
    return point


def fit_coefficients(
    evaluator: Callable[[list[int]], object],
    degree: int,
    m_vars: int | None = None,
    locus: Sequence[Sequence[int]] | None = None,
    basis: Basis | str = Basis.SCHUR,
) -> FitResult:
    """Fit the coefficients of a degree-``degree`` symmetric polynomial.

    The evaluator is queried at exact integer points on the locus: free
    parameter ``g`` takes the value ``PRIMES[g] ** k`` at sample ``k``.
    Distinct monomials in the free parameters then take distinct values,
    so enough samples always reach the rank of the restricted system.

    Args:
        evaluator: maps a list of ``m_vars`` exact values to the polynomial value.
        degree: the particle number N.
        m_vars: number of variables; defaults to ``degree + 1``.
        locus: groups of variable indices that are forced equal.
        basis: basis of the returned coefficients.

    Raises:
        UnderdeterminedError: the basis functions are dependent on the locus.
        InconsistentError: no polynomial of this form matches the samples.
    """
    basis = Basis(basis)
    m_vars = degree + 1 if m_vars is None else m_vars
    groups = normalize_locus(m_vars, locus)
    if len(groups) > len(PRIMES):
        raise ValueError("too many free parameters")
    parts = enumerate_partitions(degree).ordered
    kmat = kostka_matrix(degree).entries
    unknowns = len(parts)

    def design_row(point):
        mono = [monomial_value(nu, point) for nu in parts]
        if basis is Basis.MONOMIAL:
            return mono
        return [sum(kmat[j][i] * mono[j] for j in range(unknowns)) for i in range(unknowns)]

    rows: list[list] = []
    rhs: list[Fraction] = []

    def extend_to(count: int):
        for k in range(len(rows) + 1, count + 1):
            point = sample_point(groups, m_vars, k)
            rows.append(design_row(point))
            rhs.append(Fraction(evaluator(list(point))))

    extend_to(unknowns + EXTRA_SAMPLES)
    x, rank = solve_least_exact(rows, rhs)
    if rank < unknowns:
        extend_to(max(len(rows), comb(degree + len(groups) - 1, degree)) + EXTRA_SAMPLES)
        x, rank = solve_least_exact(rows, rhs)
    if x is None:
        raise InconsistentError(
            f"samples are not reproduced by any degree-{degree} symmetric polynomial "
            f"in {m_vars} variables"
        )
    if rank < unknowns:
        raise UnderdeterminedError(
            f"rank {rank} < {unknowns} unknowns on the admissible locus", rank, unknowns
        )
    residual = max(abs(sum(a * b for a, b in zip(row, x)) - r) for row, r in zip(rows, rhs))
    return FitResult(tuple(x), basis, rank, unknowns, rank == unknowns, Fraction(residual), len(rows))
