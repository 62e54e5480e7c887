"""Partition functions, statistics fits, and spectral freeness checks for Fock models."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from exchstat.audit import AuditVerdict, StatisticsSpec, classify
from exchstat.errors import DomainError
from exchstat.fock.algebra import Algebra, AlgebraKind
from exchstat.fock.basis import build_basis
from exchstat.fock.hamiltonian import HamiltonianSpec, build_hamiltonian
from exchstat.fock.jacobi import eigenvalues_symmetric
from exchstat.symfunc.fit import FitResult, fit_coefficients
from exchstat.symfunc.polys import Basis


def modes(alg: Algebra, sites: int) -> list[tuple[int, int]]:
    """Single-particle modes as (site, flavor); flavor 0 for oscillators."""
    if alg.kind is AlgebraKind.WANG_RMATRIX:
        return [(i, a) for i in range(sites) for a in range(1, alg.m + 1)]
    return [(i, 0) for i in range(sites)]


@dataclass(frozen=True)
class SymbolicPartitionFunction:
    """Z = sum over basis states of prod_k x_k^(exponent); ``terms`` maps exponents to counts."""

    n_vars: int
    terms: dict[tuple[int, ...], int]

    def __call__(self, point: Sequence):
        if len(point) != self.n_vars:
            raise DomainError(f"expected {self.n_vars} values, got {len(point)}")
        total = 0
        for exps, count in self.terms.items():
            value = count
            for x, e in zip(point, exps):
                if e:
                    value = value * x**e
            total = total + value
        return total

    def is_symmetric(self) -> bool:
        return _orbit_closed(self.terms)

    def __str__(self) -> str:
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(exps) if e)
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) or "0"


def _orbit_closed(terms: dict[tuple[int, ...], int]) -> bool:
    for exps, c in terms.items():
        for perm in set(permutations(exps)):
            if terms.get(perm, 0) != c:
                return False
    return True


def symbolic_partition_function(
    alg: Algebra, sites: int, n: int, variable_map: Sequence[int] | None = None
) -> SymbolicPartitionFunction:
    """Exact Z for the diagonal Hamiltonian sum_k eps_k n_k with x_k = exp(-beta eps_k).

    ``variable_map[k]`` names the variable of mode k (see ``modes``); repeated
    variables declare degenerate modes.  Default: one variable per mode.
    """
    mode_list = modes(alg, sites)
    if variable_map is None:
        variable_map = list(range(len(mode_list)))
    if len(variable_map) != len(mode_list):
        raise DomainError(f"variable map needs {len(mode_list)} entries")
    n_vars = max(variable_map) + 1
    lookup = {mode: var for mode, var in zip(mode_list, variable_map)}
    terms: Counter = Counter()
    for state in build_basis(alg, sites, n):
        exps = [0] * n_vars
        for site, content in enumerate(state):
            if alg.kind is AlgebraKind.WANG_RMATRIX:
                if content:
                    exps[lookup[(site, content)]] += 1
            elif content:
                exps[lookup[(site, 0)]] += content
        terms[tuple(exps)] += 1
    return SymbolicPartitionFunction(n_vars, dict(terms))


@dataclass(frozen=True)
class StatisticsFit:
    fit: FitResult
    spec: StatisticsSpec
    verdict: AuditVerdict


def default_locus(alg: Algebra, sites: int) -> list[list[int]] | None:
    """R-matrix flavors on one site are degenerate; oscillator modes are free."""
    if alg.kind is AlgebraKind.WANG_RMATRIX:
        return [[i * alg.m + a for a in range(alg.m)] for i in range(sites)]
    return None


def fit_statistics(
    alg: Algebra, n: int, m_vars: int | None = None, locus: Sequence[Sequence[int]] | None = None
) -> StatisticsFit:
    """Fit the Schur-side C vector of the model's diagonal partition function and audit it.

    ``m_vars`` counts single-particle modes; for the R-matrix model this is
    sites * m and the default locus ties the flavors of each site together.
    """
    per_site = alg.m if alg.kind is AlgebraKind.WANG_RMATRIX else 1
    if m_vars is None:
        m_vars = per_site * max(n, 2) if alg.kind is AlgebraKind.WANG_RMATRIX else n + 1
    if m_vars % per_site:
        raise DomainError(f"m_vars must be a multiple of {per_site}")
    sites = m_vars // per_site
    if locus is None:
        locus = default_locus(alg, sites)
    z = symbolic_partition_function(alg, sites, n)
    fit = fit_coefficients(z, n, m_vars, locus, Basis.SCHUR)
    label = f"{alg.kind.value} fit"
    spec = StatisticsSpec(n, Basis.SCHUR, fit.coeffs, label, allow_empty=True)
    return StatisticsFit(fit, spec, classify(spec))


def partition_function_numeric(energies: Sequence[float], beta: float) -> float:
    return float(sum(math.exp(-beta * e) for e in energies))


def spectrum(alg: Algebra, sites: int, n: int, spec: HamiltonianSpec, tol: float = 1e-9) -> list[float]:
    basis = build_basis(alg, sites, n)
    return eigenvalues_symmetric(build_hamiltonian(alg, basis, spec), tol)


def antisymmetric_reference_spectrum(h: np.ndarray, n: int) -> list[float]:
    """Spectrum of sum_k h^(k) on N-fold tensor space, restricted to antisymmetric tensors."""
    sites = h.shape[0]
    dim = sites**n
    full = np.zeros((dim, dim))
    eye = np.eye(sites)
    for k in range(n):
        term = np.ones((1, 1))
        for f in range(n):
            term = np.kron(term, h if f == k else eye)
        full += term
    vectors = []
    for subset in combinations(range(sites), n):
        v = np.zeros(dim)
        for perm in _permutations_with_sign(subset):
            idx, sign = perm
            flat = 0
            for i in idx:
                flat = flat * sites + i
            v[flat] = sign
        vectors.append(v / np.linalg.norm(v))
    if not vectors:
        return []
    p = np.array(vectors).T
    return sorted(float(x) for x in np.linalg.eigvalsh(p.T @ full @ p))


def _permutations_with_sign(items):
    base = list(items)
    for perm in permutations(range(len(base))):
        inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
        yield tuple(base[k] for k in perm), (-1) ** inversions


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    max_deviation: float
    many_body: tuple[float, ...]
    candidates: tuple[float, ...]
    rule: str


def candidate_energies(alg: Algebra, orbital_energies: Sequence[float], n: int, wang_rule: str = "distinct") -> list[float]:
    """Many-body energies of a free system filling single-particle orbitals by the occupancy rule.

    Oscillators allow up to ``cap`` particles per orbital.  For the R-matrix
    model, ``wang_rule="distinct"`` fills distinct orbitals with m^N flavor
    copies each; ``"cap_m"`` allows up to m particles per orbital once each.
    """
    e = list(orbital_energies)
    if alg.kind is AlgebraKind.WANG_RMATRIX:
        if wang_rule == "distinct":
            out = []
            for subset in combinations(range(len(e)), n):
                out.extend([sum(e[k] for k in subset)] * alg.m**n)
            return sorted(out)
        if wang_rule != "cap_m":
            raise DomainError(f"unknown rule {wang_rule!r}")
        cap = alg.m
    else:
        cap = alg.cap(n)
    out = [
        sum(c * x for c, x in zip(occ, e))
        for occ in product(range(cap + 1), repeat=len(e))
        if sum(occ) == n
    ]
    return sorted(out)


def freeness_check(
    alg: Algebra, spec: HamiltonianSpec, sites: int, n: int, tol: float = 1e-8, wang_rule: str = "distinct"
) -> FreenessReport:
    """Compare the many-body spectrum with occupancy-rule sums of single-particle levels."""
    many = spectrum(alg, sites, n, spec)
    orbitals = eigenvalues_symmetric(spec.single_particle_matrix(sites))
    cands = candidate_energies(alg, orbitals, n, wang_rule)
    rule = f"occupancy <= {alg.cap(n)}" if alg.kind is not AlgebraKind.WANG_RMATRIX else f"wang:{wang_rule}"
    if len(cands) != len(many):
        return FreenessReport(False, math.inf, tuple(many), tuple(cands), rule)
    dev = max((abs(a - b) for a, b in zip(sorted(many), cands)), default=0.0)
    return FreenessReport(dev <= tol, dev, tuple(many), tuple(cands), rule)
