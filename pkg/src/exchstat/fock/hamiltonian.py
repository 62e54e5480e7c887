"""Many-body Hamiltonian matrices in a Fock basis.

The hopping form is H = sum_{i<j} t_ij (A_ij + A_ji) + sum_i t_ii n_i,
where A_ij = a_i^dagger a_j for oscillators and
A_ij = sum_a psi^dagger_{i a} psi_{j a} for the R-matrix model.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from exchstat.errors import DomainError
from exchstat.fock.algebra import Algebra, AlgebraKind
from exchstat.fock.basis import State, occupancies
from exchstat.fock.jacobi import SYMMETRY_TOL, check_symmetric


@dataclass(frozen=True)
class HamiltonianSpec:
    """Either per-site energies (diagonal) or a list of (i, j, t) hopping terms, sites 0-based."""

    diagonal: tuple[float, ...] | None = None
    hopping: tuple[tuple[int, int, float], ...] | None = None

    def __post_init__(self):
        if (self.diagonal is None) == (self.hopping is None):
            raise DomainError("give exactly one of diagonal or hopping")
        if self.diagonal is not None:
            object.__setattr__(self, "diagonal", tuple(self.diagonal))
        else:
            object.__setattr__(self, "hopping", tuple((int(i), int(j), t) for i, j, t in self.hopping))

    @property
    def is_diagonal(self) -> bool:
        return self.diagonal is not None

    def single_particle_matrix(self, sites: int) -> np.ndarray:
        """The sites x sites matrix h with H = sum_ij h_ij A_ij."""
        h = np.zeros((sites, sites))
        if self.diagonal is not None:
            if len(self.diagonal) != sites:
                raise DomainError(f"diagonal spec has {len(self.diagonal)} energies for {sites} sites")
            np.fill_diagonal(h, [float(e) for e in self.diagonal])
            return h
        for i, j, t in self.hopping:
            if not (0 <= i < sites and 0 <= j < sites):
                raise DomainError(f"hopping ({i},{j}) outside 0..{sites - 1}")
            if i == j:
                h[i, i] += float(t)
            else:
                h[i, j] += float(t)
                h[j, i] += float(t)
        return h


@dataclass
class ManyBodyOperator:
    matrix: np.ndarray
    basis: list[State] = field(default_factory=list)
    symmetric: bool = False

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def _oscillator_hop(alg: Algebra, state: State, i: int, j: int) -> tuple[State, float] | None:
    """a_i^dagger a_j |state>, i != j, as (new state, amplitude)."""
    n = list(state)
    if n[j] == 0 or n[i] + 1 > alg.cap(sum(state)):
        return None
    amp_j = alg.bracket(n[j])
    before_j = sum(n[:j])
    n[j] -= 1
    amp_i = alg.bracket(n[i] + 1)
    if amp_i * amp_j <= 0:
        return None
    before_i = sum(n[:i])
    n[i] += 1
    sign = alg.s ** (before_j + before_i)
    return tuple(n), sign * math.sqrt(amp_i * amp_j)


def _wang_annihilate(state: State, k: int, flavor: int) -> tuple[State, int] | None:
    """psi_{k, flavor}: needs site k occupied and the first flavor slot equal to ``flavor``."""
    occupied = [i for i, c in enumerate(state) if c]
    if not state[k] or state[occupied[0]] != flavor:
        return None
    flavors = [state[i] for i in occupied][1:]
    position = occupied.index(k)
    remaining = [i for i in occupied if i != k]
    new = [0] * len(state)
    for site, a in zip(remaining, flavors):
        new[site] = a
    return tuple(new), (-1) ** position


def _wang_create(state: State, k: int, flavor: int) -> tuple[State, int] | None:
    """psi^dagger_{k, flavor}: prepends the flavor slot and moves site k into sorted place."""
    if state[k]:
        return None
    occupied = [i for i, c in enumerate(state) if c]
    flavors = [flavor] + [state[i] for i in occupied]
    sites = sorted(occupied + [k])
    new = [0] * len(state)
    for site, a in zip(sites, flavors):
        new[site] = a
    return tuple(new), (-1) ** sum(1 for i in occupied if i < k)


def _wang_hop(alg: Algebra, state: State, i: int, j: int):
    """sum_a psi^dagger_{i a} psi_{j a} |state> as a list of (new state, amplitude)."""
    out = []
    for a in range(1, alg.m + 1):
        down = _wang_annihilate(state, j, a)
        if down is None:
            continue
        up = _wang_create(down[0], i, a)
        if up is None:
            continue
        out.append((up[0], float(down[1] * up[1])))
    return out


def build_hamiltonian(alg: Algebra, basis: Sequence[State], spec: HamiltonianSpec) -> ManyBodyOperator:
    """Dense Hamiltonian matrix in ``basis``.

    Raises:
        AsymmetricOperatorError: if the assembled matrix is not symmetric.
    """
    basis = list(basis)
    if not basis:
        raise DomainError("empty basis")
    sites = len(basis[0])
    index = {s: k for k, s in enumerate(basis)}
    dim = len(basis)
    mat = np.zeros((dim, dim))
    h = spec.single_particle_matrix(sites)
    for col, state in enumerate(basis):
        occ = occupancies(alg, state)
        mat[col, col] += float(np.dot(np.diag(h), occ))
        if spec.is_diagonal:
            continue
        for i in range(sites):
            for j in range(sites):
                if i == j or h[i, j] == 0:
                    continue
                if alg.kind is AlgebraKind.WANG_RMATRIX:
                    moves = _wang_hop(alg, state, i, j)
                else:
                    hop = _oscillator_hop(alg, state, i, j)
                    moves = [hop] if hop else []
                for new, amp in moves:
                    if new in index:
                        mat[index[new], col] += h[i, j] * amp
    check_symmetric(mat, SYMMETRY_TOL)
    return ManyBodyOperator(mat, basis, True)
