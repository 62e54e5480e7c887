"""Fock-space bases at fixed particle number.

Oscillator states are occupancy tuples ``(n_1, ..., n_M)``.  R-matrix states
are per-site contents ``(c_1, ..., c_M)`` with ``c_i = 0`` for an empty site
and ``c_i = a`` in ``1..m`` for a site holding flavor ``a``.  The content
form records psi^dagger_{i_1 a_1} psi^dagger_{i_2 a_2} ... |0> with
``i_1 < i_2 < ...``: the k-th occupied site carries the k-th flavor slot.
"""
from __future__ import annotations

from itertools import product

from exchstat.errors import EmptySectorError
from exchstat.fock.algebra import Algebra, AlgebraKind

State = tuple[int, ...]


def build_basis(alg: Algebra, sites: int, n: int) -> list[State]:
    """All states with ``n`` particles on ``sites`` modes, descending lexicographic order."""
    if sites < 1 or n < 0:
        raise EmptySectorError("need sites >= 1 and n >= 0")
    if alg.kind is AlgebraKind.WANG_RMATRIX:
        values = range(alg.m, -1, -1)
        states = [c for c in product(values, repeat=sites) if sum(1 for x in c if x) == n]
    else:
        cap = alg.cap(n)
        states = [c for c in product(range(cap, -1, -1), repeat=sites) if sum(c) == n]
    if not states:
        raise EmptySectorError(f"no {alg.kind.value} state with {n} particles on {sites} sites")
    return states


def occupancies(alg: Algebra, state: State) -> tuple[int, ...]:
    """Particle count per site."""
    if alg.kind is AlgebraKind.WANG_RMATRIX:
        return tuple(int(c != 0) for c in state)
    return state
