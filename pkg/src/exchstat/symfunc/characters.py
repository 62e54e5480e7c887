"""Irreducible S_N characters via the Murnaghan-Nakayama rule.

Rim-hook removal is done on beta-sets (abacus positions): removing an
r-rim hook from lambda is moving one bead from position b to an empty
position b - r, with sign (-1)^(beads strictly between).
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache

from exchstat.errors import WeightMismatchError
from exchstat.partitions import Partition, enumerate_partitions, z_factor


def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    beads = sorted(beta, reverse=True)
    ell = len(beads)
    return tuple(p for p in (beads[i] - (ell - 1 - i) for i in range(ell)) if p > 0)


@cache
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        between = sum(1 for c in beta if target < c < b)
        moved = tuple(target if c == b else c for c in beta)
        total += (-1) ** between * _mn(_from_beta(moved), rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi_lambda evaluated on the conjugacy class of cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatchError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def character_table(n: int) -> list[list[int]]:
    """Rows indexed by irreps lambda, columns by classes mu, both in canonical order."""
    parts = enumerate_partitions(n).ordered
    return [[mn_character(lam, mu) for mu in parts] for lam in parts]


def schur_power_sum_expansion(lam: Partition) -> dict[Partition, Fraction]:
    """Coefficients a_mu in s_lambda = sum_mu a_mu p_mu, with a_mu = chi_lambda(mu) / z_mu."""
    out: dict[Partition, Fraction] = {}
    for mu in enumerate_partitions(sum(lam)).ordered:
        chi = mn_character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_factor(mu))
    return out
