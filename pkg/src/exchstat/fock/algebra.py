"""Deformed-oscillator and R-matrix algebra descriptors and ladder brackets."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from exchstat.errors import DomainError


class AlgebraKind(str, enum.Enum):
    GENTILE_COS = "gentile_cos"
    BM_SIN = "bm_sin"
    WANG_RMATRIX = "wang_rmatrix"
    # plain oscillator with [n] = n and no cap, used as the bosonic reference
    BOSON = "boson"


OSCILLATOR_KINDS = (AlgebraKind.GENTILE_COS, AlgebraKind.BM_SIN, AlgebraKind.BOSON)


def bracket(kind: AlgebraKind | str, n: int, q: int | None = None) -> float:
    """Ladder factor [n]; a^dagger |n-1> = sqrt([n]) |n>."""
    kind = AlgebraKind(kind)
    if kind is AlgebraKind.BOSON:
        return float(n)
    if kind is AlgebraKind.WANG_RMATRIX:
        raise DomainError("the R-matrix model has no oscillator bracket")
    if q is None or q < 1:
        raise DomainError("q must be a positive integer")
    if not 0 <= n <= q + 1:
        raise DomainError(f"bracket needs 0 <= n <= q+1, got n={n}, q={q}")
    theta = math.pi / (q + 1)
    if kind is AlgebraKind.GENTILE_COS:
        c = math.cos(theta)
        return sum(c**j * math.cos((n - 1 - j) * theta) for j in range(n))
    return math.sin(n * theta) / math.sin(theta)


@dataclass(frozen=True)
class Algebra:
    """One algebra instance: kind, occupancy cap q or flavor count m, inter-mode sign s."""

    kind: AlgebraKind
    q: int | None = None
    m: int | None = None
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", AlgebraKind(self.kind))
        if self.s not in (1, -1):
            raise DomainError("only inter-mode signs s = +1 and -1 are supported")
        if self.kind in (AlgebraKind.GENTILE_COS, AlgebraKind.BM_SIN):
            if self.q is None or self.q < 1:
                raise DomainError(f"{self.kind.value} needs q >= 1")
        if self.kind is AlgebraKind.WANG_RMATRIX:
            if self.m is None or self.m < 1:
                raise DomainError("wang_rmatrix needs m >= 1 flavors")

    def cap(self, n_particles: int) -> int:
        """Largest allowed occupancy of a single mode."""
        if self.kind is AlgebraKind.BOSON:
            return n_particles
        if self.kind is AlgebraKind.WANG_RMATRIX:
            return 1
        return self.q

    def bracket(self, n: int) -> float:
        return bracket(self.kind, n, self.q)
