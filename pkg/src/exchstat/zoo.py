"""Coefficient vectors for the statistics families met in the literature."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from exchstat.audit import StatisticsSpec
from exchstat.errors import DomainError, UnsupportedFamilyError
from exchstat.partitions import enumerate_partitions, sn_irrep_dim
from exchstat.symfunc.kostka import kostka_apply
from exchstat.symfunc.polys import Basis


class Family(str, enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"
    GENTILE = "gentile"
    PARABOSON = "paraboson"
    PARAFERMION = "parafermion"
    MAXWELL_BOLTZMANN = "maxwell_boltzmann"
    JACK_21 = "jack_21"
    IMMANON_21 = "immanon_21"
    SEMION_N5 = "semion_n5"
    CAPPED_DISTINGUISHABLE = "capped_distinguishable"


NEEDS_Q = {Family.GENTILE, Family.PARABOSON, Family.PARAFERMION, Family.CAPPED_DISTINGUISHABLE}

ALIASES = {
    "mb": Family.MAXWELL_BOLTZMANN,
    "quon": Family.MAXWELL_BOLTZMANN,
    "distinguishable": Family.MAXWELL_BOLTZMANN,
    "jack": Family.JACK_21,
    "immanon": Family.IMMANON_21,
    "semion": Family.SEMION_N5,
    "capped": Family.CAPPED_DISTINGUISHABLE,
    "capped_quon": Family.CAPPED_DISTINGUISHABLE,
}

DISPLAY_NAMES = {
    Family.BOSON: "Boson",
    Family.FERMION: "Fermion",
    Family.GENTILE: "Gentile",
    Family.PARABOSON: "Paraboson",
    Family.PARAFERMION: "Parafermion",
    Family.MAXWELL_BOLTZMANN: "Quon/MB",
    Family.JACK_21: "Jack (2,1)",
    Family.IMMANON_21: "Immanon (2,1)",
    Family.SEMION_N5: "Haldane-Wu semion",
    Family.CAPPED_DISTINGUISHABLE: "Capped distinguishable",
}


def parse_family(name: str | Family) -> Family:
    if isinstance(name, Family):
        return name
    key = name.strip().lower().replace("-", "_")
    if key in ALIASES:
        return ALIASES[key]
    try:
        return Family(key)
    except ValueError:
        raise UnsupportedFamilyError(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int
    q_or_p: int | None = None
    alpha: Fraction | None = None
    m_states: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if self.family in NEEDS_Q:
            if self.q_or_p is None or self.q_or_p < 1:
                raise DomainError(f"{self.family.value} needs a positive q/p")
        elif self.q_or_p is not None:
            raise DomainError(f"{self.family.value} takes no q/p parameter")
        if self.family is Family.JACK_21:
            if self.alpha is None:
                raise DomainError("jack_21 needs alpha")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        elif self.alpha is not None:
            raise DomainError(f"{self.family.value} takes no alpha parameter")
        if self.m_states is not None and self.family is not Family.CAPPED_DISTINGUISHABLE:
            raise DomainError(f"{self.family.value} takes no m_states parameter")


def _distinguishable_weight(lam) -> int:
    return factorial(sum(lam)) // prod(factorial(p) for p in lam)


def jack_21_c(alpha):
    """C vector of the (2,1) Jack statistics at n=3; ``alpha`` may be symbolic."""
    return [0, 2 + alpha, 2 * (1 - alpha)]


def jack_21_symbolic():
    """(C, Omega) for the (2,1) Jack statistics with a sympy symbol alpha."""
    import sympy

    alpha = sympy.Symbol("alpha")
    c = jack_21_c(alpha)
    return alpha, c, [sympy.expand(x) for x in kostka_apply(3, c)]


def make_spec(p: FamilyParams) -> StatisticsSpec:
    """The coefficient vector of a family, on the side where its rule is stated."""
    fam, n = p.family, p.n
    parts = enumerate_partitions(n).ordered
    label = DISPLAY_NAMES[fam]
    if p.q_or_p is not None:
        label += f" q={p.q_or_p}" if fam in (Family.GENTILE, Family.CAPPED_DISTINGUISHABLE) else f" p={p.q_or_p}"

    def schur(vec):
        return StatisticsSpec(n, Basis.SCHUR, tuple(vec), label)

    def mono(vec):
        return StatisticsSpec(n, Basis.MONOMIAL, tuple(vec), label)

    if fam is Family.BOSON:
        return schur(int(lam == (n,)) for lam in parts)
    if fam is Family.FERMION:
        return schur(int(lam == (1,) * n) for lam in parts)
    if fam is Family.GENTILE:
        return mono(int(lam[0] <= p.q_or_p) for lam in parts)
    if fam is Family.PARABOSON:
        return schur(int(len(lam) <= p.q_or_p) for lam in parts)
    if fam is Family.PARAFERMION:
        return schur(int(lam[0] <= p.q_or_p) for lam in parts)
    if fam is Family.MAXWELL_BOLTZMANN:
        return mono(_distinguishable_weight(lam) for lam in parts)
    if fam is Family.CAPPED_DISTINGUISHABLE:
        return mono(_distinguishable_weight(lam) if lam[0] <= p.q_or_p else 0 for lam in parts)
    if fam is Family.JACK_21:
        if n != 3:
            raise UnsupportedFamilyError("jack_21 is defined only for n=3")
        return schur(jack_21_c(p.alpha))
    if fam is Family.IMMANON_21:
        if n != 3:
            raise UnsupportedFamilyError("immanon_21 is defined only for n=3")
        return schur((0, 1, 0))
    if fam is Family.SEMION_N5:
        if n != 5:
            raise UnsupportedFamilyError("semion_n5 is defined only for n=5")
        return mono((0, 0, 0, 0, Fraction(1, 3), Fraction(1, 2), 1))
    raise UnsupportedFamilyError(fam.value)


def maxwell_boltzmann_c(n: int) -> tuple[int, ...]:
    """C_lambda = f_lambda; the Schur side of the distinguishable-particle partition function."""
    return tuple(sn_irrep_dim(lam) for lam in enumerate_partitions(n).ordered)


def capped_hilbert_dimension(n: int, q: int, m_states: int) -> int:
    """Dimension of the space of n distinguishable particles on m_states levels, at most q per level."""
    from exchstat.symfunc.polys import SymPoly, evaluate

    spec = make_spec(FamilyParams(Family.CAPPED_DISTINGUISHABLE, n, q, m_states=m_states))
    poly = SymPoly.from_vector(n, Basis.MONOMIAL, list(spec.coeffs))
    return int(evaluate(poly, [1] * m_states))
