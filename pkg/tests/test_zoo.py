from fractions import Fraction
from itertools import product

import pytest
import sympy

from exchstat.audit import classify
from exchstat.errors import DomainError, UnsupportedFamilyError
from exchstat.partitions import conjugate, enumerate_partitions, sn_irrep_dim
from exchstat.symfunc import Basis
from exchstat.zoo import (
    Family,
    FamilyParams,
    capped_hilbert_dimension,
    jack_21_c,
    jack_21_symbolic,
    make_spec,
    maxwell_boltzmann_c,
    parse_family,
)


def sides(family, n, q=None, **kw):
    v = classify(make_spec(FamilyParams(family, n, q, **kw)))
    return list(v.c), list(v.omega)


@pytest.mark.parametrize(
    "q, c, omega",
    [
        (2, [0, 0, 1, 0, -1], [0, 0, 1, 1, 1]),
        (3, [0, 1, 0, -1, 1], [0, 1, 1, 1, 1]),
        (4, [1, 0, 0, 0, 0], [1, 1, 1, 1, 1]),
    ],
)
def test_gentile_n4(q, c, omega):
    assert sides(Family.GENTILE, 4, q) == (c, omega)


@pytest.mark.parametrize(
    "family, q, c, omega",
    [
        (Family.PARABOSON, 2, [1, 1, 1, 0, 0], [1, 2, 3, 4, 6]),
        (Family.PARABOSON, 3, [1, 1, 1, 1, 0], [1, 2, 3, 5, 9]),
        (Family.PARABOSON, 4, [1, 1, 1, 1, 1], [1, 2, 3, 5, 10]),
        (Family.PARAFERMION, 2, [0, 0, 1, 1, 1], [0, 0, 1, 2, 6]),
        (Family.PARAFERMION, 3, [0, 1, 1, 1, 1], [0, 1, 2, 4, 9]),
    ],
)
def test_parastatistics_n4(family, q, c, omega):
    assert sides(family, 4, q) == (c, omega)


def test_parafermion_is_conjugate_paraboson():
    # rows <= p for one is columns <= p for the other; check via the conjugate map
    parts = enumerate_partitions(5).ordered
    for p in (1, 2, 3):
        pb = dict(zip(parts, make_spec(FamilyParams(Family.PARABOSON, 5, p)).coeffs))
        pf = dict(zip(parts, make_spec(FamilyParams(Family.PARAFERMION, 5, p)).coeffs))
        assert all(pb[lam] == pf[conjugate(lam)] for lam in parts)


def test_quon_n3():
    assert sides(Family.MAXWELL_BOLTZMANN, 3) == ([1, 2, 1], [1, 3, 6])


@pytest.mark.parametrize("n", range(1, 7))
def test_distinguishable_c_is_sn_dimension(n):
    c, _ = sides(Family.MAXWELL_BOLTZMANN, n)
    assert tuple(c) == maxwell_boltzmann_c(n)
    assert c == [sn_irrep_dim(lam) for lam in enumerate_partitions(n)]


def test_capped_quon():
    assert sides(Family.CAPPED_DISTINGUISHABLE, 3, 2, m_states=4) == ([0, 3, 0], [0, 3, 6])


@pytest.mark.parametrize("n, q, m", [(3, 2, 4), (2, 1, 3), (4, 2, 3), (3, 3, 2)])
def test_capped_hilbert_dimension_matches_brute_count(n, q, m):
    # labelled particles each pick a state; no state holds more than q
    brute = sum(1 for a in product(range(m), repeat=n) if max(a.count(s) for s in range(m)) <= q)
    assert capped_hilbert_dimension(n, q, m) == brute


def test_capped_hilbert_dimension_value():
    assert capped_hilbert_dimension(3, 2, 4) == 60


@pytest.mark.parametrize(
    "alpha, c, omega",
    [(0, [0, 2, 2], [0, 2, 6]), (1, [0, 3, 0], [0, 3, 6]), (-2, [0, 0, 6], [0, 0, 6])],
)
def test_jack_numeric(alpha, c, omega):
    assert sides(Family.JACK_21, 3, alpha=Fraction(alpha)) == (c, omega)


def test_jack_symbolic():
    alpha, c, omega = jack_21_symbolic()
    assert [sympy.expand(x) for x in c] == [0, alpha + 2, 2 - 2 * alpha]
    assert omega == [0, alpha + 2, 6]
    assert jack_21_c(Fraction(1, 2)) == [0, Fraction(5, 2), 1]


def test_immanon():
    assert sides(Family.IMMANON_21, 3) == ([0, 1, 0], [0, 1, 2])


def test_semion_n5():
    c, omega = sides(Family.SEMION_N5, 5)
    assert c[4:6] == [Fraction(1, 3), Fraction(-1, 6)]
    assert omega == [0, 0, 0, 0, Fraction(1, 3), Fraction(1, 2), 1]


def test_spec_sides_and_labels():
    s = make_spec(FamilyParams(Family.GENTILE, 4, 2))
    assert s.side is Basis.MONOMIAL and s.label == "Gentile q=2"
    s = make_spec(FamilyParams(Family.PARABOSON, 4, 2))
    assert s.side is Basis.SCHUR and s.label == "Paraboson p=2"


@pytest.mark.parametrize(
    "name, family",
    [("mb", Family.MAXWELL_BOLTZMANN), ("quon", Family.MAXWELL_BOLTZMANN), ("Jack", Family.JACK_21),
     ("capped-quon", Family.CAPPED_DISTINGUISHABLE), ("semion", Family.SEMION_N5), ("gentile", Family.GENTILE)],
)
def test_aliases(name, family):
    assert parse_family(name) is family


def test_unknown_family():
    with pytest.raises(UnsupportedFamilyError):
        parse_family("anyon")


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(family=Family.GENTILE, n=4),
        dict(family=Family.BOSON, n=4, q_or_p=2),
        dict(family=Family.JACK_21, n=3),
        dict(family=Family.BOSON, n=0),
        dict(family=Family.BOSON, n=3, m_states=4),
    ],
)
def test_parameter_domain_errors(kwargs):
    with pytest.raises(DomainError):
        FamilyParams(**kwargs)


@pytest.mark.parametrize("family, n", [(Family.JACK_21, 4), (Family.IMMANON_21, 2), (Family.SEMION_N5, 4)])
def test_fixed_size_families(family, n):
    alpha = Fraction(1) if family is Family.JACK_21 else None
    with pytest.raises(UnsupportedFamilyError):
        make_spec(FamilyParams(family, n, alpha=alpha))
