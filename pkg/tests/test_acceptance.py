"""Acceptance criteria 1-10, one check each.

Every check returns (passed, detail) and prints a single line, so the
suite doubles as a report: ``python3 tests/test_acceptance.py``.
"""
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from exchstat import tables
from exchstat import tensor_lab as tl
from exchstat.audit import ViolationKind, admissible_columns, classify, multi_sector_scan, unit_vector
from exchstat.fock import (
    Algebra,
    HamiltonianSpec,
    antisymmetric_reference_spectrum,
    bracket,
    fit_statistics,
    freeness_check,
    partition_function_numeric,
    spectrum,
)
from exchstat.microstates import count_microstates, microstates_from_series
from exchstat.partitions import enumerate_partitions
from exchstat.report import CHECK, CROSS
from exchstat.symfunc import (
    Basis,
    SymPoly,
    convert_basis,
    evaluate,
    kostka_matrix,
    schur_in_monomials,
    schur_via_characters,
)
from exchstat.zoo import Family, FamilyParams, jack_21_symbolic, make_spec

# tolerances and budgets pinned from the acceptance criteria
KOSTKA_SECONDS = 1.0
NO_GO_SECONDS = 60.0
MICROSTATE_SECONDS = 5.0
PROPERTY_SECONDS = 120.0
WANG_REL_TOL = 1e-12
WANG_SAMPLES = 20
BRACKET_TOL = 1e-12
SPECTRUM_TOL = 1e-9

REFERENCE_KOSTKA = {
    3: [[1, 0, 0], [1, 1, 0], [1, 2, 1]],
    4: [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [1, 1, 1, 0, 0], [1, 2, 1, 1, 0], [1, 3, 2, 3, 1]],
    5: [
        [1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0],
        [1, 2, 1, 1, 0, 0, 0],
        [1, 2, 2, 1, 1, 0, 0],
        [1, 3, 3, 3, 2, 1, 0],
        [1, 4, 5, 6, 5, 4, 1],
    ],
}


def _both(family, n, q=None, **kw):
    v = classify(make_spec(FamilyParams(family, n, q, **kw)))
    return [Fraction(x) for x in v.c], [Fraction(x) for x in v.omega]


def criterion_1():
    start = time.perf_counter()
    ok = all(
        [list(r) for r in kostka_matrix(n, use_disk_cache=False).rows()] == REFERENCE_KOSTKA[n] for n in (3, 4, 5)
    )
    elapsed = time.perf_counter() - start
    return ok and elapsed < KOSTKA_SECONDS, f"N=3,4,5 exact match in {elapsed:.3f}s"


def criterion_2():
    start = time.perf_counter()
    cols = all(admissible_columns(n) == {1, len(enumerate_partitions(n))} for n in range(2, 11))
    scan = all(
        sorted(multi_sector_scan(n)) == sorted([unit_vector(n, 1), unit_vector(n, len(enumerate_partitions(n)))])
        for n in range(2, 8)
    )
    elapsed = time.perf_counter() - start
    return cols and scan and elapsed < NO_GO_SECONDS, f"columns n=2..10, 0/1 scan n<=7 in {elapsed:.1f}s"


def criterion_3():
    expected = {
        "Boson": (CHECK, CHECK, CHECK),
        "Fermion": (CHECK, CHECK, CHECK),
        "Gentile": (CROSS, CHECK, CROSS),
        "Green's parastatistics": (CHECK, CROSS, CROSS),
        "Haldane-Wu": (CROSS, CROSS, CROSS),
        "Greenberg's quon": (CHECK, CROSS, CROSS),
        "Parastatistics (R-matrix)": (CROSS, CROSS, CROSS),
    }
    rows = {k: tuple(v) for k, v in tables.table_1()["rows"].items()}
    quon = classify(make_spec(FamilyParams(Family.MAXWELL_BOLTZMANN, 3)))
    ok = all(rows[k] == v for k, v in expected.items()) and quon.kinds() == {ViolationKind.OMEGA_GT_ONE}
    jack = rows["Jack-polynomial schemes"]
    return ok, f"7 rows match; quon fails by Omega>1; Jack sweep row {' '.join(jack)}"


def criterion_4():
    checks = [
        _both(Family.GENTILE, 4, 2) == ([0, 0, 1, 0, -1], [0, 0, 1, 1, 1]),
        _both(Family.GENTILE, 4, 3) == ([0, 1, 0, -1, 1], [0, 1, 1, 1, 1]),
        _both(Family.PARABOSON, 4, 2) == ([1, 1, 1, 0, 0], [1, 2, 3, 4, 6]),
        _both(Family.PARABOSON, 4, 3) == ([1, 1, 1, 1, 0], [1, 2, 3, 5, 9]),
        _both(Family.PARABOSON, 4, 4) == ([1, 1, 1, 1, 1], [1, 2, 3, 5, 10]),
        _both(Family.PARAFERMION, 4, 2) == ([0, 0, 1, 1, 1], [0, 0, 1, 2, 6]),
        _both(Family.PARAFERMION, 4, 3) == ([0, 1, 1, 1, 1], [0, 1, 2, 4, 9]),
        _both(Family.PARAFERMION, 4, 4) == ([1, 1, 1, 1, 1], [1, 2, 3, 5, 10]),
        _both(Family.MAXWELL_BOLTZMANN, 3) == ([1, 2, 1], [1, 3, 6]),
        _both(Family.CAPPED_DISTINGUISHABLE, 3, 2, m_states=4) == ([0, 3, 0], [0, 3, 6]),
        _both(Family.JACK_21, 3, alpha=Fraction(0)) == ([0, 2, 2], [0, 2, 6]),
        _both(Family.JACK_21, 3, alpha=Fraction(1)) == ([0, 3, 0], [0, 3, 6]),
        _both(Family.JACK_21, 3, alpha=Fraction(-2)) == ([0, 0, 6], [0, 0, 6]),
        _both(Family.IMMANON_21, 3) == ([0, 1, 0], [0, 1, 2]),
        _both(Family.SEMION_N5, 5)[0][4:6] == [Fraction(1, 3), Fraction(-1, 6)],
    ]
    alpha, c, omega = jack_21_symbolic()
    checks.append([str(x) for x in c] == ["0", "alpha + 2", "2 - 2*alpha"] and [str(x) for x in omega] == ["0", "alpha + 2", "6"])
    return all(checks), f"{sum(checks)}/{len(checks)} expansions exact"


def criterion_5():
    cases = [
        (Family.BOSON, None, 9), (Family.FERMION, None, 1),
        (Family.GENTILE, 2, 6), (Family.GENTILE, 3, 9), (Family.GENTILE, 4, 9),
        (Family.PARABOSON, 2, 30), (Family.PARABOSON, 3, 36), (Family.PARABOSON, 4, 37),
        (Family.PARAFERMION, 2, 14), (Family.PARAFERMION, 3, 28),
    ]
    start = time.perf_counter()
    got = []
    for fam, q, _ in cases:
        spec = make_spec(FamilyParams(fam, 4, q))
        got.append((count_microstates(spec, 4, 10), microstates_from_series(spec, 4, 10)[-1]))
    elapsed = time.perf_counter() - start
    ok = all(d == s == want for (d, s), (_, _, want) in zip(got, cases))
    return ok and elapsed < MICROSTATE_SECONDS, "totals " + "/".join(str(d) for d, _ in got) + f" both routes in {elapsed:.2f}s"


def criterion_6():
    alg = Algebra("wang_rmatrix", m=2)
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(WANG_SAMPLES):
        ea, eb, beta = rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 3)
        z = partition_function_numeric(spectrum(alg, 2, 2, HamiltonianSpec(diagonal=(ea, eb))), beta)
        expected = 4 * math.exp(-beta * (ea + eb))
        worst = max(worst, abs(z - expected) / expected)
    fit = fit_statistics(alg, 2)
    c_ok = fit.verdict.c == (Fraction(-1, 2), Fraction(3, 2))
    omega_ok = fit.verdict.omega == (Fraction(-1, 2), Fraction(1))
    note = tables.wang_annotation()
    annotated = "(-1/2, 1)" in note and "(1/2, 1)" in note
    ok = worst <= WANG_REL_TOL and c_ok and omega_ok and annotated
    return ok, f"max rel err {worst:.1e}; C=(-1/2, 3/2); Omega=(-1/2, 1) with sign note"


def criterion_7():
    rows = tl.decomposition_table(5, 6)
    table_ok = (
        [r.sn_dim for r in rows] == [1, 4, 5, 6, 5, 4, 1]
        and [r.um_dim for r in rows] == [252, 504, 420, 336, 210, 84, 6]
        and sum(r.product for r in rows) == 7776
    )
    identity_ok = all(
        sum(r.product for r in tl.decomposition_table(n, m)) == m**n for n in range(1, 6) for m in range(1, 7)
    )
    return table_ok and identity_ok, "N=5, m=6 table, total 7776; sum f*dim = m^N for N<=5, m<=6"


def criterion_8():
    psi = tl.psi_basis()
    image = tl.permutation_apply(tl.transposition(3, 1, 2), psi[12])
    o = tl.ket(4, 1, 3, 2)
    mixed = tl.subspace_partition_function(tl.isotypic_21_basis(4))
    single = tl.subspace_partition_function(psi)
    w = tl.subspace_partition_function(tl.capped_symmetric_basis(4, 3, 2))
    checks = [
        not tl.span_membership(psi, image),
        tl.expectation(o, psi[12]) == 0 and tl.expectation(o, image) == 1,
        mixed.schur == SymPoly(3, Basis.SCHUR, {(2, 1): 2}) and mixed.monomial.vector() == [0, 2, 4],
        single.schur == SymPoly(3, Basis.SCHUR, {(2, 1): 1}),
        w.schur.vector() == [0, 1, -1],
    ]
    return all(checks), f"{sum(checks)}/{len(checks)} tensor-space claims exact"


def criterion_9():
    worst_bracket = max(
        abs(bracket(kind, q + 1, q)) for kind in ("gentile_cos", "bm_sin") for q in range(1, 13)
    )
    triangle = HamiltonianSpec(hopping=((0, 1, 1.0), (1, 2, 1.4), (0, 2, 0.7), (0, 0, 0.3)))
    chain = HamiltonianSpec(hopping=((0, 1, 1.0), (1, 2, 1.4)))
    ref = antisymmetric_reference_spectrum(triangle.single_particle_matrix(3), 2)
    worst_limit = max(
        float(np.max(np.abs(np.array(spectrum(Algebra(kind, q=1, s=-1), 3, 2, triangle)) - ref)))
        for kind in ("gentile_cos", "bm_sin")
    )
    free_refs = freeness_check(Algebra("boson"), triangle, 3, 2).free and freeness_check(
        Algebra("gentile_cos", q=1, s=-1), triangle, 3, 2
    ).free
    gentile_free = freeness_check(Algebra("gentile_cos", q=2), chain, 3, 2).free
    ok = worst_bracket <= BRACKET_TOL and worst_limit <= SPECTRUM_TOL and free_refs and not gentile_free
    return ok, f"|[q+1]| <= {worst_bracket:.1e}; q=1 limit dev {worst_limit:.1e}; references free, Gentile q=2 not free"


def criterion_10():
    start = time.perf_counter()
    unitri = True
    for n in range(1, 11):
        rows = kostka_matrix(n).rows()
        unitri &= all(
            r[0] == 1 and r[j] == 1 and not any(r[j + 1:]) for j, r in enumerate(rows)
        )
    dual = all(schur_in_monomials(lam).coeffs == schur_via_characters(lam).coeffs
               for n in range(1, 7) for lam in enumerate_partitions(n))
    rng = random.Random(7)
    round_trip = homomorphism = True
    for _ in range(200):
        n = rng.randint(1, 6)
        size = len(enumerate_partitions(n))
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size)]
        p = SymPoly.from_vector(n, rng.choice(list(Basis)), coeffs)
        other = Basis.MONOMIAL if p.basis is Basis.SCHUR else Basis.SCHUR
        round_trip &= convert_basis(convert_basis(p, other), p.basis).coeffs == p.coeffs
        q = SymPoly.from_vector(n, Basis.SCHUR, [Fraction(rng.randint(-9, 9)) for _ in range(size)])
        point = [rng.randint(-5, 5) for _ in range(rng.randint(1, 6))]
        homomorphism &= evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point)
        homomorphism &= evaluate(convert_basis(p, other), point) == evaluate(p, point)
    elapsed = time.perf_counter() - start
    ok = unitri and dual and round_trip and homomorphism and elapsed < PROPERTY_SECONDS
    return ok, f"unitriangular n<=10, dual Schur N<=6, round trip and homomorphism on 200 samples in {elapsed:.1f}s"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k, ok, detail):
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_acceptance_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail), end="")
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, check in enumerate(CRITERIA, start=1):
        ok, detail = check()
        results.append(ok)
        print(_line(k, ok, detail))
    raise SystemExit(0 if all(results) else 1)
