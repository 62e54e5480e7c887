import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from exchstat import tensor_lab as tl
from exchstat.errors import DomainError, NotEnergyEigenbasisError
from exchstat.experiments import EXPERIMENTS, run_experiment
from exchstat.partitions import sn_irrep_dim, um_irrep_dim
from exchstat.symfunc import Basis, SymPoly
from exchstat.symfunc.linalg import identity, mat_mul


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def small_vectors(m=3, n=3):
    kets = st.tuples(*[st.integers(min_value=1, max_value=m)] * n)
    return st.dictionaries(kets, st.integers(min_value=-3, max_value=3), max_size=5).map(
        lambda d: tl.TensorVector(m, n, d)
    )


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 7))
def test_schur_weyl_dimensions_add_up(n, m):
    assert sum(r.product for r in tl.decomposition_table(n, m)) == m**n


def test_decomposition_n5_m6():
    rows = tl.decomposition_table(5, 6)
    assert [r.sn_dim for r in rows] == [1, 4, 5, 6, 5, 4, 1]
    assert [r.um_dim for r in rows] == [252, 504, 420, 336, 210, 84, 6]
    assert sum(r.product for r in rows) == 7776


@given(perms(4), perms(4), small_vectors(3, 4))
def test_permutation_action_is_a_homomorphism(sigma, tau, v):
    lhs = tl.permutation_apply(tl.compose(sigma, tau), v)
    rhs = tl.permutation_apply(sigma, tl.permutation_apply(tau, v))
    assert lhs == rhs
    assert tl.permutation_sign(tl.compose(sigma, tau)) == tl.permutation_sign(sigma) * tl.permutation_sign(tau)


def test_transposition_moves_factors():
    v = tl.ket(3, 1, 2, 3)
    assert tl.permutation_apply(tl.transposition(3, 1, 2), v) == tl.ket(3, 2, 1, 3)
    # the factor in position k moves to position sigma(k)
    assert tl.permutation_apply((2, 3, 1), v) == tl.ket(3, 3, 1, 2)


def test_bad_permutation():
    with pytest.raises(DomainError):
        tl.permutation_apply((1, 1, 2), tl.ket(2, 1, 1, 1))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_generic_orthogonal_is_orthogonal(m):
    u = tl.generic_orthogonal(m)
    ut = [list(col) for col in zip(*u)]
    assert mat_mul(u, ut) == identity(m)
    assert all(x != 0 for row in u for x in row)


@pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (3, 3), (4, 3)])
def test_symmetric_and_antisymmetric_sectors_are_invariant(m, n):
    u = tl.generic_orthogonal(m)
    sym = tl.symmetric_basis(m, n)
    assert len(sym) == comb(m + n - 1, n)
    assert tl.is_invariant(sym, lambda v: tl.single_particle_transform(u, v))
    anti = tl.antisymmetric_basis(m, n)
    assert len(anti) == comb(m, n)
    assert tl.is_invariant(anti, lambda v: tl.single_particle_transform(u, v))


@pytest.mark.parametrize("m, n", [(3, 2), (3, 3), (4, 3)])
def test_symmetric_and_antisymmetric_partition_functions(m, n):
    z = tl.subspace_partition_function(tl.symmetric_basis(m, n))
    assert z.method == "symmetric"
    assert z.schur == SymPoly(n, Basis.SCHUR, {(n,): 1})
    z = tl.subspace_partition_function(tl.antisymmetric_basis(m, n))
    assert z.schur == SymPoly(n, Basis.SCHUR, {(1,) * n: 1})


def test_capped_symmetric_sector_gives_occupancy_rule():
    z = tl.subspace_partition_function(tl.capped_symmetric_basis(4, 3, 2))
    assert z.monomial.vector() == [0, 1, 1]


def test_psi_vectors():
    psi = tl.psi_basis()
    assert len(psi) == 20
    assert tl.vectors_rank(psi) == 20
    # each Psi is annihilated by the full symmetrizer
    assert all(tl.symmetrize(v).is_zero() for v in psi)
    assert psi[0] == tl.parse_vector("2|112> - 2|211>", 4)


def test_p12_psi13_leaves_the_span():
    psi = tl.psi_basis()
    image = tl.permutation_apply(tl.transposition(3, 1, 2), psi[12])
    assert str(image) == "|123> - |132> + |213> - |231>"
    assert tl.span_membership(psi, psi[12])
    assert not tl.span_membership(psi, image)


def test_observable_distinguishes_the_two_vectors():
    psi = tl.psi_basis()
    image = tl.permutation_apply(tl.transposition(3, 1, 2), psi[12])
    o = tl.ket(4, 1, 3, 2)
    assert tl.expectation(o, psi[12]) == 0
    assert tl.expectation(o, image) == 1
    # the callable form gives the same numbers
    assert tl.expectation(tl.projector(o), image) == 1


def test_isotypic_sector_dimension_and_z():
    basis = tl.isotypic_21_basis(4)
    assert len(basis) == sn_irrep_dim((2, 1)) * um_irrep_dim((2, 1), 4)
    z = tl.subspace_partition_function(basis)
    assert z.schur == SymPoly(3, Basis.SCHUR, {(2, 1): 2})
    assert z.monomial.vector() == [0, 2, 4]


def test_single_copy_z():
    z = tl.subspace_partition_function(tl.psi_basis())
    assert z.schur.vector() == [0, 1, 0]
    assert z.monomial.vector() == [0, 1, 2]


def test_phi_span():
    phi = tl.phi_basis()
    for sigma in itertools.permutations((1, 2, 3)):
        assert tl.is_invariant(phi, lambda v, s=sigma: tl.permutation_apply(s, v))
    u = tl.generic_orthogonal(4)
    assert not tl.span_membership(phi, tl.single_particle_transform(u, phi[0]))
    z = tl.subspace_partition_function(phi)
    assert z.terms == {(1, 1, 1, 0): 2}
    assert z.method == "none" and z.monomial is None


def test_capped_q2_sector():
    w = tl.capped_symmetric_basis(4, 3, 2)
    # 20 symmetric states minus the four |iii>
    assert len(w) == 16
    z = tl.subspace_partition_function(w)
    assert z.schur.vector() == [0, 1, -1]
    u = tl.generic_orthogonal(4)
    assert not all(tl.span_membership(w, tl.single_particle_transform(u, b)) for b in w)


def test_hadamard_mixes_levels():
    image = tl.single_particle_transform(tl.HADAMARD_2, tl.ket(2, 1, 1, 2))
    assert image.amplitudes.get((1, 1, 1), 0) != 0


def test_rmatrix_two_particle_sector():
    psi = tl.wang_psi_basis()
    assert tl.permutation_trace(psi, (2, 1)) == -2
    image = tl.single_particle_transform(tl.wang_mixing_matrix(), psi[1])
    assert not tl.span_membership(psi, image)
    z = tl.subspace_partition_function(psi, tl.WANG_LOCUS)
    assert z.method == "locus-fit"
    assert z.schur.vector() == [Fraction(-1, 2), Fraction(3, 2)]
    assert z.monomial.vector() == [Fraction(-1, 2), 1]


def test_mixed_energy_vector_rejected():
    with pytest.raises(NotEnergyEigenbasisError):
        tl.subspace_partition_function([tl.parse_vector("|12> + |33>", 3)])


@given(small_vectors())
def test_string_round_trip(v):
    if v.is_zero():
        assert str(v) == "0"
    else:
        assert tl.parse_vector(str(v), v.m) == v


def test_parse_errors_and_domain():
    with pytest.raises(DomainError):
        tl.parse_vector("|12> + junk", 3)
    with pytest.raises(DomainError):
        tl.parse_vector("", 3)
    with pytest.raises(DomainError):
        tl.ket(2, 3)
    with pytest.raises(DomainError):
        tl.ket(2, 1) + tl.ket(2, 1, 1)


@pytest.mark.parametrize("name", list(EXPERIMENTS))
def test_every_experiment_passes_and_serializes(name):
    record = run_experiment(name)
    assert record.passed
    data = record.to_json()
    assert data["experiment"] == name
    assert all(set(c) == {"description", "expected", "observed", "pass"} for c in data["claims"])


def test_unknown_experiment():
    with pytest.raises(DomainError):
        run_experiment("nope")
