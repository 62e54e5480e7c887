"""Fock-space models: deformed oscillators and the R-matrix parastatistics model."""
from exchstat.fock.algebra import Algebra, AlgebraKind, bracket
from exchstat.fock.basis import build_basis
from exchstat.fock.hamiltonian import HamiltonianSpec, ManyBodyOperator, build_hamiltonian
from exchstat.fock.jacobi import eigenvalues_symmetric, jacobi_eigh
from exchstat.fock.statistics import (
    FreenessReport,
    StatisticsFit,
    SymbolicPartitionFunction,
    antisymmetric_reference_spectrum,
    candidate_energies,
    fit_statistics,
    freeness_check,
    partition_function_numeric,
    spectrum,
    symbolic_partition_function,
)

__all__ = [
    "Algebra",
    "AlgebraKind",
    "FreenessReport",
    "HamiltonianSpec",
    "ManyBodyOperator",
    "StatisticsFit",
    "SymbolicPartitionFunction",
    "antisymmetric_reference_spectrum",
    "bracket",
    "build_basis",
    "build_hamiltonian",
    "candidate_energies",
    "eigenvalues_symmetric",
    "fit_statistics",
    "freeness_check",
    "jacobi_eigh",
    "partition_function_numeric",
    "spectrum",
    "symbolic_partition_function",
]
