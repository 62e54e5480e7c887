"""Named tensor-space experiments, each returning a list of checked claims."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from exchstat import tensor_lab as tl
from exchstat.errors import DomainError


@dataclass(frozen=True)
class Claim:
    description: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


@dataclass
class ExperimentRecord:
    experiment: str
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def claim(self, description: str, expected, observed) -> None:
        self.claims.append(Claim(description, expected, observed))

    def to_json(self) -> dict:
        from exchstat.report import jsonable

        return {
            "experiment": self.experiment,
            "claims": [
                {
                    "description": c.description,
                    "expected": jsonable(c.expected),
                    "observed": jsonable(c.observed),
                    "pass": c.passed,
                }
                for c in self.claims
            ],
            "notes": list(self.notes),
        }


def _vec(poly) -> list[Fraction] | None:
    return None if poly is None else list(poly.vector())


def decomposition_n5_m6() -> ExperimentRecord:
    rec = ExperimentRecord("decomposition-n5-m6")
    rows = tl.decomposition_table(5, 6)
    rec.claim("U(6) dimensions", [252, 504, 420, 336, 210, 84, 6], [r.um_dim for r in rows])
    rec.claim("S_5 dimensions", [1, 4, 5, 6, 5, 4, 1], [r.sn_dim for r in rows])
    rec.claim("total dimension 6^5", 7776, sum(r.product for r in rows))
    rec.claim(
        "n=3, m=4 sectors 20 + 40 + 4",
        [20, 40, 4],
        [r.product for r in tl.decomposition_table(3, 4)],
    )
    return rec


def psi13_p12() -> ExperimentRecord:
    rec = ExperimentRecord("psi13-p12")
    psi = tl.psi_basis()
    rec.notes.append("Psi_1..Psi_12 are stored as 2(|iij> - |jii>) after merging repeated kets")
    rec.claim("rank of Psi_1..Psi_20", 20, tl.vectors_rank(psi))
    p13 = psi[12]
    v = tl.permutation_apply(tl.transposition(3, 1, 2), p13)
    rec.claim("P12 Psi_13", "|123> - |132> + |213> - |231>", str(v))
    rec.claim("Psi_13 in span", True, tl.span_membership(psi, p13))
    rec.claim("P12 Psi_13 in span", False, tl.span_membership(psi, v))
    return rec


def observable_o() -> ExperimentRecord:
    rec = ExperimentRecord("observable-o")
    obs = tl.ket(4, 1, 3, 2)
    p13 = tl.psi_basis()[12]
    v = tl.permutation_apply(tl.transposition(3, 1, 2), p13)
    rec.claim("<Psi_13|O|Psi_13>", Fraction(0), tl.expectation(obs, p13))
    rec.claim("<P12 Psi_13|O|P12 Psi_13>", Fraction(1), tl.expectation(obs, v))
    return rec


def mixed_sector_z() -> ExperimentRecord:
    rec = ExperimentRecord("mixed-sector-z")
    basis = tl.isotypic_21_basis(4)
    rec.claim("dimension of the (2,1) isotypic sector", 40, len(basis))
    rec.claim(
        "S_3 invariance",
        True,
        all(tl.is_invariant(basis, lambda x, s=s: tl.permutation_apply(s, x)) for s in [(2, 1, 3), (1, 3, 2)]),
    )
    z = tl.subspace_partition_function(basis)
    rec.claim("Z in Schur basis", [0, 2, 0], _vec(z.schur))
    rec.claim("Z in monomial basis", [0, 2, 4], _vec(z.monomial))
    return rec


def single_copy_z() -> ExperimentRecord:
    rec = ExperimentRecord("single-copy-z")
    z = tl.subspace_partition_function(tl.psi_basis())
    rec.claim("Z in Schur basis", [0, 1, 0], _vec(z.schur))
    rec.claim("Z in monomial basis", [0, 1, 2], _vec(z.monomial))
    return rec


def phi_s3() -> ExperimentRecord:
    rec = ExperimentRecord("phi-s3")
    phi = tl.phi_basis()
    perms = list(itertools.permutations((1, 2, 3)))
    rec.claim("span{phi_1, phi_2} is S_3 invariant", True, all(tl.is_invariant(phi, lambda x, s=s: tl.permutation_apply(s, x)) for s in perms))
    u = tl.generic_orthogonal(4)
    rec.claim("generic U(4) image of phi_1 stays in span", False, tl.span_membership(phi, tl.single_particle_transform(u, phi[0])))
    z = tl.subspace_partition_function(phi)
    rec.claim("Z = 2 x1 x2 x3 has an s/m expansion", False, z.monomial is not None)
    return rec


def w_q2() -> ExperimentRecord:
    rec = ExperimentRecord("w-q2")
    w = tl.capped_symmetric_basis(4, 3, 2)
    rec.claim("dimension", 16, len(w))
    z = tl.subspace_partition_function(w)
    rec.claim("Z in monomial basis", [0, 1, 1], _vec(z.monomial))
    rec.claim("Z in Schur basis", [0, 1, -1], _vec(z.schur))
    u = tl.generic_orthogonal(4)
    rec.claim("generic U(4) keeps W_q=2", False, all(tl.span_membership(w, tl.single_particle_transform(u, b)) for b in w))
    return rec


def gentile_hadamard() -> ExperimentRecord:
    rec = ExperimentRecord("gentile-hadamard")
    rec.notes.append("mixing matrix [[1,1],[1,-1]] is the +/- basis change scaled by sqrt 2")
    image = tl.single_particle_transform(tl.HADAMARD_2, tl.ket(2, 1, 1, 2))
    rec.claim("|112> has a nonzero |+++> amplitude", True, image.amplitudes.get((1, 1, 1), 0) != 0)
    return rec


def wang_psi2() -> ExperimentRecord:
    rec = ExperimentRecord("wang-psi2")
    rec.notes.append("levels 1=a,up 2=a,down 3=b,up 4=b,down")
    rec.notes.append(
        "mixing columns are scaled by sqrt 2; psi_2 has one mixed factor per term, so the image is sqrt 2 times T' psi_2"
    )
    psi = tl.wang_psi_basis()
    image = tl.single_particle_transform(tl.wang_mixing_matrix(), psi[1])
    rec.claim("T' psi_2 has a |12> - |21> component", True, image.amplitudes.get((1, 2), 0) == -image.amplitudes.get((2, 1), 0) != 0)
    rec.claim("T' psi_2 in span{psi_1..psi_4}", False, tl.span_membership(psi, image))
    rec.claim("trace of P12 on the span", Fraction(-2), tl.permutation_trace(psi, (2, 1)))
    z = tl.subspace_partition_function(psi, tl.WANG_LOCUS)
    rec.claim("Z on the degenerate locus, Schur basis", [Fraction(-1, 2), Fraction(3, 2)], _vec(z.schur))
    rec.claim("Z on the degenerate locus, monomial basis", [Fraction(-1, 2), Fraction(1)], _vec(z.monomial))
    return rec


EXPERIMENTS: dict[str, Callable[[], ExperimentRecord]] = {
    "decomposition-n5-m6": decomposition_n5_m6,
    "psi13-p12": psi13_p12,
    "observable-o": observable_o,
    "mixed-sector-z": mixed_sector_z,
    "single-copy-z": single_copy_z,
    "phi-s3": phi_s3,
    "w-q2": w_q2,
    "gentile-hadamard": gentile_hadamard,
    "wang-psi2": wang_psi2,
}


def run_experiment(name: str) -> ExperimentRecord:
    try:
        return EXPERIMENTS[name]()
    except KeyError:
        raise DomainError(f"unknown experiment {name!r}; choose from {sorted(EXPERIMENTS)}") from None
