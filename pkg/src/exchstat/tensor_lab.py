"""Exact experiments on small tensor powers (C^m)^{(x) n}.

Kets are labelled by 1-based level tuples, so ``|123>`` is ``(1, 2, 3)``.
A permutation sigma acts on tensors by moving the factor in position k to
position sigma(k); it is given as the tuple ``(sigma(1), ..., sigma(n))``.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from exchstat.errors import DomainError, InconsistentError, NotEnergyEigenbasisError, UnderdeterminedError
from exchstat.partitions import Partition, enumerate_partitions, sn_irrep_dim, um_irrep_dim
from exchstat.symfunc.fit import fit_coefficients
from exchstat.symfunc.linalg import identity, inverse, mat_mul, rank, solve_least_exact
from exchstat.symfunc.polys import Basis, SymPoly, convert_basis

Ket = tuple[int, ...]


@dataclass(frozen=True)
class TensorVector:
    """Sparse vector in (C^m)^{(x) n} with exact amplitudes; zeros are dropped."""

    m: int
    n: int
    amplitudes: Mapping[Ket, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for ket, amp in self.amplitudes.items():
            ket = tuple(ket)
            if len(ket) != self.n or not all(1 <= i <= self.m for i in ket):
                raise DomainError(f"ket {ket} outside {{1..{self.m}}}^{self.n}")
            if amp != 0:
                clean[ket] = amp if not isinstance(amp, int) else Fraction(amp)
        object.__setattr__(self, "amplitudes", clean)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check(other)
        out = dict(self.amplitudes)
        for k, a in other.amplitudes.items():
            out[k] = out.get(k, 0) + a
        return TensorVector(self.m, self.n, out)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorVector":
        return TensorVector(self.m, self.n, {k: a * c for k, a in self.amplitudes.items()})

    def inner(self, other: "TensorVector"):
        """<self|other> for real amplitudes."""
        self._check(other)
        return sum((a * other.amplitudes.get(k, 0) for k, a in self.amplitudes.items()), Fraction(0))

    def is_zero(self) -> bool:
        return not self.amplitudes

    def _check(self, other: "TensorVector") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise DomainError("tensor vectors live in different spaces")

    def __str__(self) -> str:
        if not self.amplitudes:
            return "0"
        out = []
        for ket in sorted(self.amplitudes):
            a = self.amplitudes[ket]
            label = "|" + "".join(map(str, ket)) + ">" if self.m < 10 else "|" + ",".join(map(str, ket)) + ">"
            coeff = "" if a == 1 else "-" if a == -1 else f"{a}"
            out.append(f"{coeff}{label}")
        return " + ".join(out).replace("+ -", "- ")


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\|(\d+)>")


def parse_vector(text: str, m: int) -> TensorVector:
    """Parse strings like ``"|123> + 2|213> - |321>"`` (single-digit levels)."""
    amps: Counter = Counter()
    pos = 0
    n = None
    text = text.strip()
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match:
            raise DomainError(f"cannot parse ket expression at {text[pos:]!r}")
        sign, coeff, digits = match.groups()
        value = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        ket = tuple(int(d) for d in digits)
        n = n or len(ket)
        amps[ket] += value
        pos = match.end()
    if n is None:
        raise DomainError("empty ket expression")
    return TensorVector(m, n, dict(amps))


def ket(m: int, *levels: int) -> TensorVector:
    return TensorVector(m, len(levels), {tuple(levels): Fraction(1)})


# ----- Schur-Weyl bookkeeping ---------------------------------------------------------


@dataclass(frozen=True)
class DecompositionRow:
    partition: Partition
    sn_dim: int
    um_dim: int

    @property
    def product(self) -> int:
        return self.sn_dim * self.um_dim


def decomposition_table(n: int, m: int) -> list[DecompositionRow]:
    """One row per irrep lambda of S_n with at most m rows; products sum to m^n."""
    if n < 1 or m < 1:
        raise DomainError("need n, m >= 1")
    return [
        DecompositionRow(lam, sn_irrep_dim(lam), um_irrep_dim(lam, m))
        for lam in enumerate_partitions(n).ordered
        if len(lam) <= m
    ]


# ----- group actions ------------------------------------------------------------------


def _check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permutation_apply(sigma: Sequence[int], v: TensorVector) -> TensorVector:
    sigma = _check_permutation(sigma, v.n)
    out = {}
    for k, a in v.amplitudes.items():
        new = [0] * v.n
        for pos, level in enumerate(k):
            new[sigma[pos] - 1] = level
        out[tuple(new)] = a
    return TensorVector(v.m, v.n, out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """sigma after tau."""
    return tuple(sigma[t - 1] for t in tau)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    return tuple(perm)


def permutation_sign(sigma: Sequence[int]) -> int:
    inv = sum(1 for a, b in itertools.combinations(range(len(sigma)), 2) if sigma[a] > sigma[b])
    return -1 if inv % 2 else 1


def single_particle_transform(u: Sequence[Sequence], v: TensorVector) -> TensorVector:
    """(U (x) ... (x) U) v with U[new][old]; exact when U is exact."""
    if len(u) != v.m or any(len(row) != v.m for row in u):
        raise DomainError(f"U must be {v.m}x{v.m}")
    current: dict[Ket, object] = dict(v.amplitudes)
    for pos in range(v.n):
        nxt: dict[Ket, object] = {}
        for k, a in current.items():
            old = k[pos]
            for new in range(1, v.m + 1):
                coeff = u[new - 1][old - 1]
                if coeff:
                    nk = k[:pos] + (new,) + k[pos + 1 :]
                    nxt[nk] = nxt.get(nk, 0) + coeff * a
        current = nxt
    return TensorVector(v.m, v.n, current)


def cayley_orthogonal(skew: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rational orthogonal matrix (I - A)(I + A)^-1 from a skew-symmetric rational A."""
    size = len(skew)
    a = [[Fraction(x) for x in row] for row in skew]
    for i in range(size):
        for j in range(size):
            if a[i][j] != -a[j][i]:
                raise DomainError("Cayley transform needs a skew-symmetric matrix")
    eye = identity(size)
    minus = [[eye[i][j] - a[i][j] for j in range(size)] for i in range(size)]
    plus = [[eye[i][j] + a[i][j] for j in range(size)] for i in range(size)]
    return mat_mul(minus, inverse(plus))


GENERIC_SKEW_4 = (
    (0, 1, 2, 3),
    (-1, 0, 5, 7),
    (-2, -5, 0, 11),
    (-3, -7, -11, 0),
)


def generic_orthogonal(m: int) -> list[list[Fraction]]:
    """A fixed rational orthogonal matrix with no zero entries, mixing every pair of levels."""
    skew = [[0] * m for _ in range(m)]
    primes = iter((1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47))
    for i in range(m):
        for j in range(i + 1, m):
            p = Fraction(next(primes), 10)
            skew[i][j], skew[j][i] = p, -p
    return cayley_orthogonal(skew)


HADAMARD_2 = ((1, 1), (1, -1))


# ----- spans --------------------------------------------------------------------------


def coordinate_matrix(vectors: Sequence[TensorVector]) -> list[list[Fraction]]:
    keys = sorted({k for v in vectors for k in v.amplitudes})
    return [[v.amplitudes.get(k, Fraction(0)) for k in keys] for v in vectors]


def vectors_rank(vectors: Sequence[TensorVector]) -> int:
    if not vectors:
        return 0
    return rank(coordinate_matrix(vectors))


def span_membership(basis: Sequence[TensorVector], v: TensorVector) -> bool:
    """True iff v lies in the span of ``basis`` (exact rank comparison)."""
    return vectors_rank(list(basis) + [v]) == vectors_rank(basis)


def independent_subset(vectors: Iterable[TensorVector]) -> list[TensorVector]:
    """Greedy exact extraction of a linearly independent subset."""
    kept: list[TensorVector] = []
    for v in vectors:
        if v.is_zero():
            continue
        if vectors_rank(kept + [v]) > len(kept):
            kept.append(v)
    return kept


def is_invariant(basis: Sequence[TensorVector], action: Callable[[TensorVector], TensorVector]) -> bool:
    return all(span_membership(basis, action(b)) for b in basis)


# ----- observables --------------------------------------------------------------------


def expectation(observable, v: TensorVector):
    """<v|O|v> for unnormalized v.

    ``observable`` is either a TensorVector w, read as the projector |w><w|,
    or a callable mapping a TensorVector to O applied to it.
    """
    if isinstance(observable, TensorVector):
        overlap = observable.inner(v)
        return overlap * overlap
    return v.inner(observable(v))


def projector(w: TensorVector) -> Callable[[TensorVector], TensorVector]:
    return lambda v: w.scale(w.inner(v))


# ----- partition functions ------------------------------------------------------------


@dataclass(frozen=True)
class SubspacePartitionFunction:
    """Z = sum over basis vectors of prod_k x_{level_k}, with its s/m expansions when they exist."""

    n: int
    m: int
    terms: dict[tuple[int, ...], int]
    monomial: SymPoly | None
    schur: SymPoly | None
    method: str

    @property
    def symmetric(self) -> bool:
        return self.method == "symmetric"


def _content(ket_: Ket, m: int) -> tuple[int, ...]:
    exps = [0] * m
    for level in ket_:
        exps[level - 1] += 1
    return tuple(exps)


def _level_variables(m: int, locus: Sequence[Sequence[int]] | None) -> list[int]:
    """Variable index of each 0-based level; levels in one locus group share a variable."""
    var = [-1] * m
    count = 0
    for group in locus or ():
        for level in group:
            if not 0 <= level < m or var[level] != -1:
                raise DomainError(f"bad locus level {level}")
            var[level] = count
        count += 1
    for level in range(m):
        if var[level] == -1:
            var[level] = count
            count += 1
    return var


def subspace_partition_function(
    basis: Sequence[TensorVector], locus: Sequence[Sequence[int]] | None = None
) -> SubspacePartitionFunction:
    """Partition function of the diagonal Hamiltonian restricted to span(basis).

    ``locus`` lists groups of 0-based levels that share one energy.  Every
    basis vector must have a single total energy, i.e. a single content
    once degenerate levels are identified.  ``terms`` maps exponent tuples
    over the distinct energies to multiplicities.  When no levels are
    degenerate and Z is symmetric, the m-expansion is read off directly;
    otherwise it is fitted on the locus.

    Raises:
        NotEnergyEigenbasisError: a basis vector mixes total energies.
    """
    if not basis:
        raise DomainError("empty basis")
    m, n = basis[0].m, basis[0].n
    var = _level_variables(m, locus)
    n_vars = max(var) + 1
    terms: Counter = Counter()
    for idx, v in enumerate(basis):
        contents = set()
        for k in v.amplitudes:
            exps = [0] * n_vars
            for level in k:
                exps[var[level - 1]] += 1
            contents.add(tuple(exps))
        if len(contents) != 1:
            raise NotEnergyEigenbasisError(f"basis vector {idx + 1} mixes energies {sorted(contents)}")
        terms[contents.pop()] += 1
    terms = dict(terms)
    closed = all(terms.get(p, 0) == c for e, c in terms.items() for p in set(itertools.permutations(e)))
    if closed and n_vars == m:
        coeffs = {}
        for nu in enumerate_partitions(n).ordered:
            if len(nu) <= m:
                coeffs[nu] = Fraction(terms.get(tuple(nu) + (0,) * (m - len(nu)), 0))
        mono = SymPoly(n, Basis.MONOMIAL, coeffs)
        return SubspacePartitionFunction(n, m, terms, mono, convert_basis(mono, Basis.SCHUR), "symmetric")

    def evaluator(point):
        values = [0] * n_vars
        for level, v_idx in enumerate(var):
            values[v_idx] = point[level]
        total = 0
        for exps, c in terms.items():
            value = c
            for x, e in zip(values, exps):
                value *= x**e
            total += value
        return total

    try:
        fit = fit_coefficients(evaluator, n, m, locus, Basis.MONOMIAL)
    except (InconsistentError, UnderdeterminedError):
        return SubspacePartitionFunction(n, m, terms, None, None, "none")
    mono = fit.as_sympoly(n)
    return SubspacePartitionFunction(n, m, terms, mono, convert_basis(mono, Basis.SCHUR), "locus-fit")


# ----- built-in subspaces -------------------------------------------------------------


def psi_basis() -> list[TensorVector]:
    """The twenty single-copy (2,1) vectors Psi_1..Psi_20 in (C^4)^{(x)3}.

    Psi_1..Psi_12 are stored de-duplicated, e.g. Psi_1 = 2(|112> - |211>).
    """
    m = 4
    vecs = []
    for i, j in [(1, 2), (1, 3), (1, 4), (2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (3, 4), (4, 1), (4, 2), (4, 3)]:
        vecs.append(TensorVector(m, 3, {(i, i, j): Fraction(2), (j, i, i): Fraction(-2)}))
    texts = [
        "|123> + |213> - |321> - |312>",
        "|132> + |312> - |231> - |213>",
        "|124> + |214> - |421> - |412>",
        "|142> + |412> - |241> - |214>",
        "|134> + |314> - |431> - |413>",
        "|143> + |413> - |341> - |314>",
        "|234> + |324> - |432> - |423>",
        "|243> + |423> - |342> - |324>",
    ]
    vecs.extend(parse_vector(t, m) for t in texts)
    return vecs


def phi_basis() -> list[TensorVector]:
    return [
        parse_vector("|213> - |312> - |132> + |123>", 4),
        parse_vector("|213> - |312> - |321> + |231>", 4),
    ]


def symmetrize(v: TensorVector) -> TensorVector:
    out = TensorVector(v.m, v.n, {})
    for sigma in itertools.permutations(range(1, v.n + 1)):
        out = out + permutation_apply(sigma, v)
    return out


def symmetric_basis(m: int, n: int) -> list[TensorVector]:
    return [symmetrize(ket(m, *c)) for c in itertools.combinations_with_replacement(range(1, m + 1), n)]


def capped_symmetric_basis(m: int, n: int, q: int) -> list[TensorVector]:
    """Symmetric states with no level occupied more than q times."""
    return [
        symmetrize(ket(m, *c))
        for c in itertools.combinations_with_replacement(range(1, m + 1), n)
        if max(Counter(c).values()) <= q
    ]


def antisymmetric_basis(m: int, n: int) -> list[TensorVector]:
    out = []
    for c in itertools.combinations(range(1, m + 1), n):
        amps = {}
        for sigma in itertools.permutations(range(n)):
            amps[tuple(c[s] for s in sigma)] = Fraction(permutation_sign([s + 1 for s in sigma]))
        out.append(TensorVector(m, n, amps))
    return out


def young_symmetrizer(tableau: Sequence[Sequence[int]], v: TensorVector) -> TensorVector:
    """Column antisymmetrizer after row symmetrizer of a standard tableau on tensor positions."""
    n = v.n
    rows = [list(r) for r in tableau]
    cols = [[r[c] for r in rows if c < len(r)] for c in range(len(rows[0]))]

    def group(blocks):
        perms = []
        for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
            sigma = list(range(1, n + 1))
            for block, image in zip(blocks, choice):
                for a, b in zip(block, image):
                    sigma[a - 1] = b
            perms.append(tuple(sigma))
        return perms

    row_sum = TensorVector(v.m, n, {})
    for p in group(rows):
        row_sum = row_sum + permutation_apply(p, v)
    out = TensorVector(v.m, n, {})
    for q in group(cols):
        out = out + permutation_apply(q, row_sum).scale(permutation_sign(q))
    return out


def isotypic_21_basis(m: int = 4) -> list[TensorVector]:
    """Basis of the full (2,1) isotypic component of (C^m)^{(x)3}, from both standard tableaux."""
    out: list[TensorVector] = []
    kets = [ket(m, *t) for t in itertools.product(range(1, m + 1), repeat=3)]
    for tableau in (((1, 2), (3,)), ((1, 3), (2,))):
        images = [young_symmetrizer(tableau, k) for k in kets]
        # group by content so the basis stays an energy eigenbasis
        by_content: dict[tuple[int, ...], list[TensorVector]] = {}
        for img in images:
            if not img.is_zero():
                by_content.setdefault(_content(next(iter(img.amplitudes)), m), []).append(img)
        for group_vectors in by_content.values():
            out.extend(independent_subset(group_vectors))
    return independent_subset(out)


# Wang two-particle example: levels 1=a-up, 2=a-down, 3=b-up, 4=b-down.
WANG_LEVELS = {1: "a,up", 2: "a,down", 3: "b,up", 4: "b,down"}
WANG_LOCUS = ((0, 1), (2, 3))


def wang_psi_basis() -> list[TensorVector]:
    return [
        parse_vector("|14> - |32>", 4),
        parse_vector("|13> - |31>", 4),
        parse_vector("|23> - |41>", 4),
        parse_vector("|24> - |42>", 4),
    ]


def wang_mixing_matrix() -> list[list[int]]:
    """Basis change a-down, b-up -> (a-down +/- b-up), those two columns scaled by sqrt 2."""
    return [
        [1, 0, 0, 0],
        [0, 1, 1, 0],
        [0, 1, -1, 0],
        [0, 0, 0, 1],
    ]


def permutation_trace(basis: Sequence[TensorVector], sigma: Sequence[int]) -> Fraction:
    """Trace of the permutation action restricted to an invariant span(basis)."""
    mat = coordinate_matrix(basis)
    keys = sorted({k for v in basis for k in v.amplitudes})
    images = [permutation_apply(sigma, v) for v in basis]
    cols = [list(col) for col in zip(*mat)]
    trace = Fraction(0)
    for idx, img in enumerate(images):
        if not set(img.amplitudes) <= set(keys):
            raise DomainError("span is not invariant under the permutation")
        rhs = [img.amplitudes.get(k, Fraction(0)) for k in keys]
        x, _ = solve_least_exact(cols, rhs)
        if x is None:
            raise DomainError("span is not invariant under the permutation")
        trace += x[idx]
    return trace
