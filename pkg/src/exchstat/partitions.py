"""Integer partitions, their canonical ordering, and irrep dimensions.

Partitions are plain tuples of positive integers in non-increasing order,
e.g. ``(3, 1)``.  The empty tuple is the unique partition of 0.

The canonical order used everywhere in this package puts ``(n)`` first and
``(1, ..., 1)`` last: ``a`` precedes ``b`` when, at the first position where
they differ, ``a`` has the larger part.  Vectors and matrices indexed by
partitions follow this order, and the 1-based position of a partition in it
is called its index ``J`` (or ``I``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import factorial, prod
from typing import Iterator

from exchstat.errors import InvalidPartitionError, WeightMismatchError

Partition = tuple[int, ...]

# Above this weight um_irrep_dim switches from SSYT enumeration to hook-content.
ENUMERATION_LIMIT = 8


def validate_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise InvalidPartitionError(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidPartitionError(f"parts must be non-increasing: {parts}")
    return parts


def length(lam: Partition) -> int:
    return len(lam)


def weight(lam: Partition) -> int:
    return sum(lam)


def _descending(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class PartitionTable:
    """All partitions of ``n`` in canonical order with a 1-based index lookup."""

    n: int
    ordered: tuple[Partition, ...]
    index: dict[Partition, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.ordered)

    def __iter__(self):
        return iter(self.ordered)

    def __getitem__(self, j: int) -> Partition:
        """Partition at 1-based position ``j``."""
        if not 1 <= j <= len(self.ordered):
            raise IndexError(f"partition index {j} outside 1..{len(self.ordered)}")
        return self.ordered[j - 1]

    def position(self, lam: Partition) -> int:
        return self.index[tuple(lam)]


@cache
def enumerate_partitions(n: int) -> PartitionTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    ordered = tuple(_descending(n, n))
    return PartitionTable(n, ordered, {lam: j for j, lam in enumerate(ordered, start=1)})


def partition_count(n: int) -> int:
    """P(n), the number of partitions of ``n``."""
    return len(enumerate_partitions(n))


def precedes(a: Partition, b: Partition) -> bool:
    """Strict canonical order: True when ``a`` comes before ``b``."""
    for x, y in zip(a, b):
        if x != y:
            return x > y
    # one is a prefix of the other; only possible for different weights
    return len(a) > len(b) and a != b


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (all prefix sums of mu <= those of lam)."""
    if sum(mu) != sum(lam):
        raise WeightMismatchError(f"weights differ: |{mu}|={sum(mu)}, |{lam}|={sum(lam)}")
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def sn_irrep_dim(lam: Partition) -> int:
    """Dimension of the S_N irrep labelled by ``lam`` (Frobenius product formula)."""
    n = sum(lam)
    ell = len(lam)
    num = prod(lam[i] - lam[j] - i + j for i in range(ell) for j in range(i + 1, ell))
    den = prod(factorial(lam[i] + ell - i - 1) for i in range(ell))
    value, rem = divmod(factorial(n) * num, den)
    assert rem == 0
    return value


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def multiplicities(lam: Partition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    return counts


def class_size(mu: Partition) -> int:
    """Number of permutations in S_N with cycle type ``mu``."""
    return factorial(sum(mu)) // z_factor(mu)


def z_factor(mu: Partition) -> int:
    """Centraliser order prod_j j^a_j a_j! of the class with cycle type ``mu``."""
    return prod(j**a * factorial(a) for j, a in multiplicities(mu).items())


def semistandard_tableaux(
    shape: Partition, max_entry: int | None = None, content: Partition | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every semistandard Young tableau of ``shape``.

    Rows weakly increase, columns strictly increase.  Either bound the
    entries by ``max_entry`` or fix the multiset of entries via ``content``
    (``content[k]`` copies of ``k + 1``).  This is the slow, transparent
    enumerator; it serves as the oracle for the faster counting routes.
    """
    if content is not None:
        if sum(content) != sum(shape):
            return
        max_entry = len(content)
        remaining = list(content)
    else:
        if max_entry is None:
            raise ValueError("need max_entry or content")
        remaining = None
    rows: list[list[int]] = []

    def fill_row(r: int, c: int, row: list[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if c == shape[r]:
            rows.append(row)
            if r + 1 == len(shape):
                yield tuple(tuple(x) for x in rows)
            else:
                yield from fill_row(r + 1, 0, [])
            rows.pop()
            return
        low = row[-1] if row else 1
        if r > 0:
            low = max(low, rows[r - 1][c] + 1)
        for v in range(low, max_entry + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            yield from fill_row(r, c + 1, row + [v])
            if remaining is not None:
                remaining[v - 1] += 1

    if not shape:
        yield ()
        return
    yield from fill_row(0, 0, [])


def standard_tableaux_count(lam: Partition) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, content=(1,) * sum(lam)))


def um_irrep_dim_enumerated(lam: Partition, m: int) -> int:
    if len(lam) > m:
        return 0
    return sum(1 for _ in semistandard_tableaux(lam, max_entry=m))


def um_irrep_dim_hook_content(lam: Partition, m: int) -> int:
    if len(lam) > m:
        return 0
    num = 1
    den = 1
    hooks = hook_lengths(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            num *= m + j - i
            den *= hooks[i][j]
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def um_irrep_dim(lam: Partition, m: int) -> int:
    """Dimension of the U(m) irrep ``lam``: the number of SSYT with entries in 1..m."""
    if m < 1:
        raise ValueError("m must be positive")
    if sum(lam) <= ENUMERATION_LIMIT:
        return um_irrep_dim_enumerated(lam, m)
    return um_irrep_dim_hook_content(lam, m)
