"""Kostka numbers and the Schur-to-monomial change-of-basis matrix.

``KostkaMatrix.entries[J-1][I-1]`` is the number of semistandard tableaux of
shape ``(lambda)_I`` and content ``(lambda)_J``, both indices in canonical
partition order.  Multiplying a Schur coefficient vector C by this matrix
gives the monomial coefficient vector Omega.
"""
from __future__ import annotations

import csv
import io
import logging
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path
from typing import Sequence

from exchstat.errors import WeightMismatchError
from exchstat.partitions import Partition, enumerate_partitions
from exchstat.symfunc.linalg import inverse

log = logging.getLogger(__name__)

CACHE_ENV = "EXCHSTAT_CACHE_DIR"


def _horizontal_strips(lam: Partition, k: int):
    """Partitions nu inside lam such that lam/nu is a horizontal strip of size k."""
    ell = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == ell:
            if left == 0:
                yield tuple(p for p in acc if p > 0)
            return
        # nu_i lies between lam_{i+1} and lam_i
        lower = lam[i + 1] if i + 1 < ell else 0
        for nu_i in range(lam[i], lower - 1, -1):
            removed = lam[i] - nu_i
            if removed > left:
                break
            acc.append(nu_i)
            yield from rec(i + 1, left - removed, acc)
            acc.pop()

    yield from rec(0, k, [])


@cache
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    return sum(_kostka(nu, content[:-1]) for nu in _horizontal_strips(shape, last))


def kostka_number(shape: Partition, content: Sequence[int]) -> int:
    """Number of SSYT with the given shape and content.

    Raises:
        WeightMismatchError: if ``shape`` and ``content`` have different sums.
    """
    shape = tuple(shape)
    content = tuple(c for c in content if c > 0)
    if sum(shape) != sum(content):
        raise WeightMismatchError(f"|{shape}| != |{content}|")
    return _kostka(shape, content)


@dataclass(frozen=True)
class KostkaMatrix:
    n: int
    partitions: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ji: tuple[int, int]) -> int:
        """Entry at 1-based (row J, column I)."""
        j, i = ji
        return self.entries[j - 1][i - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i - 1] for row in self.entries)


def cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "exchstat"


def cache_path(n: int) -> Path:
    return cache_dir() / f"kostka_N{n}.csv"


def _compute_entries(n: int) -> tuple[tuple[int, ...], ...]:
    parts = enumerate_partitions(n).ordered
    return tuple(tuple(kostka_number(shape, content) for shape in parts) for content in parts)


def _valid(entries, size: int) -> bool:
    if len(entries) != size or any(len(r) != size for r in entries):
        return False
    return all(entries[k][k] == 1 for k in range(size)) and all(
        entries[j][i] == 0 for j in range(size) for i in range(j + 1, size)
    )


def _read_cache(path: Path, size: int):
    try:
        text = path.read_text()
    except OSError:
        return None
    try:
        entries = tuple(tuple(int(x) for x in row) for row in csv.reader(io.StringIO(text)) if row)
    except ValueError:
        return None
    return entries if _valid(entries, size) else None


def _write_cache(path: Path, entries) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(entries)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(buf.getvalue())
        os.replace(tmp, path)
    except OSError as exc:
        log.debug("kostka cache write skipped: %s", exc)


@cache
def _kostka_matrix_cached(n: int, directory: str) -> KostkaMatrix:
    parts = enumerate_partitions(n).ordered
    path = Path(directory) / f"kostka_N{n}.csv"
    entries = _read_cache(path, len(parts))
    if entries is None:
        entries = _compute_entries(n)
        _write_cache(path, entries)
    return KostkaMatrix(n, parts, entries)


def kostka_matrix(n: int, use_disk_cache: bool = True) -> KostkaMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not use_disk_cache:
        return KostkaMatrix(n, enumerate_partitions(n).ordered, _compute_entries(n))
    return _kostka_matrix_cached(n, str(cache_dir()))


@cache
def _inverse_entries(n: int) -> tuple[tuple[Fraction, ...], ...]:
    inv = inverse(kostka_matrix(n).rows())
    return tuple(tuple(r) for r in inv)


def inverse_kostka_matrix(n: int) -> list[list[Fraction]]:
    return [list(r) for r in _inverse_entries(n)]


def kostka_apply(n: int, c: Sequence) -> list:
    """Omega = K C.  Works for any ring elements (Fractions, sympy expressions)."""
    k = kostka_matrix(n).entries
    if len(c) != len(k):
        raise ValueError(f"vector length {len(c)} != P({n}) = {len(k)}")
    return [sum((k[j][i] * c[i] for i in range(j + 1) if k[j][i]), 0) for j in range(len(k))]


def inverse_kostka_apply(n: int, omega: Sequence) -> list:
    """C = K^-1 Omega by forward substitution (K is unit lower triangular)."""
    k = kostka_matrix(n).entries
    if len(omega) != len(k):
        raise ValueError(f"vector length {len(omega)} != P({n}) = {len(k)}")
    c: list = []
    for j in range(len(k)):
        acc = omega[j]
        for i in range(j):
            if k[j][i]:
                acc = acc - k[j][i] * c[i]
        c.append(acc)
    return c
