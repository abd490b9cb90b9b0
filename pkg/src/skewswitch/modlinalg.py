"""Exact linear algebra over Z/lZ for arbitrary modulus l >= 2.

Provides integer Smith normal form and exact counting of solutions of
homogeneous systems A x = 0 (mod l).  The count is what the Burnside sums
in :mod:`skewswitch.census` consume.  For prime moduli a Gaussian
elimination fast path is used; composite moduli go through the Smith
normal form, whose invariant factors determine the solution count for
every modulus at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

__all__ = [
    "IntMatrix",
    "SnfResult",
    "smith_normal_form",
    "count_solutions_mod",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with an explicit shape.

    The shape is stored separately so that matrices with zero rows or zero
    columns (which occur for one-vertex systems) round-trip cleanly.
    Entries are arbitrary-precision Python integers.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {r} has {len(row)} entries, expected {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build a matrix from nested sequences; `cols` is required when there are no rows."""
        grid = tuple(tuple(int(v) for v in row) for row in rows)
        if cols is None:
            if not grid:
                raise ValueError("column count is ambiguous for an empty row list")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_k, nonzero first, then zeros.

    The diagonal always has min(rows, cols) slots; trailing zeros stand for
    the rank deficiency of the matrix.
    """

    diagonal: tuple[int, ...]


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Invariant factors of an integer matrix, in divisibility order."""
    rows, cols = a.rows, a.cols
    slots = min(rows, cols)
    m = [list(row) for row in a.entries]
    divisors: list[int] = []
    t = 0
    while t < slots:
        pos = _smallest_nonzero(m, t, rows, cols)
        if pos is None:
            break
        while True:
            _move_pivot(m, t, pos)
            _reduce_cross(m, t, rows, cols)
            if _cross_clear(m, t, rows, cols):
                bad = _find_nondivisible(m, t, rows, cols)
                if bad is None:
                    break
                # fold the offending row into row t; the next reduction pass
                # produces a strictly smaller pivot, so this terminates
                for j in range(t, cols):
                    m[t][j] += m[bad][j]
            pos = _smallest_nonzero(m, t, rows, cols)

        divisors.append(abs(m[t][t]))
        t += 1
    divisors.extend(0 for _ in range(slots - len(divisors)))
    return SnfResult(tuple(divisors))


def _smallest_nonzero(m: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = m[i][j]
            if v != 0 and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                best = (i, j)
    return best


def _move_pivot(m: list[list[int]], t: int, pos: tuple[int, int]) -> None:
    i, j = pos
    if i != t:
        m[i], m[t] = m[t], m[i]
    if j != t:
        for row in m:
            row[j], row[t] = row[t], row[j]


def _reduce_cross(m: list[list[int]], t: int, rows: int, cols: int) -> None:
    """One pass of remainder reduction of row t and column t by the pivot."""
    p = m[t][t]
    for i in range(t + 1, rows):
        q = m[i][t] // p
        if q:
            for j in range(t, cols):
                m[i][j] -= q * m[t][j]
    for j in range(t + 1, cols):
        q = m[t][j] // p
        if q:
            for i in range(t, rows):
                m[i][j] -= q * m[i][t]


def _cross_clear(m: list[list[int]], t: int, rows: int, cols: int) -> bool:
    return all(m[i][t] == 0 for i in range(t + 1, rows)) and all(
        m[t][j] == 0 for j in range(t + 1, cols)
    )


def _find_nondivisible(m: list[list[int]], t: int, rows: int, cols: int) -> int | None:
    p = m[t][t]
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if m[i][j] % p:
                return i
    return None


def count_solutions_mod(a: IntMatrix, modulus: int) -> int:
    """Exact number of x in (Z/modulus)^cols with A x = 0 (mod modulus).

    Computed as prod_i gcd(modulus, d_i) * modulus^(cols - slots) over the
    Smith diagonal (gcd(modulus, 0) = modulus, so each zero invariant
    factor contributes a full free coordinate).  Prime moduli take a rank
    computation over the field instead; the two routes agree.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if _is_prime(modulus):
        return _count_via_rank(a, modulus)
    return _count_via_snf(a, modulus)


def _count_via_snf(a: IntMatrix, modulus: int) -> int:
    count = modulus ** (a.cols - min(a.rows, a.cols))
    for d in smith_normal_form(a).diagonal:
        count *= gcd(modulus, d)
    return count


def _count_via_rank(a: IntMatrix, modulus: int) -> int:
    return modulus ** (a.cols - _rank_mod_prime(a, modulus))


def _rank_mod_prime(a: IntMatrix, p: int) -> int:
    m = np.zeros((a.rows, a.cols), dtype=np.int64)
    for i, row in enumerate(a.entries):
        m[i] = [v % p for v in row]
    rank = 0
    for c in range(a.cols):
        hits = np.nonzero(m[rank:, c])[0]
        if hits.size == 0:
            continue
        r = rank + int(hits[0])
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != rank]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[rank])) % p
        rank += 1
        if rank == a.rows:
            break
    return rank


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
