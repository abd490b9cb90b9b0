"""Row-sum diagnostics and modular Eulerian forms of skew-symmetric matrices.

A matrix is modular Eulerian when every row sums to 0 mod l.  When the size
n is coprime to l, each pure-switching orbit contains exactly one such
matrix and `eulerize` constructs it directly from the row-sum profile; the
coprimality hypothesis is sharp, and `eulerian_in_orbit` exhibits the
failure cases (none or several Eulerian matrices in one orbit) by exact
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import NotCoprimeError, ResourceGuardError
from .skewmat import AltMatrix, SwitchExponents, switch_many

__all__ = [
    "RowSumProfile",
    "is_modular_eulerian",
    "row_sum_profile",
    "eulerize",
    "eulerian_in_orbit",
    "ORBIT_GUARD",
]

ORBIT_GUARD = 10**7


@dataclass(frozen=True)
class RowSumProfile:
    """Row sums mod l plus the buckets U_k = {v : row sum of v equals k}."""

    sums: tuple[int, ...]
    buckets: tuple[tuple[int, ...], ...]


def _row_sums(m: AltMatrix) -> tuple[int, ...]:
    return tuple(sum(row) % m.modulus for row in m.entries)


def is_modular_eulerian(m: AltMatrix) -> bool:
    """True when every row of m sums to 0 mod l."""
    return all(s == 0 for s in _row_sums(m))


def row_sum_profile(m: AltMatrix) -> RowSumProfile:
    """Row sums and the partition of vertices by row sum (1-indexed)."""
    sums = _row_sums(m)
    buckets = tuple(
        tuple(v + 1 for v, s in enumerate(sums) if s == k) for k in range(m.modulus)
    )
    return RowSumProfile(sums, buckets)


def eulerize(m: AltMatrix) -> tuple[AltMatrix, SwitchExponents]:
    """The unique modular Eulerian matrix in the pure-switching orbit of m.

    Requires gcd(n, l) = 1.  With s the inverse of n mod l, switching s*k
    times at every vertex of bucket U_k clears all row sums at once.  The
    returned exponents are exactly these bucket values (not renormalized),
    so intermediate data of the construction can be inspected.
    """
    l, n = m.modulus, m.size
    if gcd(n, l) != 1:
        raise NotCoprimeError(
            f"size {n} and modulus {l} are not coprime; the orbit may contain "
            f"no Eulerian matrix or several (see eulerian_in_orbit)"
        )
    s = pow(n, -1, l)
    a = tuple((s * rs) % l for rs in _row_sums(m))
    return switch_many(m, a), a


def eulerian_in_orbit(m: AltMatrix) -> list[AltMatrix]:
    """All modular Eulerian matrices among the pure switchings of m.

    Enumerates the l^(n-1) exponent vectors with a_1 = 0 (constants act
    trivially, so this covers the orbit once) and keeps the Eulerian hits,
    sorted lexicographically by entries.
    """
    l, n = m.modulus, m.size
    total = l ** (n - 1)
    if total > ORBIT_GUARD:
        raise ResourceGuardError(
            f"orbit of size {l}^{n - 1} = {total} exceeds the guard {ORBIT_GUARD}"
        )
    base = np.array(_row_sums(m), dtype=np.int64)
    hits: list[AltMatrix] = []
    chunk = 1 << 15
    weights = l ** np.arange(n - 2, -1, -1, dtype=np.int64) if n > 1 else None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        a = np.zeros((idx.size, n), dtype=np.int64)
        if n > 1:
            a[:, 1:] = (idx[:, None] // weights[None, :]) % l
        # row sums of switch_many(m, a): base_i + sum(a) - n * a_i
        rowsums = (base[None, :] + a.sum(axis=1)[:, None] - n * a) % l
        for vec in a[np.all(rowsums == 0, axis=1)]:
            hits.append(switch_many(m, tuple(int(x) for x in vec)))
    return sorted(set(hits), key=lambda mm: mm.entries)
