"""Skew-symmetric matrices over Z/lZ and the switching calculus on them.

A matrix M determines a quadratic exponent pattern; switching at a vertex v
subtracts 1 across row v and adds 1 down column v (mod l).  Two matrices
are called switching equivalent when one is reachable from the other by
switchings followed by a relabeling of the vertices.  The triple sums
m_ij + m_jh + m_hi are a complete invariant for pure switching, which is
what both the equivalence decision and the canonical forms below exploit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "AltMatrix",
    "TripleTensor",
    "EquivWitness",
    "make",
    "switch",
    "switch_many",
    "relabel",
    "triple_tensor",
    "potential_witness",
    "switching_equivalent",
    "isomorphic",
    "canonical_class_form",
    "canonical_iso_form",
    "isolate",
    "verify_witness",
]

# permutations are tuples of 1-indexed images: sigma[i-1] is the image of i
Permutation = tuple[int, ...]
SwitchExponents = tuple[int, ...]


@dataclass(frozen=True)
class AltMatrix:
    """Immutable n x n skew-symmetric matrix over Z/modulus Z."""

    modulus: int
    size: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_entries(self.modulus, self.size, self.entries)


@dataclass(frozen=True)
class TripleTensor:
    """All triple sums m_ij + m_jh + m_hi (mod l), for i < j < h in lex order."""

    modulus: int
    size: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class EquivWitness:
    """Certificate for switching equivalence.

    relabel(switch_many(M, exponents), sigma) reproduces the target matrix.
    Exponents are normalized so the first vertex gets 0.
    """

    sigma: Permutation
    exponents: SwitchExponents


def _check_entries(modulus: int, size: int, entries: tuple[tuple[int, ...], ...]) -> None:
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if size < 1:
        raise ValueError(f"size must be at least 1, got {size}")
    if len(entries) != size or any(len(row) != size for row in entries):
        raise ValueError(f"entries must form a {size}x{size} grid")
    for i in range(size):
        if entries[i][i] != 0:
            raise ValueError(f"diagonal entry at ({i + 1},{i + 1}) must be 0")
        for j in range(i + 1, size):
            v, w = entries[i][j], entries[j][i]
            if not (0 <= v < modulus and 0 <= w < modulus):
                raise ValueError(f"entry at ({i + 1},{j + 1}) or ({j + 1},{i + 1}) is not reduced mod {modulus}")
            if (v + w) % modulus != 0:
                raise ValueError(
                    f"entries at ({i + 1},{j + 1}) and ({j + 1},{i + 1}) sum to {v + w}, not 0, mod {modulus}"
                )


def make(modulus: int, size: int, raw_entries: Iterable[Iterable[int]]) -> AltMatrix:
    """Reduce a raw integer grid mod l and validate skew-symmetry."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    grid = tuple(tuple(int(v) % modulus for v in row) for row in raw_entries)
    return AltMatrix(modulus, size, grid)


def _check_vertex(m: AltMatrix, v: int) -> None:
    if not 1 <= v <= m.size:
        raise ValueError(f"vertex {v} out of range 1..{m.size}")


def _check_compatible(m: AltMatrix, mp: AltMatrix) -> None:
    if m.modulus != mp.modulus:
        raise ValueError(f"modulus mismatch: {m.modulus} vs {mp.modulus}")
    if m.size != mp.size:
        raise ValueError(f"size mismatch: {m.size} vs {mp.size}")


def switch(m: AltMatrix, v: int) -> AltMatrix:
    """Switch at vertex v: row v drops by 1, column v gains 1 (mod l)."""
    _check_vertex(m, v)
    l, n, k = m.modulus, m.size, v - 1
    ent = [list(row) for row in m.entries]
    for i in range(n):
        if i != k:
            ent[k][i] = (ent[k][i] - 1) % l
            ent[i][k] = (ent[i][k] + 1) % l
    return AltMatrix(l, n, tuple(tuple(row) for row in ent))


def switch_many(m: AltMatrix, a: Sequence[int]) -> AltMatrix:
    """Apply the switching with exponent a_v at each vertex v simultaneously.

    Entry (i, j) becomes m_ij - a_i + a_j (mod l); constant vectors act
    trivially since switching once at every vertex is the identity.
    """
    if len(a) != m.size:
        raise ValueError(f"expected {m.size} exponents, got {len(a)}")
    l, n = m.modulus, m.size
    e = m.entries
    grid = tuple(
        tuple((e[i][j] - a[i] + a[j]) % l if i != j else 0 for j in range(n))
        for i in range(n)
    )
    return AltMatrix(l, n, grid)


def _check_permutation(sigma: Sequence[int], n: int) -> None:
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(sigma)}")


def _inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def relabel(m: AltMatrix, sigma: Sequence[int]) -> AltMatrix:
    """Relabel vertices: entry (sigma(i), sigma(j)) of the result is m_ij."""
    _check_permutation(sigma, m.size)
    n = m.size
    ent = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            ent[sigma[i] - 1][sigma[j] - 1] = m.entries[i][j]
    return AltMatrix(m.modulus, n, tuple(tuple(row) for row in ent))


def triple_tensor(m: AltMatrix) -> TripleTensor:
    """Triple sums t_ijh = m_ij + m_jh + m_hi (mod l) for i < j < h."""
    l, e = m.modulus, m.entries
    values = tuple(
        (e[i][j] + e[j][h] + e[h][i]) % l
        for i, j, h in itertools.combinations(range(m.size), 3)
    )
    return TripleTensor(l, m.size, values)


def _difference(a: AltMatrix, b: AltMatrix) -> AltMatrix:
    l, n = a.modulus, a.size
    grid = tuple(
        tuple((a.entries[i][j] - b.entries[i][j]) % l for j in range(n))
        for i in range(n)
    )
    return AltMatrix(l, n, grid)


def potential_witness(d: AltMatrix) -> SwitchExponents | None:
    """Exponents a with d_ij = a_j - a_i and a_1 = 0, if d is such a difference.

    Matrices of this shape are exactly those reachable from 0 by pure
    switching, so a present result turns any matching difference M' - M
    into a switching certificate.   The normalization a_1 = 0 makes the
    result unique because only constant vectors act trivially.
    """
    l, n, e = d.modulus, d.size, d.entries
    a = tuple(e[0][j] for j in range(n))
    for i in range(n):
        for j in range(n):
            if e[i][j] != (a[j] - a[i]) % l:
                return None
    return a


def _triple_value(e: tuple[tuple[int, ...], ...], l: int, i: int, j: int, h: int) -> int:
    return (e[i][j] + e[j][h] + e[h][i]) % l


def _folded_triple_multiset(m: AltMatrix) -> tuple[int, ...]:
    # min(t, l - t) is unchanged by relabeling (which can only negate t)
    l = m.modulus
    return tuple(sorted(min(v, (l - v) % l) for v in triple_tensor(m).values))


def switching_equivalent(m: AltMatrix, mp: AltMatrix) -> EquivWitness | None:
    """Decide switching equivalence; return the lex-first witness or None.

    Searches permutations sigma in lex order, pruning on the fly: a partial
    assignment survives only while every already-determined triple sum of
    the relabeled source agrees with the target.  A full match guarantees
    the difference is a switching difference, which potential_witness then
    converts into exponents.
    """
    _check_compatible(m, mp)
    l, n = m.modulus, m.size
    if _folded_triple_multiset(m) != _folded_triple_multiset(mp):
        return None
    me, pe = m.entries, mp.entries
    image = [0] * n
    used = [False] * n

    def extend(k: int) -> Permutation | None:
        if k == n:
            return tuple(image)
        for c in range(1, n + 1):
            if used[c - 1]:
                continue
            ok = True
            for i in range(k - 1):
                for j in range(i + 1, k):
                    want = _triple_value(me, l, i, j, k)
                    got = (
                        pe[image[i] - 1][image[j] - 1]
                        + pe[image[j] - 1][c - 1]
                        + pe[c - 1][image[i] - 1]
                    ) % l
                    if want != got:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            image[k] = c
            used[c - 1] = True
            sigma = extend(k + 1)
            if sigma is not None:
                return sigma
            used[c - 1] = False
        return None

    sigma = extend(0)
    if sigma is None:
        return None
    a = potential_witness(_difference(relabel(mp, _inverse(sigma)), m))
    if a is None:  # cannot happen when all triple sums agree
        return None
    return EquivWitness(sigma, a)


def _row_multiset(e: tuple[tuple[int, ...], ...], i: int) -> tuple[int, ...]:
    return tuple(sorted(e[i]))


def isomorphic(m: AltMatrix, mp: AltMatrix) -> Permutation | None:
    """Permutation sigma with relabel(m, sigma) = mp, or None.

    Backtracking over images in lex order, pruned by sorted row multisets
    and by pairwise entry agreement with all previously placed vertices.
    """
    _check_compatible(m, mp)
    n = m.size
    me, pe = m.entries, mp.entries
    if sorted(sorted(row) for row in me) != sorted(sorted(row) for row in pe):
        return None
    rows_m = [_row_multiset(me, i) for i in range(n)]
    rows_p = [_row_multiset(pe, i) for i in range(n)]
    image = [0] * n
    used = [False] * n

    def extend(k: int) -> Permutation | None:
        if k == n:
            return tuple(image)
        for c in range(1, n + 1):
            if used[c - 1] or rows_m[k] != rows_p[c - 1]:
                continue
            if any(pe[image[i] - 1][c - 1] != me[i][k] for i in range(k)):
                continue
            image[k] = c
            used[c - 1] = True
            sigma = extend(k + 1)
            if sigma is not None:
                return sigma
            used[c - 1] = False
        return None

    return extend(0)


def canonical_class_form(m: AltMatrix) -> TripleTensor:
    """Lexicographically smallest triple tensor over all relabelings.

    Two matrices are switching equivalent exactly when these forms agree,
    so the result is a complete invariant of the switching class.
    """
    l, n, e = m.modulus, m.size, m.entries
    triples = list(itertools.combinations(range(n), 3))
    best: tuple[int, ...] | None = None
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        cand = _gathered_values(e, l, inv, triples, _triple_value, best)
        if cand is not None:
            best = cand
    assert best is not None
    return TripleTensor(l, n, best)


def canonical_iso_form(m: AltMatrix) -> AltMatrix:
    """Lexicographically smallest relabeling (row-major order); complete for isomorphism."""
    l, n, e = m.modulus, m.size, m.entries
    cells = [(i, j) for i in range(n) for j in range(n)]
    best: tuple[int, ...] | None = None
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        cand = _gathered_values(e, l, inv, cells, lambda ee, ll, i, j: ee[i][j], best)
        if cand is not None:
            best = cand
    assert best is not None
    grid = tuple(tuple(best[i * n : (i + 1) * n]) for i in range(n))
    return AltMatrix(l, n, grid)


def _gathered_values(e, l, inv, index_tuples, value_fn, bound):
    """Values of the relabeled matrix at index_tuples, or None once > bound."""
    out: list[int] = []
    bounded = bound is not None
    for k, idx in enumerate(index_tuples):
        v = value_fn(e, l, *(inv[x] for x in idx))
        if bounded:
            if v > bound[k]:
                return None
            if v < bound[k]:
                bounded = False
        out.append(v)
    if bounded:
        return None  # equal to the bound; keep the incumbent
    return tuple(out)


def isolate(m: AltMatrix, v: int) -> AltMatrix:
    """The unique pure switching of m whose row and column v are zero."""
    _check_vertex(m, v)
    l, n, k = m.modulus, m.size, v - 1
    a = tuple(0 if i == k else (-m.entries[k][i]) % l for i in range(n))
    return switch_many(m, a)


def verify_witness(m: AltMatrix, mp: AltMatrix, w: EquivWitness) -> bool:
    """Check a witness exactly: relabel(switch_many(m, a), sigma) == mp."""
    return relabel(switch_many(m, w.exponents), w.sigma) == mp
