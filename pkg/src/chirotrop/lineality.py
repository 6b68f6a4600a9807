"""Lineality space L_{k,n} and exact rank computations modulo it.

Ranks are computed with fraction-free (Bareiss) elimination on Python
ints, so no intermediate value is ever rounded or wrapped.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from .subsets import PlueckerVector, all_subsets


def bareiss_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of rows."""
    m = [[int(v) for v in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        p = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            a = row[col]
            for c in range(col + 1, ncols):
                # exact division: Sylvester's identity
                row[c] = (p * row[c] - a * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


@dataclass(frozen=True)
class LinealityBasis:
    """The n generators of L_{k,n}; generator i is 1 at I iff i in I."""

    k: int
    n: int

    @property
    def vectors(self) -> tuple[PlueckerVector, ...]:
        return lineality_vectors(self.k, self.n)

    def combination(self, x: Sequence[int]) -> PlueckerVector:
        """The lineality vector with coordinates ``sum_{i in I} x_i``."""
        if len(x) != self.n:
            raise ValueError(f"need {self.n} weights, got {len(x)}")
        return PlueckerVector(
            self.k, self.n, tuple(sum(int(x[i - 1]) for i in s) for s in all_subsets(self.k, self.n))
        )

    def rank(self) -> int:
        return bareiss_rank(v.coords for v in self.vectors)


@lru_cache(maxsize=None)
def lineality_vectors(k: int, n: int) -> tuple[PlueckerVector, ...]:
    subs = all_subsets(k, n)
    return tuple(
        PlueckerVector(k, n, tuple(1 if i in s else 0 for s in subs)) for i in range(1, n + 1)
    )


class QuotientMap:
    """Exact linear map R^C -> R^C / L_{k,n}, realised on integer vectors.

    The lineality generators are brought to echelon form once; every input
    vector is then reduced against them fraction-free. All inputs are scaled
    by the same constant, so rank, equality modulo L and positive-multiple
    tests are preserved.
    """

    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.width = comb(n, k)
        rows = [list(v.coords) for v in lineality_vectors(k, n)]
        echelon = []
        pivots = []
        col = 0
        prev = 1
        r0 = 0
        while r0 < len(rows) and col < self.width:
            piv = next((r for r in range(r0, len(rows)) if rows[r][col] != 0), None)
            if piv is None:
                col += 1
                continue
            rows[r0], rows[piv] = rows[piv], rows[r0]
            p = rows[r0][col]
            for r in range(r0 + 1, len(rows)):
                a = rows[r][col]
                rows[r] = [(p * rows[r][c] - a * rows[r0][c]) // prev for c in range(self.width)]
            prev = p
            echelon.append(rows[r0])
            pivots.append(col)
            r0 += 1
            col += 1
        self._echelon = echelon
        self._pivots = pivots
        self.dim = len(pivots)
        self.free_columns = [c for c in range(self.width) if c not in set(pivots)]

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Integer coordinates of the class of ``coords`` in the quotient."""
        if len(coords) != self.width:
            raise ValueError(f"expected {self.width} coordinates, got {len(coords)}")
        v = [int(c) for c in coords]
        # echelon row i vanishes on all earlier pivot columns, so one forward
        # pass clears every pivot; scaling on every step keeps the factor uniform
        for row, p in zip(self._echelon, self._pivots):
            a = v[p]
            piv = row[p]
            v = [piv * x - a * y for x, y in zip(v, row)]
        return tuple(v[c] for c in self.free_columns)

    def reduce_primitive(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Reduced class divided by its content: equal iff same ray mod L."""
        v = self.reduce(coords)
        g = 0
        for x in v:
            g = gcd(g, x)
        return tuple(x // g for x in v) if g else v


@lru_cache(maxsize=None)
def quotient_map(k: int, n: int) -> QuotientMap:
    return QuotientMap(k, n)


def _shape_of(vectors: Sequence[PlueckerVector]) -> tuple[int, int]:
    shapes = {(v.k, v.n) for v in vectors}
    if len(shapes) > 1:
        raise ValueError(f"mixed (k,n) inputs: {sorted(shapes)}")
    return shapes.pop()


def rank_mod_lineality(vectors: Sequence[PlueckerVector], k: int | None = None, n: int | None = None) -> int:
    """Dimension of span(vectors) + L_{k,n} minus dim L_{k,n}.

    Computed directly as ``rank([L; vectors]) - rank(L)``.
    """
    vectors = list(vectors)
    if not vectors:
        return 0
    kk, nn = _shape_of(vectors)
    if k is not None and (k, n) != (kk, nn):
        raise ValueError(f"mixed (k,n) inputs: ({k},{n}) vs ({kk},{nn})")
    lin = [v.coords for v in lineality_vectors(kk, nn)]
    return bareiss_rank(lin + [v.coords for v in vectors]) - bareiss_rank(lin)


def equal_mod_lineality(u: PlueckerVector, v: PlueckerVector) -> bool:
    """True iff ``u - v`` lies in L_{k,n}."""
    return rank_mod_lineality([u - v]) == 0
