"""Three-term Pluecker relations as precomputed index patterns."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .subsets import all_subsets, lex_rank, subset_label

# sign of each term in  p_{Lab} p_{Lcd} - p_{Lac} p_{Lbd} + p_{Lad} p_{Lbc}
TERM_SIGNS = (1, -1, 1)


@dataclass(frozen=True)
class ThreeTermRelation:
    """One relation ``(L; a<b<c<d)``.

    ``terms`` holds the lex ranks of (Lab, Lcd), (Lac, Lbd), (Lad, Lbc).
    """

    k: int
    n: int
    L: tuple[int, ...]
    quad: tuple[int, int, int, int]
    terms: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    signs: tuple[int, int, int] = TERM_SIGNS

    @classmethod
    def build(cls, k: int, n: int, L: Sequence[int], quad: Sequence[int]) -> "ThreeTermRelation":
        L = tuple(sorted(L))
        a, b, c, d = sorted(quad)
        if set(L) & {a, b, c, d}:
            raise ValueError(f"L={L} meets quad={(a, b, c, d)}")
        if len(L) != k - 2:
            raise ValueError(f"L must have {k - 2} elements")

        def r(x, y):
            return lex_rank(tuple(sorted(L + (x, y))), n)

        terms = ((r(a, b), r(c, d)), (r(a, c), r(b, d)), (r(a, d), r(b, c)))
        return cls(k, n, L, (a, b, c, d), terms)

    def subsets(self) -> tuple[tuple[int, ...], ...]:
        subs = all_subsets(self.k, self.n)
        return tuple(subs[i] for pair in self.terms for i in pair)

    def __str__(self) -> str:
        subs = all_subsets(self.k, self.n)
        L = "{" + ",".join(map(str, self.L)) + "}"
        quad = "{" + ",".join(map(str, self.quad)) + "}"
        terms = ", ".join(
            f"{subset_label(subs[p])}·{subset_label(subs[q])}" for p, q in self.terms
        )
        return f"L={L} quad={quad} terms=({terms})"


class Relations(tuple):
    """Immutable sequence of relations sharing (k, n), with an index array.

    ``pairs[r, j]`` are the two coordinate positions of term j of relation r,
    so evaluating every relation at x is ``x[pairs[..., 0]] + x[pairs[..., 1]]``.
    """

    def __new__(cls, relations: Iterable[ThreeTermRelation], k: int, n: int):
        self = super().__new__(cls, relations)
        for rel in self:
            if (rel.k, rel.n) != (k, n):
                raise ValueError("relations of mixed (k,n)")
        self.k = k
        self.n = n
        if len(self):
            self.pairs = np.array([rel.terms for rel in self], dtype=np.intp)
        else:
            self.pairs = np.zeros((0, 3, 2), dtype=np.intp)
        return self

    def __getitem__(self, item):
        got = super().__getitem__(item)
        if isinstance(item, slice):
            return Relations(got, self.k, self.n)
        return got

    def __repr__(self) -> str:
        return f"Relations(k={self.k}, n={self.n}, count={len(self)})"


def as_relations(relations: Sequence[ThreeTermRelation], k: int | None = None, n: int | None = None) -> Relations:
    if isinstance(relations, Relations):
        return relations
    relations = list(relations)
    if relations:
        k, n = relations[0].k, relations[0].n
    if k is None:
        raise ValueError("cannot infer (k,n) from an empty relation list")
    return Relations(relations, k, n)


def relation_count(k: int, n: int) -> int:
    return comb(n, k - 2) * comb(n - k + 2, 4)


@lru_cache(maxsize=None)
def generate_three_term(k: int, n: int) -> Relations:
    """All three-term relations, ordered lex on L and then lex on the quad."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got k={k}, n={n}")
    out = []
    for L in combinations(range(1, n + 1), k - 2):
        rest = [x for x in range(1, n + 1) if x not in L]
        for quad in combinations(rest, 4):
            out.append(ThreeTermRelation.build(k, n, L, quad))
    return Relations(out, k, n)


def relations_containing(subset: Sequence[int], relations: Sequence[ThreeTermRelation]) -> list[ThreeTermRelation]:
    """Relations in which ``subset`` occurs as a member of some term."""
    if not relations:
        return []
    n = relations[0].n
    idx = lex_rank(tuple(subset), n)
    return [rel for rel in relations if any(idx in pair for pair in rel.terms)]


def format_relations(relations: Iterable[ThreeTermRelation]) -> str:
    return "\n".join(str(rel) for rel in relations)
