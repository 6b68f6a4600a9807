"""Face lattices of fans given by their maximal cones as sets of rays."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lineality import bareiss_rank, quotient_map
from .subsets import PlueckerVector


class FanCorruptionError(RuntimeError):
    """A face has fewer rays than its dimension; the input cannot be a fan."""


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask(face: Sequence[int]) -> int:
    m = 0
    for i in face:
        m |= 1 << i
    return m


@dataclass
class Fan:
    """Faces of a fan, each face a sorted tuple of indices into ``rays``.

    ``faces_by_dim[d]`` holds the faces of dimension d (modulo lineality),
    d >= 1; the apex is not recorded. ``f_vector[d-1]`` counts them.
    """

    k: int
    n: int
    rays: list[PlueckerVector]
    faces_by_dim: dict[int, list[tuple[int, ...]]]
    facets: list[tuple[int, ...]]
    two_determined: bool
    facet_dims: list[int] = field(default_factory=list)

    @property
    def f_vector(self) -> tuple[int, ...]:
        if not self.faces_by_dim:
            return ()
        top = max(self.faces_by_dim)
        return tuple(len(self.faces_by_dim.get(d, ())) for d in range(1, top + 1))

    @property
    def dimension(self) -> int:
        return max(self.faces_by_dim, default=0)

    def is_pure(self, dim: int | None = None) -> bool:
        if not self.facet_dims:
            return True
        target = self.dimension if dim is None else dim
        return all(d == target for d in self.facet_dims)

    def all_faces(self) -> list[tuple[int, ...]]:
        return [f for d in sorted(self.faces_by_dim) for f in self.faces_by_dim[d]]


class _Ranker:
    """Exact dimension of ray subsets modulo lineality, with two shortcuts:
    a face inside a facet whose rays are independent has dimension equal to
    its ray count, and results are memoised."""

    def __init__(self, rays: Sequence[PlueckerVector]):
        if rays:
            q = quotient_map(rays[0].k, rays[0].n)
            self.reduced = [q.reduce(r.coords) for r in rays]
        else:
            self.reduced = []
        self.cache: dict[int, int] = {}

    def rank(self, mask: int) -> int:
        r = self.cache.get(mask)
        if r is None:
            r = bareiss_rank([self.reduced[i] for i in _bits(mask)])
            self.cache[mask] = r
        return r


def face_lattice(facets: Sequence[Sequence[int]], rays: Sequence[PlueckerVector]) -> Fan:
    """Close ``facets`` under intersection and bucket the faces by dimension.

    Faces are generated semi-naively: round 1 intersects pairs of facets,
    later rounds intersect the faces new in the previous round with every
    facet, until nothing new appears. ``two_determined`` records whether
    the rounds after the first contributed nothing.
    """
    rays = list(rays)
    k = rays[0].k if rays else 0
    n = rays[0].n if rays else 0
    fmasks = sorted({_mask(f) for f in facets if f})
    ranker = _Ranker(rays)

    # origin[face] = a facet containing it; used for the independence shortcut
    origin: dict[int, int] = {m: m for m in fmasks}
    level1: set[int] = set()
    for a in range(len(fmasks)):
        fa = fmasks[a]
        for b in range(a + 1, len(fmasks)):
            c = fa & fmasks[b]
            if c and c not in origin:
                origin[c] = fa
                level1.add(c)
    frontier = set(level1)
    deeper = False
    while frontier:
        new = set()
        for face in frontier:
            for fm in fmasks:
                c = face & fm
                if c and c != face and c not in origin:
                    origin[c] = fm
                    new.add(c)
        if new:
            deeper = True
        frontier = new

    independent = {fm: ranker.rank(fm) == fm.bit_count() for fm in fmasks}
    faces_by_dim: dict[int, list[tuple[int, ...]]] = {}
    for face, src in origin.items():
        size = face.bit_count()
        dim = size if independent[src] else ranker.rank(face)
        if size < dim:
            raise FanCorruptionError(f"face {sorted(_bits(face))} has {size} rays but dimension {dim}")
        if dim == 0:
            # all rays zero modulo lineality; never happens for validated rays
            continue
        faces_by_dim.setdefault(dim, []).append(tuple(_bits(face)))
    for d in faces_by_dim:
        faces_by_dim[d].sort()
    facet_tuples = sorted(tuple(_bits(m)) for m in fmasks)
    facet_dims = [len(t) if independent[_mask(t)] else ranker.rank(_mask(t)) for t in facet_tuples]
    return Fan(
        k=k,
        n=n,
        rays=rays,
        faces_by_dim=dict(sorted(faces_by_dim.items())),
        facets=facet_tuples,
        two_determined=not deeper,
        facet_dims=facet_dims,
    )


def check_two_determined(fan: Fan) -> bool:
    """Every non-maximal face is the intersection of some pair of facets.

    Recomputed from ``fan.facets`` rather than trusting
    ``fan.two_determined``.
    """
    fmasks = [_mask(f) for f in fan.facets]
    fset = set(fmasks)
    pairwise = set()
    for a in range(len(fmasks)):
        for b in range(a + 1, len(fmasks)):
            c = fmasks[a] & fmasks[b]
            if c:
                pairwise.add(c)
    for face in fan.all_faces():
        m = _mask(face)
        if m not in fset and m not in pairwise:
            return False
    return True
