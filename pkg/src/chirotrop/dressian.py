"""Compatibility graphs and clique reconstruction of (chirotropical) Dressians."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chirotope import Chirotope, InvalidChirotopeError, validate
from .cliques import adjacency_bitsets, maximal_cliques_bitsets
from .fan import Fan, face_lattice
from .lineality import quotient_map
from .membership import (
    accepts,
    allowed_lone_mask,
    chirotope_lone_terms,
    satisfy_eqn_many,
)
from .relations import Relations, generate_three_term
from .subsets import PlueckerVector, as_matrix


class IngestionError(ValueError):
    """Ray data that does not describe rays of the Dressian."""


class PurityError(RuntimeError):
    """A maximal clique spans a cone of the wrong dimension."""


@dataclass(frozen=True)
class CompatibilityGraph:
    """Vertices are positions in ``rays``; ``source`` maps them back to the
    caller's ray indices. In chirotope mode ``chirotope`` is set."""

    rays: tuple[PlueckerVector, ...]
    source: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    mode: str
    chirotope: Chirotope | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.rays)

    @property
    def adjacency(self) -> list[int]:
        return adjacency_bitsets(self.vertex_count, self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


def _pair_sums_ok(M: np.ndarray, test, chunk: int = 1 << 16) -> list[tuple[int, int]]:
    """Pairs (i<j) whose row sum passes ``test`` (a batched predicate)."""
    m = M.shape[0]
    iu, ju = np.triu_indices(m, k=1)
    edges = []
    for start in range(0, len(iu), chunk):
        a = iu[start:start + chunk]
        b = ju[start:start + chunk]
        ok = test(M[a] + M[b])
        edges.extend(zip(a[ok].tolist(), b[ok].tolist()))
    return edges


def chi_rays(rays: Sequence[PlueckerVector], chi: Chirotope, relations: Relations | None = None) -> list[int]:
    """Indices (in input order) of the rays lying in Dr^chi."""
    if not rays:
        return []
    rel = relations if relations is not None else generate_three_term(chi.k, chi.n)
    M = as_matrix(rays, chi.k, chi.n)
    lone = chirotope_lone_terms(chi, rel)
    ok = accepts(lone, allowed_lone_mask(M, rel))
    return [int(i) for i in np.flatnonzero(ok)]


def build_graph(
    rays: Sequence[PlueckerVector],
    chirotope: Chirotope | None = None,
    relations: Relations | None = None,
    source: Sequence[int] | None = None,
) -> CompatibilityGraph:
    """Edge between two rays iff their sum passes the mode's membership test.

    Plain mode (``chirotope=None``) tests the Dressian; otherwise the
    chirotropical Dressian of ``chirotope``. Vertices must already pass the
    mode's vertex test.
    """
    rays = tuple(rays)
    source = tuple(range(len(rays))) if source is None else tuple(source)
    if not rays:
        mode = "plain" if chirotope is None else "chi"
        return CompatibilityGraph(rays, source, frozenset(), mode, chirotope)
    k, n = rays[0].k, rays[0].n
    rel = relations if relations is not None else generate_three_term(k, n)
    M = as_matrix(rays, k, n)
    if chirotope is None:
        bad = ~satisfy_eqn_many(M, rel)
        if bad.any():
            raise IngestionError(f"ray {int(np.flatnonzero(bad)[0])} is not in the Dressian")
        edges = _pair_sums_ok(M, lambda S: satisfy_eqn_many(S, rel))
        mode = "plain"
    else:
        if not validate(chirotope, rel):
            raise InvalidChirotopeError("chirotope violates the three-term sign condition")
        lone = chirotope_lone_terms(chirotope, rel)
        if not accepts(lone, allowed_lone_mask(M, rel)).all():
            raise IngestionError("graph vertex outside the chirotropical Dressian")
        edges = _pair_sums_ok(M, lambda S: accepts(lone, allowed_lone_mask(S, rel)))
        mode = "chi"
    return CompatibilityGraph(rays, source, frozenset(edges), mode, chirotope)


def maximal_cliques(graph: CompatibilityGraph) -> list[list[int]]:
    """Maximal cliques of the compatibility graph (local vertex indices)."""
    return maximal_cliques_bitsets(graph.adjacency)


def expected_dimension(k: int, n: int) -> int:
    return (k - 1) * (n - k - 1)


@dataclass
class ChirotropicalDressian:
    """Result of the full pipeline for one chirotope."""

    chirotope: Chirotope
    graph: CompatibilityGraph
    fan: Fan

    @property
    def source_indices(self) -> tuple[int, ...]:
        return self.graph.source

    @property
    def f_vector(self) -> tuple[int, ...]:
        return self.fan.f_vector

    @property
    def pure(self) -> bool:
        return self.fan.is_pure(expected_dimension(self.chirotope.k, self.chirotope.n))


def compute_chirotropical_dressian(
    rays: Sequence[PlueckerVector],
    chi: Chirotope,
    relations: Relations | None = None,
    check_purity: bool = True,
) -> ChirotropicalDressian:
    """chi_rays -> build_graph -> maximal_cliques -> face_lattice.

    ``rays`` are validated rays of Dr(k,n) modulo lineality. With
    ``check_purity`` every facet must have dimension (k-1)(n-k-1);
    otherwise :class:`PurityError` names the offending clique.
    """
    rel = relations if relations is not None else generate_three_term(chi.k, chi.n)
    if not validate(chi, rel):
        raise InvalidChirotopeError(f"invalid chirotope {chi.to_string()}")
    idx = chi_rays(rays, chi, rel)
    sub = [rays[i] for i in idx]
    graph = build_graph(sub, chi, rel, source=idx)
    cliques = maximal_cliques(graph)
    fan = face_lattice(cliques, sub)
    if check_purity:
        want = expected_dimension(chi.k, chi.n)
        for facet, dim in zip(fan.facets, fan.facet_dims):
            if dim != want:
                raise PurityError(
                    f"maximal clique {[idx[i] for i in facet]} spans a cone of dimension {dim}, expected {want}"
                )
    return ChirotropicalDressian(chi, graph, fan)


def compute_dressian_facets(rays: Sequence[PlueckerVector], relations: Relations | None = None) -> list[list[int]]:
    """Maximal cliques of the plain compatibility graph (maximal cones of Dr(k,n))."""
    if not rays:
        return []
    return maximal_cliques(build_graph(rays, None, relations))


def validate_rays(rays: Sequence[PlueckerVector], relations: Relations | None = None) -> None:
    """Raise :class:`IngestionError` unless every ray lies in Dr(k,n), is
    nonzero modulo lineality, and no two rays agree modulo lineality."""
    from .membership import first_violation

    if not rays:
        return
    k, n = rays[0].k, rays[0].n
    rel = relations if relations is not None else generate_three_term(k, n)
    M = as_matrix(rays, k, n)
    ok = satisfy_eqn_many(M, rel)
    for i in np.flatnonzero(~ok):
        raise IngestionError(f"ray {int(i)} violates relation {first_violation(M[i], rel)}")
    q = quotient_map(k, n)
    seen: dict[tuple[int, ...], int] = {}
    for i, r in enumerate(rays):
        key = q.reduce_primitive(r.coords)
        if not any(key):
            raise IngestionError(f"ray {i} lies in the lineality space")
        if key in seen:
            raise IngestionError(f"ray {i} duplicates ray {seen[key]} modulo lineality")
        seen[key] = i
