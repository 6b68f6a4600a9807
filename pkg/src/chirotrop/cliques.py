"""Maximal clique enumeration (Bron-Kerbosch with pivoting) on bitset graphs."""
from __future__ import annotations

from typing import Iterable, Sequence


def adjacency_bitsets(n_vertices: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n_vertices
    for i, j in edges:
        if i == j:
            continue
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def maximal_cliques_bitsets(adj: Sequence[int]) -> list[list[int]]:
    """All maximal cliques of the graph with neighbourhood bitsets ``adj``.

    The pivot is the vertex of P | X with the most neighbours in P (ties go
    to the smallest index), and candidates are expanded in increasing index
    order, so the traversal is deterministic. Iterative, so deep recursion is
    never an issue. Each clique is sorted and the list is sorted
    lexicographically.
    """
    n = len(adj)
    out: list[list[int]] = []
    if n == 0:
        return out
    stack = [(0, (1 << n) - 1, 0)]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                out.append(sorted(_bits(R)))
            continue
        best = -1
        pivot = 0
        for u in _bits(P | X):
            c = (P & adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        branch = P & ~adj[pivot]
        frames = []
        for v in _bits(branch):
            bit = 1 << v
            frames.append((R | bit, P & adj[v], X & adj[v]))
            P &= ~bit
            X |= bit
        stack.extend(reversed(frames))
    out.sort()
    return out


def maximal_cliques(graph) -> list[list[int]]:
    """Maximal cliques of a :class:`~chirotrop.dressian.CompatibilityGraph`,
    or of any object with ``vertex_count`` and ``edges``."""
    adj = getattr(graph, "adjacency", None)
    if adj is None:
        adj = adjacency_bitsets(graph.vertex_count, graph.edges)
    return maximal_cliques_bitsets(adj)
