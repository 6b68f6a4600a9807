"""Tropical and chirotropical membership tests for three-term relations.

Every predicate exists in a scalar form (one vector) and a batched form
(rows of a 2-D array). Only sums and comparisons of exact integers occur.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .chirotope import Chirotope, InvalidChirotopeError, lone_terms
from .relations import Relations, ThreeTermRelation, as_relations
from .subsets import PlueckerVector, exact_array


def _as_rows(x, relations: Relations) -> np.ndarray:
    if isinstance(x, PlueckerVector):
        if (x.k, x.n) != (relations.k, relations.n):
            raise ValueError(f"vector is ({x.k},{x.n}), relations are ({relations.k},{relations.n})")
        arr = x.array()
    else:
        arr = exact_array(x)
    arr = np.atleast_2d(arr)
    expected = comb(relations.n, relations.k)
    if arr.ndim != 2 or arr.shape[1] != expected:
        raise ValueError(f"expected vectors of length {expected}, got shape {arr.shape}")
    return arr


def term_values(X: np.ndarray, relations: Relations) -> np.ndarray:
    """(N, m, 3) array of the three pair sums of every relation."""
    p = relations.pairs
    return X[:, p[:, :, 0]] + X[:, p[:, :, 1]]


def satisfy_eqn_many(X, relations) -> np.ndarray:
    """Row-wise :func:`satisfy_eqn`."""
    rel = as_relations(relations)
    arr = _as_rows(X, rel)
    if not len(rel):
        return np.ones(arr.shape[0], dtype=bool)
    T = term_values(arr, rel)
    mn = T.min(axis=2, keepdims=True)
    return ((T == mn).sum(axis=2) >= 2).all(axis=1)


def satisfy_eqn(x, relations) -> bool:
    """Minimum of the three term values attained at least twice, for every relation."""
    return bool(satisfy_eqn_many(x, relations)[0])


def first_violation(x, relations) -> ThreeTermRelation | None:
    """The first relation whose minimum is attained exactly once, if any."""
    rel = as_relations(relations)
    arr = _as_rows(x, rel)[:1]
    if not len(rel):
        return None
    T = term_values(arr, rel)[0]
    mn = T.min(axis=1, keepdims=True)
    bad = np.flatnonzero((T == mn).sum(axis=1) < 2)
    return rel[int(bad[0])] if len(bad) else None


def allowed_lone_mask(X, relations) -> np.ndarray:
    """Per relation, the 3-bit mask of terms j with ``T_j == min(other two)``.

    A chirotope whose lone term at relation r is j accepts x at r iff bit j
    of the mask is set, which decouples vectors from chirotopes.
    """
    rel = as_relations(relations)
    arr = _as_rows(X, rel)
    T = term_values(arr, rel)
    m0 = T[..., 0] == np.minimum(T[..., 1], T[..., 2])
    m1 = T[..., 1] == np.minimum(T[..., 0], T[..., 2])
    m2 = T[..., 2] == np.minimum(T[..., 0], T[..., 1])
    return (m0.astype(np.uint8) | (m1.astype(np.uint8) << 1) | (m2.astype(np.uint8) << 2))


def chirotope_lone_terms(chi: Chirotope, relations) -> np.ndarray:
    rel = as_relations(relations, chi.k, chi.n)
    if (rel.k, rel.n) != (chi.k, chi.n):
        raise ValueError(f"relations are ({rel.k},{rel.n}), chirotope is ({chi.k},{chi.n})")
    return lone_terms(chi.array(), rel)


def accepts(lone: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """Does a lone-term vector fit every row of ``masks``? Broadcasts."""
    return ((masks >> lone.astype(np.uint8)) & 1).astype(bool).all(axis=-1)


def satisfy_eqn_chi_many(chi: Chirotope, X, relations, lone: np.ndarray | None = None) -> np.ndarray:
    """Row-wise :func:`satisfy_eqn_chi`; ``lone`` may be passed in precomputed."""
    rel = as_relations(relations, chi.k, chi.n)
    if lone is None:
        lone = chirotope_lone_terms(chi, rel)
    if not len(rel):
        return np.ones(_as_rows(X, rel).shape[0], dtype=bool)
    return accepts(lone, allowed_lone_mask(X, rel))


def satisfy_eqn_chi(chi: Chirotope, x, relations) -> bool:
    """Chirotropical membership: the lone term equals the minimum of the other two.

    Under a valid chirotope the three signed monomials of each relation split
    2-1; the term alone on its side must tie the smaller of the other two.
    An invalid chirotope raises :class:`InvalidChirotopeError` before any
    evaluation.
    """
    return bool(satisfy_eqn_chi_many(chi, x, relations)[0])


def chi_violation(chi: Chirotope, x, relations) -> ThreeTermRelation | None:
    rel = as_relations(relations, chi.k, chi.n)
    lone = chirotope_lone_terms(chi, rel)
    masks = allowed_lone_mask(x, rel)[0]
    bad = np.flatnonzero(((masks >> lone.astype(np.uint8)) & 1) == 0)
    return rel[int(bad[0])] if len(bad) else None


__all__ = [
    "InvalidChirotopeError",
    "accepts",
    "allowed_lone_mask",
    "chi_violation",
    "chirotope_lone_terms",
    "first_violation",
    "satisfy_eqn",
    "satisfy_eqn_chi",
    "satisfy_eqn_chi_many",
    "satisfy_eqn_many",
    "term_values",
]
