"""Lexicographic indexing of k-subsets and exact Pluecker vectors.

Ground-set labels are 1-based (``1..n``) everywhere a subset is visible;
positions inside coordinate vectors are 0-based ranks in lex order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

# Coordinates above this magnitude are kept as Python ints so that the
# pair sums and term sums evaluated downstream can never wrap in int64.
INT64_SAFE = 2**40


def _check_subset(elements: Sequence[int], n: int) -> tuple[int, ...]:
    s = tuple(int(e) for e in elements)
    if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
        raise ValueError(f"subset {s} is not strictly increasing")
    if s and (s[0] < 1 or s[-1] > n):
        raise ValueError(f"subset {s} is not contained in [1..{n}]")
    return s


def lex_rank(elements: Sequence[int], n: int) -> int:
    """0-based position of a k-subset of ``[n]`` in lexicographic order.

    >>> lex_rank((1, 2, 5), 6)
    2
    """
    s = _check_subset(elements, n)
    k = len(s)
    rank = 0
    prev = 0
    for i, e in enumerate(s):
        # subsets agreeing on s[:i] whose i-th element is smaller than e
        for smaller in range(prev + 1, e):
            rank += comb(n - smaller, k - i - 1)
        prev = e
    return rank


def lex_unrank(rank: int, k: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`lex_rank`."""
    total = comb(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range for C({n},{k}) = {total}")
    out = []
    e = 0
    for i in range(k):
        e += 1
        while True:
            block = comb(n - e, k - i - 1)
            if rank < block:
                break
            rank -= block
            e += 1
        out.append(e)
    return tuple(out)


@lru_cache(maxsize=None)
def all_subsets(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of ``[n]`` in lex order (position == rank)."""
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def subset_index(k: int, n: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(all_subsets(k, n))}


def subset_label(s: Iterable[int]) -> str:
    """``(1, 2, 3) -> '123'``; labels above 9 are comma separated."""
    s = tuple(s)
    if all(e < 10 for e in s):
        return "".join(str(e) for e in s)
    return ",".join(str(e) for e in s)


def parse_subset(text: str, k: int) -> tuple[int, ...]:
    """Parse ``'356'`` or ``'3,5,6'`` or ``'{3,5,6}'`` into a sorted tuple."""
    t = text.strip().strip("{}()").strip()
    if "," in t or " " in t:
        parts = [p for p in t.replace(",", " ").split() if p]
        s = tuple(int(p) for p in parts)
    else:
        s = tuple(int(c) for c in t)
    if len(s) != k:
        raise ValueError(f"{text!r} is not a {k}-subset")
    return s


def exact_array(values) -> np.ndarray:
    """Integer array that cannot silently overflow.

    Small entries use int64; anything large falls back to ``object`` dtype
    holding Python ints. Floats are rejected.
    """
    arr = np.asarray(values)
    if arr.dtype.kind == "f" or arr.dtype.kind == "c":
        raise TypeError("exact integer coordinates required, got floating point")
    if arr.dtype == object:
        flat = [int(v) for v in arr.ravel()]
        if all(type(v) is int or isinstance(v, (int, np.integer)) for v in arr.ravel()):
            big = max((abs(v) for v in flat), default=0)
            if big < INT64_SAFE:
                return np.array(flat, dtype=np.int64).reshape(arr.shape)
            out = np.empty(arr.shape, dtype=object)
            out.ravel()[:] = flat
            return out
        raise TypeError("exact integer coordinates required")
    if arr.dtype.kind not in "iub":
        raise TypeError(f"unsupported dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if arr.size and np.abs(arr).max() >= INT64_SAFE:
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = [int(v) for v in arr.ravel()]
        return out
    return arr


@dataclass(frozen=True)
class PlueckerVector:
    """Integer vector indexed by the lex-ordered k-subsets of ``[n]``."""

    k: int
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != comb(self.n, self.k):
            raise ValueError(
                f"expected {comb(self.n, self.k)} coordinates for (k,n)=({self.k},{self.n}), "
                f"got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, k: int, n: int) -> "PlueckerVector":
        return cls(k, n, (0,) * comb(n, k))

    @classmethod
    def unit(cls, k: int, n: int, subset: Sequence[int]) -> "PlueckerVector":
        """Standard basis vector ``e_I``."""
        c = [0] * comb(n, k)
        c[lex_rank(subset, n)] = 1
        return cls(k, n, tuple(c))

    @classmethod
    def from_subsets(cls, k: int, n: int, subsets: Iterable[Sequence[int]]) -> "PlueckerVector":
        """Sum of the basis vectors of the given subsets."""
        c = [0] * comb(n, k)
        for s in subsets:
            c[lex_rank(s, n)] += 1
        return cls(k, n, tuple(c))

    def _same_shape(self, other: "PlueckerVector") -> None:
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError(f"shape mismatch: ({self.k},{self.n}) vs ({other.k},{other.n})")

    def __add__(self, other: "PlueckerVector") -> "PlueckerVector":
        self._same_shape(other)
        return PlueckerVector(self.k, self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PlueckerVector") -> "PlueckerVector":
        self._same_shape(other)
        return PlueckerVector(self.k, self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "PlueckerVector":
        return PlueckerVector(self.k, self.n, tuple(-a for a in self.coords))

    def __mul__(self, c: int) -> "PlueckerVector":
        if not isinstance(c, (int, np.integer)):
            return NotImplemented
        return PlueckerVector(self.k, self.n, tuple(int(c) * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, subset: Sequence[int]) -> int:
        return self.coords[lex_rank(subset, self.n)]

    def __len__(self) -> int:
        return len(self.coords)

    def array(self) -> np.ndarray:
        return exact_array(self.coords)

    def support(self) -> list[tuple[int, ...]]:
        subs = all_subsets(self.k, self.n)
        return [subs[i] for i, c in enumerate(self.coords) if c]

    def __repr__(self) -> str:
        nz = ", ".join(f"{subset_label(s)}:{self[s]}" for s in self.support()[:8])
        more = "..." if len(self.support()) > 8 else ""
        return f"PlueckerVector(k={self.k}, n={self.n}, {{{nz}{more}}})"


def as_matrix(vectors, k: int | None = None, n: int | None = None) -> np.ndarray:
    """Stack vectors (PlueckerVectors or integer sequences) into an exact 2-D array."""
    rows = []
    for v in vectors:
        if isinstance(v, PlueckerVector):
            if k is not None and (v.k, v.n) != (k, n):
                raise ValueError(f"mixed (k,n): expected ({k},{n}), got ({v.k},{v.n})")
            rows.append(v.coords)
        else:
            rows.append(tuple(int(c) for c in v))
    if not rows:
        width = comb(n, k) if k is not None else 0
        return np.zeros((0, width), dtype=np.int64)
    if len({len(r) for r in rows}) != 1:
        raise ValueError("vectors of different lengths")
    if k is not None and len(rows[0]) != comb(n, k):
        raise ValueError(f"expected length {comb(n, k)}, got {len(rows[0])}")
    return exact_array(np.array(rows, dtype=object))
