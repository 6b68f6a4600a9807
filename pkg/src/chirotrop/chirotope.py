"""Uniform chirotopes: validity, relabeling, reorientation, orbits and catalogs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .relations import TERM_SIGNS, Relations, as_relations, generate_three_term
from .subsets import all_subsets, parse_subset, subset_index, subset_label


class InvalidChirotopeError(ValueError):
    pass


@dataclass(frozen=True)
class Chirotope:
    """Sign vector over the lex-ordered k-subsets of ``[n]``, entries +1/-1."""

    k: int
    n: int
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if len(signs) != comb(self.n, self.k):
            raise ValueError(
                f"chirotope for (k,n)=({self.k},{self.n}) needs {comb(self.n, self.k)} signs, got {len(signs)}"
            )
        if any(s not in (1, -1) for s in signs):
            raise ValueError("chirotope entries must be +1 or -1 (uniform)")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def positive(cls, k: int, n: int) -> "Chirotope":
        return cls(k, n, (1,) * comb(n, k))

    @classmethod
    def from_string(cls, text: str, k: int, n: int | None = None) -> "Chirotope":
        """Parse ``'++-+...'`` (optionally wrapped in parentheses)."""
        t = "".join(text.split()).strip("()")
        if any(c not in "+-" for c in t):
            raise ValueError(f"not a sign string: {text!r}")
        if n is None:
            n = infer_n(len(t), k)
        return cls(k, n, tuple(1 if c == "+" else -1 for c in t))

    def to_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    @classmethod
    def from_negatives(cls, subsets: Iterable[Sequence[int]], k: int, n: int) -> "Chirotope":
        return parse_negative_triple_notation(subsets, k, n)

    def negatives(self) -> list[tuple[int, ...]]:
        subs = all_subsets(self.k, self.n)
        return [subs[i] for i, s in enumerate(self.signs) if s < 0]

    def negative_notation(self) -> str:
        """``'+'`` for the positive chirotope, else ``'(356,456)'`` style."""
        neg = self.negatives()
        if not neg:
            return "+"
        return "(" + ",".join(subset_label(s) for s in neg) + ")"

    def __getitem__(self, subset: Sequence[int]) -> int:
        return self.signs[subset_index(self.k, self.n)[tuple(subset)]]

    def array(self) -> np.ndarray:
        return np.array(self.signs, dtype=np.int8)

    def __str__(self) -> str:
        return self.to_string()


def infer_n(length: int, k: int) -> int:
    for n in range(k, 64):
        if comb(n, k) == length:
            return n
        if comb(n, k) > length:
            break
    raise ValueError(f"no n with C(n,{k}) = {length}")


def parse_negative_triple_notation(subsets: Iterable[Sequence[int]] | str, k: int, n: int) -> Chirotope:
    """All-plus chirotope with -1 exactly at the listed subsets.

    Accepts a list of subsets or text such as ``"356,456,457,467"``;
    ``"+"`` or an empty list gives the positive chirotope.
    """
    if isinstance(subsets, str):
        text = subsets.strip().strip("()").strip()
        subsets = [] if text in ("", "+") else [parse_subset(p, k) for p in text.split(",")]
    index = subset_index(k, n)
    signs = [1] * comb(n, k)
    seen = set()
    for s in subsets:
        s = tuple(int(e) for e in s)
        if tuple(sorted(set(s))) != s or len(s) != k:
            raise ValueError(f"invalid {k}-subset {s}")
        if s not in index:
            raise ValueError(f"subset {s} not contained in [1..{n}]")
        if s in seen:
            raise ValueError(f"duplicate subset {s}")
        seen.add(s)
        signs[index[s]] = -1
    return Chirotope(k, n, tuple(signs))


def _relations_for(chi: Chirotope, relations) -> Relations:
    if relations is None:
        return generate_three_term(chi.k, chi.n)
    rel = as_relations(relations, chi.k, chi.n)
    if (rel.k, rel.n) != (chi.k, chi.n):
        raise ValueError(f"relations are for ({rel.k},{rel.n}), chirotope is ({chi.k},{chi.n})")
    return rel


def signed_monomials(signs: np.ndarray, relations: Relations) -> np.ndarray:
    """Signs of the three monomials of every relation at every sign vector.

    ``signs`` has shape (N, C) or (C,); result has shape (N, m, 3) or (m, 3).
    """
    s = np.asarray(signs, dtype=np.int8)
    p = relations.pairs
    return s[..., p[:, :, 0]] * s[..., p[:, :, 1]] * np.array(TERM_SIGNS, dtype=np.int8)


def validate(chi: Chirotope, relations=None) -> bool:
    """Grassmann-Pluecker sign condition on every three-term relation."""
    rel = _relations_for(chi, relations)
    if not len(rel):
        return True
    mono = signed_monomials(chi.array(), rel)
    return bool(((mono > 0).any(axis=1) & (mono < 0).any(axis=1)).all())


def violated_relations(chi: Chirotope, relations=None) -> list:
    rel = _relations_for(chi, relations)
    if not len(rel):
        return []
    mono = signed_monomials(chi.array(), rel)
    bad = ~((mono > 0).any(axis=1) & (mono < 0).any(axis=1))
    return [rel[i] for i in np.flatnonzero(bad)]


def lone_terms(signs: np.ndarray, relations: Relations) -> np.ndarray:
    """Index (0, 1 or 2) of the term whose monomial sign is in the minority.

    Works on a single sign vector or a stack of them. Raises if any relation
    has all three monomials of one sign.
    """
    mono = signed_monomials(signs, relations).astype(np.int16)
    total = mono.sum(axis=-1)
    if np.any(np.abs(total) == 3):
        raise InvalidChirotopeError("sign vector violates a three-term Grassmann-Pluecker relation")
    return np.argmax(mono * total[..., None] < 0, axis=-1).astype(np.int8)


# --- group actions ---------------------------------------------------------------

def _perm_parity(seq: Sequence[int]) -> int:
    s = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def _check_perm(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def relabel_action(sigma: Sequence[int], k: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Index map and sign correction of the relabeling by ``sigma``.

    ``sigma[i-1]`` is the image of label i. The relabeled chirotope is
    ``chi'[I] = sgn(sigma|_I) * chi[sorted sigma(I)]`` where ``sgn`` is the
    parity of sorting ``(sigma(i_1), ..., sigma(i_k))``; the parity factor is
    what keeps the Grassmann-Pluecker condition invariant.
    """
    sigma = _check_perm(sigma, n)
    index = subset_index(k, n)
    src = np.empty(comb(n, k), dtype=np.intp)
    sgn = np.empty(comb(n, k), dtype=np.int8)
    for pos, I in enumerate(all_subsets(k, n)):
        image = [sigma[i - 1] for i in I]
        src[pos] = index[tuple(sorted(image))]
        sgn[pos] = _perm_parity(image)
    return src, sgn


def relabel(chi: Chirotope, sigma: Sequence[int]) -> Chirotope:
    src, sgn = relabel_action(sigma, chi.k, chi.n)
    a = chi.array()
    return Chirotope(chi.k, chi.n, tuple(int(v) for v in sgn * a[src]))


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def _incidence(k: int, n: int) -> np.ndarray:
    """(n, C) 0/1 matrix: element i lies in subset I."""
    inc = np.zeros((n, comb(n, k)), dtype=np.int64)
    for pos, I in enumerate(all_subsets(k, n)):
        for i in I:
            inc[i - 1, pos] = 1
    return inc


def reorientation_factors(t: np.ndarray, k: int, n: int) -> np.ndarray:
    """``prod_{i in I} t_i`` for every subset I, for one or many t."""
    t = np.asarray(t)
    neg = (t < 0).astype(np.int64)
    parity = (neg @ _incidence(k, n)) % 2
    return (1 - 2 * parity).astype(np.int8)


def reorient(chi: Chirotope, t: Sequence[int]) -> Chirotope:
    t = np.asarray([int(x) for x in t])
    if t.shape != (chi.n,) or not np.all(np.abs(t) == 1):
        raise ValueError(f"reorientation must be a vector in {{+1,-1}}^{chi.n}")
    f = reorientation_factors(t, chi.k, chi.n)
    return Chirotope(chi.k, chi.n, tuple(int(v) for v in f * chi.array()))


# --- orbits -----------------------------------------------------------------------

def _pack(neg_bits: np.ndarray) -> np.ndarray:
    """Pack rows of 0/1 (1 = minus) into big-endian bytes for lex comparison."""
    packed = np.packbits(neg_bits.astype(np.uint8), axis=-1)
    return packed


def _lex_min_rows(cands: np.ndarray) -> np.ndarray:
    """For a (G, N, B) uint8 array pick, per N, the lex-smallest of G rows."""
    G, N, B = cands.shape
    best = cands[0].copy()
    for g in range(1, G):
        c = cands[g]
        diff = c != best
        first = np.where(diff.any(axis=1), diff.argmax(axis=1), 0)
        rows = np.arange(N)
        smaller = diff.any(axis=1) & (c[rows, first] < best[rows, first])
        best[smaller] = c[smaller]
    return best


def reorientation_canonical(signs: np.ndarray, k: int, n: int) -> np.ndarray:
    """Canonical representative of each row's reorientation class.

    The orbit is normalised so that the subsets ``{1..k-1} + {j}`` are
    positive for j >= k; this fixes t_j given t_1..t_{k-1}, leaving 2^(k-1)
    candidates, of which the lex-smallest sign string (``+`` < ``-``) is
    kept. Returns a uint8 array of packed rows (1 bit = minus sign).
    """
    signs = np.atleast_2d(np.asarray(signs, dtype=np.int8))
    N = signs.shape[0]
    index = subset_index(k, n)
    head = tuple(range(1, k))
    anchor = [index[tuple(sorted(head + (j,)))] for j in range(k, n + 1)]
    cands = []
    for prefix in itertools.product((1, -1), repeat=k - 1):
        t = np.ones((N, n), dtype=np.int8)
        t[:, : k - 1] = prefix
        pre = int(np.prod(prefix)) if prefix else 1
        # choose t_j so that chi'_{head+j} = pre * t_j * chi_{head+j} = +1
        t[:, k - 1:] = pre * signs[:, anchor]
        f = reorientation_factors(t, k, n)
        cands.append(_pack(f * signs < 0))
    return _lex_min_rows(np.stack(cands))


def unpack_signs(packed: np.ndarray, C: int) -> np.ndarray:
    bits = np.unpackbits(np.atleast_2d(packed), axis=-1)[:, :C]
    return (1 - 2 * bits.astype(np.int8)).astype(np.int8)


class ChirotopeSet(tuple):
    """Deduplicated tuple of chirotopes sharing (k, n)."""

    def __new__(cls, members: Iterable[Chirotope] = (), k: int | None = None, n: int | None = None):
        seen = set()
        uniq = []
        for chi in members:
            if k is None:
                k, n = chi.k, chi.n
            if (chi.k, chi.n) != (k, n):
                raise ValueError("chirotopes of mixed (k,n)")
            if chi.signs not in seen:
                seen.add(chi.signs)
                uniq.append(chi)
        self = super().__new__(cls, uniq)
        self.k, self.n = k, n
        return self

    def signs_matrix(self) -> np.ndarray:
        if not len(self):
            return np.zeros((0, comb(self.n, self.k) if self.k else 0), dtype=np.int8)
        return np.array([c.signs for c in self], dtype=np.int8)

    def __repr__(self) -> str:
        return f"ChirotopeSet(k={self.k}, n={self.n}, size={len(self)})"


def _relabel_orbit_packed(signs: np.ndarray, k: int, n: int, permutations=None) -> np.ndarray:
    chunks = []
    perms = permutations if permutations is not None else itertools.permutations(range(1, n + 1))
    for sigma in perms:
        src, sgn = relabel_action(sigma, k, n)
        chunks.append(reorientation_canonical(sgn * signs[:, src], k, n))
    return np.unique(np.concatenate(chunks), axis=0)


def expand_orbit(classes: Iterable[Chirotope], modulo_reorientation: bool = True) -> ChirotopeSet:
    """Closure of ``classes`` under relabeling and reorientation.

    With ``modulo_reorientation`` (the default) each reorientation class is
    represented once, by its canonical member; the membership predicates are
    reorientation invariant, so nothing is lost. Set it to False to get every
    sign vector of the closure (2^n times as many, up to stabilizers;
    23808 for the four rank-3 classes on 6 elements). Output is sorted lex on sign strings.
    """
    classes = list(classes)
    if not classes:
        return ChirotopeSet()
    k, n = classes[0].k, classes[0].n
    C = comb(n, k)
    signs = ChirotopeSet(classes).signs_matrix()
    packed = _relabel_orbit_packed(signs, k, n)
    reps = unpack_signs(packed, C)
    if modulo_reorientation:
        rows = reps
    else:
        ts = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int8)
        f = reorientation_factors(ts, k, n)
        rows = (reps[:, None, :] * f[None, :, :]).reshape(-1, C)
        rows = unpack_signs(np.unique(_pack(rows < 0), axis=0), C)
    # np.unique on packed bytes already sorts lex with '+' (bit 0) first
    return ChirotopeSet((Chirotope(k, n, tuple(int(v) for v in r)) for r in rows), k, n)


def same_orbit(a: Chirotope, b: Chirotope) -> bool:
    """True iff a and b are related by relabeling and reorientation."""
    if (a.k, a.n) != (b.k, b.n):
        return False
    target = reorientation_canonical(b.array(), b.k, b.n)[0]
    signs = a.array()[None, :]
    for sigma in itertools.permutations(range(1, a.n + 1)):
        src, sgn = relabel_action(sigma, a.k, a.n)
        if np.array_equal(reorientation_canonical(sgn * signs[:, src], a.k, a.n)[0], target):
            return True
    return False


# --- catalog files ----------------------------------------------------------------

def read_chirotope_file(path: str | Path, k: int) -> list[Chirotope]:
    """One sign string per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            out.append(Chirotope.from_string(s, k))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    if len({(c.k, c.n) for c in out}) > 1:
        raise ValueError(f"{path}: chirotopes of different lengths")
    return out


def write_chirotope_file(path: str | Path, chirotopes: Iterable[Chirotope], header: str | None = None) -> None:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(c.to_string() for c in chirotopes)
    Path(path).write_text("\n".join(lines) + "\n")
