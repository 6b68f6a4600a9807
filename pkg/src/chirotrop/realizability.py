"""Realizability checks: Fano cones, coverings by chirotropical fans, and a
rank-4 chirotope whose chirotropical Dressian is too large to be realizable."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .chirotope import Chirotope, ChirotopeSet, expand_orbit, lone_terms, read_chirotope_file, validate, violated_relations
from .dressian import expected_dimension
from .io import data_path
from .lineality import rank_mod_lineality
from .membership import allowed_lone_mask, accepts, chi_violation, satisfy_eqn, satisfy_eqn_chi, satisfy_eqn_many
from .relations import Relations, generate_three_term
from .reports import Report
from .subsets import PlueckerVector, as_matrix, subset_label

FANO_NONBASES = ((1, 6, 7), (2, 4, 6), (3, 5, 6), (2, 3, 7), (4, 5, 7), (1, 2, 5), (1, 3, 4))

TETRAHEDRA_48 = (
    (1, 2, 3, 4), (1, 2, 3, 7), (1, 2, 5, 6), (1, 2, 6, 8), (1, 2, 7, 8),
    (1, 3, 5, 8), (1, 3, 6, 8), (1, 4, 5, 8), (1, 4, 6, 7), (1, 5, 6, 7),
    (2, 3, 4, 8), (2, 3, 5, 8), (2, 3, 6, 7), (2, 4, 5, 7), (2, 4, 6, 7),
    (3, 4, 5, 6), (3, 4, 5, 7), (3, 4, 7, 8), (4, 5, 6, 8), (5, 6, 7, 8),
)

CLIQUE_48 = (
    (1, 2, 3, 4), (1, 2, 5, 6), (1, 2, 7, 8), (1, 3, 6, 8), (1, 4, 5, 8), (1, 4, 6, 7),
    (2, 3, 5, 8), (2, 3, 6, 7), (2, 4, 5, 7), (3, 4, 5, 6), (3, 4, 7, 8), (5, 6, 7, 8),
)


@dataclass(frozen=True)
class FanoConeSpec:
    """Seven 3-subsets (a relabeled set of Fano nonbases) spanning a cone."""

    nonbases: tuple[tuple[int, int, int], ...]

    def interior_point(self, n: int = 7) -> PlueckerVector:
        return PlueckerVector.from_subsets(3, n, self.nonbases)

    def facet_points(self, n: int = 7) -> list[PlueckerVector]:
        """Sums of six of the seven generators, one per facet."""
        return [
            PlueckerVector.from_subsets(3, n, [s for s in self.nonbases if s != drop])
            for drop in self.nonbases
        ]

    def label(self) -> str:
        return " ".join(subset_label(s) for s in self.nonbases)


def _apply(sigma: Sequence[int], subsets: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(sigma[i - 1] for i in s)) for s in subsets))


def fano_orbit(n: int = 7, base: Sequence[Sequence[int]] = FANO_NONBASES) -> list[FanoConeSpec]:
    """Distinct images of the Fano nonbasis set under S_n, sorted."""
    seen = set()
    for sigma in itertools.permutations(range(1, n + 1)):
        seen.add(_apply(sigma, base))
    return [FanoConeSpec(s) for s in sorted(seen)]


class LoneTermIndex:
    """Answer "which members of a chirotope set accept these vectors?" fast.

    A member accepts x iff at every relation its lone term is allowed by
    x's tie pattern. Members are stored as Python-int bitsets per
    (relation, allowed-term mask), so one query is at most m big-int ANDs.
    """

    def __init__(self, members: ChirotopeSet | Sequence[Chirotope], relations: Relations):
        self.members = list(members)
        self.relations = relations
        signs = np.array([c.signs for c in self.members], dtype=np.int8).reshape(len(self.members), -1)
        self.lone = lone_terms(signs, relations) if len(self.members) else np.zeros((0, len(relations)), np.int8)
        self.everyone = (1 << len(self.members)) - 1
        self.by_mask: list[list[int]] = []
        for r in range(len(relations)):
            col = self.lone[:, r]
            single = [self._bitset(col == j) for j in range(3)]
            self.by_mask.append([
                (single[0] if m & 1 else 0) | (single[1] if m & 2 else 0) | (single[2] if m & 4 else 0)
                for m in range(8)
            ])

    @staticmethod
    def _bitset(flags: np.ndarray) -> int:
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")

    def accepting(self, vectors) -> int:
        """Bitset of members accepting every given vector."""
        masks = allowed_lone_mask(vectors, self.relations)
        combined = np.bitwise_and.reduce(masks, axis=0)
        s = self.everyone
        for r, m in enumerate(combined.tolist()):
            if m != 7:
                s &= self.by_mask[r][m]
                if not s:
                    break
        return s

    def first_accepting(self, vectors) -> Chirotope | None:
        s = self.accepting(vectors)
        if not s:
            return None
        return self.members[(s & -s).bit_length() - 1]


def fano_incompatibility_check(
    n: int,
    classes: Sequence[Chirotope],
    orbit: ChirotopeSet | None = None,
) -> Report:
    """No point inside a (relabeled) Fano cone lies in any Dr^chi.

    For n = 7: all 30 cone interiors pass the plain Dressian test but fail
    the chirotropical test for every class, while each of the 210 facet
    points is accepted by some member of the expanded orbit ``orbit``
    (computed from ``classes`` if not given). For n = 8: every S_8 image of
    the Fano interior point, embedded on the labels 1..7, fails every class.
    """
    rep = Report(f"fano n={n}")
    classes = list(classes)
    if n not in (7, 8):
        raise ValueError("Fano check is defined for n = 7 or 8")
    if not classes:
        raise ValueError("no chirotope classes given")
    if any((c.k, c.n) != (3, n) for c in classes):
        raise ValueError(f"classes must be rank 3 on {n} elements")
    rel = generate_three_term(3, n)
    specs = fano_orbit(7) if n == 7 else fano_orbit(8)
    points = as_matrix([s.interior_point(n) for s in specs], 3, n)
    rep.details["cones"] = len(specs)
    rep.details["classes"] = len(classes)

    in_dr = satisfy_eqn_many(points, rel)
    for s, ok in zip(specs, in_dr):
        if not ok:
            rep.fail(f"Fano point {s.label()} is not in Dr(3,{n})")
    masks = allowed_lone_mask(points, rel)
    hits = 0
    for ci, chi in enumerate(classes):
        lone = lone_terms(chi.array(), rel)
        ok = accepts(lone, masks)
        for s in np.flatnonzero(ok):
            hits += 1
            rep.fail(f"Fano point {specs[s].label()} is compatible with class {ci + 1}")
    rep.details["interior_compatibilities"] = hits

    if n == 7:
        xi = orbit if orbit is not None else expand_orbit(classes)
        index = LoneTermIndex(xi, rel)
        rep_index = LoneTermIndex(classes, rel)
        facet_total = 0
        uncovered = 0
        rep_covered = 0
        for s in specs:
            for p in s.facet_points(7):
                facet_total += 1
                if not index.accepting(p.array()):
                    uncovered += 1
                    rep.fail(f"facet point of {s.label()} missing {_missing(s, p)} fits no chirotope")
                if rep_index.accepting(p.array()):
                    rep_covered += 1
        rep.details["orbit_size"] = len(xi)
        rep.details["facet_points"] = facet_total
        rep.details["facets_compatible_with_orbit"] = facet_total - uncovered
        rep.details["facets_compatible_with_representatives"] = rep_covered
    rep.summary = (
        f"{len(specs)} Fano points, {hits} compatible with some class"
        + ("" if n == 8 else f"; {rep.details['facets_compatible_with_orbit']}/{rep.details['facet_points']} facets covered")
    )
    return rep


def _missing(spec: FanoConeSpec, p: PlueckerVector) -> str:
    present = set(p.support())
    return ",".join(subset_label(s) for s in spec.nonbases if s not in present)


def covering_check(rays: Sequence[PlueckerVector], orbit: Sequence[Chirotope]) -> Report:
    """Every compatible pair of rays lies in a common chirotropical fan.

    For each pair (i, j) with r_i + r_j in Dr(k,n), look for a member chi of
    ``orbit`` with r_i, r_j and r_i + r_j all in Dr^chi.
    """
    rep = Report("covering")
    rays = list(rays)
    rep.details["rays"] = len(rays)
    rep.details["chirotopes"] = len(orbit)
    if len(rays) < 2:
        rep.details["compatible_pairs"] = 0
        rep.summary = "no pairs; vacuously covered"
        return rep
    k, n = rays[0].k, rays[0].n
    rel = generate_three_term(k, n)
    M = as_matrix(rays, k, n)
    index = LoneTermIndex(orbit, rel)
    ray_masks = allowed_lone_mask(M, rel)
    ray_sets = [index.accepting(M[i]) for i in range(len(rays))]
    iu, ju = np.triu_indices(len(rays), k=1)
    pairs = 0
    uncovered = []
    for start in range(0, len(iu), 1 << 15):
        a = iu[start:start + (1 << 15)]
        b = ju[start:start + (1 << 15)]
        S = M[a] + M[b]
        ok = satisfy_eqn_many(S, rel)
        smasks = allowed_lone_mask(S[ok], rel) & ray_masks[a[ok]] & ray_masks[b[ok]]
        for (i, j), mrow in zip(zip(a[ok].tolist(), b[ok].tolist()), smasks):
            pairs += 1
            s = ray_sets[i] & ray_sets[j]
            if s:
                for r, m in enumerate(mrow.tolist()):
                    if m != 7:
                        s &= index.by_mask[r][m]
                        if not s:
                            break
            if not s:
                uncovered.append((i, j))
    rep.details["compatible_pairs"] = pairs
    rep.details["uncovered_pairs"] = len(uncovered)
    for i, j in uncovered:
        rep.fail(f"rays {i} and {j} are compatible but share no chirotropical fan")
    rep.summary = f"{pairs - len(uncovered)}/{pairs} compatible ray pairs covered by {len(orbit)} chirotopes"
    return rep


def counterexample_chirotope() -> Chirotope:
    return read_chirotope_file(data_path("chirotope_4_8.txt"), 4)[0]


def verify_48_counterexample(chi: Chirotope | None = None) -> Report:
    """Validity, 20 tetrahedra rays, a 12-clique, and its dimension vs dim Trop X(4,8)."""
    chi = chi if chi is not None else counterexample_chirotope()
    rep = Report("counterexample (4,8)")
    rel = generate_three_term(4, 8)
    valid = validate(chi, rel)
    rep.details["chirotope_valid"] = valid
    if not valid:
        for r in violated_relations(chi, rel)[:5]:
            rep.fail(f"chirotope violates {r}")
        rep.summary = "transcribed chirotope is not valid"
        return rep
    passed = 0
    for J in TETRAHEDRA_48:
        e = PlueckerVector.unit(4, 8, J)
        if satisfy_eqn_chi(chi, e, rel):
            passed += 1
        else:
            rep.fail(f"e_{subset_label(J)} not in Dr^chi(4,8): {chi_violation(chi, e, rel)}")
    rep.details["tetrahedra_in_dr_chi"] = f"{passed}/{len(TETRAHEDRA_48)}"
    vecs = [PlueckerVector.unit(4, 8, J) for J in CLIQUE_48]
    compatible = 0
    total = 0
    for a, b in itertools.combinations(range(len(vecs)), 2):
        total += 1
        s = vecs[a] + vecs[b]
        if satisfy_eqn_chi(chi, s, rel):
            compatible += 1
        else:
            rep.fail(
                f"e_{subset_label(CLIQUE_48[a])} + e_{subset_label(CLIQUE_48[b])} fails {chi_violation(chi, s, rel)}"
            )
    rep.details["clique_pairs_compatible"] = f"{compatible}/{total}"
    whole = PlueckerVector.from_subsets(4, 8, CLIQUE_48)
    rep.details["clique_sum_in_dr_chi"] = satisfy_eqn_chi(chi, whole, rel)
    dim = rank_mod_lineality(vecs)
    bound = expected_dimension(4, 8)
    rep.details["dimension_mod_lineality"] = dim
    rep.details["dim_trop_X"] = bound
    if dim <= bound:
        rep.fail(f"cone dimension {dim} does not exceed {bound}")
    if dim < len(vecs):
        rep.fail(f"the {len(vecs)} vectors are dependent modulo lineality (rank {dim})")
    if rep.ok:
        rep.summary = f"dim {dim} > {bound}: non-realizable cone confirmed"
    else:
        rep.summary = "counterexample not confirmed"
    return rep
