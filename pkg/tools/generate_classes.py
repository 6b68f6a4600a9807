"""Generate the uniform rank-3 chirotope classes on n+1 elements from those on n.

Every uniform chirotope on [n+1] restricts, after deleting n+1, to a uniform
chirotope on [n], so up to relabeling and reorientation each class is a
single-element extension of a class representative on [n]. The script
enumerates all extensions of every representative by backtracking over the
new signs chi_{i,j,n+1} (a three-term relation is checked as soon as its
last unknown sign is set) and keeps one canonical member per class.

    python tools/generate_classes.py 7 -o src/chirotrop/data/classes_3_8.txt

From the 11 classes on 7 elements this yields 135 classes on 8.
"""
import argparse
import itertools
import sys
from math import comb

import numpy as np

from chirotrop.chirotope import (
    Chirotope,
    read_chirotope_file,
    relabel_action,
    reorientation_canonical,
    unpack_signs,
    validate,
    write_chirotope_file,
)
from chirotrop.io import bundled_classes, data_path
from chirotrop.relations import TERM_SIGNS, generate_three_term
from chirotrop.subsets import all_subsets, subset_index


def extensions(chi, rel, k, n1):
    """All sign vectors on [n1] that restrict to ``chi`` on [n1 - 1] and are valid."""
    subsets = all_subsets(k, n1)
    idx = subset_index(k, n1)
    old = subset_index(k, n1 - 1)
    signs = [0] * len(subsets)
    unknown = []
    for s in subsets:
        if n1 in s:
            unknown.append(idx[s])
        else:
            signs[idx[s]] = chi.signs[old[s]]
    level = {u: i for i, u in enumerate(unknown)}
    by_level = [[] for _ in unknown]
    for r in rel:
        pos = [p for t in r.terms for p in t]
        lv = [level[p] for p in pos if p in level]
        if lv:
            by_level[max(lv)].append(r.terms)
    out = []

    def ok(terms):
        vals = [TERM_SIGNS[j] * signs[a] * signs[b] for j, (a, b) in enumerate(terms)]
        return max(vals) > 0 and min(vals) < 0

    def rec(i):
        if i == len(unknown):
            out.append(tuple(signs))
            return
        for v in (1, -1):
            signs[unknown[i]] = v
            if all(ok(t) for t in by_level[i]):
                rec(i + 1)
        signs[unknown[i]] = 0

    rec(0)
    return out


def canonical_forms(rows, k, n):
    """Lex-min packed representative of each row under relabeling and reorientation."""
    rows = np.asarray(rows, dtype=np.int8)
    best = None
    for sigma in itertools.permutations(range(1, n + 1)):
        src, sgn = relabel_action(sigma, k, n)
        packed = reorientation_canonical(sgn * rows[:, src], k, n)
        if best is None:
            best = packed
            continue
        diff = packed != best
        has = diff.any(axis=1)
        first = diff.argmax(axis=1)
        r = np.arange(len(rows))
        smaller = has & (packed[r, first] < best[r, first])
        best[smaller] = packed[smaller]
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int, help="size of the ground set of the input classes")
    parser.add_argument("-k", type=int, default=3)
    parser.add_argument("-i", "--input", default=None, help="class file on n elements (default: bundled)")
    parser.add_argument("-o", "--output", default=None)
    args = parser.parse_args(argv)
    k, n = args.k, args.n
    classes = read_chirotope_file(args.input, k) if args.input else bundled_classes(k, n)
    rel = generate_three_term(k, n + 1)
    cands = []
    for chi in classes:
        ext = extensions(chi, rel, k, n + 1)
        print(f"{chi.negative_notation()}: {len(ext)} extensions", file=sys.stderr)
        cands.extend(ext)
    canon = canonical_forms(cands, k, n + 1)
    uniq = np.unique(canon, axis=0)
    print(f"{len(cands)} extensions, {len(uniq)} classes", file=sys.stderr)
    C = comb(n + 1, k)
    out = [Chirotope(k, n + 1, tuple(int(v) for v in r)) for r in unpack_signs(uniq, C)]
    assert all(validate(c) for c in out)
    path = args.output or str(data_path(f"classes_{k}_{n + 1}.txt"))
    write_chirotope_file(path, out, header=f"{len(out)} classes of uniform rank {k} chirotopes on {n + 1} elements")


if __name__ == "__main__":
    main()
