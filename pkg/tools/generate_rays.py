"""Regenerate the bundled ray files of Dr(3,6) and Dr(3,7).

Not part of the library: the pipeline takes rays as input. This script
finds them by exhaustive search and is kept so the data files can be
rebuilt and audited.

The search is restricted to 0/1 vectors, which for n <= 7 already yields
every ray (65 and 616 of them). It enumerates all 0/1 points of the Dressian by backtracking over the
coordinates (a relation is checked as soon as its last coordinate is set).
For each point, the cone of the Pluecker fan containing it in its relative
interior is cut out by the equalities among the minimising terms of every
relation; the point spans a ray exactly when that cone has dimension
n + 1, i.e. one more than the lineality space. Ranks are exact.

The output is checked downstream: the f-vectors of all 4 + 11
chirotropical fans must come out as published.

    python tools/generate_rays.py 7 -o src/chirotrop/data/rays_3_7.txt
"""
import argparse
import sys
from math import comb

from chirotrop.io import write_rays
from chirotrop.lineality import bareiss_rank, quotient_map
from chirotrop.relations import generate_three_term
from chirotrop.subsets import PlueckerVector


def zero_one_points(k, n):
    rel = generate_three_term(k, n)
    C = comb(n, k)
    by_level = [[] for _ in range(C)]
    for r in rel:
        by_level[max(max(p) for p in r.terms)].append(r.terms)
    x = [0] * C
    out = []

    def ok(terms):
        (a, b), (c, d), (e, f) = terms
        t1, t2, t3 = x[a] + x[b], x[c] + x[d], x[e] + x[f]
        m = min(t1, t2, t3)
        return (t1 == m) + (t2 == m) + (t3 == m) >= 2

    def rec(i):
        if i == C:
            out.append(tuple(x))
            return
        for v in (0, 1):
            x[i] = v
            if all(ok(t) for t in by_level[i]):
                rec(i + 1)
        x[i] = 0

    rec(0)
    return out


def cone_dimension(x, rel, C):
    rows = set()
    for r in rel:
        vals = [x[p] + x[q] for p, q in r.terms]
        m = min(vals)
        tied = [j for j in range(3) if vals[j] == m]
        for j in tied[1:]:
            row = [0] * C
            for p in r.terms[tied[0]]:
                row[p] += 1
            for p in r.terms[j]:
                row[p] -= 1
            rows.add(tuple(row))
    return C - bareiss_rank(sorted(rows))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int)
    parser.add_argument("-k", type=int, default=3)
    parser.add_argument("-o", "--output", default=None)
    args = parser.parse_args(argv)
    k, n = args.k, args.n
    C = comb(n, k)
    rel = generate_three_term(k, n)
    q = quotient_map(k, n)
    points = zero_one_points(k, n)
    print(f"{len(points)} 0/1 points in Dr({k},{n})", file=sys.stderr)
    rays = []
    seen = set()
    for x in points:
        if cone_dimension(x, rel, C) != n + 1:
            continue
        key = q.reduce_primitive(x)
        if key not in seen:
            seen.add(key)
            rays.append(PlueckerVector(k, n, x))
    print(f"{len(rays)} rays modulo lineality", file=sys.stderr)
    out = args.output or f"rays_{k}_{n}.txt"
    write_rays(out, rays)


if __name__ == "__main__":
    main()
