"""Slow, independent re-implementations used to check the library.

Nothing here imports the library's numerics: subsets are plain tuples,
vectors are dicts keyed by sorted tuples, and linear algebra is done with
Fractions.
"""
from fractions import Fraction
from itertools import combinations


def subsets(k, n):
    return list(combinations(range(1, n + 1), k))


def as_dict(coords, k, n):
    return dict(zip(subsets(k, n), coords))


def three_term_relations(k, n):
    """(L, (a,b,c,d)) for every (k-2)-set L and 4-set of the remaining labels."""
    out = []
    for L in combinations(range(1, n + 1), k - 2):
        rest = [i for i in range(1, n + 1) if i not in L]
        for quad in combinations(rest, 4):
            out.append((L, quad))
    return out


def _s(L, *extra):
    return tuple(sorted(L + extra))


def terms(L, quad):
    a, b, c, d = quad
    return [
        (_s(L, a, b), _s(L, c, d)),
        (_s(L, a, c), _s(L, b, d)),
        (_s(L, a, d), _s(L, b, c)),
    ]


def in_dressian(x, k, n):
    """Minimum of the three pair sums attained at least twice in every relation."""
    for L, quad in three_term_relations(k, n):
        vals = [x[p] + x[q] for p, q in terms(L, quad)]
        m = min(vals)
        if vals.count(m) < 2:
            return False
    return True


def lone_index(chi, L, quad):
    """Position of the signed monomial whose sign differs from the other two."""
    signs = []
    for j, (p, q) in enumerate(terms(L, quad)):
        s = chi[p] * chi[q] * (-1 if j == 1 else 1)
        signs.append(s)
    for j in range(3):
        others = [signs[i] for i in range(3) if i != j]
        if others[0] == others[1] and signs[j] != others[0]:
            return j
    return None


def is_chirotope(chi, k, n):
    return all(lone_index(chi, L, q) is not None for L, q in three_term_relations(k, n))


def in_chi_dressian(chi, x, k, n):
    for L, quad in three_term_relations(k, n):
        vals = [x[p] + x[q] for p, q in terms(L, quad)]
        j = lone_index(chi, L, quad)
        if vals[j] != min(v for i, v in enumerate(vals) if i != j):
            return False
    return True


def rank(rows):
    """Rank over Q by Gauss-Jordan with Fractions."""
    M = [[Fraction(v) for v in r] for r in rows]
    r = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def lineality_rows(k, n):
    return [[1 if i in s else 0 for s in subsets(k, n)] for i in range(1, n + 1)]


def det(M):
    """Integer determinant by cofactor expansion (small matrices only)."""
    if len(M) == 1:
        return M[0][0]
    total = 0
    for j in range(len(M)):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * det(minor)
    return total


def chirotope_of_points(points, k):
    """Signs of the maximal minors of a k x n integer matrix given by columns; None if degenerate."""
    n = len(points)
    chi = {}
    for s in subsets(k, n):
        d = det([[points[i - 1][r] for i in s] for r in range(k)])
        if d == 0:
            return None
        chi[s] = 1 if d > 0 else -1
    return chi


def relabel(chi, sigma, k, n):
    """chi'(sigma(I)) = sign(sorting) * chi(I), sigma given as a tuple image of 1..n."""
    out = {}
    for s in subsets(k, n):
        img = [sigma[i - 1] for i in s]
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if img[a] > img[b])
        out[tuple(sorted(img))] = chi[s] * (-1) ** inv
    return out


def maximal_compatible_sets(n_vertices, compatible):
    """Maximal sets of pairwise compatible vertices by exhaustive subset search."""
    good = []
    for mask in range(1, 1 << n_vertices):
        members = [i for i in range(n_vertices) if mask >> i & 1]
        if all(compatible(a, b) for a, b in combinations(members, 2)):
            good.append(mask)
    goodset = set(good)
    out = []
    for mask in good:
        if not any((mask | (1 << v)) in goodset for v in range(n_vertices) if not mask >> v & 1):
            out.append([i for i in range(n_vertices) if mask >> i & 1])
    return sorted(out)
