"""Independent reference computations used to cross-check the library.

Nothing here goes through the alternating-cycle code or the ensemble
axioms unless a test explicitly compares the two routes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from dycktri.core import Simplex, Triangulation, expected_simplex_count
from dycktri.lp import feasible_point


# -- geometry ----------------------------------------------------------------

def improper_by_lp(s1: Simplex, s2: Simplex) -> bool:
    """Whether conv(s1) and conv(s2) meet outside conv(s1 & s2).

    Vertex (i, j) is the point e_i + e_j of R^m x R^n.  Because s1 is
    affinely independent a common point lies in the common face exactly
    when its s1-coordinates vanish off s2, so after scaling the question is
    whether some lam, mu >= 0 with equal coordinate sums has
    sum(lam over s1 - s2) = 1.
    """
    a = sorted(s1.edges)
    b = sorted(s2.edges)
    nvars = len(a) + len(b)
    constraints = []
    for i in range(1, s1.m + 1):
        coeffs = {k: 1 for k, v in enumerate(a) if v[0] == i}
        coeffs.update({len(a) + k: -1 for k, v in enumerate(b) if v[0] == i})
        constraints.append((coeffs, 0))
    for j in range(1, s1.n + 1):
        coeffs = {k: 1 for k, v in enumerate(a) if v[1] == j}
        coeffs.update({len(a) + k: -1 for k, v in enumerate(b) if v[1] == j})
        constraints.append((coeffs, 0))
    outside = {k: 1 for k, v in enumerate(a) if v not in s2.edges}
    if not outside:
        return False
    constraints.append((outside, 1))
    return feasible_point(constraints, nvars) is not None


def _rank_solve(columns, rhs):
    """Solve for a square nonsingular system by Gaussian elimination."""
    size = len(rhs)
    mat = [[Fraction(columns[c][r]) for c in range(size)] + [Fraction(rhs[r])] for r in range(size)]
    for c in range(size):
        pivot = next((r for r in range(c, size) if mat[r][c] != 0), None)
        if pivot is None:
            return None
        mat[c], mat[pivot] = mat[pivot], mat[c]
        for r in range(size):
            if r != c and mat[r][c] != 0:
                f = mat[r][c] / mat[c][c]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
    return [mat[r][size] / mat[r][r] for r in range(size)]


def rank(A) -> int:
    mat = [[Fraction(x) for x in row] for row in A]
    r = 0
    for c in range(len(mat[0]) if mat else 0):
        pivot = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                f = mat[k][c] / mat[r][c]
                mat[k] = [x - f * y for x, y in zip(mat[k], mat[r])]
        r += 1
    return r


def feasible_by_bases(A, b) -> bool:
    """Ax = b, x >= 0 by enumerating basic solutions (full row rank A)."""
    rows, cols = len(A), len(A[0])
    if all(x == 0 for x in b):
        return True
    for basis in combinations(range(cols), rows):
        x = _rank_solve([[A[r][c] for r in range(rows)] for c in basis], b)
        if x is not None and all(v >= 0 for v in x):
            return True
    return False


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def spanning_trees(m: int, n: int) -> tuple:
    """All spanning trees of K_{m,n} by union-find over edge subsets."""
    edges = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    out = []
    for subset in combinations(edges, m + n - 1):
        parent = list(range(m + n + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        acyclic = True
        for i, j in subset:
            a, c = find(i), find(m + j)
            if a == c:
                acyclic = False
                break
            parent[a] = c
        if acyclic:
            out.append(Simplex(m, n, subset))
    return tuple(out)


@lru_cache(maxsize=None)
def all_triangulations_by_geometry(m: int, n: int, improper=improper_by_lp) -> frozenset:
    """Every set of full simplices that pairwise meet properly, of full volume.

    All full simplices of the product are unimodular, so the right count
    plus pairwise proper intersection means a triangulation.
    """
    trees = spanning_trees(m, n)
    target = expected_simplex_count(m, n)
    ok = {(a, b): not improper(trees[a], trees[b]) and not improper(trees[b], trees[a])
          for a, b in combinations(range(len(trees)), 2)}
    found = set()

    def grow(chosen, start):
        if len(chosen) == target:
            found.add(frozenset(trees[k].edges for k in chosen))
            return
        for k in range(start, len(trees)):
            if all(ok[c, k] for c in chosen):
                grow(chosen + [k], k + 1)

    grow([], 0)
    return frozenset(found)


def supports(m: int, n: int):
    for size in range(1, min(m, n) + 1):
        for rows in combinations(range(1, m + 1), size):
            for cols in combinations(range(1, n + 1), size):
                yield rows, cols


def matchings_on(rows, cols):
    for perm in permutations(cols):
        yield frozenset(zip(rows, perm))


def all_tables(m: int, n: int):
    """Every map support -> perfect matching (matching ensembles or not)."""
    keys = list(supports(m, n))
    for choice in product(*(list(matchings_on(*k)) for k in keys)):
        yield dict(zip(keys, choice))


def minimum_matching(h: dict, rows, cols):
    best = sorted((sum(h[v] for v in M), sorted(M)) for M in matchings_on(rows, cols))
    if len(best) > 1 and best[0][0] == best[1][0]:
        return None
    return frozenset(best[0][1])


def as_edge_sets(T: Triangulation) -> frozenset:
    return frozenset(s.edges for s in T.simplices)


def lower_hull_cells(h: dict, m: int, n: int) -> frozenset:
    """Spanning trees on which the lifted point set has a lower facet.

    Affine functions on the product are a_i + b_j.  On a tree they are fixed
    (up to a constant trade between a and b) by the heights of its edges;
    the tree is a lower facet iff every other vertex lies strictly above.
    """
    cells = set()
    for s in spanning_trees(m, n):
        a, b = {1: Fraction(0)}, {}
        pending = sorted(s.edges)
        while pending:
            rest = []
            for i, j in pending:
                if i in a and j not in b:
                    b[j] = Fraction(h[i, j]) - a[i]
                elif j in b and i not in a:
                    a[i] = Fraction(h[i, j]) - b[j]
                elif i not in a:
                    rest.append((i, j))
            pending = rest
        if all(h[i, j] > a[i] + b[j] for i in range(1, m + 1) for j in range(1, n + 1)
               if (i, j) not in s.edges):
            cells.add(s.edges)
    return frozenset(cells)
