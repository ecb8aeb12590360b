"""Height functions and regularity certificates.

A triangulation is induced by heights ``h`` exactly when, on every support,
its matching is the unique minimum of ``omega(M) = sum(h[e] for e in M)``
over all perfect matchings of that support.

Symbolic heights stand for ``c**e`` with ``c`` arbitrarily large and are
compared as exponent multisets, largest first, so no value of ``c`` is ever
chosen.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .core import Triangulation, Vertex
from .ensembles import (MatchingEnsemble, all_supports, ensemble_from_triangulation,
                        perfect_matchings, support_of, support_order,
                        triangulation_from_ensemble)
from .errors import DomainError
from .lp import feasible_point

SYMBOLIC = "symbolic"
RATIONAL = "rational"


@dataclass(frozen=True)
class HeightFunction:
    m: int
    n: int
    kind: str
    values: dict  # Vertex -> int exponent (symbolic) or Fraction (rational)

    def __post_init__(self):
        if self.kind not in (SYMBOLIC, RATIONAL):
            raise DomainError(f"unknown height kind {self.kind!r}")
        values = {}
        for (i, j), x in self.values.items():
            if not (1 <= i <= self.m and 1 <= j <= self.n):
                raise DomainError(f"height for ({i},{j}) outside [1..{self.m}]x[1..{self.n}]")
            if self.kind == SYMBOLIC:
                if int(x) != x or x < 0:
                    raise DomainError("symbolic exponents must be nonnegative integers")
                x = int(x)
            else:
                x = Fraction(x)
            values[Vertex(i, j)] = x
        object.__setattr__(self, "values", values)

    def __getitem__(self, v):
        return self.values[Vertex(*v)]

    def __hash__(self):
        return hash((self.m, self.n, self.kind, frozenset(self.values.items())))

    def substitute(self, c) -> "HeightFunction":
        """Rational heights ``c**e``; only meaningful for symbolic heights."""
        if self.kind != SYMBOLIC:
            raise DomainError("only symbolic heights can be evaluated at c")
        c = Fraction(c)
        return HeightFunction(self.m, self.n, RATIONAL, {v: c ** e for v, e in self.values.items()})


def dyck_heights(n: int) -> HeightFunction:
    """Exponent ``(j - i) mod n`` with representatives ``0..n-1``.

    The diagonal gets exponent 0; this agrees with :func:`extended_dyck_heights`
    on the first ``n`` rows.
    """
    if n < 1:
        raise DomainError("n must be positive")
    return HeightFunction(n, n, SYMBOLIC, {
        (i, j): (j - i) % n for i in range(1, n + 1) for j in range(1, n + 1)})


def extended_dyck_heights(n: int) -> HeightFunction:
    if n < 1:
        raise DomainError("n must be positive")
    values = {}
    for i in range(1, n + 2):
        for j in range(1, n + 1):
            if i == n + 1:
                values[i, j] = 0
            elif j >= i:
                values[i, j] = j - i
            else:
                values[i, j] = n + j - i
    return HeightFunction(n + 1, n, SYMBOLIC, values)


def weight(matching, h: HeightFunction):
    """``omega(M)``: a Fraction, or a descending exponent tuple when symbolic."""
    if h.kind == SYMBOLIC:
        return tuple(sorted((h.values[v] for v in matching), reverse=True))
    return sum((h.values[v] for v in matching), Fraction(0))


def matching_weight_less(M1, M2, h: HeightFunction) -> int:
    """Compare ``omega(M1)`` with ``omega(M2)``: -1, 0 or 1.

    For symbolic heights the answer is the one that holds for every large
    enough ``c``; 0 means the exponent multisets coincide.
    """
    if support_of(M1) != support_of(M2):
        raise DomainError("matchings live on different supports")
    w1, w2 = weight(M1, h), weight(M2, h)
    return (w1 > w2) - (w1 < w2)


@dataclass
class HeightCheck:
    ok: bool
    support: Optional[tuple] = None
    matching: Optional[frozenset] = None
    competitor: Optional[frozenset] = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "heights induce the triangulation"
        rows, cols = self.support
        return (f"on I={list(rows)} J={list(cols)} the matching "
                f"{sorted(map(tuple, self.matching))} is not strictly lighter than "
                f"{sorted(map(tuple, self.competitor))}")


def verify_heights(T: Triangulation, h: HeightFunction) -> HeightCheck:
    """Whether ``h`` induces ``T``: every ensemble matching is the strict minimum."""
    E = ensemble_from_triangulation(T)
    for key in sorted(E.table, key=support_order):
        M = E.table[key]
        for other in perfect_matchings(key):
            if other != M and matching_weight_less(M, other, h) >= 0:
                return HeightCheck(False, key, M, other)
    return HeightCheck(True)


def find_heights(T: Triangulation) -> Optional[HeightFunction]:
    """Search rational heights inducing ``T`` with an exact LP.

    Constraints ``omega(M) + 1 <= omega(M')`` for every ensemble matching ``M``
    and competitor ``M'`` on its support; margin 1 is no loss since the
    strict system is invariant under positive scaling, and heights may be
    taken nonnegative since adding a constant to all of them changes nothing.

    Only competitors with ``M | M'`` a single cycle through the whole
    support are listed: any other competitor differs from ``M`` by disjoint
    cycles, each of which is already a constraint on a smaller support
    because the ensemble is closed under sub-matchings.

    Returns ``None`` when ``T`` is not regular.
    """
    E = ensemble_from_triangulation(T)
    vertices = [Vertex(i, j) for i in T.rows for j in T.cols]
    index = {v: k for k, v in enumerate(vertices)}
    constraints = []
    for key in sorted(E.table, key=support_order):
        if len(key[0]) < 2:
            continue
        M = E.table[key]
        for other in cyclic_exchanges(M):
            coeffs = {}
            for v in other - M:
                coeffs[index[v]] = coeffs.get(index[v], 0) + 1
            for v in M - other:
                coeffs[index[v]] = coeffs.get(index[v], 0) - 1
            slack = len(vertices) + len(constraints)
            coeffs[slack] = -1
            constraints.append((coeffs, 1))
    x = feasible_point(constraints, len(vertices) + len(constraints))
    if x is None:
        return None
    h = HeightFunction(T.m, T.n, RATIONAL, {v: x[index[v]] for v in vertices})
    check = verify_heights(T, h)
    if not check:  # pragma: no cover - LP soundness guard
        raise RuntimeError("LP heights fail verification: " + check.describe())
    return h


def cyclic_exchanges(matching):
    """Matchings ``M'`` on the same support with ``M | M'`` one Hamiltonian cycle."""
    edges = sorted(matching)
    rows = [i for i, _ in edges]
    cols = [j for _, j in edges]
    s = len(edges)
    # a cyclic permutation sigma of positions: row k takes the column of sigma(k)
    for perm in permutations(range(1, s)):
        order = (0,) + perm
        sigma = [0] * s
        for a in range(s):
            sigma[order[a]] = order[(a + 1) % s]
        yield frozenset(Vertex(rows[k], cols[sigma[k]]) for k in range(s))


def minimum_matching_ensemble(h: HeightFunction) -> Optional[MatchingEnsemble]:
    """Per support the lightest perfect matching, or ``None`` if any tie occurs."""
    table = {}
    for key in all_supports(h.m, h.n):
        best = None
        tie = False
        for M in perfect_matchings(key):
            w = weight(M, h)
            if best is None or w < best[0]:
                best, tie = (w, M), False
            elif w == best[0]:
                tie = True
        if tie:
            return None
        table[key] = best[1]
    return MatchingEnsemble(h.m, h.n, table)


def random_heights(m: int, n: int, rng: random.Random, bound: int = 10 ** 6) -> HeightFunction:
    return HeightFunction(m, n, RATIONAL, {
        (i, j): rng.randint(0, bound) for i in range(1, m + 1) for j in range(1, n + 1)})


def random_regular_triangulation(m: int, n: int, seed=None, bound: int = 10 ** 6):
    """A regular triangulation from random integer heights.

    Heights are redrawn until every support has a unique lightest matching;
    returns ``(triangulation, heights)``.
    """
    rng = random.Random(seed)
    while True:
        h = random_heights(m, n, rng, bound)
        E = minimum_matching_ensemble(h)
        if E is not None:
            return triangulation_from_ensemble(E), h
