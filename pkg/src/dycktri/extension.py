"""Partial triangulations on a skeleton and their extension.

A triangulation of ``Delta^{(k-1)}_{m-1} x Delta_{n-1}`` is stored by its
top faces: one triangulation of ``Delta_I x Delta_{n-1}`` per ``|I| = k``.
Lower faces follow by restriction, which compatibility makes well defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .constructors import dyck_flip, extended_dyck
from .core import Simplex, Triangulation, Vertex, restrict_to_face
from .ensembles import (MatchingEnsemble, check_axioms, ensemble_from_triangulation,
                        matchings_in, support_of, triangulation_from_ensemble)
from .errors import DomainError, IncompatibleSkeletonError, NotATriangulationError


@dataclass(frozen=True)
class SkeletonTriangulation:
    m: int
    n: int
    k: int
    faces: dict  # sorted row tuple -> Triangulation of Delta_I x Delta_{n-1}

    def __post_init__(self):
        if not 1 <= self.k <= self.m:
            raise DomainError(f"k={self.k} outside [1..{self.m}]")
        faces = {}
        for rows, T in self.faces.items():
            rows = tuple(sorted(rows))
            if len(rows) != self.k:
                raise DomainError(f"face {rows} does not have {self.k} rows")
            if (T.m, T.n) != (self.m, self.n) or tuple(T.rows) != rows or tuple(T.cols) != tuple(range(1, self.n + 1)):
                raise DomainError(f"face {rows} carries a triangulation of the wrong support")
            faces[rows] = T
        object.__setattr__(self, "faces", faces)

    def __hash__(self):
        return hash((self.m, self.n, self.k, frozenset(self.faces.items())))

    def replace_face(self, rows, T: Triangulation) -> "SkeletonTriangulation":
        faces = dict(self.faces)
        faces[tuple(sorted(rows))] = T
        return SkeletonTriangulation(self.m, self.n, self.k, faces)

    def matchings(self):
        for T in self.faces.values():
            for s in T.simplices:
                yield from matchings_in(s.edges)


def restrict_to_skeleton(T: Triangulation, k: int) -> SkeletonTriangulation:
    """Faces ``Delta_I x Delta_{n-1}`` of ``T`` for every ``|I| = k``."""
    if not T.n <= k <= T.m:
        raise DomainError(f"need n <= k <= m, got n={T.n}, k={k}, m={T.m}")
    if tuple(T.rows) != tuple(range(1, T.m + 1)) or tuple(T.cols) != tuple(range(1, T.n + 1)):
        raise DomainError("restrict_to_skeleton needs a triangulation of the whole product")
    cols = range(1, T.n + 1)
    return SkeletonTriangulation(T.m, T.n, k, {
        rows: restrict_to_face(T, rows, cols) for rows in combinations(range(1, T.m + 1), k)})


@dataclass
class CompatibilityReport:
    ok: bool
    first: Optional[tuple] = None
    second: Optional[tuple] = None
    shared: Optional[tuple] = None
    simplex_first: Optional[Simplex] = None
    simplex_second: Optional[Simplex] = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "compatible"
        lines = [f"faces {list(self.first)} and {list(self.second)} disagree on rows {list(self.shared)}"]
        if self.simplex_first is not None:
            lines.append(f"  only in first:  {[tuple(v) for v in self.simplex_first]}")
        if self.simplex_second is not None:
            lines.append(f"  only in second: {[tuple(v) for v in self.simplex_second]}")
        return "\n".join(lines)


def check_skeleton_compatibility(S: SkeletonTriangulation) -> CompatibilityReport:
    """Whether every two faces restrict to the same triangulation on their overlap."""
    cols = range(1, S.n + 1)
    keys = sorted(S.faces)
    for a, b in combinations(keys, 2):
        shared = tuple(sorted(set(a) & set(b)))
        if not shared:
            continue
        ra = restrict_to_face(S.faces[a], shared, cols)
        rb = restrict_to_face(S.faces[b], shared, cols)
        if ra.simplices != rb.simplices:
            only_a = sorted(ra.simplices - rb.simplices)
            only_b = sorted(rb.simplices - ra.simplices)
            return CompatibilityReport(False, a, b, shared,
                                       only_a[0] if only_a else None,
                                       only_b[0] if only_b else None)
    return CompatibilityReport(True)


SA_CONFLICT = "SA-conflict"
CA_FAILURE = "CA-failure"
LA_FAILURE = "LA-failure"


@dataclass
class NonExtendabilityWitness:
    """Why the matchings of a partial triangulation are not an ensemble.

    For an LA failure ``conflicting`` is the collected matching on the support
    obtained from ``matching`` by trading the largest element on the side of
    ``vertex`` for ``vertex``; for an SA conflict it is the second matching
    found on the support of ``matching`` (``None`` if that support is empty).
    """

    kind: str
    matching: Optional[frozenset] = None
    vertex: Optional[tuple] = None
    conflicting: Optional[frozenset] = None
    support: Optional[tuple] = None

    def __bool__(self):
        return False

    def describe(self) -> str:
        def fmt(M):
            return "{" + ", ".join(f"({i},{j})" for i, j in sorted(M)) + "}" if M else "-"
        parts = [f"non-extendable: {self.kind}"]
        if self.matching is not None:
            parts.append(f"  matching: {fmt(self.matching)}")
        if self.vertex is not None:
            side, k = self.vertex
            parts.append(f"  missing element: {side} {k}")
        if self.conflicting is not None:
            parts.append(f"  collected matching on the exchanged support: {fmt(self.conflicting)}")
        if self.support is not None:
            parts.append(f"  support: I={list(self.support[0])} J={list(self.support[1])}")
        return "\n".join(parts)


def exchanged_support(matching, vertex) -> tuple:
    rows, cols = support_of(matching)
    side, k = vertex
    if side == "row":
        rows = tuple(sorted(rows[:-1] + (k,)))
    else:
        cols = tuple(sorted(cols[:-1] + (k,)))
    return rows, cols


def collect_ensemble(S: SkeletonTriangulation) -> MatchingEnsemble:
    """All perfect matchings inside simplices of ``S``; raises on SA conflicts."""
    return MatchingEnsemble.from_matchings(S.m, S.n, S.matchings())


def extend_skeleton(S: SkeletonTriangulation) -> Union[Triangulation, NonExtendabilityWitness]:
    """The unique triangulation restricting to ``S``, or why none exists.

    Collects every perfect matching inside the simplices of ``S``; if the
    collection is a matching ensemble its triangulation is returned,
    otherwise the first axiom failure becomes the witness.
    """
    if S.k < S.n:
        raise DomainError(f"extension needs k >= n, got k={S.k}, n={S.n}")
    compat = check_skeleton_compatibility(S)
    if not compat:
        raise IncompatibleSkeletonError("skeleton faces are incompatible:\n" + compat.describe(), compat)
    try:
        E = collect_ensemble(S)
    except NotATriangulationError as err:
        first, second = err.witnesses
        return NonExtendabilityWitness(SA_CONFLICT, first, None, second, support_of(first))
    report = check_axioms(E)
    if report.sa_missing:
        return NonExtendabilityWitness(SA_CONFLICT, support=report.sa_missing[0])
    if report.ca_missing:
        matching, sub = report.ca_missing[0]
        return NonExtendabilityWitness(CA_FAILURE, matching, None, E.get(support_of(sub)), support_of(sub))
    if report.la_failures:
        matching, v = report.la_failures[0]
        target = exchanged_support(matching, v)
        return NonExtendabilityWitness(LA_FAILURE, matching, v, E.get(target), target)
    T = triangulation_from_ensemble(E, check=False)
    if restrict_to_skeleton(T, S.k) != S:  # pragma: no cover - uniqueness guard
        raise RuntimeError("extension does not restrict back to the skeleton")
    return T


def flipped_extended_boundary(n: int) -> SkeletonTriangulation:
    """Boundary of ``extended_dyck(n)`` with the facet ``[1..n]`` flipped."""
    if n < 2:
        raise DomainError("flipped_extended_boundary needs n >= 2")
    S = restrict_to_skeleton(extended_dyck(n), n)
    flipped = dyck_flip(n)
    face = Triangulation(n + 1, n, frozenset(Simplex(n + 1, n, s.edges) for s in flipped.simplices),
                         range(1, n + 1), range(1, n + 1))
    return S.replace_face(range(1, n + 1), face)


def square_face(i: int, j: int, diagonal: bool) -> Triangulation:
    """Triangulation of ``Delta_{i,j} x Delta_1`` inside ``Delta_2 x Delta_1``.

    ``diagonal`` picks the matching ``{(i,1), (j,2)}``; otherwise
    ``{(i,2), (j,1)}``.  The two trees are that matching plus one more edge.
    """
    M = {Vertex(i, 1), Vertex(j, 2)} if diagonal else {Vertex(i, 2), Vertex(j, 1)}
    others = {Vertex(a, b) for a in (i, j) for b in (1, 2)} - M
    return Triangulation(3, 2, frozenset(Simplex(3, 2, M | {e}) for e in others), (i, j), (1, 2))


def mother_of_all_examples() -> SkeletonTriangulation:
    """Cyclic choice of diagonals on the three squares of the prism.

    Row 1 is matched before row 2, 2 before 3 and 3 before 1, so the three
    full-support matchings form a directed cycle.
    """
    return SkeletonTriangulation(3, 2, 2, {
        (1, 2): square_face(1, 2, True),
        (2, 3): square_face(2, 3, True),
        (1, 3): square_face(1, 3, False),
    })
