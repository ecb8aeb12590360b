"""Vertices, simplices and triangulations of a product of two simplices.

A vertex ``(e_i, e_j)`` of the product is stored as the bipartite edge
``(i, j)`` of ``K_{m,n}``; indices are 1-based on both sides.  The first
index (``row``) ranges over ``[1..m]`` and the second (``col``) over
``[1..n]``.  In the grid picture ``row`` is the horizontal position of a
square and ``col`` the vertical one.

A set of vertices is affinely independent exactly when the corresponding
subgraph is a forest, and a maximal simplex is a spanning tree.  Circuits
are cycles whose edges alternate in sign.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, NamedTuple, Optional

from .errors import DomainError, IndexOutOfRangeError


class Vertex(NamedTuple):
    row: int
    col: int


Edges = frozenset  # frozenset[Vertex]


@dataclass(frozen=True, order=True)
class Simplex:
    """A vertex set of the product, i.e. a subgraph of ``K_{m,n}``."""

    m: int
    n: int
    edges: frozenset = field(compare=False)
    key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        edges = frozenset(Vertex(int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (1 <= i <= self.m and 1 <= j <= self.n):
                raise IndexOutOfRangeError(
                    f"vertex ({i}, {j}) outside [1..{self.m}]x[1..{self.n}]")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "key", tuple(sorted(edges)))

    def __iter__(self):
        return iter(self.key)

    def __len__(self):
        return len(self.key)

    def __contains__(self, v):
        return v in self.edges

    @property
    def rows(self) -> frozenset:
        return frozenset(i for i, _ in self.edges)

    @property
    def cols(self) -> frozenset:
        return frozenset(j for _, j in self.edges)

    def sorted_edges(self) -> list[Vertex]:
        return list(self.key)


@dataclass(frozen=True)
class Circuit:
    """An alternating cycle; ``plus`` and ``minus`` are its two edge classes."""

    plus: frozenset
    minus: frozenset

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(Vertex(*v) for v in self.plus))
        object.__setattr__(self, "minus", frozenset(Vertex(*v) for v in self.minus))

    @property
    def support(self) -> frozenset:
        return self.plus | self.minus

    def opposite(self) -> "Circuit":
        return Circuit(self.minus, self.plus)


@dataclass(frozen=True)
class Triangulation:
    """Maximal simplices of a triangulation of ``Delta_rows x Delta_cols``.

    ``rows``/``cols`` describe the face of the ambient product
    ``Delta_{m-1} x Delta_{n-1}`` that is being triangulated; they default
    to the full index ranges.
    """

    m: int
    n: int
    simplices: frozenset
    rows: tuple = None
    cols: tuple = None

    def __post_init__(self):
        rows = tuple(range(1, self.m + 1)) if self.rows is None else tuple(sorted(set(self.rows)))
        cols = tuple(range(1, self.n + 1)) if self.cols is None else tuple(sorted(set(self.cols)))
        for i in rows:
            if not 1 <= i <= self.m:
                raise IndexOutOfRangeError(f"row {i} outside [1..{self.m}]")
        for j in cols:
            if not 1 <= j <= self.n:
                raise IndexOutOfRangeError(f"col {j} outside [1..{self.n}]")
        simplices = frozenset(
            s if isinstance(s, Simplex) else Simplex(self.m, self.n, s)
            for s in self.simplices)
        for s in simplices:
            if (s.m, s.n) != (self.m, self.n):
                raise DomainError("simplex ambient does not match triangulation")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "simplices", simplices)

    @classmethod
    def from_edge_lists(cls, m, n, simplices, rows=None, cols=None) -> "Triangulation":
        return cls(m, n, frozenset(Simplex(m, n, s) for s in simplices), rows, cols)

    def __len__(self):
        return len(self.simplices)

    def __iter__(self):
        return iter(self.sorted_simplices())

    def sorted_simplices(self) -> list[Simplex]:
        return sorted(self.simplices)

    def edge_sets(self) -> set:
        return {s.edges for s in self.simplices}

    def relabel(self, row_map: dict, col_map: dict, m: int = None, n: int = None) -> "Triangulation":
        """Rename indices through ``row_map``/``col_map`` (missing keys stay put)."""
        m = self.m if m is None else m
        n = self.n if n is None else n
        simplices = frozenset(
            Simplex(m, n, [(row_map.get(i, i), col_map.get(j, j)) for i, j in s.edges])
            for s in self.simplices)
        return Triangulation(m, n, simplices,
                             [row_map.get(i, i) for i in self.rows],
                             [col_map.get(j, j) for j in self.cols])

    def compact(self) -> "Triangulation":
        """Relabel the support to ``[1..|rows|] x [1..|cols|]``, order preserved."""
        row_map = {i: k for k, i in enumerate(self.rows, 1)}
        col_map = {j: k for k, j in enumerate(self.cols, 1)}
        return self.relabel(row_map, col_map, len(self.rows), len(self.cols))


def expected_simplex_count(num_rows: int, num_cols: int) -> int:
    """Normalized volume of ``Delta_{a-1} x Delta_{b-1}``."""
    return comb(num_rows + num_cols - 2, num_cols - 1)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_forest(edges: Iterable) -> bool:
    """True iff the bipartite graph spanned by ``edges`` has no cycle."""
    parent = {}
    for i, j in edges:
        a, b = ("r", i), ("c", j)
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _check_indices(edges, m, n):
    for i, j in edges:
        if not (1 <= i <= m and 1 <= j <= n):
            raise IndexOutOfRangeError(f"vertex ({i}, {j}) outside [1..{m}]x[1..{n}]")


def is_spanning_tree(s: Simplex, rows: Iterable[int] = None, cols: Iterable[int] = None) -> bool:
    """Whether ``s`` is a spanning tree of ``K_{rows, cols}``.

    The support defaults to ``[1..m] x [1..n]``.
    """
    rows = frozenset(range(1, s.m + 1)) if rows is None else frozenset(rows)
    cols = frozenset(range(1, s.n + 1)) if cols is None else frozenset(cols)
    _check_indices([(i, 1) for i in rows] + [(1, j) for j in cols], s.m, s.n)
    edges = s.edges
    if len(edges) != len(rows) + len(cols) - 1:
        return False
    if s.rows != rows or s.cols != cols:
        return False
    return is_forest(edges)


def _has_alternating_cycle(e1: frozenset, e2: frozenset) -> bool:
    # Arcs row->col for e1 and col->row for e2: alternating cycles are the
    # directed cycles of length >= 4.  Contracting the shared edges removes the
    # antiparallel 2-cycles, after which a topological sort decides the rest.
    shared = e1 & e2
    parent = {}

    def node(x):
        if x not in parent:
            parent[x] = x
            return x
        return _find(parent, x)

    for i, j in shared:
        a, b = node(i), node(-j)
        if a != b:
            parent[a] = b
    succ = {}
    indeg = {}
    for i, j in e1 - shared:
        a, b = node(i), node(-j)
        succ.setdefault(a, []).append(b)
        indeg[b] = indeg.get(b, 0) + 1
        indeg.setdefault(a, 0)
    for i, j in e2 - shared:
        a, b = node(-j), node(i)
        succ.setdefault(a, []).append(b)
        indeg[b] = indeg.get(b, 0) + 1
        indeg.setdefault(a, 0)
    stack = [x for x, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in succ.get(x, ()):
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen != len(indeg)


def _alternating_cycle_witness(e1: frozenset, e2: frozenset) -> Optional[Circuit]:
    # Rows are encoded as positive ints, columns as negative ints.
    succ = {}
    for i, j in e1:
        succ.setdefault(i, []).append(-j)
    for i, j in e2:
        succ.setdefault(-j, []).append(i)
    for x in succ:
        succ[x].sort()
    arcs = sorted([(i, -j) for i, j in e1 - e2] + [(-j, i) for i, j in e2 - e1])
    for u, v in arcs:
        prev = {v: None}
        queue = deque([v])
        while queue and u not in prev:
            x = queue.popleft()
            for y in succ.get(x, ()):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if u not in prev:
            continue
        path = [u]
        while path[-1] != v:
            path.append(prev[path[-1]])
        path.reverse()
        path.append(v)  # closes the cycle with the arc u -> v
        plus, minus = set(), set()
        for a, b in zip(path, path[1:]):
            if a > 0:
                plus.add(Vertex(a, -b))
            else:
                minus.add(Vertex(b, -a))
        return Circuit(frozenset(plus), frozenset(minus))
    return None


def alternating_circuit(s1: Simplex, s2: Simplex) -> Optional[Circuit]:
    """Return a circuit with ``plus`` inside ``s1`` and ``minus`` inside ``s2``.

    ``None`` certifies that the two simplices meet in a common face.
    """
    if (s1.m, s1.n) != (s2.m, s2.n):
        raise DomainError("simplices live in different products")
    if not _has_alternating_cycle(s1.edges, s2.edges):
        return None
    return _alternating_cycle_witness(s1.edges, s2.edges)


def intersect_properly(s1: Simplex, s2: Simplex) -> bool:
    return not _has_alternating_cycle(s1.edges, s2.edges)


@dataclass
class VerificationReport:
    rows: tuple
    cols: tuple
    count: int
    expected_count: int
    non_trees: list = field(default_factory=list)
    crossing: Optional[tuple] = None  # (s1, s2, circuit)

    @property
    def trees_ok(self) -> bool:
        return not self.non_trees

    @property
    def count_ok(self) -> bool:
        return self.count == self.expected_count

    @property
    def intersections_ok(self) -> bool:
        return self.crossing is None

    @property
    def ok(self) -> bool:
        return self.trees_ok and self.count_ok and self.intersections_ok

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        lines = [f"support rows={list(self.rows)} cols={list(self.cols)}",
                 f"simplices: {self.count} (expected {self.expected_count})"
                 + ("" if self.count_ok else "  FAIL")]
        for s in self.non_trees:
            lines.append(f"not a spanning tree: {[tuple(v) for v in s]}")
        if self.crossing is not None:
            s1, s2, c = self.crossing
            lines.append("improper intersection:")
            lines.append(f"  s1 = {[tuple(v) for v in s1]}")
            lines.append(f"  s2 = {[tuple(v) for v in s2]}")
            lines.append(f"  circuit + {sorted(map(tuple, c.plus))} - {sorted(map(tuple, c.minus))}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def verify_triangulation(T: Triangulation) -> VerificationReport:
    """Check spanning trees, the simplex count and pairwise proper intersection.

    Unimodular simplices with pairwise disjoint interiors whose number equals
    the normalized volume of the face cover it, so the three checks together
    certify a triangulation without any convex hull computation.
    """
    report = VerificationReport(T.rows, T.cols, len(T.simplices),
                                expected_simplex_count(len(T.rows), len(T.cols)))
    simplices = T.sorted_simplices()
    for s in simplices:
        if not is_spanning_tree(s, T.rows, T.cols):
            report.non_trees.append(s)
    edge_sets = [s.edges for s in simplices]
    for a in range(len(edge_sets)):
        ea = edge_sets[a]
        for b in range(a + 1, len(edge_sets)):
            if _has_alternating_cycle(ea, edge_sets[b]):
                circuit = _alternating_cycle_witness(ea, edge_sets[b])
                report.crossing = (simplices[a], simplices[b], circuit)
                return report
    return report


def restrict_to_face(T: Triangulation, rows: Iterable[int] = None, cols: Iterable[int] = None) -> Triangulation:
    """Restriction of ``T`` to the face ``Delta_rows x Delta_cols``.

    Keeps the intersections ``s & (rows x cols)`` that span ``K_{rows,cols}``;
    the ambient ``(m, n)`` is unchanged (see :meth:`Triangulation.compact`).
    """
    rows = frozenset(T.rows if rows is None else rows)
    cols = frozenset(T.cols if cols is None else cols)
    if not rows or not cols:
        raise DomainError("face must have nonempty row and column sets")
    if not rows <= set(T.rows) or not cols <= set(T.cols):
        raise DomainError("face is not contained in the triangulated support")
    target = len(rows) + len(cols) - 1
    faces = set()
    for s in T.simplices:
        sub = frozenset(v for v in s.edges if v.row in rows and v.col in cols)
        if len(sub) == target and is_forest(sub):
            faces.add(Simplex(T.m, T.n, sub))
    return Triangulation(T.m, T.n, frozenset(faces), sorted(rows), sorted(cols))


def cyclic_shift(s: Simplex, shift: int, fixed_rows: Iterable[int] = None) -> Simplex:
    """Shift both indices by ``shift`` modulo ``n``, keeping ``fixed_rows`` put.

    Without ``fixed_rows`` the simplex must live in a square product; with
    them, the fixed rows must be exactly ``n+1..m``.
    """
    fixed = frozenset(fixed_rows or ())
    n = s.n
    if fixed != frozenset(range(n + 1, s.m + 1)):
        raise DomainError(
            f"cyclic shift needs a square support or fixed rows {n + 1}..{s.m}; got m={s.m}, n={n}, fixed={sorted(fixed)}")
    return Simplex(s.m, n, [
        (i if i in fixed else (i - 1 + shift) % n + 1, (j - 1 + shift) % n + 1)
        for i, j in s.edges])
