"""Matching ensembles: one perfect matching per support ``(I, J)``.

A matching is a ``frozenset`` of :class:`~dycktri.core.Vertex` edges and a
support is a pair of sorted tuples ``(I, J)`` with ``|I| = |J| >= 1``.  The
empty support is left implicit throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .core import Simplex, Triangulation, Vertex
from .errors import AxiomError, DomainError, NotATriangulationError

Matching = frozenset
Support = tuple


def support_of(matching: Iterable) -> Support:
    rows = tuple(sorted(v[0] for v in matching))
    cols = tuple(sorted(v[1] for v in matching))
    return rows, cols


def is_perfect_matching(edges: Iterable, support: Support = None) -> bool:
    edges = list(edges)
    rows = [i for i, _ in edges]
    cols = [j for _, j in edges]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False
    return support is None or support_of(edges) == (tuple(support[0]), tuple(support[1]))


def all_supports(m: int, n: int) -> Iterator[Support]:
    """Every support pair with ``1 <= |I| = |J| <= min(m, n)``, in canonical order."""
    for s in range(1, min(m, n) + 1):
        for rows in combinations(range(1, m + 1), s):
            for cols in combinations(range(1, n + 1), s):
                yield rows, cols


def support_order(support: Support):
    rows, cols = support
    return len(rows), rows, cols


def matchings_in(edges: Iterable) -> list:
    """All nonempty matchings contained in the edge set."""
    edges = sorted(edges)
    found = []

    def rec(k, chosen, rows, cols):
        if k == len(edges):
            if chosen:
                found.append(frozenset(chosen))
            return
        rec(k + 1, chosen, rows, cols)
        i, j = edges[k]
        if i not in rows and j not in cols:
            chosen.append(edges[k])
            rec(k + 1, chosen, rows | {i}, cols | {j})
            chosen.pop()

    rec(0, [], frozenset(), frozenset())
    return found


def perfect_matchings(support: Support) -> Iterator[Matching]:
    """Every perfect matching of ``K_{I,J}`` (one per permutation)."""
    from itertools import permutations
    rows, cols = support
    for perm in permutations(cols):
        yield frozenset(Vertex(i, j) for i, j in zip(rows, perm))


def _edges_str(matching) -> str:
    return "{" + ", ".join(f"({i},{j})" for i, j in sorted(matching)) + "}"


@dataclass(frozen=True)
class MatchingEnsemble:
    m: int
    n: int
    table: dict = field(compare=True)

    def __post_init__(self):
        table = {}
        for key, matching in self.table.items():
            key = (tuple(sorted(key[0])), tuple(sorted(key[1])))
            matching = frozenset(Vertex(*v) for v in matching)
            for i, j in matching:
                if not (1 <= i <= self.m and 1 <= j <= self.n):
                    raise DomainError(f"edge ({i},{j}) outside [1..{self.m}]x[1..{self.n}]")
            table[key] = matching
        object.__setattr__(self, "table", table)

    @classmethod
    def from_matchings(cls, m: int, n: int, matchings: Iterable) -> "MatchingEnsemble":
        """Index matchings by support; two different ones on a support conflict."""
        table = {}
        for matching in matchings:
            matching = frozenset(Vertex(*v) for v in matching)
            key = support_of(matching)
            old = table.get(key)
            if old is not None and old != matching:
                raise NotATriangulationError(
                    f"two matchings on support {key}: {_edges_str(old)} and {_edges_str(matching)}",
                    old, matching)
            table[key] = matching
        return cls(m, n, table)

    def __getitem__(self, support: Support) -> Matching:
        return self.table[(tuple(support[0]), tuple(support[1]))]

    def get(self, support: Support) -> Optional[Matching]:
        return self.table.get((tuple(support[0]), tuple(support[1])))

    def __contains__(self, matching) -> bool:
        return self.table.get(support_of(matching)) == matching

    def __len__(self):
        return len(self.table)

    def __iter__(self):
        return iter(sorted(self.table, key=support_order))

    def items(self):
        for key in self:
            yield key, self.table[key]

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.table.items())))


def ensemble_from_triangulation(T: Triangulation) -> MatchingEnsemble:
    """Collect the perfect matchings contained in the simplices of ``T``."""
    def gather():
        for s in T.simplices:
            yield from matchings_in(s.edges)
    return MatchingEnsemble.from_matchings(T.m, T.n, gather())


# -- axioms ------------------------------------------------------------------

@dataclass
class AxiomReport:
    """Outcome of :func:`check_axioms`; each list holds failure witnesses."""

    sa_missing: list = field(default_factory=list)      # supports without a matching
    sa_mismatched: list = field(default_factory=list)   # (key, matching) with wrong support
    ca_missing: list = field(default_factory=list)      # (matching, submatching)
    la_failures: list = field(default_factory=list)     # (matching, v)

    @property
    def sa(self) -> bool:
        return not (self.sa_missing or self.sa_mismatched)

    @property
    def ca(self) -> bool:
        return not self.ca_missing

    @property
    def la(self) -> bool:
        return not self.la_failures

    @property
    def ok(self) -> bool:
        return self.sa and self.ca and self.la

    def __bool__(self):
        return self.ok

    def first_la_failure(self):
        return self.la_failures[0] if self.la_failures else None

    def describe(self) -> str:
        lines = [f"SA {'pass' if self.sa else 'FAIL'}",
                 f"CA {'pass' if self.ca else 'FAIL'}",
                 f"LA {'pass' if self.la else 'FAIL'}"]
        for key in self.sa_missing[:5]:
            lines.append(f"  SA: no matching on I={list(key[0])} J={list(key[1])}")
        for key, matching in self.sa_mismatched[:5]:
            lines.append(f"  SA: matching {_edges_str(matching)} stored under I={list(key[0])} J={list(key[1])}")
        for matching, sub in self.ca_missing[:5]:
            lines.append(f"  CA: {_edges_str(sub)} (inside {_edges_str(matching)}) missing")
        for matching, v in self.la_failures[:5]:
            lines.append(f"  LA: {_edges_str(matching)} cannot reach {format_element(v)}")
        return "\n".join(lines)


def format_element(v) -> str:
    side, k = v
    return f"row {k}" if side == "row" else f"col {k}"


def linkage_candidates(matching: Matching, v) -> Iterator[tuple]:
    """Single-edge exchanges ``(M - e + e', e, e')`` that bring ``v`` in.

    ``v`` is ``("row", i)`` or ``("col", j)``; ``e'`` shares with ``e`` the
    endpoint on the side opposite to ``v``.
    """
    side, k = v
    for e in sorted(matching):
        e2 = Vertex(k, e.col) if side == "row" else Vertex(e.row, k)
        yield (matching - {e}) | {e2}, e, e2


def check_linkage(E: MatchingEnsemble, matching: Matching, v) -> bool:
    return any(E.get(support_of(cand)) == cand for cand, _, _ in linkage_candidates(matching, v))


def outside_elements(E: MatchingEnsemble, support: Support) -> list:
    rows, cols = support
    return ([("row", i) for i in range(1, E.m + 1) if i not in rows]
            + [("col", j) for j in range(1, E.n + 1) if j not in cols])


def check_axioms(E: MatchingEnsemble, axioms: str = "SA CA LA") -> AxiomReport:
    """Check the supports, closure and linkage axioms exhaustively.

    Failures are listed in canonical support order (size, rows, cols) and,
    for linkage, rows before columns.
    """
    report = AxiomReport()
    wanted = set(axioms.split())
    if "SA" in wanted:
        for key in all_supports(E.m, E.n):
            if key not in E.table:
                report.sa_missing.append(key)
        for key in sorted(E.table, key=support_order):
            matching = E.table[key]
            if not is_perfect_matching(matching, key):
                report.sa_mismatched.append((key, matching))
    if "CA" in wanted:
        for key in sorted(E.table, key=support_order):
            matching = E.table[key]
            edges = sorted(matching)
            for size in range(1, len(edges)):
                for sub in combinations(edges, size):
                    sub = frozenset(sub)
                    if E.get(support_of(sub)) != sub:
                        report.ca_missing.append((matching, sub))
    if "LA" in wanted:
        for key in sorted(E.table, key=support_order):
            matching = E.table[key]
            for v in outside_elements(E, key):
                if not check_linkage(E, matching, v):
                    report.la_failures.append((matching, v))
    return report


# -- reconstruction ----------------------------------------------------------

def triangulation_from_ensemble(E: MatchingEnsemble, check: bool = True) -> Triangulation:
    """Spanning trees of ``K_{m,n}`` all of whose matchings lie in ``E``.

    Trees are built one row star at a time; a partial forest is dropped as
    soon as it contains a matching that ``E`` does not.
    """
    if check:
        report = check_axioms(E)
        if not report.ok:
            raise AxiomError("not a matching ensemble:\n" + report.describe(), report)
    m, n = E.m, E.n
    table = E.table
    total = m + n - 1
    subsets = [c for size in range(1, n + 1) for c in combinations(range(1, n + 1), size)]
    trees = []
    # component label per column; a new row may only touch distinct components
    comp = list(range(n + 1))

    def rec(i, edges, matchings, used):
        if i > m:
            if used == total:
                trees.append(Simplex(m, n, edges))
            return
        remaining_rows = m - i
        for cols in subsets:
            k = len(cols)
            if used + k + remaining_rows > total:
                continue
            labels = {comp[j] for j in cols}
            if len(labels) != k:
                continue
            new = []
            ok = True
            for j in cols:
                e = Vertex(i, j)
                for base_rows, base_cols, base in [((), (), frozenset())] + matchings:
                    if j in base_cols:
                        continue
                    key = (base_rows + (i,), tuple(sorted(base_cols + (j,))))
                    cand = base | {e}
                    if table.get(key) != cand:
                        ok = False
                        break
                    new.append((key[0], key[1], cand))
                if not ok:
                    break
            if not ok:
                continue
            saved = comp[:]
            target = comp[cols[0]]
            for j in range(1, n + 1):
                if comp[j] in labels:
                    comp[j] = target
            rec(i + 1, edges + [(i, j) for j in cols], matchings + new, used + k)
            comp[:] = saved

    rec(1, [], [], 0)
    return Triangulation(m, n, frozenset(trees))


# -- ensembles of the Dyck family --------------------------------------------

def _merged(rows, cols):
    # i precedes col j iff i <= j
    return sorted([((i, 0), "row", i) for i in rows] + [((j, 1), "col", j) for j in cols])


def _rotations(seq):
    for k in range(len(seq)):
        yield seq[k:] + seq[:k]


def _suffixes_ok(seq, strict: bool) -> bool:
    balance = 0
    for _, side, _ in reversed(seq):
        balance += 1 if side == "col" else -1
        if balance < (1 if strict else 0):
            return False
    return True


def dyck_matching(rows: Iterable[int], cols: Iterable[int]) -> Matching:
    """The matching on ``K_{I,J}`` picked by the rotated merged order.

    Rotate ``I u J`` (with ``i`` before ``j`` iff ``i <= j``) until every
    suffix has at least as many columns as rows, then pair the k-th row with
    the k-th column.
    """
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise DomainError("support sides differ in size")
    for seq in _rotations(_merged(rows, cols)):
        if _suffixes_ok(seq, strict=False):
            r = [k for _, side, k in seq if side == "row"]
            c = [k for _, side, k in seq if side == "col"]
            return frozenset(Vertex(i, j) for i, j in zip(r, c))
    raise AssertionError("no valid rotation")  # pragma: no cover


def extended_dyck_matching(n: int, rows: Iterable[int], cols: Iterable[int]) -> Matching:
    """Like :func:`dyck_matching`; row ``n+1`` takes the last unpaired column.

    With ``n+1`` present the rotation must leave strictly more columns than
    rows in every suffix of ``(I - {n+1}) u J``, which fixes it uniquely.
    """
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise DomainError("support sides differ in size")
    if n + 1 not in rows:
        return dyck_matching(rows, cols)
    inner = [i for i in rows if i != n + 1]
    for seq in _rotations(_merged(inner, cols)):
        if _suffixes_ok(seq, strict=True):
            r = [k for _, side, k in seq if side == "row"]
            c = [k for _, side, k in seq if side == "col"]
            return frozenset([Vertex(i, j) for i, j in zip(r, c)] + [Vertex(n + 1, c[-1])])
    raise AssertionError("no valid rotation")  # pragma: no cover


def dyck_ensemble(n: int) -> MatchingEnsemble:
    if n < 1:
        raise DomainError("dyck_ensemble needs n >= 1")
    return MatchingEnsemble(n, n, {key: dyck_matching(*key) for key in all_supports(n, n)})


def extended_dyck_ensemble(n: int) -> MatchingEnsemble:
    if n < 1:
        raise DomainError("extended_dyck_ensemble needs n >= 1")
    return MatchingEnsemble(n + 1, n, {key: extended_dyck_matching(n, *key)
                                       for key in all_supports(n + 1, n)})


def restrict_ensemble(E: MatchingEnsemble, rows: Iterable[int], cols: Iterable[int]) -> MatchingEnsemble:
    """Entries whose support lies inside ``rows x cols`` (ambient kept)."""
    rows, cols = set(rows), set(cols)
    return MatchingEnsemble(E.m, E.n, {key: M for key, M in E.table.items()
                                       if set(key[0]) <= rows and set(key[1]) <= cols})
