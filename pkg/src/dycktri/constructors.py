"""Named triangulations: staircase, Dyck path, extended, flipped and rational.

Paths live in the grid picture: a square ``(i, j)`` sits in column ``i`` and
row ``j``; a monotone path moves one step right (``i+1``) or up (``j+1``).
"""

from __future__ import annotations

from typing import Callable, Iterator

from .core import (Circuit, Simplex, Triangulation, Vertex, cyclic_shift,
                   restrict_to_face)
from .errors import DomainError, FlipNotSupportedError


def monotone_paths(m: int, n: int, allowed: Callable[[int, int], bool] = None,
                   start=(1, 1)) -> Iterator[tuple]:
    """Yield every monotone lattice path from ``start`` to ``(m, n)``.

    ``allowed(i, j)`` filters squares; the search backtracks as soon as a
    square is rejected.
    """
    allowed = allowed or (lambda i, j: True)
    if not allowed(*start):
        return
    path = [Vertex(*start)]

    def extend():
        i, j = path[-1]
        if (i, j) == (m, n):
            yield tuple(path)
            return
        for ni, nj in ((i + 1, j), (i, j + 1)):
            if ni <= m and nj <= n and allowed(ni, nj):
                path.append(Vertex(ni, nj))
                yield from extend()
                path.pop()

    yield from extend()


def dyck_paths(n: int, r: int = 1, start: int = 1) -> list[tuple]:
    """(rn, n)-Dyck paths in the ``rn x n`` grid: every square has ``i <= r*j``.

    ``start`` shifts the square block, so ``dyck_paths(k, start=a)`` runs from
    ``(a, a)`` to ``(a+k-1, a+k-1)``; used for the blocks of extended paths.
    """
    off = start - 1
    paths = monotone_paths(r * n + off, n + off,
                           lambda i, j: i - off <= r * (j - off), (start, start))
    return list(paths)


def _closed_orbits(seeds, action, m, n) -> frozenset:
    simplices = set()
    for path in seeds:
        s = Simplex(m, n, path)
        while s not in simplices:
            simplices.add(s)
            s = action(s)
    return frozenset(simplices)


def staircase(m: int, n: int) -> Triangulation:
    if m < 1 or n < 1:
        raise DomainError("staircase needs m, n >= 1")
    return Triangulation(m, n, frozenset(Simplex(m, n, p) for p in monotone_paths(m, n)))


def dyck(n: int) -> Triangulation:
    """Dyck paths of the ``n x n`` grid together with their cyclic-shift orbits."""
    if n < 1:
        raise DomainError("dyck needs n >= 1")
    return Triangulation(n, n, _closed_orbits(dyck_paths(n), lambda s: cyclic_shift(s, 1), n, n))


def extended_dyck_paths(n: int) -> list[tuple]:
    """Concatenations of block Dyck paths, each capped by ``(n+1, last row)``.

    For every composition of ``[1..n]`` into consecutive blocks ``[a..b]`` we
    pick a Dyck path from ``(a, a)`` to ``(b, b)`` per block and add the
    square ``(n+1, b)``.
    """
    paths = []

    def rec(a, acc):
        if a > n:
            paths.append(tuple(acc))
            return
        for b in range(a, n + 1):
            cap = Vertex(n + 1, b)
            for block in dyck_paths(b - a + 1, start=a):
                rec(b + 1, acc + list(block) + [cap])

    rec(1, [])
    return paths


def extended_dyck(n: int) -> Triangulation:
    """Triangulation of ``Delta_n x Delta_{n-1}``; row ``n+1`` is fixed by the shift."""
    if n < 1:
        raise DomainError("extended_dyck needs n >= 1")
    fixed = {n + 1}
    return Triangulation(n + 1, n, _closed_orbits(
        extended_dyck_paths(n), lambda s: cyclic_shift(s, 1, fixed), n + 1, n))


def _full_circuit_trees(C: Circuit, side) -> set:
    whole = C.plus | C.minus
    return {whole - {v} for v in side}


def bistellar_flip(T: Triangulation, C: Circuit) -> Triangulation:
    """Flip ``T`` across the full-dimensional circuit ``C``.

    Replaces ``{C - v : v in C.plus}`` by ``{C - v : v in C.minus}``.
    """
    support = C.plus | C.minus
    rows = {v.row for v in support}
    cols = {v.col for v in support}
    if (C.plus & C.minus or len(C.plus) != len(C.minus)
            or rows != set(T.rows) or cols != set(T.cols)
            or len(support) != len(T.rows) + len(T.cols)):
        raise DomainError("bistellar_flip needs a full-dimensional circuit of the support")
    current = T.edge_sets()
    removed = _full_circuit_trees(C, C.plus)
    missing = removed - current
    if missing:
        raise FlipNotSupportedError(
            f"{len(missing)} simplices of the positive side are not in the triangulation")
    added = _full_circuit_trees(C, C.minus)
    return Triangulation(T.m, T.n, frozenset(Simplex(T.m, T.n, e) for e in (current - removed) | added),
                         T.rows, T.cols)


def dyck_circuit(n: int) -> Circuit:
    """The circuit whose positive side is ``(1,2), ..., (n-1,n), (n,1)``."""
    plus = frozenset(Vertex(i, i % n + 1) for i in range(1, n + 1))
    minus = frozenset(Vertex(i, i) for i in range(1, n + 1))
    return Circuit(plus, minus)


def dyck_flip(n: int) -> Triangulation:
    if n < 2:
        raise DomainError("dyck_flip needs n >= 2")
    return bistellar_flip(dyck(n), dyck_circuit(n))


def rational_shift(s: Simplex, r: int) -> Simplex:
    """``(i, j) -> (i + r mod rn, j + 1 mod n)``."""
    n = s.n
    return Simplex(s.m, n, [((i - 1 + r) % (r * n) + 1, j % n + 1) for i, j in s.edges])


def rational_dyck(r: int, n: int) -> Triangulation:
    """(rn, n)-Dyck path triangulation of ``Delta_{rn-1} x Delta_{n-1}``."""
    if r < 1 or n < 1:
        raise DomainError("rational_dyck needs r, n >= 1")
    return Triangulation(r * n, n, _closed_orbits(
        dyck_paths(n, r), lambda s: rational_shift(s, r), r * n, n))


def _every_rth_col(T: Triangulation, r: int, n: int) -> Triangulation:
    cols = [r * j for j in range(1, n + 1)]
    face = restrict_to_face(T, T.rows, cols)
    return face.relabel({}, {r * j: j for j in range(1, n + 1)}, T.m, n)


def rational_dyck_by_restriction(r: int, n: int) -> Triangulation:
    """Same triangulation as :func:`rational_dyck`, cut out of ``dyck(rn)``."""
    return _every_rth_col(dyck(r * n), r, n)


def extended_rational_dyck(r: int, n: int) -> Triangulation:
    """Triangulation of ``Delta_{rn} x Delta_{n-1}`` cut out of ``extended_dyck(rn)``."""
    if r < 1 or n < 1:
        raise DomainError("extended_rational_dyck needs r, n >= 1")
    return _every_rth_col(extended_dyck(r * n), r, n)


CATALOGUE = {
    "staircase": staircase,
    "dyck": dyck,
    "dyck-flip": dyck_flip,
    "extended-dyck": extended_dyck,
    "rational-dyck": rational_dyck,
    "extended-rational-dyck": extended_rational_dyck,
}
