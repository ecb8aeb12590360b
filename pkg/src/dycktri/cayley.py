"""Cayley trick: maximal simplices as cells of a fine mixed subdivision.

A spanning tree ``s`` gives the Minkowski sum ``s_1 + ... + s_m`` with
``s_i = conv{e_j : (i, j) in s}`` inside ``m * Delta_{n-1}``.  For ``n = 3``
points of ``m * Delta_2`` are written in lattice coordinates
``(x, y) = (a_2, a_3)``, so every polygon vertex is an integer point and
areas are exact (in units where the lattice triangle has area 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import sqrt

from .core import Simplex, Triangulation, cyclic_shift
from .errors import DomainError


@dataclass(frozen=True)
class MixedCell:
    """``parts[k]`` is the set of columns joined to the k-th row of the support."""

    parts: tuple

    def dimension_defect(self) -> int:
        return sum(len(p) - 1 for p in self.parts)


def cayley_cells(T: Triangulation) -> list[MixedCell]:
    """One cell per maximal simplex, in canonical simplex order."""
    return [simplex_cell(s, T.rows) for s in T.sorted_simplices()]


def simplex_cell(s: Simplex, rows) -> MixedCell:
    return MixedCell(tuple(frozenset(j for i, j in s.edges if i == row) for row in rows))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[tuple]:
    """Counter-clockwise hull of integer points without collinear vertices."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _corner(position: int, n: int) -> tuple:
    # e_1 -> origin, e_2 -> (1, 0), e_3 -> (0, 1); n = 2 uses the first axis only
    if n == 1 or position == 0:
        return (0, 0)
    return (1, 0) if position == 1 else (0, 1)


def cell_polygon(cell: MixedCell, cols: tuple) -> list[tuple]:
    """Vertices of the Minkowski sum in lattice coordinates (counter-clockwise)."""
    n = len(cols)
    if n > 3:
        raise DomainError("only subdivisions of m*Delta_{n-1} with n <= 3 have a planar drawing")
    position = {j: k for k, j in enumerate(cols)}
    points = {(0, 0)}
    for part in cell.parts:
        corners = [_corner(position[j], n) for j in part]
        points = set(convex_hull({(p[0] + c[0], p[1] + c[1]) for p in points for c in corners}))
    return convex_hull(points)


def doubled_area(polygon) -> int:
    return abs(sum(polygon[k][0] * polygon[k - 1][1] - polygon[k - 1][0] * polygon[k][1]
                   for k in range(len(polygon))))


def polygon_area(polygon) -> Fraction:
    return Fraction(doubled_area(polygon), 2)


def _projection(polygon, axis):
    values = [p[0] * axis[0] + p[1] * axis[1] for p in polygon]
    return min(values), max(values)


def interiors_overlap(P, Q) -> bool:
    """Whether two convex lattice polygons share interior points (exact)."""
    for poly in (P, Q):
        for k in range(len(poly)):
            a, b = poly[k - 1], poly[k]
            axis = (b[1] - a[1], a[0] - b[0])
            lo1, hi1 = _projection(P, axis)
            lo2, hi2 = _projection(Q, axis)
            if hi1 <= lo2 or hi2 <= lo1:
                return False
    return True


@dataclass
class TilingReport:
    total_area: Fraction
    cell_area_sum: Fraction
    overlaps: list  # pairs of cell indices with overlapping interiors

    @property
    def ok(self) -> bool:
        return self.total_area == self.cell_area_sum and not self.overlaps

    def __bool__(self):
        return self.ok


def check_tiling(T: Triangulation) -> TilingReport:
    """Exact area sum and pairwise overlap test for ``n = 3`` subdivisions."""
    if len(T.cols) != 3:
        raise DomainError("tiling check works on subdivisions of m*Delta_2 only")
    m = len(T.rows)
    polygons = [cell_polygon(c, T.cols) for c in cayley_cells(T)]
    overlaps = [(a, b) for a, b in combinations(range(len(polygons)), 2)
                if interiors_overlap(polygons[a], polygons[b])]
    return TilingReport(Fraction(m * m, 2), sum((polygon_area(p) for p in polygons), Fraction(0)), overlaps)


def orbit_labels(T: Triangulation) -> dict:
    """Shift index of every simplex inside its cyclic orbit (0 when no shift applies)."""
    rows, cols = tuple(T.rows), tuple(T.cols)
    n = T.n
    full_cols = cols == tuple(range(1, n + 1))
    if full_cols and rows == tuple(range(1, n + 1)) and T.m == n:
        fixed = ()
    elif full_cols and rows == tuple(range(1, n + 2)) and T.m == n + 1:
        fixed = (n + 1,)
    else:
        return {s: 0 for s in T.simplices}
    labels = {}
    for s in sorted(T.simplices):
        if s in labels:
            continue
        t, k = s, 0
        while t not in labels:
            labels[t] = k
            t, k = cyclic_shift(t, 1, fixed), k + 1
    return labels


PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
           "#ffd92f", "#a65628", "#f781bf", "#999999", "#66c2a5")


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def render_mixed_svg(T: Triangulation, unit: float = 40.0) -> str:
    """SVG drawing of the mixed subdivision of ``m * Delta_{n-1}`` for ``n <= 3``."""
    n = len(T.cols)
    if n > 3:
        raise DomainError(f"cannot draw subdivisions of m*Delta_{n - 1} in the plane")
    m = len(T.rows)
    labels = orbit_labels(T)
    h = sqrt(3) / 2
    margin = 10.0
    width = m * unit + 2 * margin
    height = (m * h * unit if n == 3 else unit) + 2 * margin

    def screen(p):
        x, y = p
        if n == 3:
            return margin + (x + y / 2) * unit, margin + (m - y) * h * unit
        return margin + x * unit, margin + unit / 2

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">']
    for s, cell in zip(T.sorted_simplices(), cayley_cells(T)):
        color = PALETTE[labels.get(s, 0) % len(PALETTE)]
        poly = [screen(p) for p in cell_polygon(cell, T.cols)]
        if n == 3:
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in poly)
            out.append(f'  <polygon points="{pts}" fill="{color}" fill-opacity="0.6" '
                       f'stroke="black" stroke-width="1"/>')
        elif len(poly) >= 2:
            (x1, y1), (x2, y2) = poly[0], poly[-1]
            out.append(f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                       f'stroke="{color}" stroke-width="6"/>')
            for x, y in (poly[0], poly[-1]):
                out.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        else:
            x, y = poly[0]
            out.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

