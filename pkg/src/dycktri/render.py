"""Grid pictures of triangulations: one panel per maximal simplex.

ASCII panels print the top grid row first, with ``#`` for a square in the
simplex and ``.`` otherwise; panels are separated by a blank line.
"""

from __future__ import annotations

from .cayley import PALETTE, orbit_labels
from .core import Triangulation

FILLED = "#"
EMPTY = "."


def grid_panel(s, rows, cols) -> list[str]:
    return ["".join(FILLED if (i, j) in s.edges else EMPTY for i in rows)
            for j in reversed(cols)]


def render_grid_ascii(T: Triangulation) -> str:
    panels = ["\n".join(grid_panel(s, T.rows, T.cols)) for s in T.sorted_simplices()]
    return "\n\n".join(panels) + ("\n" if panels else "")


def render_grid_svg(T: Triangulation, cell: int = 12, per_line: int = 6) -> str:
    """Panels laid out ``per_line`` to a line, squares colored by orbit shift."""
    simplices = T.sorted_simplices()
    if not simplices:
        return '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="0" height="0"/>\n'
    labels = orbit_labels(T)
    m, n = len(T.rows), len(T.cols)
    gap = cell
    pw, ph = m * cell + gap, n * cell + gap
    count = len(simplices)
    cols_used = min(per_line, count)
    lines = (count + per_line - 1) // per_line
    width, height = cols_used * pw + gap, lines * ph + gap
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    for k, s in enumerate(simplices):
        ox = gap + (k % per_line) * pw
        oy = gap + (k // per_line) * ph
        color = PALETTE[labels.get(s, 0) % len(PALETTE)]
        out.append(f'  <g id="simplex-{k}">')
        for a, i in enumerate(T.rows):
            for b, j in enumerate(T.cols):
                x = ox + a * cell
                y = oy + (n - 1 - b) * cell
                fill = color if (i, j) in s.edges else "white"
                out.append(f'    <rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                           f'fill="{fill}" stroke="black" stroke-width="0.5"/>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
