"""Exact rational feasibility for ``A x = b, x >= 0``.

Phase one of the simplex method on a sparse tableau of
:class:`fractions.Fraction` entries, with Bland's smallest-index rule so the
pivoting cannot cycle.  Artificial columns are never stored: once an
artificial variable leaves the basis it is pinned at zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional


def feasible_point(constraints: Iterable[tuple], num_vars: int) -> Optional[list]:
    """Return some ``x >= 0`` meeting every ``sum(coeffs[j] * x[j]) == rhs``.

    ``constraints`` yields ``(coeffs, rhs)`` pairs where ``coeffs`` maps a
    variable index to a number.  Returns ``None`` when the system has no
    nonnegative solution.
    """
    rows, rhs = [], []
    for coeffs, b in constraints:
        row = {j: Fraction(a) for j, a in coeffs.items() if a != 0}
        b = Fraction(b)
        for j in row:
            if not 0 <= j < num_vars:
                raise IndexError(f"variable {j} out of range")
        if b < 0:
            row = {j: -a for j, a in row.items()}
            b = -b
        rows.append(row)
        rhs.append(b)

    basis = [num_vars + r for r in range(len(rows))]
    cost = {}
    for row in rows:
        for j, a in row.items():
            cost[j] = cost.get(j, 0) - a
    cost = {j: a for j, a in cost.items() if a != 0}
    value = sum(rhs, Fraction(0))
    # column index -> rows with a nonzero entry, kept in sync with the tableau
    where = {}
    for r, row in enumerate(rows):
        for j in row:
            where.setdefault(j, set()).add(r)

    while value > 0:
        entering = min((j for j, a in cost.items() if a < 0), default=None)
        if entering is None:
            return None
        best = None
        for r in where.get(entering, ()):
            a = rows[r].get(entering)
            if a is not None and a > 0:
                key = (rhs[r] / a, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:  # pragma: no cover - phase one is bounded below by 0
            raise ArithmeticError("unbounded phase-one problem")
        p = best[1]
        value += _pivot(rows, rhs, where, cost, p, entering)
        basis[p] = entering

    x = [Fraction(0)] * num_vars
    for r, j in enumerate(basis):
        if j < num_vars:
            x[j] = rhs[r]
    return x


def _pivot(rows, rhs, where, cost, p, q) -> Fraction:
    """Pivot on ``(p, q)`` in place; return the change of the objective value."""
    prow = rows[p]
    piv = prow[q]
    if piv != 1:
        prow = {j: a / piv for j, a in prow.items()}
        rows[p] = prow
        rhs[p] = rhs[p] / piv
    bp = rhs[p]
    for r in list(where[q]):
        if r == p:
            continue
        row = rows[r]
        f = row[q]
        for j, a in prow.items():
            new = row.get(j, 0) - f * a
            if new == 0:
                if j in row:
                    del row[j]
                    where[j].discard(r)
            else:
                if j not in row:
                    where.setdefault(j, set()).add(r)
                row[j] = new
        rhs[r] -= f * bp
    f = cost.get(q, 0)
    if f:
        for j, a in prow.items():
            new = cost.get(j, 0) - f * a
            if new == 0:
                cost.pop(j, None)
            else:
                cost[j] = new
    # z = value + sum(cost_j x_j); substituting x_q = bp - ... adds f * bp
    return f * bp
