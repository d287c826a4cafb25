"""Exact rational LP feasibility and convex-hull membership.

Membership of a point in the convex hull of a vertex list is decided by a
phase-1 simplex over Fractions (Bland's rule, hence terminating), so boundary
cases are decided exactly — no tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomial import canon_coeff


def feasible_eq_nonneg(a_rows: Sequence[Sequence], b: Sequence) -> list | None:
    """Find x >= 0 with A x = b, or None if infeasible (exact phase-1 simplex)."""
    m = len(a_rows)
    k = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for row, bi in zip(a_rows, b):
        row = [Fraction(x) for x in row]
        bi = Fraction(bi)
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)
    # tableau columns: k original variables + m artificials
    for i in range(m):
        rows[i] = rows[i] + [Fraction(int(i == j)) for j in range(m)]
    basis = [k + i for i in range(m)]
    ncols = k + m

    def reduced_cost(j: int) -> Fraction:
        # cost vector is 1 on artificials, 0 elsewhere; minimize
        c_j = Fraction(int(j >= k))
        return c_j - sum(
            (rows[i][j] for i in range(m) if basis[i] >= k), start=Fraction(0)
        )

    while True:
        enter = None
        for j in range(ncols):
            if j in basis:
                continue
            if reduced_cost(j) < 0:
                enter = j  # Bland: smallest improving index
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rhs[i] / rows[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("unbounded phase-1 problem (cannot happen)")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        rhs[leave] = rhs[leave] / piv
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
                rhs[i] = rhs[i] - f * rhs[leave]
        basis[leave] = enter

    objective = sum((rhs[i] for i in range(m) if basis[i] >= k), start=Fraction(0))
    if objective != 0:
        return None
    x = [Fraction(0)] * k
    for i in range(m):
        if basis[i] < k:
            x[basis[i]] = rhs[i]
    return [canon_coeff(v) for v in x]


def convex_combination(point: Sequence, vertices: Sequence[Sequence]) -> list | None:
    """Barycentric coefficients expressing ``point`` in hull(vertices), or None."""
    if not vertices:
        return None
    d = len(point)
    if any(len(v) != d for v in vertices):
        raise ValueError("dimension mismatch between point and vertices")
    a_rows = [[v[i] for v in vertices] for i in range(d)]
    a_rows.append([1] * len(vertices))
    b = list(point) + [1]
    return feasible_eq_nonneg(a_rows, b)


def convex_membership(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    """True iff ``point`` is a convex combination of ``vertices`` (exact)."""
    return convex_combination(point, vertices) is not None
