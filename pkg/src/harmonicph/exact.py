"""Exact rational reference computations for testing the floating path.

Everything here works over the rationals with fraction-free Gaussian
elimination, so ranks and dimensions carry no tolerance. Persistent Betti
numbers b(s, t) are dimensions of the image of H_p(K_s) -> H_p(K_t), i.e.
dim Z_p(K_s) - dim(Z_p(K_s) intersect B_p(K_t)), and the bar subquotient
dimensions follow from rank identities:

    dim M(s,t) = h_s - b(s,t)   + b(s-1,t)
    dim N(s,t) = h_s - b(s,t-1) + b(s-1,t-1)
    dim P(s,t) = dim M - dim N
"""

from __future__ import annotations

import math
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import InvalidSubcomplex
from .persistence import Filtration

__all__ = [
    "rational_rank",
    "rational_nullspace",
    "intersection_dim",
    "betti",
    "persistent_betti",
    "subquotient_dims",
    "barcode_multiplicities",
]


def _to_rows(matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def rational_rank(matrix) -> int:
    """Rank of a matrix with exact rational arithmetic."""
    rows = _to_rows(matrix)
    if not rows or not rows[0]:
        return 0
    n_cols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < n_cols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def rational_nullspace(matrix, n_cols: int | None = None) -> list[list[Fraction]]:
    """Exact basis of the kernel, as a list of coefficient columns.

    For a matrix with no rows the column count cannot be inferred from a
    list of lists, so it can be passed explicitly; the kernel is then all
    of the domain.
    """
    rows = _to_rows(matrix)
    if not rows:
        if not n_cols:
            return []
        return [
            [Fraction(1) if i == j else Fraction(0) for i in range(n_cols)]
            for j in range(n_cols)
        ]
    n_cols = len(rows[0])
    if n_cols == 0:
        return []
    # reduced row echelon form
    pivots: list[int] = []
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [a / pv for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def intersection_dim(a_cols, b_cols) -> int:
    """dim(span A intersect span B) = dim A + dim B - dim(A + B), exactly."""
    a = [list(col) for col in a_cols]
    b = [list(col) for col in b_cols]
    dim_a = rational_rank(_transpose(a)) if a else 0
    dim_b = rational_rank(_transpose(b)) if b else 0
    joint = a + b
    dim_sum = rational_rank(_transpose(joint)) if joint else 0
    return dim_a + dim_b - dim_sum


def _transpose(cols):
    if not cols:
        return []
    return [list(row) for row in zip(*cols)]


def betti(ambient: SimplicialComplex, sub: SimplicialComplex, p: int) -> int:
    """p-th Betti number of sub: nullity of d_p minus rank of d_(p+1)."""
    if not sub.is_subcomplex_of(ambient):
        raise InvalidSubcomplex("not a subcomplex of the ambient complex")
    down = sub.boundary_matrix(p)
    up = sub.boundary_matrix(p + 1)
    nullity = sub.n_simplices(p) - rational_rank(down.tolist())
    return nullity - rational_rank(up.tolist())


def _padded_cycle_columns(filtration: Filtration, p: int, s: int):
    """Exact basis of Z_p(K_s) as columns in ambient C_p coordinates."""
    sub = filtration.complex_at(s)
    ker = rational_nullspace(
        sub.boundary_matrix(p).tolist(), n_cols=sub.n_simplices(p)
    )
    n = filtration.ambient.n_simplices(p)
    positions = [filtration.ambient.index(sigma) for sigma in sub.simplices(p)]
    cols = []
    for vec in ker:
        padded = [Fraction(0)] * n
        for pos, val in zip(positions, vec):
            padded[pos] = val
        cols.append(padded)
    return cols


def _padded_boundary_columns(filtration: Filtration, p: int, t: int):
    """Columns of d_(p+1) of K_t in ambient C_p coordinates (spanning B_p)."""
    sub = filtration.complex_at(t)
    up = sub.boundary_matrix(p + 1)
    n = filtration.ambient.n_simplices(p)
    positions = [filtration.ambient.index(sigma) for sigma in sub.simplices(p)]
    cols = []
    for j in range(up.shape[1]):
        padded = [Fraction(0)] * n
        for i, pos in enumerate(positions):
            padded[pos] = Fraction(int(up[i, j]))
        cols.append(padded)
    return cols


def persistent_betti(filtration: Filtration, p: int, s: int, t: int) -> int:
    """Rank of the map H_p(K_s) -> H_p(K_t) induced by inclusion, exact."""
    if s < 0:
        return 0
    cycles = _padded_cycle_columns(filtration, p, s)
    if not cycles:
        return 0
    boundaries = _padded_boundary_columns(filtration, p, t)
    return len(cycles) - intersection_dim(cycles, boundaries)


def subquotient_dims(filtration: Filtration, p: int, s: int, t) -> tuple[int, int, int]:
    """(dim M, dim N, dim P) of the bar subquotient at (s, t), exact.

    For t = math.inf the roles become M = H_p(K_s) and N = M(s, N), so the
    triple still satisfies dim P = dim M - dim N.
    """

    def b(i: int, j: int) -> int:
        if i < 0:
            return 0
        return persistent_betti(filtration, p, i, j)

    h_s = b(s, s)
    if isinstance(t, float) and math.isinf(t):
        n_steps = filtration.n_steps
        dim_m_inf = h_s - b(s, n_steps) + b(s - 1, n_steps)
        return h_s, dim_m_inf, h_s - dim_m_inf
    t = int(t)
    dim_m = h_s - b(s, t) + b(s - 1, t)
    dim_n = h_s - b(s, t - 1) + b(s - 1, t - 1)
    return dim_m, dim_n, dim_m - dim_n


def barcode_multiplicities(filtration: Filtration, p: int) -> dict:
    """Exact bar multiplicities {(s, t): mu} with t an int or math.inf."""
    out = {}
    n_steps = filtration.n_steps
    for s in range(n_steps + 1):
        for t in range(s + 1, n_steps + 1):
            _, _, mu = subquotient_dims(filtration, p, s, t)
            if mu > 0:
                out[(s, t)] = mu
        _, _, mu = subquotient_dims(filtration, p, s, math.inf)
        if mu > 0:
            out[(s, math.inf)] = mu
    return out
