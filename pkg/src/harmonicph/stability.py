"""Grassmann-distance stability of harmonic persistence.

Three verifiable bounds relate the movement of harmonic subspaces to the
l1 difference of the filtration functions f and g on a common complex K
(with s_p(f, g) short for the sum of the degree p and degree p + 1
seminorms of f - g):

  pointwise     integral over t of d(F(t), G(t))^2      <= (pi/2)^2 s_p
  persistent    double integral of d(F^st, G^st)        <= pi s_p
  barcode       averaged terminal-subspace distance     <= (pi^3 / 2) s_p

where F, G are the step functions of harmonic p-spaces of the sublevel
filtrations of f and g. All integrals are computed exactly as finite sums
over the merged breakpoints. The barcode bound requires every finite bar of
both filtrations to be simple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, build_complex
from .errors import (
    ComplexMismatch,
    HypothesisViolated,
    InvalidLadder,
)
from .harmonic import harmonic_basis
from .persistence import (
    AdmissibleFunction,
    Filtration,
    StepSubspaceFunction,
    barcode,
    entry_time_function,
    harmonic_filtration_function,
    step_function_of_filtration,
    terminal_subspace_at,
)
from .subspaces import (
    grassmann_distance,
    principal_angles,
    project_subspace,
)

__all__ = [
    "StabilityReport",
    "seminorm",
    "dist_filtration_functions",
    "dist_persistent",
    "check_theorem_stable",
    "check_theorem_stable_persistent",
    "check_theorem_barcode",
    "ladder_complex",
    "ladder_angle",
    "LadderReport",
]


@dataclass
class StabilityReport:
    """Left-hand side, bound, and slack of one stability inequality."""

    lhs: float
    rhs: float
    detail: dict = field(default_factory=dict)

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= -1e-8


def _values_of(f) -> dict:
    return f.values if isinstance(f, AdmissibleFunction) else dict(f)


def seminorm(f, g, complex: SimplicialComplex, p: int, ell: float = 1.0) -> float:
    """l_ell seminorm of f - g over the p-simplices of the complex."""
    fv, gv = _values_of(f), _values_of(g)
    total = 0.0
    for sigma in complex.simplices(p):
        if sigma not in fv or sigma not in gv:
            raise ComplexMismatch(f"no value for {sigma} on both functions")
        total += abs(fv[sigma] - gv[sigma]) ** ell
    return total ** (1.0 / ell)


def _merged_grid(f: StepSubspaceFunction, g: StepSubspaceFunction):
    """Partition of [0, 1] refining the breakpoints of both step functions."""
    pts = {0.0, 1.0}
    for b in f.breakpoints + g.breakpoints:
        if 0.0 < b < 1.0:
            pts.add(float(b))
    return sorted(pts)


def dist_filtration_functions(
    f: StepSubspaceFunction, g: StepSubspaceFunction, ell: float = 2.0
) -> float:
    """Integral metric (int over [0,1] of d(F(t), G(t))^ell)^(1/ell)."""
    if f.ambient_dim != g.ambient_dim:
        raise ComplexMismatch("step functions over different chain spaces")
    pts = _merged_grid(f, g)
    total = 0.0
    for a, b in zip(pts, pts[1:]):
        d = grassmann_distance(f.value_at(a), g.value_at(a))
        total += (b - a) * d**ell
    return total ** (1.0 / ell)


def dist_persistent(
    f: StepSubspaceFunction,
    g: StepSubspaceFunction,
    ell: float = 1.0,
    tol: float | None = None,
) -> float:
    """Persistent metric: double integral of d(F^st, G^st)^ell over s <= t.

    F^st is the orthonormalized projection of F(s) onto F(t). The integrand
    is constant on rectangles of the merged breakpoint grid, so the integral
    is an exact finite sum; projections are cached per pair of pieces.
    """
    if f.ambient_dim != g.ambient_dim:
        raise ComplexMismatch("step functions over different chain spaces")
    pts = _merged_grid(f, g)
    cells = list(zip(pts, pts[1:]))
    piece_f = [f.piece_index(a) for a, _ in cells]
    piece_g = [g.piece_index(a) for a, _ in cells]
    proj_cache_f: dict = {}
    proj_cache_g: dict = {}

    def projected(fn: StepSubspaceFunction, cache, i_piece, j_piece, a_s, a_t):
        key = (i_piece, j_piece)
        if key not in cache:
            cache[key] = project_subspace(
                fn.value_at(a_s), fn.value_at(a_t), tol
            )
        return cache[key]

    total = 0.0
    for j, (tj, tj1) in enumerate(cells):
        for i in range(j + 1):
            ti, ti1 = cells[i]
            fst = projected(f, proj_cache_f, piece_f[i], piece_f[j], ti, tj)
            gst = projected(g, proj_cache_g, piece_g[i], piece_g[j], ti, tj)
            d = grassmann_distance(fst, gst)
            if i == j:
                area = (tj1 - tj) ** 2 / 2.0
            else:
                area = (ti1 - ti) * (tj1 - tj)
            total += area * d**ell
    return total ** (1.0 / ell)


def check_theorem_stable(
    complex: SimplicialComplex,
    f: AdmissibleFunction,
    g: AdmissibleFunction,
    p: int,
    tol: float | None = None,
) -> StabilityReport:
    """Pointwise bound: dist_2(F, G) <= (pi/2) sqrt(s_p(f, g))."""
    fstep = harmonic_filtration_function(complex, f, p, tol)
    gstep = harmonic_filtration_function(complex, g, p, tol)
    lhs = dist_filtration_functions(fstep, gstep, ell=2.0)
    s_p = seminorm(f, g, complex, p, 1.0) + seminorm(f, g, complex, p + 1, 1.0)
    rhs = (math.pi / 2.0) * math.sqrt(s_p)
    return StabilityReport(lhs, rhs, {"seminorm_sum": s_p})


def check_theorem_stable_persistent(
    complex: SimplicialComplex,
    f: AdmissibleFunction,
    g: AdmissibleFunction,
    p: int,
    tol: float | None = None,
) -> StabilityReport:
    """Persistent bound: dist_1^pers(F, G) <= pi s_p(f, g)."""
    fstep = harmonic_filtration_function(complex, f, p, tol)
    gstep = harmonic_filtration_function(complex, g, p, tol)
    lhs = dist_persistent(fstep, gstep, ell=1.0, tol=tol)
    s_p = seminorm(f, g, complex, p, 1.0) + seminorm(f, g, complex, p + 1, 1.0)
    rhs = math.pi * s_p
    return StabilityReport(lhs, rhs, {"seminorm_sum": s_p})


def check_theorem_barcode(
    filtration_f: Filtration,
    filtration_g: Filtration,
    p: int,
    tol: float | None = None,
) -> StabilityReport:
    """Barcode bound for two filtrations of the same complex and length.

    The left-hand side averages Grassmann distances between terminal
    subspaces over all index pairs i < j; pairs without a bar contribute
    zero subspaces. Filtration functions are the normalized entry times.
    Raises HypothesisViolated when some finite bar has multiplicity > 1.
    """
    if filtration_f.ambient != filtration_g.ambient:
        raise ComplexMismatch("filtrations of different complexes")
    if filtration_f.n_steps != filtration_g.n_steps:
        raise ComplexMismatch("filtrations of different lengths")
    n = filtration_f.n_steps
    for filt, name in ((filtration_f, "first"), (filtration_g, "second")):
        for hb in barcode(filt, p, tol):
            if hb.bar.is_finite and hb.bar.multiplicity > 1:
                raise HypothesisViolated(
                    f"{name} filtration has a finite bar of multiplicity "
                    f"{hb.bar.multiplicity} at ({hb.bar.s}, {hb.bar.t})"
                )
    total = 0.0
    pairs = 0
    per_pair = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            term_f = terminal_subspace_at(filtration_f, p, i, j, tol)
            term_g = terminal_subspace_at(filtration_g, p, i, j, tol)
            d = grassmann_distance(term_f, term_g)
            per_pair.append((i, j, d))
            total += d
            pairs += 1
    lhs = total / pairs
    f_vals = entry_time_function(filtration_f)
    g_vals = entry_time_function(filtration_g)
    k = filtration_f.ambient
    s_p = seminorm(f_vals, g_vals, k, p, 1.0) + seminorm(f_vals, g_vals, k, p + 1, 1.0)
    rhs = (math.pi**3 / 2.0) * s_p
    fstep = step_function_of_filtration(filtration_f, p, tol)
    gstep = step_function_of_filtration(filtration_g, p, tol)
    intermediate = 2.0 * dist_persistent(fstep, gstep, ell=1.0, tol=tol)
    return StabilityReport(
        lhs,
        rhs,
        {
            "seminorm_sum": s_p,
            "intermediate": intermediate,
            "per_pair": per_pair,
        },
    )


def ladder_complex(n: int, m: int) -> SimplicialComplex:
    """Cycle on 2n vertices with one rung splitting it into even arcs.

    Vertices are 0..2n-1 around the cycle; the rung at position m joins
    vertices m - 1 and 2n - m - 1, so the two arcs have 2m and 2n - 2m
    edges. This even split is what makes the closed-form principal angle
    exact at every n, not only in the large-n limit.
    """
    if n < 2 or m < 1 or m >= n:
        raise InvalidLadder(f"need n >= 2 and 1 <= m < n, got n={n}, m={m}")
    edges = [(i, i + 1) for i in range(2 * n - 1)] + [(0, 2 * n - 1)]
    a, b = m - 1, 2 * n - m - 1
    if a == b:
        raise InvalidLadder("degenerate rung")
    edges.append((min(a, b), max(a, b)))
    return build_complex(edges)


@dataclass
class LadderReport:
    n: int
    m: int
    alpha: float
    cos_measured: float
    cos_closed_form: float
    angle: float


def ladder_angle(n: int, m: int, tol: float | None = None) -> LadderReport:
    """Largest principal angle between the two-rung ladder harmonic spaces.

    Compares the degree-1 harmonic space of the ladder with rung position m
    against the one with the middle rung (position floor(n/2)), inside the
    chain space of their union. The closed form for the cosine of the unique
    nonzero angle, with alpha = m / n, is

        alpha n / (sqrt(2 alpha n (1-alpha)^2 + 2 n (1-alpha) alpha^2 + 1)
                   * sqrt(n/2 + 1))

    valid for distinct rungs; for m equal to the middle position the two
    complexes coincide and the cosine is 1.
    """
    mid = n // 2
    k_m = ladder_complex(n, m)
    k_mid = ladder_complex(n, mid)
    ambient = build_complex(k_m.all_simplices() + k_mid.all_simplices())
    h_m = harmonic_basis(ambient, k_m, 1, tol).space
    h_mid = harmonic_basis(ambient, k_mid, 1, tol).space
    angles = principal_angles(h_m, h_mid)
    theta = float(angles[-1]) if angles.size else 0.0
    alpha = m / n
    if m == mid:
        closed = 1.0
    else:
        closed = (alpha * n) / (
            math.sqrt(2 * alpha * n * (1 - alpha) ** 2
                      + 2 * n * (1 - alpha) * alpha**2 + 1)
            * math.sqrt(n / 2 + 1)
        )
    return LadderReport(n, m, alpha, math.cos(theta), closed, theta)


def ladder_cos_closed_form(n: float, alpha: float) -> float:
    """Closed-form cosine as a function of n and alpha = m / n."""
    return (alpha * n) / (
        math.sqrt(2 * alpha * n * (1 - alpha) ** 2
                  + 2 * n * (1 - alpha) * alpha**2 + 1)
        * math.sqrt(n / 2 + 1)
    )


def ladder_cos_limit(alpha: float) -> float:
    """Limit of the closed-form cosine as n grows: sqrt(alpha / (1 - alpha))."""
    return math.sqrt(alpha / (1.0 - alpha))
