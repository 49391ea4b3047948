"""Filtrations, persistent harmonic spaces, and harmonic barcodes.

A filtration is an increasing sequence of subcomplexes K_0 <= ... <= K_N of
an ambient complex K, encoded by an integer entry time per simplex. The
persistent harmonic space H^(s,t) is the orthonormalized projection of the
harmonic space at time s onto the harmonic space at time t; its dimension is
the persistent Betti number.

A bar (s, t) with multiplicity mu carries an initial subspace P^(s,t) of the
harmonic space at s: classes born exactly at s that die exactly at t. It is
cut out by two preimages under the induced maps,

    M^(s,t) = preimage at s of H^(s-1,t)        (dead by t, or born earlier)
    N^(s,t) = preimage at s of H^(s-1,t-1)      (same, strictly before t)

and P^(s,t) is the orthogonal complement of N inside M. Infinite bars use
P^(s,inf) = complement of M^(s,N) inside the harmonic space at s. A simple
finite bar also has a one-dimensional terminal subspace inside the harmonic
space at time t - 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ._parallel import pmap
from .complexes import SimplicialComplex, Simplex, as_simplex
from .errors import (
    ComplexMismatch,
    IndexOutOfRange,
    InfiniteBar,
    NonMonotone,
    NotAdmissible,
    NotSimple,
)
from .harmonic import HarmonicSpace, harmonic_basis
from .subspaces import (
    Subspace,
    complement_within,
    preimage_under_projection,
    project_subspace,
)

__all__ = [
    "AdmissibleFunction",
    "Filtration",
    "Bar",
    "HarmonicBar",
    "filtration_from_function",
    "harmonic_at",
    "persistent_harmonic_space",
    "barcode",
    "terminal_subspace",
    "StepSubspaceFunction",
    "harmonic_filtration_function",
    "step_function_of_filtration",
    "entry_time_function",
]


class AdmissibleFunction:
    """A map simplex -> real value that strictly increases on proper faces."""

    def __init__(self, complex: SimplicialComplex, values: Mapping):
        self.complex = complex
        self.values: dict[Simplex, float] = {}
        for sigma in complex.all_simplices():
            if sigma not in values:
                raise NotAdmissible(f"no value assigned to {sigma}")
            self.values[sigma] = float(values[sigma])
        for sigma in complex.all_simplices():
            if len(sigma) == 1:
                continue
            v = self.values[sigma]
            for j in range(len(sigma)):
                face = sigma[:j] + sigma[j + 1 :]
                if self.values[face] >= v:
                    raise NotAdmissible(
                        f"value of face {face} does not strictly precede {sigma}"
                    )

    def __call__(self, sigma) -> float:
        return self.values[as_simplex(sigma)]

    @property
    def breakpoints(self) -> list[float]:
        return sorted(set(self.values.values()))


class Filtration:
    """Integer-indexed filtration of an ambient simplicial complex.

    entry[sigma] is the first index t with sigma in K_t; indices run over
    0..N. Optional real breakpoints record the original sublevel values when
    the filtration came from a real-valued function (breakpoints[t] is the
    value at which K_t appears).
    """

    def __init__(
        self,
        ambient: SimplicialComplex,
        entry: Mapping,
        n_steps: int | None = None,
        breakpoints: list[float] | None = None,
    ):
        self.ambient = ambient
        self.entry: dict[Simplex, int] = {}
        for sigma in ambient.all_simplices():
            if sigma not in entry:
                raise IndexOutOfRange(f"no entry time for {sigma}")
            t = int(entry[sigma])
            if t < 0:
                raise IndexOutOfRange(f"negative entry time for {sigma}")
            self.entry[sigma] = t
        for sigma in ambient.all_simplices():
            if len(sigma) == 1:
                continue
            for j in range(len(sigma)):
                face = sigma[:j] + sigma[j + 1 :]
                if self.entry[face] > self.entry[sigma]:
                    raise NonMonotone(
                        f"face {face} enters after its coface {sigma}"
                    )
        max_entry = max(self.entry.values(), default=0)
        self.n_steps = max_entry if n_steps is None else int(n_steps)
        if self.n_steps < max_entry:
            raise IndexOutOfRange("n_steps smaller than the largest entry time")
        if breakpoints is not None and len(breakpoints) != self.n_steps + 1:
            raise IndexOutOfRange("need one breakpoint per filtration index")
        self.breakpoints = breakpoints
        self._complex_cache: dict[int, SimplicialComplex] = {}
        self._harmonic_cache: dict = {}
        self._persistent_cache: dict = {}

    @property
    def N(self) -> int:
        return self.n_steps

    def complex_at(self, t: int) -> SimplicialComplex:
        """Subcomplex K_t; empty for t < 0 and the full complex for t >= N."""
        t = min(max(int(t), -1), self.n_steps)
        if t not in self._complex_cache:
            chosen = [s for s, e in self.entry.items() if e <= t]
            self._complex_cache[t] = SimplicialComplex(chosen)
        return self._complex_cache[t]

    def value_at(self, t: int) -> float:
        """Real breakpoint value of index t (t / N when none were recorded)."""
        if self.breakpoints is not None:
            return self.breakpoints[t]
        return t / max(self.n_steps, 1)


def filtration_from_function(f: AdmissibleFunction) -> Filtration:
    """Sublevel filtration of an admissible function (indices = value ranks)."""
    levels = f.breakpoints
    rank = {v: i for i, v in enumerate(levels)}
    entry = {sigma: rank[v] for sigma, v in f.values.items()}
    return Filtration(f.complex, entry, breakpoints=levels)


def entry_time_function(filtration: Filtration) -> dict[Simplex, float]:
    """Normalized entry times sigma -> entry(sigma) / N, in [0, 1]."""
    n = max(filtration.n_steps, 1)
    return {sigma: t / n for sigma, t in filtration.entry.items()}


def harmonic_at(
    filtration: Filtration, p: int, t: int, tol: float | None = None
) -> HarmonicSpace:
    """Harmonic p-space of K_t in ambient coordinates (cached)."""
    t = min(max(int(t), -1), filtration.n_steps)
    key = (p, t, tol)
    if key not in filtration._harmonic_cache:
        filtration._harmonic_cache[key] = harmonic_basis(
            filtration.ambient, filtration.complex_at(t), p, tol
        )
    return filtration._harmonic_cache[key]


def persistent_harmonic_space(
    filtration: Filtration, p: int, s: int, t: int, tol: float | None = None
) -> Subspace:
    """H^(s,t): orthonormalized projection of H_p(K_s) onto H_p(K_t).

    Projecting a cycle of K_s onto the harmonic space of K_t agrees with
    projecting it onto the orthogonal complement of the boundaries of K_t,
    so this matches the image of the inclusion-induced map.
    """
    if s > t:
        raise IndexOutOfRange(f"need s <= t, got ({s}, {t})")
    s = min(max(int(s), -1), filtration.n_steps)
    t = min(max(int(t), -1), filtration.n_steps)
    key = (p, s, t, tol)
    if key not in filtration._persistent_cache:
        hs = harmonic_at(filtration, p, s, tol).space
        if s == t:
            result = hs
        else:
            ht = harmonic_at(filtration, p, t, tol).space
            result = project_subspace(hs, ht, tol)
        filtration._persistent_cache[key] = result
    return filtration._persistent_cache[key]


@dataclass(frozen=True)
class Bar:
    """A bar of the degree-p harmonic barcode; t is an int or math.inf."""

    p: int
    s: int
    t: float
    multiplicity: int

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.t)

    @property
    def is_simple(self) -> bool:
        return self.multiplicity == 1


@dataclass
class HarmonicBar:
    """A bar together with its initial subspace of the harmonic space at s."""

    bar: Bar
    initial: Subspace

    @property
    def p(self) -> int:
        return self.bar.p


def _bar_subquotient(
    filtration: Filtration, p: int, s: int, t: float, tol: float | None = None
) -> tuple[Subspace, Subspace, Subspace]:
    """(M, N, P) for the candidate bar (s, t); t may be math.inf."""
    hs = harmonic_at(filtration, p, s, tol).space
    n_steps = filtration.n_steps
    if math.isinf(t):
        m_last = preimage_under_projection(
            hs,
            harmonic_at(filtration, p, n_steps, tol).space,
            persistent_harmonic_space(filtration, p, s - 1, n_steps, tol),
            tol,
        )
        return hs, m_last, complement_within(m_last, hs, tol)
    t = int(t)
    m_space = preimage_under_projection(
        hs,
        harmonic_at(filtration, p, t, tol).space,
        persistent_harmonic_space(filtration, p, s - 1, t, tol),
        tol,
    )
    n_space = preimage_under_projection(
        hs,
        harmonic_at(filtration, p, t - 1, tol).space,
        persistent_harmonic_space(filtration, p, s - 1, t - 1, tol),
        tol,
    )
    return m_space, n_space, complement_within(n_space, m_space, tol)


def barcode(
    filtration: Filtration, p: int, tol: float | None = None
) -> list[HarmonicBar]:
    """Harmonic barcode in degree p, with initial subspaces.

    Bars are sorted by (s, t) with finite deaths before infinite ones. The
    expected nesting of the M subspaces in t is verified numerically and a
    warning is emitted if it fails at the working tolerance.
    """
    n_steps = filtration.n_steps
    pmap(lambda t: harmonic_at(filtration, p, t, tol), range(-1, n_steps + 1))
    bars: list[HarmonicBar] = []
    for s in range(n_steps + 1):
        hs = harmonic_at(filtration, p, s, tol).space
        if hs.dim == 0:
            continue
        prev_m: Subspace | None = None
        for t in range(s + 1, n_steps + 1):
            m_space, n_space, p_space = _bar_subquotient(filtration, p, s, t, tol)
            _warn_if_not_nested(n_space, m_space, s, t)
            if prev_m is not None:
                _warn_if_not_nested(prev_m, m_space, s, t)
            prev_m = m_space
            if p_space.dim > 0:
                bars.append(
                    HarmonicBar(Bar(p, s, t, p_space.dim), p_space)
                )
        _, _, p_inf = _bar_subquotient(filtration, p, s, math.inf, tol)
        if p_inf.dim > 0:
            bars.append(HarmonicBar(Bar(p, s, math.inf, p_inf.dim), p_inf))
    bars.sort(key=lambda hb: (hb.bar.s, math.isinf(hb.bar.t), hb.bar.t))
    return bars


def _warn_if_not_nested(inner: Subspace, outer: Subspace, s: int, t: int) -> None:
    if inner.dim == 0:
        return
    resid = inner.basis - outer.basis @ (outer.basis.T @ inner.basis) \
        if outer.dim > 0 else inner.basis
    worst = float(np.max(np.linalg.norm(resid, axis=0)))
    if worst > 1e-6:
        warnings.warn(
            f"bar subspace nesting violated at (s={s}, t={t}): "
            f"residual {worst:.3e}",
            RuntimeWarning,
        )


def terminal_subspace(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> Subspace:
    """Terminal subspace of a simple finite bar, inside H_p(K_(t-1)).

    Computed as the orthogonal complement of H^(s-1,t-1) inside H^(s,t-1);
    for a simple bar it is one-dimensional and spanned by the last harmonic
    representative of the dying class.
    """
    if not bar.is_finite:
        raise InfiniteBar("terminal subspace requires a finite bar")
    if not bar.is_simple:
        raise NotSimple("terminal subspace requires multiplicity one")
    return terminal_subspace_at(filtration, p, bar.s, int(bar.t), tol)


def terminal_subspace_at(
    filtration: Filtration, p: int, s: int, t: int, tol: float | None = None
) -> Subspace:
    """Complement of H^(s-1,t-1) inside H^(s,t-1) for an arbitrary pair s < t."""
    if s >= t:
        raise IndexOutOfRange(f"need s < t, got ({s}, {t})")
    big = persistent_harmonic_space(filtration, p, s, t - 1, tol)
    small = persistent_harmonic_space(filtration, p, s - 1, t - 1, tol)
    return complement_within(small, big, tol)


class StepSubspaceFunction:
    """Right-continuous step function from [0, 1] to subspaces of R^n.

    Before the first breakpoint the value is the zero subspace (the empty
    complex has no harmonic cycles).
    """

    def __init__(self, breakpoints, values: list[Subspace], ambient_dim: int):
        self.breakpoints = [float(b) for b in breakpoints]
        if sorted(self.breakpoints) != self.breakpoints:
            raise IndexOutOfRange("breakpoints must be sorted")
        if len(self.breakpoints) != len(values):
            raise IndexOutOfRange("need one value per breakpoint")
        self.values = values
        self.ambient_dim = ambient_dim
        for v in values:
            if v.ambient_dim != ambient_dim:
                raise ComplexMismatch("value with wrong ambient dimension")

    def piece_index(self, t: float) -> int:
        """Index of the active piece at t; -1 before the first breakpoint."""
        idx = -1
        for i, b in enumerate(self.breakpoints):
            if b <= t:
                idx = i
            else:
                break
        return idx

    def value_at(self, t: float) -> Subspace:
        idx = self.piece_index(t)
        if idx < 0:
            return Subspace.zero(self.ambient_dim)
        return self.values[idx]


def harmonic_filtration_function(
    complex: SimplicialComplex,
    f: AdmissibleFunction,
    p: int,
    tol: float | None = None,
) -> StepSubspaceFunction:
    """t -> harmonic p-space of the sublevel complex {f <= t}."""
    if f.complex != complex:
        raise ComplexMismatch("function defined over a different complex")
    filtration = filtration_from_function(f)
    return step_function_of_filtration(filtration, p, tol)


def step_function_of_filtration(
    filtration: Filtration, p: int, tol: float | None = None
) -> StepSubspaceFunction:
    """Step function of harmonic spaces with the filtration's breakpoints."""
    n = filtration.ambient.n_simplices(p)
    breaks = [filtration.value_at(t) for t in range(filtration.n_steps + 1)]
    values = [
        harmonic_at(filtration, p, t, tol).space
        for t in range(filtration.n_steps + 1)
    ]
    return StepSubspaceFunction(breaks, values, n)
