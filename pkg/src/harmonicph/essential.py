"""Essential simplices and relative essential content of simple bars.

A representative of a simple bar b = (s, t) is a cycle of K_s whose class is
born at s and survives to just before t. The representatives form a coset
family z0 + W where z0 spans the bar's initial subspace and W is a
chain-level subspace of C_p(K_s):

    finite t:   W = N^(s,t)  + boundaries of K_s
    t = inf:    W = M^(s,N)  + boundaries of K_s

A p-simplex is essential for the bar when it lies in the support of every
representative. Writing e_sigma for a coordinate vector, sigma in the
support of z0 is essential exactly when e_sigma is orthogonal to W, i.e.
when the corresponding row of an orthonormal basis of W vanishes.

The content of a representative z is the fraction of its Euclidean mass
carried by the essential simplices; the harmonic representative maximizes
it over the whole coset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .complexes import Chain, Simplex
from .errors import NotSimple, ZeroChain
from .harmonic import boundary_space
from .persistence import Bar, Filtration, _bar_subquotient
from .subspaces import Subspace, get_default_tol, orthonormalize

__all__ = [
    "chain_level_coset_space",
    "harmonic_representative",
    "essential_simplices",
    "content",
    "sample_representatives",
    "EssentialReport",
    "essential_report",
]


def _simple_bar_spaces(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> tuple[Subspace, Subspace]:
    """(initial subspace P, chain-level coset space W) of a simple bar."""
    if bar.multiplicity != 1:
        raise NotSimple("essential simplices are defined for simple bars")
    m_space, n_space, p_space = _bar_subquotient(
        filtration, p, bar.s, bar.t, tol
    )
    if p_space.dim != 1:
        raise NotSimple(
            f"bar ({bar.s}, {bar.t}) has initial subspace of dim {p_space.dim}"
        )
    # second subquotient component: N^(s,t) for finite bars, M^(s,N) for
    # infinite ones; either way it is the harmonic part of the coset space
    harmonic_part = n_space
    bdry = boundary_space(filtration.ambient, filtration.complex_at(bar.s), p, tol)
    stacked = np.hstack([harmonic_part.basis, bdry.basis])
    w_space = orthonormalize(stacked, tol)
    return p_space, w_space


def chain_level_coset_space(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> Subspace:
    """The subspace W with representative set z0 + W, in ambient coordinates."""
    _, w_space = _simple_bar_spaces(filtration, p, bar, tol)
    return w_space


def harmonic_representative(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> Chain:
    """Unit-norm harmonic representative spanning the bar's initial subspace.

    The sign is fixed so that the first nonzero coordinate is positive.
    """
    p_space, _ = _simple_bar_spaces(filtration, p, bar, tol)
    vec = p_space.basis[:, 0].copy()
    cut = 1e-12 * max(float(np.max(np.abs(vec))), 1.0)
    for c in vec:
        if abs(c) > cut:
            if c < 0:
                vec = -vec
            break
    return Chain(filtration.ambient, p, vec)


def essential_simplices(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> list[Simplex]:
    """Simplices appearing in the support of every representative of the bar."""
    t = get_default_tol() if tol is None else tol
    z0 = harmonic_representative(filtration, p, bar, tol)
    _, w_space = _simple_bar_spaces(filtration, p, bar, tol)
    out = []
    simplices = filtration.ambient.simplices(p)
    if w_space.dim == 0:
        row_norms = np.zeros(len(simplices))
    else:
        row_norms = np.linalg.norm(w_space.basis, axis=1)
    support_cut = t * max(float(np.max(np.abs(z0.coeffs))), 1.0)
    for idx, sigma in enumerate(simplices):
        if abs(z0.coeffs[idx]) <= support_cut:
            continue
        if row_norms[idx] <= t:
            out.append(sigma)
    return out


def content(z: Chain, essential: list[Simplex]) -> float:
    """Fraction of the Euclidean mass of z on the essential simplices."""
    total = float(np.sum(z.coeffs**2))
    if total == 0.0:
        raise ZeroChain("content of the zero chain is undefined")
    ess = sum(z.coefficient(sigma) ** 2 for sigma in essential)
    return math.sqrt(ess / total)


def sample_representatives(
    filtration: Filtration,
    p: int,
    bar: Bar,
    count: int,
    seed: int = 0,
    scale: float = 1.0,
    tol: float | None = None,
) -> list[Chain]:
    """Random representatives z0 + w with w Gaussian in the coset space W."""
    p_space, w_space = _simple_bar_spaces(filtration, p, bar, tol)
    z0 = p_space.basis[:, 0]
    rng = np.random.default_rng(seed)
    chains = []
    for _ in range(count):
        if w_space.dim > 0:
            w = w_space.basis @ (scale * rng.standard_normal(w_space.dim))
        else:
            w = np.zeros_like(z0)
        chains.append(Chain(filtration.ambient, p, z0 + w))
    return chains


@dataclass
class EssentialReport:
    """Essential-simplex summary of one simple bar."""

    bar: Bar
    harmonic_rep: Chain = field(repr=False)
    essential: list[Simplex]
    content: float


def essential_report(
    filtration: Filtration, p: int, bar: Bar, tol: float | None = None
) -> EssentialReport:
    z0 = harmonic_representative(filtration, p, bar, tol)
    ess = essential_simplices(filtration, p, bar, tol)
    return EssentialReport(bar, z0, ess, content(z0, ess))
