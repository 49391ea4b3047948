"""Harmonic representatives of homology classes.

The harmonic space in degree p of a complex L is the set of p-cycles
orthogonal to the p-boundaries: ker d_p intersected with (im d_(p+1))-perp.
It equals the kernel of the combinatorial Laplacian and maps isomorphically
onto the simplicial homology H_p(L; R). Bases are always expressed in the
chain coordinates of a fixed ambient complex so that spaces attached to
different subcomplexes can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexes import SimplicialComplex, embedding_matrix
from .errors import InvalidSubcomplex, NotNested
from .subspaces import Subspace, nullspace, orthonormalize

__all__ = [
    "HarmonicSpace",
    "harmonic_basis",
    "laplacian",
    "boundary_space",
    "functorial_map",
]


@dataclass
class HarmonicSpace:
    """Harmonic p-space of a subcomplex, in ambient chain coordinates."""

    ambient: SimplicialComplex = field(repr=False)
    complex: SimplicialComplex = field(repr=False)
    p: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def _check_subcomplex(ambient: SimplicialComplex, sub: SimplicialComplex) -> None:
    if not sub.is_subcomplex_of(ambient):
        raise InvalidSubcomplex("not a subcomplex of the ambient complex")


def laplacian(sub: SimplicialComplex, p: int) -> np.ndarray:
    """Combinatorial p-Laplacian d_(p+1) d_(p+1)^T + d_p^T d_p of sub."""
    down = sub.boundary_matrix(p).astype(float)
    up = sub.boundary_matrix(p + 1).astype(float)
    return up @ up.T + down.T @ down


def harmonic_basis(
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
    p: int,
    tol: float | None = None,
) -> HarmonicSpace:
    """Orthonormal basis of the harmonic p-space of sub.

    Computed as the kernel of the stacked matrix [d_p; d_(p+1)^T], which is
    better conditioned than the Laplacian kernel; the result is zero-padded
    into C_p(ambient).
    """
    _check_subcomplex(ambient, sub)
    down = sub.boundary_matrix(p).astype(float)
    up = sub.boundary_matrix(p + 1).astype(float)
    stacked = np.vstack([down, up.T])
    ker = nullspace(stacked, tol)
    emb = embedding_matrix(sub, ambient, p)
    padded = Subspace(ambient.n_simplices(p), emb @ ker.basis)
    return HarmonicSpace(ambient, sub, p, padded)


def boundary_space(
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
    p: int,
    tol: float | None = None,
) -> Subspace:
    """Space of p-boundaries of sub, zero-padded into C_p(ambient)."""
    _check_subcomplex(ambient, sub)
    up = sub.boundary_matrix(p + 1).astype(float)
    emb = embedding_matrix(sub, ambient, p)
    return orthonormalize(emb @ up, tol)


def functorial_map(
    source: HarmonicSpace,
    to_sub: SimplicialComplex,
    tol: float | None = None,
) -> np.ndarray:
    """Matrix of the map induced by an inclusion of subcomplexes.

    For nested subcomplexes L_s inside L_t the map sends a harmonic cycle of
    L_s to its projection onto the orthogonal complement of the p-boundaries
    of L_t; the image lands in the harmonic p-space of L_t. Columns are the
    images of the columns of source.space.basis, in ambient coordinates.
    """
    if not source.complex.is_subcomplex_of(to_sub):
        raise NotNested("source complex is not contained in the target complex")
    _check_subcomplex(source.ambient, to_sub)
    bdry = boundary_space(source.ambient, to_sub, source.p, tol)
    basis = source.space.basis
    if bdry.dim == 0:
        return basis.copy()
    return basis - bdry.basis @ (bdry.basis.T @ basis)
