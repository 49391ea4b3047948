"""Numerical linear algebra on subspaces of a fixed Euclidean space.

A subspace is stored as an orthonormal basis (columns of an (n, d) array).
The zero subspace (d = 0) is a first-class value. Rank decisions use a
relative singular value cutoff; the default cutoff is a module-level knob.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotASubspace

_DEFAULT_TOL = 1e-9


def get_default_tol() -> float:
    return _DEFAULT_TOL


def set_default_tol(tol: float) -> None:
    global _DEFAULT_TOL
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    _DEFAULT_TOL = tol


def _tol(tol: float | None) -> float:
    return _DEFAULT_TOL if tol is None else tol


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of R^n given by an orthonormal basis.

    basis has shape (ambient_dim, dim); dim may be zero.
    """

    ambient_dim: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float)
        if b.ndim != 2 or b.shape[0] != self.ambient_dim:
            raise DimensionMismatch(
                f"basis shape {b.shape} does not match ambient dim {self.ambient_dim}"
            )
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((ambient_dim, 0)))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim))

    def project(self, z: np.ndarray) -> np.ndarray:
        """Orthogonal projection of the vector z onto this subspace."""
        z = np.asarray(z, dtype=float)
        if z.shape[0] != self.ambient_dim:
            raise DimensionMismatch("vector does not live in the ambient space")
        return self.basis @ (self.basis.T @ z)

    def contains_vector(self, z: np.ndarray, tol: float | None = None) -> bool:
        z = np.asarray(z, dtype=float)
        resid = np.linalg.norm(z - self.project(z))
        scale = max(np.linalg.norm(z), 1.0)
        return resid <= _tol(tol) * scale

    def complement(self, tol: float | None = None) -> "Subspace":
        """Orthogonal complement within the ambient space."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return nullspace(self.basis.T, tol)


def orthonormalize(
    vectors: np.ndarray, tol: float | None = None, scale: float | None = None
) -> Subspace:
    """Orthonormal basis of the column span of `vectors` (SVD rank cut).

    The cut is tol * (largest singular value); passing `scale` raises the
    reference to at least that value, which is the right choice when the
    columns come from products of orthonormal matrices (natural scale 1) and
    an all-tiny result must count as the zero subspace.
    """
    vectors = np.asarray(vectors, dtype=float)
    if vectors.ndim != 2:
        raise DimensionMismatch("expected a 2-d array of column vectors")
    n = vectors.shape[0]
    if vectors.shape[1] == 0 or n == 0:
        return Subspace.zero(n)
    u, s, _ = np.linalg.svd(vectors, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return Subspace.zero(n)
    ref = s[0] if scale is None else max(s[0], scale)
    rank = int(np.sum(s > _tol(tol) * ref))
    return Subspace(n, u[:, :rank])


def nullspace(
    matrix: np.ndarray, tol: float | None = None, scale: float | None = None
) -> Subspace:
    """Kernel of a linear map R^c -> R^r as a subspace of R^c.

    `scale` has the same meaning as in orthonormalize: a floor on the
    reference singular value for the rank cut.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2:
        raise DimensionMismatch("expected a 2-d array")
    r, c = matrix.shape
    if c == 0:
        return Subspace.zero(0)
    if r == 0:
        return Subspace.full(c)
    _, s, vt = np.linalg.svd(matrix, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        return Subspace.full(c)
    ref = s[0] if scale is None else max(s[0], scale)
    rank = int(np.sum(s > _tol(tol) * ref))
    return Subspace(c, vt[rank:].T)


def project(space: Subspace, z: np.ndarray) -> np.ndarray:
    return space.project(z)


def project_subspace(u: Subspace, v: Subspace, tol: float | None = None) -> Subspace:
    """Orthonormalized image proj_v(u) of the subspace u under projection onto v."""
    _check_same_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim)
    return orthonormalize(v.basis @ (v.basis.T @ u.basis), tol, scale=1.0)


def intersect(a: Subspace, b: Subspace, tol: float | None = None) -> Subspace:
    """Intersection of two subspaces via the stacked complement projectors."""
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    eye = np.eye(n)
    stacked = np.vstack([
        eye - a.basis @ a.basis.T,
        eye - b.basis @ b.basis.T,
    ])
    return nullspace(stacked, tol, scale=1.0)


def complement_within(w: Subspace, v: Subspace, tol: float | None = None) -> Subspace:
    """Orthogonal complement of w inside v, i.e. v intersect w-perp.

    Requires w to be contained in v at the working tolerance.
    """
    _check_same_ambient(w, v)
    t = _tol(tol)
    if w.dim > 0 and v.dim > 0:
        resid = w.basis - v.basis @ (v.basis.T @ w.basis)
        worst = float(np.max(np.linalg.norm(resid, axis=0)))
        if worst > max(t, 1e4 * np.finfo(float).eps):
            raise NotASubspace(f"containment residual {worst:.3e} exceeds tolerance")
    elif w.dim > 0 and v.dim == 0:
        raise NotASubspace("nonzero subspace cannot sit inside the zero subspace")
    if w.dim == 0:
        return v
    reduced = v.basis - w.basis @ (w.basis.T @ v.basis)
    return orthonormalize(reduced, tol, scale=1.0)


def preimage_under_projection(
    source: Subspace, target: Subspace, sub: Subspace, tol: float | None = None
) -> Subspace:
    """{v in source : proj_target(v) in sub}, for sub a subspace of target.

    Since sub is contained in target, proj_target(v) lies in sub exactly when
    (P_target - P_sub) v = 0; the condition is solved on source coordinates.
    """
    _check_same_ambient(source, target)
    _check_same_ambient(source, sub)
    if sub.dim > 0:
        resid = sub.basis - target.basis @ (target.basis.T @ sub.basis)
        worst = float(np.max(np.linalg.norm(resid, axis=0)))
        if worst > max(_tol(tol), 1e4 * np.finfo(float).eps):
            raise NotASubspace("third argument must be a subspace of the target")
    if source.dim == 0:
        return source
    constraint = target.basis @ (target.basis.T @ source.basis)
    if sub.dim > 0:
        constraint = constraint - sub.basis @ (sub.basis.T @ source.basis)
    coeffs = nullspace(constraint, tol, scale=1.0)
    return Subspace(source.ambient_dim, source.basis @ coeffs.basis)


def principal_angles(a: Subspace, b: Subspace) -> np.ndarray:
    """Principal angles between two subspaces, ascending, in [0, pi/2].

    Cosines come from the SVD of basis(a)^T basis(b). Because arccos is
    ill-conditioned near 1, angles below pi/4 are recomputed from the sines,
    the singular values of (I - P_big) basis(small); this keeps the error of
    tiny angles at machine scale instead of sqrt(eps).
    """
    _check_same_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return np.zeros(0)
    small, big = (a, b) if a.dim <= b.dim else (b, a)
    cosines = np.linalg.svd(small.basis.T @ big.basis, compute_uv=False)
    cosines = np.clip(cosines, 0.0, 1.0)
    theta = np.arccos(cosines)
    residual = small.basis - big.basis @ (big.basis.T @ small.basis)
    sines = np.sort(np.clip(np.linalg.svd(residual, compute_uv=False), 0.0, 1.0))
    use_sine = sines < math.sqrt(0.5)
    theta[use_sine] = np.arcsin(sines[use_sine])
    return theta


def grassmann_distance(a: Subspace, b: Subspace) -> float:
    """Grassmann distance between subspaces of possibly different dimension.

    d(A, B) = (|dim A - dim B| * (pi/2)^2 + sum of squared principal
    angles)^(1/2). The distance from the zero subspace to a d-dimensional
    subspace is (pi/2) sqrt(d), and d(0, 0) = 0.
    """
    _check_same_ambient(a, b)
    theta = principal_angles(a, b)
    gap = abs(a.dim - b.dim)
    return math.sqrt(gap * (math.pi / 2) ** 2 + float(np.sum(theta**2)))


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
