"""Finite abstract simplicial complexes and their boundary matrices.

A simplex is a strictly increasing tuple of non-negative integer vertex
labels; a p-simplex has p + 1 vertices. Within each dimension simplices are
kept in lexicographic order, which fixes the basis order of the chain space
C_p. Boundary matrices are integer matrices with the alternating-sign face
convention: column of sigma = [i_0, ..., i_p] has entry (-1)^j in the row of
the face obtained by dropping i_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import (
    ComplexMismatch,
    DimensionMismatch,
    MalformedSimplex,
    SimplexNotInAmbient,
)

Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate and normalize a vertex list into a simplex tuple."""
    try:
        verts = tuple(int(v) for v in vertices)
    except (TypeError, ValueError) as exc:
        raise MalformedSimplex(f"non-integer vertex in {vertices!r}") from exc
    if len(verts) == 0:
        raise MalformedSimplex("a simplex needs at least one vertex")
    if any(v < 0 for v in verts):
        raise MalformedSimplex(f"negative vertex label in {verts}")
    if any(a >= b for a, b in zip(verts, verts[1:])):
        raise MalformedSimplex(f"vertices must strictly increase: {verts}")
    return verts


def facets(sigma: Simplex) -> list[Simplex]:
    """Codimension-one faces of sigma, in the boundary-sign order."""
    return [sigma[:j] + sigma[j + 1 :] for j in range(len(sigma))]


def all_faces(sigma: Simplex) -> list[Simplex]:
    """Every nonempty face of sigma, sigma included."""
    out = []
    for k in range(1, len(sigma) + 1):
        out.extend(combinations(sigma, k))
    return out


class SimplicialComplex:
    """A finite simplicial complex, closed under taking faces."""

    def __init__(self, simplices: Iterable[Iterable[int]]):
        closed: set[Simplex] = set()
        for raw in simplices:
            sigma = as_simplex(raw)
            closed.update(all_faces(sigma))
        max_dim = max((len(s) - 1 for s in closed), default=-1)
        self._by_dim: list[list[Simplex]] = [
            sorted(s for s in closed if len(s) == p + 1) for p in range(max_dim + 1)
        ]
        self._index: dict[Simplex, int] = {}
        for simplices_p in self._by_dim:
            for i, sigma in enumerate(simplices_p):
                self._index[sigma] = i
        self._boundary_cache: dict[int, np.ndarray] = {}

    @property
    def dim(self) -> int:
        return len(self._by_dim) - 1

    def simplices(self, p: int) -> list[Simplex]:
        if p < 0 or p > self.dim:
            return []
        return self._by_dim[p]

    def all_simplices(self) -> list[Simplex]:
        return [s for group in self._by_dim for s in group]

    def n_simplices(self, p: int) -> int:
        return len(self.simplices(p))

    @property
    def size(self) -> int:
        return sum(len(g) for g in self._by_dim)

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._index

    def index(self, sigma: Simplex) -> int:
        """Position of sigma within its dimension's lexicographic basis."""
        sigma = tuple(sigma)
        if sigma not in self._index:
            raise SimplexNotInAmbient(f"{sigma} is not in the complex")
        return self._index[sigma]

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(s in other for s in self.all_simplices())

    def boundary_matrix(self, p: int) -> np.ndarray:
        """Integer matrix of the boundary map C_p -> C_(p-1).

        Shape is (n_simplices(p-1), n_simplices(p)); for p = 0 it has zero
        rows, and for p > dim it has zero columns.
        """
        if p in self._boundary_cache:
            return self._boundary_cache[p]
        rows = self.n_simplices(p - 1)
        cols = self.n_simplices(p)
        mat = np.zeros((rows, cols), dtype=np.int64)
        if p >= 1:
            for j, sigma in enumerate(self.simplices(p)):
                for sign_pos, face in enumerate(facets(sigma)):
                    mat[self._index[face], j] = -1 if sign_pos % 2 else 1
        self._boundary_cache[p] = mat
        return mat

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._by_dim == other._by_dim

    def __hash__(self):
        return hash(tuple(tuple(g) for g in self._by_dim))

    def __repr__(self):
        counts = ", ".join(f"{len(g)}x{p}" for p, g in enumerate(self._by_dim))
        return f"SimplicialComplex({counts or 'empty'})"


def build_complex(simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from generating simplices, closing under faces."""
    return SimplicialComplex(simplices)


def boundary_matrix(complex: SimplicialComplex, p: int) -> np.ndarray:
    return complex.boundary_matrix(p)


def embedding_matrix(
    sub: SimplicialComplex, ambient: SimplicialComplex, p: int
) -> np.ndarray:
    """0/1 matrix mapping C_p(sub) coordinates into C_p(ambient) coordinates."""
    n = ambient.n_simplices(p)
    cols = sub.simplices(p)
    mat = np.zeros((n, len(cols)))
    for j, sigma in enumerate(cols):
        mat[ambient.index(sigma), j] = 1.0
    return mat


@dataclass
class Chain:
    """A p-chain with real coefficients over a complex's lexicographic basis."""

    complex: SimplicialComplex = field(repr=False)
    p: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        if self.coeffs.shape != (self.complex.n_simplices(self.p),):
            raise DimensionMismatch(
                f"expected {self.complex.n_simplices(self.p)} coefficients, "
                f"got {self.coeffs.shape}"
            )

    def coefficient(self, sigma) -> float:
        return float(self.coeffs[self.complex.index(tuple(sigma))])

    def support(self, tol: float = 0.0) -> list[Simplex]:
        if self.coeffs.size == 0:
            return []
        cut = max(tol, 0.0) * max(float(np.max(np.abs(self.coeffs))), 1.0)
        return [
            sigma
            for sigma, c in zip(self.complex.simplices(self.p), self.coeffs)
            if abs(c) > cut
        ]

    @classmethod
    def from_dict(cls, complex: SimplicialComplex, p: int, entries: dict) -> "Chain":
        coeffs = np.zeros(complex.n_simplices(p))
        for sigma, c in entries.items():
            coeffs[complex.index(as_simplex(sigma))] = c
        return cls(complex, p, coeffs)


def restrict_chain(chain: Chain, ambient: SimplicialComplex) -> Chain:
    """Re-express a chain over a subcomplex in the ambient chain basis."""
    if not chain.complex.is_subcomplex_of(ambient):
        raise ComplexMismatch("chain's complex is not a subcomplex of the target")
    emb = embedding_matrix(chain.complex, ambient, chain.p)
    return Chain(ambient, chain.p, emb @ chain.coeffs)
