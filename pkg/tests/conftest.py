"""Shared fixtures: reference filtrations and random-instance generators."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from harmonicph.complexes import SimplicialComplex, build_complex
from harmonicph.persistence import AdmissibleFunction, Filtration

# Letter names for the five edges of the reference complex, used throughout
# the tests to keep chain coefficients readable.
A, B, C, D, E = (0, 1), (1, 2), (0, 2), (0, 3), (2, 3)

REFERENCE_ENTRY = {
    (0,): 0,
    (1,): 1,
    (2,): 2,
    (0, 1): 3,
    (1, 2): 3,
    (0, 2): 3,
    (3,): 4,
    (0, 1, 2): 5,
    (0, 3): 6,
    (2, 3): 6,
}


@pytest.fixture
def reference_complex() -> SimplicialComplex:
    """One filled triangle plus a path 0-3-2 closing a second loop."""
    return build_complex([(0, 1, 2), (0, 3), (2, 3)])


@pytest.fixture
def reference_filtration(reference_complex) -> Filtration:
    """Seven-step filtration of the reference complex (indices 0..6)."""
    return Filtration(reference_complex, REFERENCE_ENTRY)


def edge_chain_vector(complex: SimplicialComplex, letter_coeffs: dict) -> np.ndarray:
    """Coefficient vector over the lexicographic edge basis from letter names."""
    vec = np.zeros(complex.n_simplices(1))
    for edge, coeff in letter_coeffs.items():
        vec[complex.index(edge)] = coeff
    return vec


@pytest.fixture
def annulus_filtration() -> Filtration:
    """Triangulated annulus entering almost all at once.

    Vertices arrive at 0, one edge at 1, and everything else at 2, so the
    hole appears in a step that adds many simplices simultaneously and the
    resulting infinite degree-1 bar has no essential simplices.
    """
    triangles = [(0, 1, 4), (0, 3, 4), (1, 2, 5), (1, 4, 5), (0, 2, 3), (2, 3, 5)]
    complex = build_complex(triangles)
    entry = {}
    for sigma in complex.all_simplices():
        if len(sigma) == 1:
            entry[sigma] = 0
        elif sigma == (0, 1):
            entry[sigma] = 1
        else:
            entry[sigma] = 2
    return Filtration(complex, entry)


def random_complex(rng: np.random.Generator, n_vertices: int = 7,
                   p_triangle: float = 0.25, p_edge: float = 0.4) -> SimplicialComplex:
    """Random 2-complex: keep triangles and edges independently, close down."""
    generators = [(v,) for v in range(n_vertices)]
    for edge in combinations(range(n_vertices), 2):
        if rng.random() < p_edge:
            generators.append(edge)
    for tri in combinations(range(n_vertices), 3):
        if rng.random() < p_triangle:
            generators.append(tri)
    return build_complex(generators)


def random_admissible(rng: np.random.Generator,
                      complex: SimplicialComplex) -> AdmissibleFunction:
    """Random admissible function with values in [0, 1].

    Each simplex gets (dim + uniform(0,1)) / (max_dim + 1), which is strictly
    larger on cofaces than on faces.
    """
    d = max(complex.dim, 0) + 1
    values = {
        sigma: (len(sigma) - 1 + rng.random()) / d
        for sigma in complex.all_simplices()
    }
    return AdmissibleFunction(complex, values)


def simplexwise_filtration(rng: np.random.Generator,
                           complex: SimplicialComplex) -> Filtration:
    """Filtration adding exactly one simplex per step, in a random order
    compatible with face inclusion (all bars have multiplicity one)."""
    order = sorted(complex.all_simplices(), key=lambda s: (len(s), rng.random()))
    entry = {sigma: i for i, sigma in enumerate(order)}
    return Filtration(complex, entry)


def random_filtration(rng: np.random.Generator, complex: SimplicialComplex,
                      n_steps: int = 5) -> Filtration:
    """Random monotone filtration with a bounded number of steps."""
    entry: dict = {}
    for sigma in sorted(complex.all_simplices(), key=len):
        if len(sigma) == 1:
            entry[sigma] = int(rng.integers(0, n_steps + 1))
        else:
            floor = max(
                entry[sigma[:j] + sigma[j + 1:]] for j in range(len(sigma))
            )
            entry[sigma] = min(n_steps, floor + int(rng.integers(0, 2)))
    return Filtration(complex, entry, n_steps=n_steps)


def random_subspace(rng: np.random.Generator, n: int, d: int):
    """Haar-ish random d-dimensional subspace of R^n."""
    from harmonicph.subspaces import Subspace, orthonormalize

    if d == 0:
        return Subspace.zero(n)
    return orthonormalize(rng.standard_normal((n, d)))
