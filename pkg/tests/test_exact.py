"""Exact rational oracle: ranks, nullspaces, Betti numbers, subquotients."""

import math
from fractions import Fraction

import numpy as np
import pytest

from harmonicph.complexes import build_complex
from harmonicph.errors import InvalidSubcomplex
from harmonicph.exact import (
    barcode_multiplicities,
    betti,
    intersection_dim,
    persistent_betti,
    rational_nullspace,
    rational_rank,
    subquotient_dims,
)

from conftest import random_complex


def test_rational_rank_basics():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([]) == 0
    assert rational_rank([[0, 0], [0, 0]]) == 0


def test_rational_rank_matches_numpy():
    rng = np.random.default_rng(51)
    for _ in range(20):
        m = rng.integers(-3, 4, size=(int(rng.integers(1, 6)), int(rng.integers(1, 6))))
        assert rational_rank(m.tolist()) == np.linalg.matrix_rank(m.astype(float))


def test_rational_nullspace_is_exact_kernel():
    rng = np.random.default_rng(52)
    for _ in range(20):
        rows, cols = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        m = rng.integers(-3, 4, size=(rows, cols)).tolist()
        basis = rational_nullspace(m)
        assert len(basis) == cols - rational_rank(m)
        for vec in basis:
            for row in m:
                assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


def test_rational_nullspace_zero_rows_needs_column_count():
    basis = rational_nullspace([], n_cols=3)
    assert len(basis) == 3
    assert rational_nullspace([]) == []


def test_intersection_dim_examples():
    e1, e2, e3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    assert intersection_dim([e1, e2], [e2, e3]) == 1
    assert intersection_dim([e1], [e2]) == 0
    assert intersection_dim([e1, e2], [e1, e2]) == 2


def test_betti_reference(reference_complex):
    assert betti(reference_complex, reference_complex, 0) == 1
    assert betti(reference_complex, reference_complex, 1) == 1
    assert betti(reference_complex, reference_complex, 2) == 0


def test_betti_trivial_cases():
    filled = build_complex([(0, 1, 2)])
    assert betti(filled, filled, 1) == 0
    empty = build_complex([])
    assert betti(empty, empty, 0) == 0
    assert betti(empty, empty, 1) == 0


def test_betti_rejects_non_subcomplex(reference_complex):
    with pytest.raises(InvalidSubcomplex):
        betti(reference_complex, build_complex([(7, 8)]), 0)


def test_persistent_betti_reference(reference_filtration):
    f = reference_filtration
    assert persistent_betti(f, 1, 3, 4) == 1
    assert persistent_betti(f, 1, 3, 5) == 0
    for s in range(7):
        sub = f.complex_at(s)
        assert persistent_betti(f, 1, s, s) == betti(f.ambient, sub, 1)


def test_subquotient_dims_reference(reference_filtration):
    mults_p1 = barcode_multiplicities(reference_filtration, 1)
    assert mults_p1 == {(3, 5): 1, (6, math.inf): 1}
    mults_p0 = barcode_multiplicities(reference_filtration, 0)
    assert mults_p0 == {(0, math.inf): 1, (1, 3): 1, (2, 3): 1, (4, 6): 1}


def test_subquotient_p_dim_bounded_by_betti(reference_filtration):
    f = reference_filtration
    for p in (0, 1):
        for s in range(7):
            total = 0
            for t in list(range(s + 1, 7)) + [math.inf]:
                _, _, mu = subquotient_dims(f, p, s, t)
                total += mu
            assert total <= betti(f.ambient, f.complex_at(s), p)


def test_oracle_agrees_with_floating_betti():
    from harmonicph.harmonic import harmonic_basis

    rng = np.random.default_rng(53)
    for _ in range(10):
        k = random_complex(rng, n_vertices=6)
        for p in range(k.dim + 1):
            assert betti(k, k, p) == harmonic_basis(k, k, p).dim
