"""Estimator-style interface: fit/transform, params, cloning, coercion."""

import math

import numpy as np
import pytest
from sklearn.base import clone

from harmonicph.errors import HarmonicError
from harmonicph.estimator import HarmonicBarcode
from harmonicph.validation import check_p, check_tol, coerce_filtration

from conftest import REFERENCE_ENTRY
from test_formats import REFERENCE_FILE


def test_fit_transform_reference_p1(reference_filtration):
    est = HarmonicBarcode(p=1)
    rows = est.fit_transform(reference_filtration)
    expected = np.array([[3.0, 5.0, 1.0], [6.0, math.inf, 1.0]])
    assert np.array_equal(rows, expected)
    assert est.n_bars_ == 2
    assert est.filtration_ is reference_filtration
    assert est.bars_[0].initial.dim == 1


def test_fit_then_transform_p0(reference_filtration):
    est = HarmonicBarcode(p=0).fit(reference_filtration)
    rows = est.transform(None)
    assert rows.shape == (4, 3)
    assert rows[0, 1] == math.inf
    assert np.array_equal(rows[:, 0], [0.0, 1.0, 2.0, 4.0])


def test_transform_with_argument_refits(reference_filtration):
    est = HarmonicBarcode(p=1)
    rows = est.transform(reference_filtration)
    assert rows.shape == (2, 3)


def test_transform_before_fit_raises():
    with pytest.raises(RuntimeError):
        HarmonicBarcode(p=1).transform(None)


def test_empty_barcode_shape(reference_filtration):
    rows = HarmonicBarcode(p=2).fit_transform(reference_filtration)
    assert rows.shape == (0, 3)


def test_get_set_params_and_clone(reference_filtration):
    est = HarmonicBarcode(p=1, tol=1e-8)
    assert est.get_params() == {"p": 1, "tol": 1e-8}
    est.set_params(p=0, tol=None)
    assert est.get_params() == {"p": 0, "tol": None}
    fitted = est.fit(reference_filtration)
    fresh = clone(fitted)
    assert fresh.get_params() == fitted.get_params()
    assert not hasattr(fresh, "bars_")


def test_invalid_params_rejected(reference_filtration):
    with pytest.raises(ValueError):
        HarmonicBarcode(p=-1).fit(reference_filtration)
    with pytest.raises(ValueError):
        HarmonicBarcode(p=True).fit(reference_filtration)
    with pytest.raises(ValueError):
        HarmonicBarcode(p=1, tol=0.0).fit(reference_filtration)
    assert check_p(3) == 3
    assert check_tol(None) is None


def test_coerce_filtration_inputs(reference_complex, reference_filtration):
    # already a Filtration: passed through unchanged
    assert coerce_filtration(reference_filtration) is reference_filtration
    # file text
    from_text = coerce_filtration(REFERENCE_FILE)
    assert from_text.entry == REFERENCE_ENTRY
    # iterable of (value, vertices) records
    records = [(t, s) for s, t in REFERENCE_ENTRY.items()]
    from_records = coerce_filtration(records)
    assert from_records.entry == REFERENCE_ENTRY
    with pytest.raises(HarmonicError):
        coerce_filtration(object())


def test_fit_accepts_records_directly():
    records = [(t, s) for s, t in REFERENCE_ENTRY.items()]
    rows = HarmonicBarcode(p=1).fit_transform(records)
    assert rows.shape == (2, 3)
    assert rows[1, 1] == math.inf


def test_estimator_matches_barcode_function(reference_filtration):
    from harmonicph.persistence import barcode

    est = HarmonicBarcode(p=1).fit(reference_filtration)
    direct = barcode(reference_filtration, 1)
    assert [hb.bar for hb in est.bars_] == [hb.bar for hb in direct]
