"""Estimator-style interface over the harmonic barcode pipeline.

HarmonicBarcode follows the fit/transform convention: fit computes the
barcode of a filtration and stores it on trailing-underscore attributes,
transform returns the bars as a numeric array. Parameters are plain
constructor attributes so get_params / set_params and cloning work.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .persistence import barcode
from .validation import check_p, check_tol, coerce_filtration

__all__ = ["HarmonicBarcode"]


class HarmonicBarcode(BaseEstimator, TransformerMixin):
    """Compute the degree-p harmonic barcode of a filtration.

    Parameters
    ----------
    p : homology degree (non-negative int).
    tol : relative rank tolerance; None uses the library default.

    Attributes after fit
    --------------------
    filtration_ : the coerced Filtration.
    bars_ : list of HarmonicBar (bar data plus initial subspace).
    n_bars_ : number of bars.
    """

    def __init__(self, p: int = 1, tol: float | None = None):
        self.p = p
        self.tol = tol

    def fit(self, X, y=None):
        p = check_p(self.p)
        tol = check_tol(self.tol)
        self.filtration_ = coerce_filtration(X)
        self.bars_ = barcode(self.filtration_, p, tol)
        self.n_bars_ = len(self.bars_)
        return self

    def transform(self, X=None) -> np.ndarray:
        """Bars as an array with rows (birth, death, multiplicity).

        When X is given it is fit first; death is np.inf for infinite bars.
        """
        if X is not None:
            self.fit(X)
        if not hasattr(self, "bars_"):
            raise RuntimeError("call fit before transform")
        rows = [
            (
                float(hb.bar.s),
                math.inf if not hb.bar.is_finite else float(hb.bar.t),
                float(hb.bar.multiplicity),
            )
            for hb in self.bars_
        ]
        return np.array(rows, dtype=float).reshape(len(rows), 3)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X).transform(None)
