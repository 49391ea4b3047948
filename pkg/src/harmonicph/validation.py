"""Input validation and coercion helpers for the estimator interface."""

from __future__ import annotations

from .complexes import as_simplex
from .errors import HarmonicError
from .formats import ParsedFiltration, parse_filtration
from .persistence import AdmissibleFunction, Filtration, filtration_from_function

__all__ = ["check_p", "check_tol", "coerce_filtration"]


def check_p(p) -> int:
    if not isinstance(p, (int,)) or isinstance(p, bool) or p < 0:
        raise ValueError(f"degree p must be a non-negative int, got {p!r}")
    return int(p)


def check_tol(tol) -> float | None:
    if tol is None:
        return None
    tol = float(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    return tol


def coerce_filtration(x) -> Filtration:
    """Accept a Filtration, parsed file, admissible function, file text, or
    an iterable of (value, vertex-iterable) records."""
    if isinstance(x, Filtration):
        return x
    if isinstance(x, ParsedFiltration):
        return x.filtration
    if isinstance(x, AdmissibleFunction):
        return filtration_from_function(x)
    if isinstance(x, str):
        return parse_filtration(x).filtration
    try:
        records = list(x)
    except TypeError as exc:
        raise HarmonicError(f"cannot interpret {type(x).__name__} as a filtration") from exc
    lines = []
    for value, verts in records:
        sigma = as_simplex(verts)
        lines.append(str(value) + " " + " ".join(str(v) for v in sigma))
    return parse_filtration("\n".join(lines)).filtration
