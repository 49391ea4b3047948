"""Text filtration files plus deterministic JSON and SVG barcode output.

Filtration file grammar, one record per line:

    <value> <v0> <v1> ... <vk>

where <value> is either an integer filtration index or a real number in
[0, 1], and the vertices are strictly increasing non-negative integers.
Blank lines and '#' comments are ignored. If every value is an integer the
file is read as an integer-indexed filtration; otherwise values are real
and indices are their ranks. Missing faces are auto-inserted just below
their earliest coface (value minus half the smallest gap between distinct
values) with a warning; a repaired integer file becomes real-valued.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .complexes import SimplicialComplex, Simplex, all_faces, as_simplex
from .errors import (
    DuplicateSimplex,
    MalformedSimplex,
    NonMonotone,
    ParseError,
)
from .persistence import AdmissibleFunction, Bar, Filtration

__all__ = [
    "ParsedFiltration",
    "parse_filtration",
    "emit_barcode_json",
    "emit_barcode_svg",
    "format_float",
]

_INT_RE = re.compile(r"[+-]?\d+$")


@dataclass
class ParsedFiltration:
    """Result of parsing a filtration file."""

    complex: SimplicialComplex = field(repr=False)
    filtration: Filtration = field(repr=False)
    values: dict[Simplex, float]
    integer_mode: bool
    warnings: list[str] = field(default_factory=list)

    def admissible(self) -> AdmissibleFunction:
        """The parsed values as an admissible function (strictness enforced)."""
        return AdmissibleFunction(self.complex, self.values)


def parse_filtration(text: str) -> ParsedFiltration:
    """Parse a filtration file into a complex plus filtration."""
    records: dict[Simplex, float] = {}
    integer_mode = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError(line_no, "need a value and at least one vertex")
        value_tok = tokens[0]
        if not _INT_RE.match(value_tok):
            integer_mode = False
        try:
            value = float(value_tok)
        except ValueError as exc:
            raise ParseError(line_no, f"bad value {value_tok!r}") from exc
        if not math.isfinite(value):
            raise ParseError(line_no, "value must be finite")
        try:
            verts = [int(t) for t in tokens[1:]]
        except ValueError as exc:
            raise ParseError(line_no, "vertices must be integers") from exc
        try:
            sigma = as_simplex(verts)
        except MalformedSimplex as exc:
            raise ParseError(line_no, str(exc)) from exc
        if sigma in records:
            raise DuplicateSimplex(f"line {line_no}: {sigma} appears twice")
        records[sigma] = value
    if not records:
        raise ParseError(0, "empty filtration file")
    if integer_mode:
        if any(v < 0 for v in records.values()):
            raise ParseError(0, "integer filtration indices must be >= 0")
    else:
        if any(not 0.0 <= v <= 1.0 for v in records.values()):
            raise ParseError(0, "real filtration values must lie in [0, 1]")

    warnings: list[str] = []
    records, repaired = _close_downward(records)
    if repaired:
        warnings.extend(repaired)
        integer_mode = False

    complex = SimplicialComplex(records.keys())
    for sigma in records:
        for j in range(len(sigma)):
            if len(sigma) == 1:
                continue
            face = sigma[:j] + sigma[j + 1 :]
            if records[face] > records[sigma]:
                raise NonMonotone(
                    f"face {face} has larger value than its coface {sigma}"
                )
    if integer_mode:
        entry = {s: int(v) for s, v in records.items()}
        filtration = Filtration(complex, entry)
    else:
        levels = sorted(set(records.values()))
        rank = {v: i for i, v in enumerate(levels)}
        entry = {s: rank[v] for s, v in records.items()}
        filtration = Filtration(complex, entry, breakpoints=levels)
    return ParsedFiltration(complex, filtration, dict(records), integer_mode, warnings)


def _close_downward(records: dict[Simplex, float]):
    """Insert missing faces just below their earliest coface."""
    levels = sorted(set(records.values()))
    if len(levels) >= 2:
        eps = min(b - a for a, b in zip(levels, levels[1:])) / 2.0
    else:
        eps = 1e-6
    out = dict(records)
    notes = []
    for sigma in sorted(records, key=len, reverse=True):
        for face in all_faces(sigma):
            if face == sigma:
                continue
            wanted = out[sigma] - eps
            if face not in out:
                out[face] = wanted
                notes.append(
                    f"inserted missing face {face} at value {wanted!r}"
                )
            elif out[face] > out[sigma]:
                pass  # left to the monotonicity check for a hard error
    # inserted faces may themselves have missing faces; iterate to a fixpoint
    while True:
        missing = {}
        for sigma in list(out):
            for face in all_faces(sigma):
                if face not in out and face != sigma:
                    cand = out[sigma] - eps
                    if face not in missing or cand < missing[face]:
                        missing[face] = cand
        if not missing:
            break
        for face, v in missing.items():
            out[face] = v
            notes.append(f"inserted missing face {face} at value {v!r}")
    return out, notes


def format_float(x: float) -> float:
    """Round to 12 significant digits (the JSON round-trip precision)."""
    return float(f"{x:.12g}")


def _basis_entries(complex: SimplicialComplex, p: int, column: np.ndarray):
    return [
        [list(sigma), format_float(float(c))]
        for sigma, c in zip(complex.simplices(p), column)
    ]


def emit_barcode_json(
    complex: SimplicialComplex,
    p: int,
    records: list[dict],
) -> str:
    """Serialize bar records to deterministic JSON.

    Each record must carry a Bar under "bar" and may carry "initial"
    (ndarray basis), "terminal", "essential" (list of simplices) and
    "content". Keys are emitted in a fixed order and floats at 12
    significant digits, so re-parsing reproduces the data bit-exactly.
    """
    out = []
    for rec in records:
        bar: Bar = rec["bar"]
        obj = {
            "p": bar.p,
            "s": bar.s,
            "t": "inf" if math.isinf(bar.t) else int(bar.t),
            "multiplicity": bar.multiplicity,
        }
        initial = rec.get("initial")
        obj["initial_basis"] = (
            [_basis_entries(complex, bar.p, col) for col in initial.T]
            if initial is not None
            else None
        )
        terminal = rec.get("terminal")
        obj["terminal_basis"] = (
            [_basis_entries(complex, bar.p, col) for col in terminal.T]
            if terminal is not None
            else None
        )
        essential = rec.get("essential")
        obj["essential"] = (
            [list(sigma) for sigma in essential] if essential is not None else None
        )
        content = rec.get("content")
        obj["content"] = format_float(content) if content is not None else None
        out.append(obj)
    return json.dumps(out, indent=2, sort_keys=False)


_SVG_ROW = 18
_SVG_WIDTH = 480
_SVG_MARGIN = 40


def emit_barcode_svg(bars: list[Bar], n_steps: int, title: str = "") -> str:
    """Render bars as horizontal lines; infinite bars get an arrowhead.

    Output is a deterministic byte-for-byte function of the input.
    """
    bars = sorted(bars, key=lambda b: (b.p, b.s, math.isinf(b.t), b.t))
    height = _SVG_MARGIN * 2 + _SVG_ROW * max(len(bars), 1)
    span = max(n_steps, 1)

    def x_of(t: float) -> float:
        return _SVG_MARGIN + (_SVG_WIDTH - 2 * _SVG_MARGIN) * min(t, span) / span

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{height}" viewBox="0 0 {_SVG_WIDTH} {height}">',
        f'<text x="{_SVG_MARGIN}" y="20" font-size="12">{title}</text>',
    ]
    axis_y = height - _SVG_MARGIN / 2
    lines.append(
        f'<line x1="{x_of(0):.2f}" y1="{axis_y:.2f}" x2="{x_of(span):.2f}" '
        f'y2="{axis_y:.2f}" stroke="black" stroke-width="1"/>'
    )
    for i, bar in enumerate(bars):
        y = _SVG_MARGIN + _SVG_ROW * (i + 0.5)
        x1 = x_of(bar.s)
        finite = math.isfinite(bar.t)
        x2 = x_of(bar.t if finite else span)
        width = 2 * bar.multiplicity
        lines.append(
            f'<line x1="{x1:.2f}" y1="{y:.2f}" x2="{x2:.2f}" y2="{y:.2f}" '
            f'stroke="black" stroke-width="{width}"/>'
        )
        if not finite:
            lines.append(
                f'<path d="M {x2:.2f} {y - 4:.2f} L {x2 + 8:.2f} {y:.2f} '
                f'L {x2:.2f} {y + 4:.2f} Z" fill="black"/>'
            )
        label = f"({bar.s}, {'inf' if not finite else int(bar.t)}) x{bar.multiplicity}"
        lines.append(
            f'<text x="{x_of(span) + 12:.2f}" y="{y + 4:.2f}" '
            f'font-size="10">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
