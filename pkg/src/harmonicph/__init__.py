"""Harmonic persistent homology of filtered simplicial complexes.

Harmonic barcodes attach canonical subspaces of harmonic cycles to the bars
of persistent homology. The package computes harmonic homology bases,
persistent harmonic spaces, barcodes with initial and terminal subspaces,
essential simplices with their content, and Grassmann-distance stability
functionals, together with an exact rational reference implementation for
all dimension counts.
"""

__version__ = "0.1.0"

from .complexes import (
    Chain,
    SimplicialComplex,
    as_simplex,
    boundary_matrix,
    build_complex,
    restrict_chain,
)
from .errors import HarmonicError
from .essential import (
    EssentialReport,
    content,
    essential_report,
    essential_simplices,
    harmonic_representative,
    sample_representatives,
)
from .estimator import HarmonicBarcode
from .exact import betti as exact_betti
from .harmonic import HarmonicSpace, functorial_map, harmonic_basis, laplacian
from .persistence import (
    AdmissibleFunction,
    Bar,
    Filtration,
    HarmonicBar,
    barcode,
    filtration_from_function,
    harmonic_filtration_function,
    persistent_harmonic_space,
    terminal_subspace,
)
from .formats import emit_barcode_json, emit_barcode_svg, parse_filtration
from .stability import (
    LadderReport,
    StabilityReport,
    check_theorem_barcode,
    check_theorem_stable,
    check_theorem_stable_persistent,
    dist_filtration_functions,
    dist_persistent,
    ladder_angle,
    seminorm,
)
from .subspaces import (
    Subspace,
    grassmann_distance,
    intersect,
    nullspace,
    orthonormalize,
    principal_angles,
)

__all__ = [
    "__version__",
    "Chain",
    "SimplicialComplex",
    "as_simplex",
    "boundary_matrix",
    "build_complex",
    "restrict_chain",
    "HarmonicError",
    "EssentialReport",
    "content",
    "essential_report",
    "essential_simplices",
    "harmonic_representative",
    "sample_representatives",
    "HarmonicBarcode",
    "exact_betti",
    "HarmonicSpace",
    "functorial_map",
    "harmonic_basis",
    "laplacian",
    "AdmissibleFunction",
    "Bar",
    "Filtration",
    "HarmonicBar",
    "barcode",
    "filtration_from_function",
    "harmonic_filtration_function",
    "persistent_harmonic_space",
    "terminal_subspace",
    "emit_barcode_json",
    "emit_barcode_svg",
    "parse_filtration",
    "LadderReport",
    "StabilityReport",
    "check_theorem_barcode",
    "check_theorem_stable",
    "check_theorem_stable_persistent",
    "dist_filtration_functions",
    "dist_persistent",
    "ladder_angle",
    "seminorm",
    "Subspace",
    "grassmann_distance",
    "intersect",
    "nullspace",
    "orthonormalize",
    "principal_angles",
]
