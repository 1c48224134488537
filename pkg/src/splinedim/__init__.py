"""Exact dimension computations for splines over curved cell partitions.

Everything is exact rational arithmetic (gmpy2), no floating point anywhere.
The two independent dimension routes, dim_formula (Hilbert functions of the
vertex ideal) and dim_kernel (smoothness constraints as a linear system), are
kept separate so each can serve as an oracle for the other.
"""

from .closed_forms import (cayley_bacharach_dim, distinct_tangent_hp,
                           linear_powers_hilbert_function,
                           linked_hilbert_function, low_power_applicable,
                           multiplicity_linear_powers, pencil_structure,
                           power_resolution, tangent_cone_estimate,
                           validity_thresholds)
from .documents import (ComplexDocument, DocumentError, EdgeSpec,
                        IdealDocument, bundled_names, emit_document,
                        load_bundled, load_document, parse_document,
                        to_ideal, to_star_complex)
from .groebner import (Ideal, colon_ideal, colon_poly, elimination_ideal,
                       ideal_equal, initial_ideal, intersect, is_member,
                       normal_form, saturate, saturate_irrelevant,
                       saturate_variable)
from .hilbert import (HilbertData, graded_piece_dimension, hilbert_data,
                      minimal_generator_degrees, syzygy_degrees_codim2)
from .poly import (ParseError, Poly, VARS_XY, VARS_XYZ, content_free,
                   dehomogenize, homogenize, parse, to_string)
from .spline_complex import (Configuration, Edge, SplineSeries, StarComplex,
                             StarValidationError, classify_configuration,
                             dim_formula, dim_kernel, generator_degrees,
                             is_spline, spline_basis, spline_series,
                             star_from_affine, star_ideal, validate_star)

__version__ = "0.1.0"

__all__ = [
    "cayley_bacharach_dim", "distinct_tangent_hp",
    "linear_powers_hilbert_function", "linked_hilbert_function",
    "low_power_applicable", "multiplicity_linear_powers", "pencil_structure",
    "power_resolution", "tangent_cone_estimate", "validity_thresholds",
    "ComplexDocument", "DocumentError", "EdgeSpec", "IdealDocument",
    "bundled_names", "emit_document", "load_bundled", "load_document",
    "parse_document", "to_ideal", "to_star_complex",
    "Ideal", "colon_ideal", "colon_poly", "elimination_ideal", "ideal_equal",
    "initial_ideal", "intersect", "is_member", "normal_form", "saturate",
    "saturate_irrelevant", "saturate_variable",
    "HilbertData", "graded_piece_dimension", "hilbert_data",
    "minimal_generator_degrees", "syzygy_degrees_codim2",
    "ParseError", "Poly", "VARS_XY", "VARS_XYZ", "content_free",
    "dehomogenize", "homogenize", "parse", "to_string",
    "Configuration", "Edge", "SplineSeries", "StarComplex",
    "StarValidationError", "classify_configuration", "dim_formula",
    "dim_kernel", "generator_degrees", "is_spline", "spline_basis",
    "spline_series", "star_from_affine", "star_ideal", "validate_star",
    "__version__",
]
