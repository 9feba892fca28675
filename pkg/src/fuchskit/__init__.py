"""Exact symbolic toolkit for Fuchsian linear ODEs over Q(x)."""

from .analysis import (
    ExponentReport,
    delta_total,
    exponent_reports,
    fuchs_relation_check,
    indicial_polynomial,
    is_fuchsian,
    is_fuchsian_at,
    local_exponents,
    singular_places,
)
from .catalog import CatalogEntry, catalog_entry, catalog_keys, catalog_operator
from .genus import GenusReport, genus_from_cover, genus_report, hurwitz_sum, pullback_delta_identity
from .operators import LinearODE
from .parsing import parse_rational_function
from .places import Place
from .poly import Polynomial
from .ratfunc import RationalFunction
from .sympow import (
    InvariantBasis,
    RuledSurfaceDescriptor,
    StandardEquationSpec,
    default_degree,
    derivative_equation,
    line_bundle_degree,
    rational_solutions,
    ruled_surface,
    standard_equation,
    standard_spec,
    symmetric_power,
)
from .transform import (
    RationalMap,
    exp_product,
    map_image,
    projective_normalize,
    projectively_equivalent,
    pullback,
    ramification_index,
)

__all__ = [
    "CatalogEntry",
    "ExponentReport",
    "GenusReport",
    "InvariantBasis",
    "LinearODE",
    "Place",
    "Polynomial",
    "RationalFunction",
    "RationalMap",
    "RuledSurfaceDescriptor",
    "StandardEquationSpec",
    "catalog_entry",
    "catalog_keys",
    "catalog_operator",
    "default_degree",
    "delta_total",
    "derivative_equation",
    "exp_product",
    "exponent_reports",
    "fuchs_relation_check",
    "genus_from_cover",
    "genus_report",
    "hurwitz_sum",
    "indicial_polynomial",
    "is_fuchsian",
    "is_fuchsian_at",
    "line_bundle_degree",
    "local_exponents",
    "map_image",
    "parse_rational_function",
    "projective_normalize",
    "projectively_equivalent",
    "pullback",
    "pullback_delta_identity",
    "ramification_index",
    "rational_solutions",
    "ruled_surface",
    "singular_places",
    "standard_equation",
    "standard_spec",
    "symmetric_power",
]

__version__ = "0.1.0"
