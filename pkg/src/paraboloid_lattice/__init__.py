"""Lattice points in parabolic regions and elliptic paraboloids."""

from .lattice import (
    ErrorRecord,
    ParaboloidSpec,
    RatQuadForm,
    boundary_count,
    count_parabola_2d,
    count_paraboloid,
    error_record,
    volume,
)
from .formula import error_term_exact, verify_formula_range

__all__ = [
    "ErrorRecord",
    "ParaboloidSpec",
    "RatQuadForm",
    "boundary_count",
    "count_parabola_2d",
    "count_paraboloid",
    "error_record",
    "error_term_exact",
    "verify_formula_range",
    "volume",
]

__version__ = "0.1.0"
