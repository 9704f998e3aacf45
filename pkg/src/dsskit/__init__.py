"""Exact-integer digital straight segments: recognition, slope evolution, maximal segments."""

from .arithmetic import (
    Characteristics,
    DssState,
    ExtendStatus,
    PointClass,
    Side,
    brute_force_minimal_characteristics,
    extend,
    init_state,
    recognize_points,
)
from .contfrac import ContinuedFraction, canonicalize, convergents, from_fraction
from .curve import (
    DigitalCurve,
    GridPoint,
    digitize_circle_boundary,
    parse_chain_code,
    serialize_chain_code,
    trace_standard_line,
)
from .evolution import cross_check_arithmetic, evolve_moves, evolve_slope
from .maximal import common_parts, extract_maximal_segments, slope_bounds, tangent_report
from .patterns import pattern_word, reversed_pattern_word
from .stern_brocot import SbPath, cf_to_path, fraction_to_path, path_to_fraction

__version__ = "0.1.0"

__all__ = [
    "Characteristics", "ContinuedFraction", "DigitalCurve", "DssState", "ExtendStatus",
    "GridPoint", "PointClass", "SbPath", "Side", "brute_force_minimal_characteristics",
    "canonicalize", "cf_to_path", "common_parts", "convergents", "cross_check_arithmetic",
    "digitize_circle_boundary", "evolve_moves", "evolve_slope", "extend",
    "extract_maximal_segments", "fraction_to_path", "from_fraction", "init_state",
    "parse_chain_code", "path_to_fraction", "pattern_word", "recognize_points",
    "reversed_pattern_word", "serialize_chain_code", "slope_bounds", "tangent_report",
    "trace_standard_line",
]
