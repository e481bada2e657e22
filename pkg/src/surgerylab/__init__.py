"""Exceptional Dehn surgeries on (-2, p, q) pretzel knots: exact knot
invariants, surgery classification and hyperbolic structures on ideal
triangulations."""
from .slopes import Slope, normalize, parse_slope

__version__ = "0.1.0"

__all__ = ["Slope", "normalize", "parse_slope", "__version__"]
