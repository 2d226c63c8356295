"""Exact computer algebra for centers of the Abel equation ``y' = p y**3 + q y**2``."""

from .ratpoly import Interval, Poly, Rational, UNIT, parse_poly, format_poly, shifted_chebyshev

__all__ = ["Interval", "Poly", "Rational", "UNIT", "parse_poly", "format_poly", "shifted_chebyshev"]
__version__ = "0.1.0"
