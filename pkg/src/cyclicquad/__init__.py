"""Cyclicity criteria for convex quadrilaterals, with exact replay of the supporting algebra."""

__version__ = "0.1.0"
