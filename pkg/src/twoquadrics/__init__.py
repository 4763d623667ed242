"""Exact-arithmetic verification toolkit for the geometry and degeneration
bookkeeping of even-dimensional intersections of two quadrics."""

__version__ = "0.1.0"
