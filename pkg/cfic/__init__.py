"""Optimal conflict-free incidence colorings of outer-1-planar graphs."""

__version__ = "1.0.0"
